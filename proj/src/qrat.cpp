#include "qdt/qrat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qdt {

namespace {

// Scale num/den by a rational constant so that contents are coprime and the
// denominator has positive leading coefficient.
void normalize_units(Poly& num, Poly& den) {
    mpz_class cn = num.content();
    mpz_class cd = den.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c != 1) {
        num.divexact(c);
        den.divexact(c);
    }
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

QRat::QRat(long c) : num_(c), den_(1) {}

QRat::QRat(const mpq_class& c) : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {
    normalize();
}

QRat::QRat(Poly num, Poly den) : QRat(0, std::move(num), std::move(den)) {}

QRat::QRat(long shift, Poly num, Poly den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    normalize();
}

QRat QRat::u_pow(long k) {
    QRat r(1);
    r.shift_ = k;
    return r;
}

void QRat::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly(1);
        return;
    }
    const std::size_t vn = num_.valuation();
    const std::size_t vd = den_.valuation();
    num_ = num_.unshifted(vn);
    den_ = den_.unshifted(vd);
    shift_ += static_cast<long>(vn) - static_cast<long>(vd);
    Poly g = primitive_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    normalize_units(num_, den_);
}

Poly QRat::numerator() const {
    return shift_ > 0 ? num_.shifted(static_cast<std::size_t>(shift_)) : num_;
}

Poly QRat::denominator() const {
    return shift_ < 0 ? den_.shifted(static_cast<std::size_t>(-shift_)) : den_;
}

QRat& QRat::operator+=(const QRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long s = std::min(shift_, o.shift_);
    Poly a = num_.shifted(static_cast<std::size_t>(shift_ - s));
    Poly b = o.num_.shifted(static_cast<std::size_t>(o.shift_ - s));
    if (den_ == o.den_) {
        Poly t = a + b;
        *this = QRat(s, std::move(t), den_);
        return *this;
    }
    // Henrici: with g = gcd(d1, d2), only gcd(t, g) can cancel.
    Poly g = primitive_gcd(den_, o.den_);
    Poly d1 = g.is_one() ? den_ : divexact(den_, g);
    Poly d2 = g.is_one() ? o.den_ : divexact(o.den_, g);
    Poly t = a * d2 + b * d1;
    if (t.is_zero()) return *this = QRat();
    const std::size_t vt = t.valuation();
    t = t.unshifted(vt);
    Poly den = den_ * d2;
    if (!g.is_one()) {
        Poly g2 = primitive_gcd(t, g);
        if (!g2.is_one()) {
            t = divexact(t, g2);
            den = divexact(den, g2);
        }
    }
    shift_ = s + static_cast<long>(vt);
    num_ = std::move(t);
    den_ = std::move(den);
    normalize_units(num_, den_);
    return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    if (is_zero() || o.is_zero()) return *this = QRat();
    Poly g1 = primitive_gcd(num_, o.den_);
    Poly g2 = primitive_gcd(o.num_, den_);
    Poly n1 = g1.is_one() ? num_ : divexact(num_, g1);
    Poly d2 = g1.is_one() ? o.den_ : divexact(o.den_, g1);
    Poly n2 = g2.is_one() ? o.num_ : divexact(o.num_, g2);
    Poly d1 = g2.is_one() ? den_ : divexact(den_, g2);
    shift_ += o.shift_;
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize_units(num_, den_);
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    QRat r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    normalize_units(r.num_, r.den_);
    return r;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::adams(unsigned n) const {
    if (n == 0) throw std::invalid_argument("QRat::adams: n must be positive");
    if (n == 1 || is_zero()) return *this;
    // Substituting u^n preserves coprimality and contents.
    QRat r;
    r.shift_ = shift_ * static_cast<long>(n);
    r.num_ = num_.compose_power(n);
    r.den_ = den_.compose_power(n);
    return r;
}

QRat QRat::invert_q() const {
    if (is_zero()) return *this;
    // num(1/u) = u^{-deg num} rev(num); both reversals keep nonzero constants.
    QRat r;
    r.shift_ = -shift_ - num_.degree() + den_.degree();
    r.num_ = num_.reversed();
    r.den_ = den_.reversed();
    normalize_units(r.num_, r.den_);
    return r;
}

QRat QRat::times_u_pow(long k) const {
    QRat r = *this;
    if (!r.is_zero()) r.shift_ += k;
    return r;
}

std::string QRat::to_string() const {
    auto wrap = [](const Poly& p) {
        const auto terms = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                         [](const mpz_class& c) { return c != 0; });
        return terms > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    const Poly d = denominator();
    if (d.is_one()) return numerator().to_string();
    return wrap(numerator()) + "/" + wrap(d);
}

mpq_class LaurentExpansion::at(long k) const {
    if (k < valuation) return 0;
    const auto i = static_cast<std::size_t>(k - valuation);
    return i < coeffs.size() ? coeffs[i] : mpq_class(0);
}

LaurentExpansion laurent_coefficients(const QRat& r, long cap) {
    LaurentExpansion out;
    if (r.is_zero()) return out;
    out.valuation = r.shift();
    if (cap < out.valuation) return out;
    const auto n = static_cast<std::size_t>(cap - out.valuation + 1);
    const Poly& num = r.reduced_num();
    const Poly& den = r.reduced_den();
    // Power series division num / den; den(0) != 0 by canonical form.
    const mpq_class d0(den.coeff(0));
    out.coeffs.assign(n, mpq_class(0));
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class acc(num.coeff(k));
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max<long>(den.degree(), 0)));
        for (std::size_t j = 1; j <= top; ++j) acc -= mpq_class(den.coeff(j)) * out.coeffs[k - j];
        out.coeffs[k] = acc / d0;
    }
    return out;
}

}  // namespace qdt
