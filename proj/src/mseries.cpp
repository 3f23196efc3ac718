#include "qdt/mseries.hpp"

#include <sstream>

namespace qdt {

MSeries::MSeries(std::size_t nvars, int order) : nvars_(nvars), order_(order) {
    if (order < 0) throw PreconditionError("MSeries: negative truncation order");
}

MSeries MSeries::one(std::size_t nvars, int order) {
    MSeries r(nvars, order);
    r.set(DimVector::zero(nvars), QRat(1));
    return r;
}

MSeries MSeries::monomial(std::size_t nvars, int order, const DimVector& d, QRat c) {
    MSeries r(nvars, order);
    r.set(d, std::move(c));
    return r;
}

QRat MSeries::coeff(const DimVector& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? QRat() : it->second;
}

void MSeries::set(const DimVector& d, QRat c) {
    if (d.size() != nvars_) throw PreconditionError("MSeries: dimension vector length mismatch");
    if (d.total() > order_) return;
    if (c.is_zero()) terms_.erase(d);
    else terms_[d] = std::move(c);
}

void MSeries::add_to(const DimVector& d, const QRat& c) {
    if (c.is_zero() || d.total() > order_) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MSeries::check_compatible(const MSeries& o) const {
    if (nvars_ != o.nvars_ || order_ != o.order_)
        throw PreconditionError("MSeries: incompatible operands (variables or order differ)");
}

MSeries& MSeries::operator+=(const MSeries& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_to(d, c);
    return *this;
}

MSeries& MSeries::operator-=(const MSeries& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_to(d, -c);
    return *this;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
    a.check_compatible(b);
    MSeries r(a.nvars_, a.order_);
    for (const auto& [da, ca] : a.terms_) {
        const int ta = da.total();
        for (const auto& [db, cb] : b.terms_) {
            if (ta + db.total() > a.order_) continue;
            r.add_to(da + db, ca * cb);
        }
    }
    return r;
}

MSeries MSeries::scaled(const QRat& s) const {
    if (s.is_zero()) return MSeries(nvars_, order_);
    return map_coeffs([&](const QRat& c) { return c * s; });
}

MSeries MSeries::rescale_x(long k) const {
    MSeries r(nvars_, order_);
    for (const auto& [d, c] : terms_) r.set(d, c.times_u_pow(k * d.total()));
    return r;
}

std::string MSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        os << "[" << c.to_string() << "]x^" << d.to_string();
        first = false;
    }
    return os.str();
}

MSeries adams(const MSeries& f, unsigned n) {
    if (n == 0) throw PreconditionError("adams: n must be >= 1");
    MSeries r(f.nvars(), f.order());
    for (const auto& [d, c] : f.terms()) {
        if (static_cast<long>(d.total()) * n > f.order()) continue;
        r.set(d.scaled(static_cast<int>(n)), c.adams(n));
    }
    return r;
}

namespace {

// Keys of `s` that are componentwise <= d, excluding zero.
template <class Fn>
void for_each_nonzero_divisor(const MSeries& s, const DimVector& d, Fn&& fn) {
    for (const auto& [e, c] : s.terms()) {
        if (e.is_zero() || !e.fits_in(d)) continue;
        fn(e, c);
    }
}

}  // namespace

MSeries series_exp(const MSeries& f) {
    if (!f.constant_term().is_zero()) throw PreconditionError("series_exp: nonzero constant term");
    // Euler operator recursion: |d| g_d = sum_{0 < e <= d} |e| f_e g_{d-e}.
    MSeries g = MSeries::one(f.nvars(), f.order());
    for (const auto& d : dimension_vectors(f.nvars(), f.order())) {
        const int n = d.total();
        if (n == 0) continue;
        QRat acc;
        for_each_nonzero_divisor(f, d, [&](const DimVector& e, const QRat& fe) {
            QRat rest = g.coeff(d - e);
            if (!rest.is_zero()) acc += fe * rest * QRat(e.total());
        });
        if (!acc.is_zero()) g.set(d, acc * QRat(mpq_class(1, n)));
    }
    return g;
}

MSeries series_log(const MSeries& g) {
    if (!g.constant_term().is_one()) throw PreconditionError("series_log: constant term must be 1");
    // |d| g_d = |d| h_d + sum_{0 < e < d} |e| h_e g_{d-e}.
    MSeries h(g.nvars(), g.order());
    for (const auto& d : dimension_vectors(g.nvars(), g.order())) {
        const int n = d.total();
        if (n == 0) continue;
        QRat acc = g.coeff(d) * QRat(n);
        for_each_nonzero_divisor(h, d, [&](const DimVector& e, const QRat& he) {
            if (e == d) return;
            QRat rest = g.coeff(d - e);
            if (!rest.is_zero()) acc -= he * rest * QRat(e.total());
        });
        if (!acc.is_zero()) h.set(d, acc * QRat(mpq_class(1, n)));
    }
    return h;
}

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

MSeries pleth_exp(const MSeries& f) {
    if (!f.constant_term().is_zero()) throw PreconditionError("pleth_exp: argument must have zero constant term");
    MSeries h(f.nvars(), f.order());
    for (int n = 1; n <= f.order(); ++n)
        h += adams(f, static_cast<unsigned>(n)).scaled(QRat(mpq_class(1, n)));
    return series_exp(h);
}

MSeries pleth_log(const MSeries& g) {
    if (!g.constant_term().is_one()) throw PreconditionError("pleth_log: argument must have constant term 1");
    // log g = sum_n p_n(f)/n, inverted by Moebius: f = sum_k mu(k)/k p_k(log g).
    const MSeries h = series_log(g);
    MSeries f(g.nvars(), g.order());
    for (int k = 1; k <= g.order(); ++k) {
        const int mu = moebius(k);
        if (mu == 0) continue;
        f += adams(h, static_cast<unsigned>(k)).scaled(QRat(mpq_class(mu, k)));
    }
    return f;
}

MSeries series_invert(const MSeries& f) {
    const QRat c0 = f.constant_term();
    if (c0.is_zero()) throw PreconditionError("series_invert: constant term is zero, series is not invertible");
    const QRat inv0 = c0.inverse();
    MSeries g(f.nvars(), f.order());
    g.set(DimVector::zero(f.nvars()), inv0);
    for (const auto& d : dimension_vectors(f.nvars(), f.order())) {
        if (d.is_zero()) continue;
        QRat acc;
        for_each_nonzero_divisor(f, d, [&](const DimVector& e, const QRat& fe) {
            QRat rest = g.coeff(d - e);
            if (!rest.is_zero()) acc += fe * rest;
        });
        if (!acc.is_zero()) g.set(d, -(acc * inv0));
    }
    return g;
}

}  // namespace qdt
