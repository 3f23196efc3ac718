#include "qdt/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qdt {

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(mpz_class c, std::size_t power) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(power + 1, mpz_class(0));
    p.c_[power] = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

std::size_t Poly::valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v == c_.size() ? 0 : v;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b * a.c_[0];
    if (b.c_.size() == 1) return a * b.c_[0];
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(k, mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::unshifted(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (c_[i] != 0) throw std::domain_error("Poly::unshifted: nonzero low coefficient");
    Poly r;
    if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

Poly Poly::compose_power(unsigned n) const {
    if (n == 1 || c_.size() <= 1) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) * n + 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * n] = c_[i];
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly& Poly::divexact(const mpz_class& s) {
    if (s == 1) return *this;
    for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return *this;
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class c = c_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::optional<Poly> try_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly division by zero");
    if (a.is_zero()) return Poly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<mpz_class> q(r.size() - db, mpz_class(0));
    mpz_class t;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            if (bc[j] != 0) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        q[k] = t;
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return std::nullopt;
    return Poly(std::move(q));
}

Poly primitive_part(Poly p) {
    if (p.is_zero()) return p;
    p.divexact(p.content());
    if (p.lead() < 0) p = -p;
    return p;
}

// Degree of gcd(a, b) reduced modulo a word-size prime, or -1 if a leading
// coefficient vanishes mod p. When it returns 0 the integer gcd is a unit.
long modular_gcd_degree(const Poly& a, const Poly& b) {
    constexpr std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
    auto mulmod = [](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    };
    auto powmod = [&](std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    auto reduce = [&](const Poly& f) {
        std::vector<std::uint64_t> v(f.coeffs().size());
        static const mpz_class pz = (mpz_class(1) << 61) - 1;
        mpz_class r;
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pz.get_mpz_t());
            v[i] = mpz_get_ui(r.get_mpz_t());
        }
        return v;
    };
    auto x = reduce(a);
    auto y = reduce(b);
    if (x.empty() || y.empty() || x.back() == 0 || y.back() == 0) return -1;
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        const std::uint64_t inv = powmod(y.back(), p - 2);
        while (x.size() >= y.size()) {
            const std::uint64_t f = mulmod(x.back(), inv);
            const std::size_t off = x.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j)
                x[off + j] = (x[off + j] + p - mulmod(f, y[j])) % p;
            trim(x);
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return static_cast<long>(x.size()) - 1;
}

}  // namespace

Poly divexact(const Poly& a, const Poly& b) {
    auto q = try_divexact(a, b);
    if (!q) throw std::domain_error("Poly divexact: not divisible");
    return *q;
}

Poly primitive_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    if (x == y) return x;
    if (modular_gcd_degree(x, y) == 0) return Poly(1);
    if (try_divexact(x, y)) return y;

    // Primitive polynomial remainder sequence.
    while (true) {
        Poly r = x;
        const long dy = y.degree();
        const mpz_class& ly = y.lead();
        while (!r.is_zero() && r.degree() >= dy) {
            const std::size_t k = static_cast<std::size_t>(r.degree() - dy);
            Poly t = y.shifted(k) * r.lead();
            r *= ly;
            r -= t;
        }
        if (r.is_zero()) return primitive_part(y);
        if (r.is_constant()) return Poly(1);
        x = std::move(y);
        y = primitive_part(std::move(r));
    }
}

}  // namespace qdt
