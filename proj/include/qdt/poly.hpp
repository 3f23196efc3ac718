#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdt {

/// Dense univariate polynomial over the integers in the variable u.
/// Coefficients are stored by ascending power; the zero polynomial is the
/// empty vector, and the leading coefficient of a nonzero polynomial is
/// never zero.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(mpz_class c);
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly monomial(mpz_class c, std::size_t power);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    /// Coefficient of u^i (zero beyond the degree).
    mpz_class coeff(std::size_t i) const;
    const mpz_class& lead() const { return c_.back(); }
    /// Largest v with u^v dividing the polynomial (0 for zero).
    std::size_t valuation() const;

    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpz_class& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpz_class& s) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Multiply by u^k.
    Poly shifted(std::size_t k) const;
    /// Divide by u^k; the low k coefficients must be zero.
    Poly unshifted(std::size_t k) const;
    /// p(u^n).
    Poly compose_power(unsigned n) const;
    /// u^deg * p(1/u).
    Poly reversed() const;

    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Divide every coefficient by s; the division must be exact.
    Poly& divexact(const mpz_class& s);

    std::string to_string(const char* var = "u") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Exact division a / b in Z[u]; throws std::domain_error if b does not
/// divide a.
Poly divexact(const Poly& a, const Poly& b);

/// Greatest common divisor in Z[u], normalized to be primitive with positive
/// leading coefficient. gcd(0, 0) = 0.
Poly primitive_gcd(const Poly& a, const Poly& b);

}  // namespace qdt
