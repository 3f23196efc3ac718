#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdt/poly.hpp"

namespace qdt {

/// Exact rational function in u = q^{1/2} over the rationals.
///
/// The value is u^shift * num(u) / den(u) where num and den are integer
/// polynomials with nonzero constant terms, coprime over Q, with coprime
/// integer contents and positive leading coefficient of den. Zero is
/// represented as shift = 0, num = 0, den = 1. Since the form is canonical,
/// equality is structural.
class QRat {
public:
    QRat() : den_(1) {}
    QRat(long c);
    QRat(const mpq_class& c);
    /// num / den for arbitrary integer polynomials (den nonzero).
    QRat(Poly num, Poly den);
    /// u^shift * num / den for arbitrary integer polynomials.
    QRat(long shift, Poly num, Poly den);

    /// u^k.
    static QRat u_pow(long k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

    long shift() const { return shift_; }
    /// Numerator and denominator with the shift folded in, so that the value
    /// is numerator() / denominator() with both genuine polynomials.
    Poly numerator() const;
    Poly denominator() const;
    const Poly& reduced_num() const { return num_; }
    const Poly& reduced_den() const { return den_; }

    /// True iff the value lies in Z[u, 1/u].
    bool is_laurent_polynomial() const { return den_.is_one(); }

    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    QRat operator-() const;
    QRat inverse() const;

    friend bool operator==(const QRat&, const QRat&) = default;

    /// u -> u^n.
    QRat adams(unsigned n) const;
    /// u -> 1/u, i.e. q -> q^{-1}.
    QRat invert_q() const;
    /// Multiply by u^k.
    QRat times_u_pow(long k) const;

    std::string to_string() const;

private:
    void normalize();

    long shift_ = 0;
    Poly num_;
    Poly den_;
};

/// Laurent expansion at u = 0: valuation v and the coefficients of
/// u^v, ..., u^cap (empty when cap < v or r = 0).
struct LaurentExpansion {
    long valuation = 0;
    std::vector<mpq_class> coeffs;

    /// Coefficient of u^k (zero outside the stored window).
    mpq_class at(long k) const;
};

LaurentExpansion laurent_coefficients(const QRat& r, long cap);

inline QRat invert_q(const QRat& r) { return r.invert_q(); }

}  // namespace qdt
