#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qdt/dimvector.hpp"
#include "qdt/errors.hpp"
#include "qdt/qrat.hpp"

namespace qdt {

/// Power series in x_1..x_n over QRat, truncated at total x-degree `order`.
/// Only nonzero coefficients with |d| <= order are stored.
class MSeries {
public:
    using Terms = std::map<DimVector, QRat>;

    MSeries(std::size_t nvars, int order);

    static MSeries one(std::size_t nvars, int order);
    static MSeries monomial(std::size_t nvars, int order, const DimVector& d, QRat c);

    std::size_t nvars() const { return nvars_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }

    QRat coeff(const DimVector& d) const;
    QRat constant_term() const { return coeff(DimVector::zero(nvars_)); }
    /// Set a coefficient; keys beyond the order are silently dropped.
    void set(const DimVector& d, QRat c);
    void add_to(const DimVector& d, const QRat& c);

    MSeries& operator+=(const MSeries& o);
    MSeries& operator-=(const MSeries& o);
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
    friend MSeries operator*(const MSeries& a, const MSeries& b);
    MSeries scaled(const QRat& s) const;
    MSeries operator-() const { return scaled(QRat(-1)); }

    friend bool operator==(const MSeries&, const MSeries&) = default;

    /// Coefficient at d multiplied by u^{k |d|}: the substitution x -> u^k x.
    MSeries rescale_x(long k) const;

    /// Apply f to every coefficient.
    template <class F>
    MSeries map_coeffs(F&& f) const {
        MSeries r(nvars_, order_);
        for (const auto& [d, c] : terms_) r.set(d, f(c));
        return r;
    }

    std::string to_string() const;

private:
    void check_compatible(const MSeries& o) const;

    std::size_t nvars_;
    int order_;
    Terms terms_;
};

/// p_n: x_i -> x_i^n, u -> u^n. Requires n >= 1.
MSeries adams(const MSeries& f, unsigned n);

/// exp(f) for f with zero constant term.
MSeries series_exp(const MSeries& f);
/// log(g) for g with constant term 1.
MSeries series_log(const MSeries& g);

/// Plethystic exponential Exp(f) = exp(sum_n p_n(f) / n); f must have zero
/// constant term.
MSeries pleth_exp(const MSeries& f);
/// Inverse of pleth_exp; g must have constant term exactly 1.
MSeries pleth_log(const MSeries& g);

/// Multiplicative inverse; the constant coefficient must be nonzero.
MSeries series_invert(const MSeries& f);

}  // namespace qdt
