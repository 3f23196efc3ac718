#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "qdt/mseries.hpp"
#include "qdt/quiver.hpp"
#include "qdt/verdict.hpp"

namespace qdt {

/// A computed invariant violated integrality or positivity.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A_Q(x,q): coefficient of x^d is (-u)^{-chi(d,d)} / prod_i (q^{-1})_{d_i}.
MSeries motivic_series(const Quiver& q, int order);

/// Poincare series of the algebra A_Q: coefficient of x^d is
/// (-u)^{d.d - chi(d,d)} / prod_i (q)_{d_i}.
MSeries poincare_A(const Quiver& q, int order);

/// motivic_series equals poincare_A with x -> u x.
Verdict check_change_of_variables(const Quiver& q, int order);

struct DTEntry {
    DimVector d;
    /// Laurent polynomial in u with non-negative integer coefficients.
    QRat dt;
    /// n -> dimension of the kernel of d/dt in homological degree n; the
    /// coefficient of u^{n-2} in dt.
    std::map<long, mpz_class> ker_dims;
    /// sum_i (m_ii + 1) d_i mod 2.
    int parity = 0;
};

/// One entry per d with 1 <= |d| <= order, in lexicographic order of d.
struct DTResult {
    std::vector<DTEntry> entries;

    const DTEntry* find(const DimVector& d) const;
};

/// Refined DT invariants via the plethystic logarithm of A_Q(x, q^{-1}).
/// Throws IntegrityError if some DT_d is not a non-negative Laurent polynomial
/// or violates the parity support.
DTResult dt_invariants(const Quiver& q, int order);

/// Signed character of the dual of g_Q: pleth_log(1 / A_Q(x,q)).
MSeries g_character(const Quiver& q, int order);

/// Unsigned character (-1)^{chi(d,d)} g_character[d].
QRat unsigned_character(const Quiver& q, const MSeries& g_char, const DimVector& d);

/// poincare_A * (pleth_exp(g_character) with x -> x/u) == 1.
Verdict check_numerical_koszulness(const Quiver& q, int order);

/// DT_d == u^{-2} (1 - u^2) (-1)^{chi(d,d)} g_character[d] for all d.
Verdict dt_cross_check(const Quiver& q, int order);

/// (1 - u^2) ch_d is a non-negative Laurent polynomial for all d.
Verdict check_character_polynomiality(const Quiver& q, int order);

/// (1 - u^{2|d|}) ch_d is a non-negative Laurent polynomial for all d.
Verdict check_refined_polynomiality(const Quiver& q, int order);

/// With c_n the Laurent coefficients of ch_d: c_n - c_{n-2} equals
/// ker_dims[n] and is non-negative, and c_n vanishes off the parity class.
Verdict check_kernel_dimensions(const Quiver& q, int order);

/// True iff r lies in Z_{>=0}[u, 1/u].
bool is_nonnegative_laurent(const QRat& r);

}  // namespace qdt
