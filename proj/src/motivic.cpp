#include "qdt/motivic.hpp"

#include "qdt/parallel.hpp"

namespace qdt {

namespace {

long sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

// prod_i prod_{j=1..d_i} (u^{2j} - 1); `weight` receives sum_i d_i(d_i+1)/2.
Poly pochhammer_product(const DimVector& d, long& weight) {
    Poly p(1);
    weight = 0;
    for (int di : d.v) {
        for (int j = 1; j <= di; ++j) {
            p = p * (Poly::monomial(1, static_cast<std::size_t>(2 * j)) - Poly(1));
            weight += j;
        }
    }
    return p;
}

int parity_class(const Quiver& q, const DimVector& d) {
    long s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += static_cast<long>(q.loops(i) + 1) * d[i];
    return static_cast<int>(s % 2);
}

std::vector<DimVector> positive_dims(const Quiver& q, int order) {
    std::vector<DimVector> out;
    for (auto& d : dimension_vectors(q.size(), order))
        if (!d.is_zero()) out.push_back(std::move(d));
    return out;
}

const QRat& one_minus_u2() {
    static const QRat r(Poly{1, 0, -1}, Poly(1));
    return r;
}

}  // namespace

bool is_nonnegative_laurent(const QRat& r) {
    if (!r.is_laurent_polynomial()) return false;
    for (const auto& c : r.reduced_num().coeffs())
        if (c < 0) return false;
    return true;
}

MSeries motivic_series(const Quiver& q, int order) {
    MSeries s(q.size(), order);
    for (const auto& d : dimension_vectors(q.size(), order)) {
        const long chi = euler_form(q, d, d);
        long weight = 0;
        Poly den = pochhammer_product(d, weight);
        // (q^{-1})_n = u^{-n(n+1)} prod (u^{2j} - 1)
        s.set(d, QRat(-chi + 2 * weight, Poly(sign_power(chi)), std::move(den)));
    }
    return s;
}

MSeries poincare_A(const Quiver& q, int order) {
    MSeries s(q.size(), order);
    for (const auto& d : dimension_vectors(q.size(), order)) {
        const long e = dot_self(d) - euler_form(q, d, d);
        long weight = 0;
        Poly den = pochhammer_product(d, weight);
        // (q)_n = (-1)^n prod (u^{2j} - 1)
        s.set(d, QRat(e, Poly(sign_power(e + d.total())), std::move(den)));
    }
    return s;
}

Verdict check_change_of_variables(const Quiver& q, int order) {
    const MSeries a = motivic_series(q, order);
    const MSeries p = poincare_A(q, order).rescale_x(1);
    for (const auto& d : dimension_vectors(q.size(), order))
        if (a.coeff(d) != p.coeff(d)) return Verdict::fail("motivic series differs from rescaled Poincare series", d);
    return Verdict::pass();
}

const DTEntry* DTResult::find(const DimVector& d) const {
    for (const auto& e : entries)
        if (e.d == d) return &e;
    return nullptr;
}

DTResult dt_invariants(const Quiver& q, int order) {
    if (order < 1) throw PreconditionError("dt_invariants: order must be >= 1");
    const MSeries a = motivic_series(q, order).map_coeffs([](const QRat& c) { return c.invert_q(); });
    const MSeries l = pleth_log(a);
    const auto dims = positive_dims(q, order);
    DTResult result;
    result.entries = parallel_map<DTEntry>(dims.size(), [&](std::size_t idx) {
        const DimVector& d = dims[idx];
        DTEntry e;
        e.d = d;
        e.parity = parity_class(q, d);
        const QRat inverted = QRat(sign_power(euler_form(q, d, d))) * one_minus_u2() * l.coeff(d);
        e.dt = inverted.invert_q();
        if (!e.dt.is_laurent_polynomial())
            throw IntegrityError("DT invariant at d=" + d.to_string() + " is not a Laurent polynomial: " + e.dt.to_string());
        if (!is_nonnegative_laurent(e.dt))
            throw IntegrityError("DT invariant at d=" + d.to_string() + " has a negative coefficient: " + e.dt.to_string());
        const auto& coeffs = e.dt.reduced_num().coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            const long n = e.dt.shift() + static_cast<long>(i) + 2;
            if (((n % 2) + 2) % 2 != e.parity)
                throw IntegrityError("DT invariant at d=" + d.to_string() + " has support off the parity class");
            e.ker_dims[n] = coeffs[i];
        }
        return e;
    });
    return result;
}

MSeries g_character(const Quiver& q, int order) {
    if (order < 1) throw PreconditionError("g_character: order must be >= 1");
    return pleth_log(series_invert(motivic_series(q, order)));
}

QRat unsigned_character(const Quiver& q, const MSeries& g_char, const DimVector& d) {
    return QRat(sign_power(euler_form(q, d, d))) * g_char.coeff(d);
}

Verdict check_numerical_koszulness(const Quiver& q, int order) {
    const MSeries dual = pleth_exp(g_character(q, order)).rescale_x(-1);
    const MSeries prod = poincare_A(q, order) * dual;
    const MSeries one = MSeries::one(q.size(), order);
    for (const auto& d : dimension_vectors(q.size(), order))
        if (prod.coeff(d) != one.coeff(d))
            return Verdict::fail("Poincare series product differs from 1", d);
    return Verdict::pass();
}

Verdict dt_cross_check(const Quiver& q, int order) {
    const DTResult dt = dt_invariants(q, order);
    const MSeries g = g_character(q, order);
    for (const auto& e : dt.entries) {
        const QRat other = (one_minus_u2() * unsigned_character(q, g, e.d)).times_u_pow(-2);
        if (other != e.dt) return Verdict::fail("DT from the character differs from DT from the motivic series", e.d);
    }
    return Verdict::pass();
}

Verdict check_character_polynomiality(const Quiver& q, int order) {
    const MSeries g = g_character(q, order);
    for (const auto& d : positive_dims(q, order)) {
        const QRat r = one_minus_u2() * unsigned_character(q, g, d);
        if (!is_nonnegative_laurent(r)) return Verdict::fail("(1-q) ch is not a non-negative Laurent polynomial", d);
    }
    return Verdict::pass();
}

Verdict check_refined_polynomiality(const Quiver& q, int order) {
    const MSeries g = g_character(q, order);
    for (const auto& d : positive_dims(q, order)) {
        const QRat factor(Poly(1) - Poly::monomial(1, static_cast<std::size_t>(2 * d.total())), Poly(1));
        const QRat r = factor * unsigned_character(q, g, d);
        if (!is_nonnegative_laurent(r))
            return Verdict::fail("(1-q^|d|) ch is not a non-negative Laurent polynomial", d);
    }
    return Verdict::pass();
}

Verdict check_kernel_dimensions(const Quiver& q, int order) {
    const MSeries g = g_character(q, order);
    const DTResult dt = dt_invariants(q, order);
    for (const auto& e : dt.entries) {
        const QRat ch = unsigned_character(q, g, e.d);
        if (ch.is_zero()) {
            if (!e.ker_dims.empty()) return Verdict::fail("kernel dimensions without character", e.d);
            continue;
        }
        // Past the top of DT the differences vanish; four extra exponents
        // exercise that tail.
        const long top = e.ker_dims.empty() ? ch.shift() : e.ker_dims.rbegin()->first;
        const long cap = top + 4;
        const LaurentExpansion c = laurent_coefficients(ch, cap);
        for (long n = c.valuation; n <= cap; ++n) {
            const mpq_class diff = c.at(n) - c.at(n - 2);
            if (diff < 0) return Verdict::fail("character differences are negative", e.d, n);
            auto it = e.ker_dims.find(n);
            const mpq_class expect = it == e.ker_dims.end() ? mpq_class(0) : mpq_class(it->second);
            if (diff != expect) return Verdict::fail("character differences disagree with kernel dimensions", e.d, n);
            if (c.at(n) != 0 && ((n % 2) + 2) % 2 != e.parity)
                return Verdict::fail("character supported off the parity class", e.d, n);
        }
    }
    return Verdict::pass();
}

}  // namespace qdt
