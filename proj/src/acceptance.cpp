#include "qdt/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "qdt/grobner.hpp"
#include "qdt/lieword.hpp"
#include "qdt/motivic.hpp"
#include "qdt/parallel.hpp"
#include "qdt/partitions.hpp"

namespace qdt {

namespace {

using Matrix = std::vector<std::vector<int>>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Outcome from_verdict(const Verdict& v, const std::string& context) {
    if (v) return {};
    return fail(context + ": " + v.describe());
}

// Deterministic test series in two variables: up to three monomials with
// coefficients c u^k or c u^k / (1 - u^2).
std::vector<MSeries> plethystic_suite(int order) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-3, 3), deg(0, 2), count(1, 3), denom(0, 2);
    std::vector<MSeries> out;
    while (out.size() < 20) {
        MSeries f(2, order);
        const int terms = count(rng);
        for (int t = 0; t < terms; ++t) {
            DimVector d{deg(rng), deg(rng)};
            if (d.is_zero()) d[0] = 1;
            const int c = coeff(rng);
            QRat value = QRat(c == 0 ? 1 : c).times_u_pow(expo(rng));
            if (denom(rng) == 0) value = value / QRat(Poly{1, 0, -1}, Poly(1));
            f.add_to(d, value);
        }
        if (!f.terms().empty()) out.push_back(std::move(f));
    }
    return out;
}

Outcome criterion_plethystics() {
    const int order = 8;
    const auto suite = plethystic_suite(order);
    for (std::size_t t = 0; t < suite.size(); ++t) {
        const MSeries& f = suite[t];
        const MSeries& g = suite[(t + 1) % suite.size()];
        const MSeries ef = pleth_exp(f);
        if (pleth_log(ef) != f) return fail("roundtrip fails for series " + std::to_string(t));
        if (pleth_exp(f + g) != ef * pleth_exp(g)) return fail("group law fails for series " + std::to_string(t));
    }
    // Exp(q^k x^d) = sum_n q^{nk} x^{nd}.
    for (long two_k : {-2L, -1L, 0L, 1L, 2L})
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                const DimVector d{a, b};
                if (d.is_zero()) continue;
                const MSeries e = pleth_exp(MSeries::monomial(2, order, d, QRat::u_pow(two_k)));
                MSeries expect = MSeries::one(2, order);
                for (int n = 1; n * d.total() <= order; ++n) expect.set(d.scaled(n), QRat::u_pow(n * two_k));
                if (e != expect)
                    return fail("monomial rule fails for k=" + std::to_string(two_k) + "/2, d=" + d.to_string());
            }
    return {true, "20 series at order 8; monomial rule for 5 exponents x 8 dimension vectors"};
}

template <class F>
Outcome over_suite(F&& check, const std::string& what) {
    for (const Quiver& q : acceptance_suite()) {
        Outcome o = check(q);
        if (!o.pass) return fail(q.to_string() + " " + o.detail);
    }
    return {true, what};
}

Outcome criterion_change_of_variables() {
    return over_suite([](const Quiver& q) { return from_verdict(check_change_of_variables(q, 6), "change of variables"); },
                      "8 quivers at order 6");
}

Outcome criterion_koszulness() {
    return over_suite([](const Quiver& q) { return from_verdict(check_numerical_koszulness(q, 5), "Koszulness"); },
                      "8 quivers at order 5");
}

Outcome criterion_dt_values() {
    Outcome o = over_suite(
        [](const Quiver& q) -> Outcome {
            try {
                const DTResult r = dt_invariants(q, 5);
                for (const auto& e : r.entries)
                    if (!is_nonnegative_laurent(e.dt)) return fail("DT not a non-negative Laurent polynomial");
            } catch (const IntegrityError& e) {
                return fail(e.what());
            }
            return {};
        },
        "");
    if (!o.pass) return o;
    for (int m = 0; m <= 3; ++m) {
        const DTResult r = dt_invariants(Quiver(Matrix{{m}}), 5);
        if (r.find(DimVector{1})->dt != QRat::u_pow(m - 1))
            return fail("DT_(1) of the " + std::to_string(m) + "-loop quiver is " + r.find(DimVector{1})->dt.to_string());
    }
    const DTResult r = dt_invariants(Quiver(Matrix{{0, 1}, {1, 0}}), 4);
    for (const auto& e : r.entries) {
        QRat expect;
        if (e.d == DimVector{1, 0} || e.d == DimVector{0, 1}) expect = QRat::u_pow(-1);
        else if (e.d == DimVector{1, 1}) expect = QRat(1);
        if (e.dt != expect) return fail("two-vertex table differs at d=" + e.d.to_string() + ": " + e.dt.to_string());
    }
    return {true, "suite at order 5 integral and non-negative; DT_(1) = q^{(m-1)/2} for m=0..3; two-vertex table to order 4"};
}

Outcome criterion_cross_check() {
    return over_suite([](const Quiver& q) { return from_verdict(dt_cross_check(q, 4), "two-route DT"); },
                      "8 quivers at order 4");
}

Outcome criterion_positivity() {
    return over_suite(
        [](const Quiver& q) -> Outcome {
            if (Outcome o = from_verdict(check_character_polynomiality(q, 4), "(1-q) ch"); !o.pass) return o;
            if (Outcome o = from_verdict(check_refined_polynomiality(q, 4), "(1-q^|d|) ch"); !o.pass) return o;
            return from_verdict(check_kernel_dimensions(q, 4), "kernel dimensions");
        },
        "8 quivers at order 4: both polynomiality statements, kernel differences and parity");
}

Outcome criterion_basis_character() {
    for (int m = 1; m <= 3; ++m)
        if (Outcome o = from_verdict(check_basis_character(m, 4, 12, 24), "m=" + std::to_string(m)); !o.pass) return o;
    return {true, "m=1,2,3: length <= 4, levels <= 12, degree <= 24"};
}

Outcome criterion_partition_bijection() {
    for (int m = 1; m <= 4; ++m)
        if (Outcome o = from_verdict(check_partition_bijection(m, 4, 6), "m=" + std::to_string(m)); !o.pass) return o;
    return {true, "m=1..4: length <= 4, levels <= 6"};
}

std::vector<Quiver> small_quivers(int max_entry) {
    std::vector<Quiver> out;
    for (int a = 0; a <= max_entry; ++a) out.emplace_back(Matrix{{a}});
    for (int a = 0; a <= max_entry; ++a)
        for (int b = 0; b <= max_entry; ++b)
            for (int c = 0; c <= max_entry; ++c) out.emplace_back(Matrix{{a, c}, {c, b}});
    return out;
}

Outcome criterion_leading_terms() {
    if (Outcome o = from_verdict(check_row_reduction_families(4, 12), "row reduction families"); !o.pass) return o;
    const auto quivers = small_quivers(4);
    const auto verdicts = parallel_map<Verdict>(quivers.size(), [&](std::size_t t) {
        return check_leading_terms(quivers[t], 12);
    });
    for (std::size_t t = 0; t < quivers.size(); ++t)
        if (!verdicts[t]) return fail(quivers[t].to_string() + ": " + verdicts[t].describe());
    return {true, "three families for m <= 4 and " + std::to_string(quivers.size()) +
                      " quivers (entries <= 4), levels <= 12, all matrices full rank"};
}

Outcome criterion_classification() {
    auto quivers = small_quivers(3);
    quivers.emplace_back(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    quivers.emplace_back(Matrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
    quivers.emplace_back(Matrix{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}});
    const auto verdicts = parallel_map<Verdict>(quivers.size(), [&](std::size_t t) {
        return check_quadratic_gb(quivers[t], default_degree_cap(quivers[t]));
    });
    int passing = 0;
    for (std::size_t t = 0; t < quivers.size(); ++t) {
        const bool expect = almost_n_regular(quivers[t]).has_value() || almost_0_regular(quivers[t]);
        if (verdicts[t].ok != expect)
            return fail(quivers[t].to_string() + ": GB verdict " + (verdicts[t].ok ? "pass" : "fail") +
                        " but classification says " + (expect ? "pass" : "fail") +
                        (verdicts[t].ok ? "" : " (" + verdicts[t].describe() + ")"));
        passing += verdicts[t].ok;
    }
    return {true, std::to_string(quivers.size()) + " quivers, " + std::to_string(passing) + " with a quadratic GB"};
}

}  // namespace

std::vector<Quiver> acceptance_suite() {
    return {Quiver(Matrix{{0}}),         Quiver(Matrix{{1}}),
            Quiver(Matrix{{2}}),         Quiver(Matrix{{3}}),
            Quiver(Matrix{{0, 1}, {1, 0}}), Quiver(Matrix{{1, 1}, {1, 1}}),
            Quiver(Matrix{{2, 1}, {1, 1}}), Quiver(Matrix{{2, 2}, {2, 2}})};
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  (" << std::fixed
       << std::setprecision(2) << r.seconds << " s";
    if (r.limit > 0) os << ", limit " << std::setprecision(0) << r.limit << " s";
    os << ")";
    if (!r.detail.empty()) os << "  " << r.detail;
    return os.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream* out) {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "plethystic Exp/Log roundtrip, group law, monomial rule", 5, criterion_plethystics},
        {2, "motivic series equals rescaled Poincare series", 30, criterion_change_of_variables},
        {3, "numerical Koszulness identity", 0, criterion_koszulness},
        {4, "DT integrality, positivity and known values", 0, criterion_dt_values},
        {5, "DT from motivic series equals DT from character", 0, criterion_cross_check},
        {6, "character polynomiality, kernel dimensions, parity", 0, criterion_positivity},
        {7, "one-vertex Lyndon basis matches character", 60, criterion_basis_character},
        {8, "partition words biject with basis words", 0, criterion_partition_bijection},
        {9, "quadratic leading terms and full-rank relation matrices", 0, criterion_leading_terms},
        {10, "quadratic GB verdict equals almost-N-regular classification", 180, criterion_classification},
    };
    std::vector<CriterionResult> results;
    for (const auto& s : criteria) {
        CriterionResult r;
        r.id = s.id;
        r.name = s.name;
        r.limit = s.limit;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = s.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.pass = o.pass;
        r.detail = o.detail;
        if (r.pass && r.limit > 0 && r.seconds > r.limit) {
            r.pass = false;
            r.detail = "over the time limit; " + r.detail;
        }
        if (out) *out << format_result(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace qdt
