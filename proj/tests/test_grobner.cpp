#include <doctest.h>

#include "qdt/grobner.hpp"
#include "qdt/motivic.hpp"

using namespace qdt;

using Matrix = std::vector<std::vector<int>>;

namespace {

// Partitions of n into parts from {1, 2, 3}: coefficients of 1/((1-q)(1-q^2)(1-q^3)).
long parts_up_to_three(long n) {
    long c = 0;
    for (long a = 0; 3 * a <= n; ++a)
        for (long b = 0; 3 * a + 2 * b <= n; ++b) ++c;
    return c;
}

Quiver swapped(const Quiver& q) {
    const auto& m = q.matrix();
    return Quiver(Matrix{{m[1][1], m[1][0]}, {m[0][1], m[0][0]}});
}

}  // namespace

TEST_CASE("generator order and normal form") {
    const Generator a0{0, 0}, a1{0, 1}, b0{1, 0};
    CHECK(generator_less(a0, a1, VertexTieBreak::Descending));
    CHECK(generator_less(b0, a0, VertexTieBreak::Descending));
    CHECK(generator_less(a0, b0, VertexTieBreak::Ascending));
    CHECK(word_less({a1}, {a0, a0}, VertexTieBreak::Descending));
    const Quiver odd(Matrix{{1}});
    const SignedWord s = normal_form({a1, a0}, odd, VertexTieBreak::Descending);
    CHECK(s.sign == -1);
    CHECK(s.word == Word{a0, a1});
    CHECK(normal_form({a0, a0}, odd, VertexTieBreak::Descending).sign == 0);
    CHECK(normal_form({a1, a0}, Quiver(Matrix{{2}}), VertexTieBreak::Descending).sign == 1);
    CHECK(word_to_string({a0, b0}) == "a(0,0) a(1,0)");
}

TEST_CASE("two-loop relation matrix at level sum 2") {
    const RelationMatrix rm = relation_rows(Quiver(Matrix{{2}}), 0, 0, 2);
    REQUIRE(rm.columns == std::vector<Word>{{{0, 1}, {0, 1}}, {{0, 0}, {0, 2}}});
    RationalMatrix r = rm.rows;
    CHECK(r.rref() == std::vector<std::size_t>{0});
    REQUIRE(r.rows() == 1);
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 2);
}

TEST_CASE("claimed leading terms") {
    const Quiver q(Matrix{{0, 2}, {2, 0}});
    const Generator x{0, 0};
    CHECK(claimed_leading(q, x, {1, 2}));
    CHECK(!claimed_leading(q, x, {1, 3}));
    CHECK(claimed_leading(q, {1, 0}, {0, 1}));
    CHECK(!claimed_leading(q, {1, 0}, {0, 2}));
    CHECK(claimed_leading(q, {1, 0}, {0, 2}, VertexTieBreak::Ascending));
    CHECK(!claimed_leading(q, x, {1, 2}, VertexTieBreak::Ascending));
}

TEST_CASE("leading terms under either tie-break") {
    for (const Quiver& q : {Quiver(Matrix{{2}}), Quiver(Matrix{{3}}), Quiver(Matrix{{0, 1}, {1, 0}}),
                            Quiver(Matrix{{2, 1}, {1, 1}}), Quiver(Matrix{{1, 3}, {3, 2}})}) {
        CAPTURE(q.to_string());
        CHECK(check_leading_terms(q, 8).ok);
        CHECK(check_leading_terms(q, 8, VertexTieBreak::Ascending).ok);
    }
}

TEST_CASE("the ascending tie-break mirrors the vertex labels") {
    for (const Quiver& q : {Quiver(Matrix{{2, 1}, {1, 1}}), Quiver(Matrix{{0, 3}, {3, 2}})}) {
        const LeadingTerms asc = leading_terms(q, 6, VertexTieBreak::Ascending);
        const LeadingTerms desc = leading_terms(swapped(q), 6, VertexTieBreak::Descending);
        std::set<Word> mirrored;
        for (Word w : desc.normal_words) {
            for (auto& g : w) g.vertex = 1 - g.vertex;
            mirrored.insert(w);
        }
        CHECK(asc.normal_words == mirrored);
    }
}

TEST_CASE("brute-force dimensions match the Poincare series") {
    const int order = 3;
    for (const Quiver& q : {Quiver(Matrix{{0}}), Quiver(Matrix{{1}}), Quiver(Matrix{{2}}),
                            Quiver(Matrix{{0, 1}, {1, 0}}), Quiver(Matrix{{1, 1}, {1, 1}}),
                            Quiver(Matrix{{2, 1}, {1, 1}})}) {
        const MSeries p = poincare_A(q, order);
        for (const auto& d : dimension_vectors(q.size(), order)) {
            if (d.is_zero()) continue;
            CAPTURE(q.to_string());
            CAPTURE(d.to_string());
            const long cap = 14;
            const LaurentExpansion e = laurent_coefficients(p.coeff(d), cap);
            for (const auto& [n, dim] : dim_bruteforce(q, d, cap)) {
                const mpq_class expect = (n % 2 == 0 ? 1 : -1) * e.at(n);
                CHECK(mpq_class(dim) == expect);
            }
        }
    }
}

TEST_CASE("polynomial ring in even generators") {
    const auto dims = dim_bruteforce(Quiver(Matrix{{0}}), DimVector{2}, 20);
    for (const auto& [n, dim] : dims) CHECK(dim == (n / 2) / 2 + 1);
}

TEST_CASE("one-vertex normal cubics") {
    for (int m = 1; m <= 4; ++m) {
        const Quiver q(Matrix{{m}});
        const long cap = 3L * m + 2 * 12;
        const auto cubics = normal_cubics(q, DimVector{3}, cap);
        for (const auto& [n, count] : cubics) {
            const long k = (n - 3L * m) / 2;
            CHECK(count == (k >= 3L * m ? parts_up_to_three(k - 3L * m) : 0));
        }
        CHECK(cubics == dim_bruteforce(q, DimVector{3}, cap));
    }
}

TEST_CASE("quadratic Groebner basis verdicts") {
    const Verdict v = check_quadratic_gb(Quiver(Matrix{{0, 1}, {1, 0}}), 14);
    CHECK(!v.ok);
    REQUIRE(v.d);
    CHECK(*v.d == DimVector{2, 1});
    CHECK(v.degree == 4);
    CHECK(check_quadratic_gb(Quiver(Matrix{{2, 1}, {1, 1}}), 20).ok);
    CHECK(check_quadratic_gb(Quiver(Matrix{{2, 1}, {1, 1}}), 20, VertexTieBreak::Ascending).ok);
    CHECK(!check_quadratic_gb(Quiver(Matrix{{0, 1}, {1, 0}}), 14, VertexTieBreak::Ascending).ok);
    CHECK(check_quadratic_gb(Quiver(Matrix{{0}}), 10).ok);
    CHECK(default_degree_cap(Quiver(Matrix{{2, 3}, {3, 3}})) == 26);
}

TEST_CASE("row-reduction families") {
    CHECK(family_leading(RowFamily::Commuting, 1, 2) == std::set<std::pair<int, int>>{{1, 1}});
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= 8; ++k)
            for (const auto& [i, j] : family_leading(RowFamily::Mixed, m, k))
                CHECK(family_claimed(RowFamily::Mixed, m, i, j));
    CHECK(check_row_reduction_families(3, 8).ok);
}
