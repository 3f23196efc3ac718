#include <doctest.h>

#include <functional>

#include "qdt/lieword.hpp"
#include "qdt/motivic.hpp"

using namespace qdt;

using Matrix = std::vector<std::vector<int>>;

namespace {

int moebius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    return n > 1 ? -r : r;
}

long necklace_count(int k, int n) {
    long s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        long p = 1;
        for (int i = 0; i < n / d; ++i) p *= k;
        s += moebius(d) * p;
    }
    return s / n;
}

}  // namespace

TEST_CASE("letter and word order") {
    const Letter b0{0, 0, 2}, b1{0, 1, 2}, c1{1, 1, 0};
    CHECK(b1 < b0);
    CHECK(c1 < b1);
    CHECK(b1.degree() == 5);
    CHECK(b0.parity() == 1);
    CHECK(Letter{0, 0, 1}.parity() == 0);
    const LSWord shorter = one_vertex_word(2, {0});
    const LSWord longer = one_vertex_word(2, {3, 3});
    CHECK(shorter < longer);
    CHECK(one_vertex_word(2, {1, 0}) < one_vertex_word(2, {0, 1}));
    CHECK(one_vertex_word(2, {0, 1}).to_string() == "b0 b1");
}

TEST_CASE("Lyndon sequences agree with the necklace count") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 7; ++n) {
            std::vector<int> w(n, 0);
            long count = 0;
            std::function<void(int)> rec = [&](int i) {
                if (i == n) {
                    count += is_lyndon_sequence(w, std::less<int>());
                    return;
                }
                for (int a = 0; a < k; ++a) {
                    w[i] = a;
                    rec(i + 1);
                }
            };
            rec(0);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(count == necklace_count(k, n));
        }
}

TEST_CASE("super-Lyndon squares need odd halves") {
    auto parity_one = [](int) { return 1; };
    auto parity_zero = [](int) { return 0; };
    const std::vector<int> w{1, 0, 1, 0};
    CHECK(!is_lyndon_sequence(w, std::less<int>()));
    CHECK(!is_super_lyndon_sequence(w, std::less<int>(), parity_one));
    const std::vector<int> sq{1, 1};
    CHECK(is_super_lyndon_sequence(sq, std::less<int>(), parity_one));
    CHECK(!is_super_lyndon_sequence(sq, std::less<int>(), parity_zero));
    CHECK(is_super_lyndon(one_vertex_word(2, {0, 0})));
    CHECK(!is_super_lyndon(one_vertex_word(1, {0, 0})));
    CHECK(is_lyndon(one_vertex_word(3, {0, 1})));
    CHECK(!is_lyndon(one_vertex_word(3, {1, 0})));
}

TEST_CASE("one-vertex bases") {
    CHECK(one_vertex_basis(1, 3, 4).size() == 5);
    const auto b = one_vertex_basis(2, 2, 1);
    REQUIRE(b.size() == 5);
    CHECK(b.front() == one_vertex_word(2, {1}));
    CHECK(std::is_sorted(b.begin(), b.end()));
    for (const auto& w : one_vertex_basis(3, 4, 5)) {
        CHECK(is_super_lyndon(w));
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            CHECK(w.letters[i + 1].level <= w.letters[i].level + 2);
    }
}

TEST_CASE("shift preserves the basis and adds 2k per letter") {
    for (const auto& w : one_vertex_basis(2, 3, 3)) {
        const LSWord s = w.shifted(2);
        CHECK(is_super_lyndon(s) == is_super_lyndon(w));
        CHECK(s.degree() == w.degree() + 4 * static_cast<long>(w.size()));
        CHECK(s.shifted(-2) == w);
    }
    CHECK(check_shift_bijection(2, 4, 6).ok);
    CHECK(check_shift_bijection(3, 3, 6).ok);
}

TEST_CASE("basis character matches the dual character") {
    for (int m = 1; m <= 3; ++m) CHECK(check_basis_character(m, 3, 8, complete_degree(m, 8)).ok);
    CHECK(complete_degree(2, 5) == 13);
    const auto ch = words_character({one_vertex_word(2, {0}), one_vertex_word(2, {1})}, 1, true);
    CHECK(ch.at(DimVector{1}) == -(QRat::u_pow(3) + QRat::u_pow(5)));
}

TEST_CASE("two-vertex dual character: b_{i,k} in degree 2k+1, c_k in degree 2k+2") {
    const MSeries g = g_character(Quiver(Matrix{{0, 1}, {1, 0}}), 4);
    // -sum_k u^{2k+1} at the unit vectors, sum_k u^{2k+2} at (1,1).
    const QRat b = QRat(1, Poly(-1), Poly{1, 0, -1});
    const QRat c = QRat(2, Poly(1), Poly{1, 0, -1});
    for (const auto& d : dimension_vectors(2, 4)) {
        if (d.is_zero()) continue;
        CAPTURE(d.to_string());
        if (d == DimVector{1, 0} || d == DimVector{0, 1}) CHECK(g.coeff(d) == b);
        else if (d == DimVector{1, 1}) CHECK(g.coeff(d) == c);
        else CHECK(g.coeff(d).is_zero());
    }
}
