#include <doctest.h>

#include <random>

#include "qdt/mseries.hpp"
#include "qdt/qrat.hpp"

using namespace qdt;

namespace {

// 1 - u^{2j}
Poly one_minus_u2(int j) {
    std::vector<mpz_class> c(2 * j + 1, 0);
    c[0] = 1;
    c[2 * j] = -1;
    return Poly(c);
}

QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), len(1, 3), shift(-3, 3);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<mpz_class> c(len(rng));
            for (auto& x : c) x = coeff(rng);
            Poly p(c);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return QRat(shift(rng), poly(false), poly(true));
}

MSeries random_series(std::mt19937& rng, std::size_t nvars, int order, bool constant_one) {
    std::uniform_int_distribution<int> deg(0, 2), count(1, 3);
    MSeries f = constant_one ? MSeries::one(nvars, order) : MSeries(nvars, order);
    for (int t = count(rng); t > 0; --t) {
        DimVector d = DimVector::zero(nvars);
        for (std::size_t i = 0; i < nvars; ++i) d[i] = deg(rng);
        if (d.is_zero()) d[0] = 1;
        f.add_to(d, random_qrat(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("Poly arithmetic, division and gcd") {
    const Poly a{1, 1};
    const Poly b{1, -1};
    CHECK(a * b == Poly{1, 0, -1});
    CHECK(divexact(Poly{1, 0, -1}, a) == b);
    CHECK_THROWS_AS(divexact(Poly{1, 0, 1}, a), std::domain_error);
    CHECK(primitive_gcd(Poly{-2, 0, 2}, Poly{-3, 3}) == Poly{-1, 1});
    CHECK(primitive_gcd(Poly{1, 1}, Poly{1, -1}).is_one());
    CHECK(Poly{1, 2, 3}.reversed() == Poly{3, 2, 1});
    CHECK(Poly{1, 1}.compose_power(3) == Poly{1, 0, 0, 1});
    CHECK(Poly{6, 0, -4}.content() == 2);
    CHECK(Poly{1, -2}.to_string() == "1 - 2*u");
}

TEST_CASE("QRat canonical form") {
    const QRat a(Poly{0, 2}, Poly{0, 0, 4});
    CHECK(a == QRat(mpq_class(1, 2)).times_u_pow(-1));
    CHECK(a.shift() == -1);
    CHECK(QRat(Poly{1, 0, -1}, Poly{1, 1}) == QRat(Poly{1, -1}, Poly(1)));
    CHECK(QRat(Poly{-1}, Poly{-2}) == QRat(mpq_class(1, 2)));
    CHECK(QRat(Poly{0, 0}, Poly{1, 1}).is_zero());
    CHECK_THROWS(QRat(Poly{1}, Poly{}));
    CHECK_THROWS(QRat().inverse());
    CHECK(QRat(Poly(1), one_minus_u2(1)).to_string() == "-1/(-1 + u^2)");
    CHECK(QRat::u_pow(-2).to_string() == "1/u^2");
}

TEST_CASE("q inversion") {
    const QRat r(Poly(1), one_minus_u2(1));
    CHECK(invert_q(r) == -QRat(2, Poly(1), one_minus_u2(1)));
    CHECK(invert_q(QRat::u_pow(3)) == QRat::u_pow(-3));
    CHECK(invert_q(QRat(Poly{1, 2}, Poly(1))) == QRat(-1, Poly{2, 1}, Poly(1)));
}

TEST_CASE("Laurent expansion at u = 0") {
    const auto e = laurent_coefficients(QRat(Poly(1), one_minus_u2(1)), 6);
    CHECK(e.valuation == 0);
    REQUIRE(e.coeffs.size() == 7);
    for (int k = 0; k <= 6; ++k) CHECK(e.at(k) == (k % 2 == 0 ? 1 : 0));
    const auto f = laurent_coefficients(QRat(-1, Poly(1), Poly{1, -1}), 2);
    CHECK(f.valuation == -1);
    CHECK(f.at(-2) == 0);
    CHECK(f.at(-1) == 1);
    CHECK(f.at(2) == 1);
    CHECK(laurent_coefficients(QRat::u_pow(5), 4).coeffs.empty());
}

TEST_CASE("QRat field laws on random values") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == QRat());
        CHECK((a + b) - b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
        CHECK(invert_q(invert_q(a)) == a);
        CHECK(invert_q(a * b) == invert_q(a) * invert_q(b));
        CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
        CHECK((a + b).adams(3) == a.adams(3) + b.adams(3));
        CHECK(a.adams(2).adams(3) == a.adams(6));
        // Laurent expansion is a ring map.
        const auto ea = laurent_coefficients(a, 4), eb = laurent_coefficients(b, 4);
        const auto eab = laurent_coefficients(a + b, 4);
        for (long k = -8; k <= 4; ++k) CHECK(eab.at(k) == ea.at(k) + eb.at(k));
    }
}

TEST_CASE("plethystic exponential of monomials") {
    // Exp(x) = 1/(1-x), Exp(-x) = 1 - x.
    const MSeries x = MSeries::monomial(1, 6, DimVector{1}, QRat(1));
    const MSeries e = pleth_exp(x);
    for (int n = 0; n <= 6; ++n) CHECK(e.coeff(DimVector{n}) == QRat(1));
    const MSeries em = pleth_exp(-x);
    CHECK(em == MSeries::one(1, 6) - x);
}

TEST_CASE("Exp(x/(1-q)) is the q-exponential") {
    // sum_n x^n / ((1-q)...(1-q^n)) with q = u^2.
    const int order = 6;
    const MSeries f = MSeries::monomial(1, order, DimVector{1}, QRat(Poly(1), one_minus_u2(1)));
    const MSeries e = pleth_exp(f);
    QRat expect(1);
    for (int n = 1; n <= order; ++n) {
        expect = expect / QRat(one_minus_u2(n), Poly(1));
        CHECK(e.coeff(DimVector{n}) == expect);
    }
    CHECK(pleth_log(e) == f);
}

TEST_CASE("plethystic Exp/Log round trip and group law on random series") {
    std::mt19937 rng(11);
    for (int t = 0; t < 12; ++t) {
        const std::size_t nvars = 1 + t % 2;
        const MSeries f = random_series(rng, nvars, 5, false);
        const MSeries g = random_series(rng, nvars, 5, false);
        const MSeries ef = pleth_exp(f);
        CHECK(pleth_log(ef) == f);
        CHECK(pleth_exp(f + g) == ef * pleth_exp(g));
        CHECK(series_log(series_exp(f)) == f);
        CHECK(series_exp(f + g) == series_exp(f) * series_exp(g));
    }
}

TEST_CASE("series inverse and Adams operations") {
    std::mt19937 rng(13);
    for (int t = 0; t < 12; ++t) {
        const MSeries f = random_series(rng, 2, 5, true);
        const MSeries g = random_series(rng, 2, 5, true);
        CHECK(series_invert(f) * f == MSeries::one(2, 5));
        CHECK(adams(f * g, 2) == adams(f, 2) * adams(g, 2));
        CHECK(adams(adams(f, 2), 2) == adams(f, 4));
        CHECK(series_invert(series_invert(f)) == f);
    }
}

TEST_CASE("series preconditions") {
    const MSeries one = MSeries::one(1, 3);
    const MSeries zero(1, 3);
    CHECK_THROWS_AS(pleth_exp(one), PreconditionError);
    CHECK_THROWS_AS(pleth_log(zero), PreconditionError);
    CHECK_THROWS_AS(series_invert(zero), PreconditionError);
    CHECK_THROWS_AS(adams(one, 0), PreconditionError);
    CHECK_THROWS_AS(one + MSeries::one(2, 3), PreconditionError);
    CHECK_THROWS_AS(MSeries(1, -1), PreconditionError);
    MSeries s(1, 2);
    s.set(DimVector{3}, QRat(1));
    CHECK(s.terms().empty());
}

TEST_CASE("rescale_x substitutes x -> u^k x") {
    MSeries f(2, 3);
    f.set(DimVector{1, 1}, QRat(3));
    const MSeries g = f.rescale_x(-1);
    CHECK(g.coeff(DimVector{1, 1}) == QRat(3).times_u_pow(-2));
    CHECK(g.rescale_x(1) == f);
}
