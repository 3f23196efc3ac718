#include <doctest.h>

#include <random>

#include "qdt/quiver.hpp"

using namespace qdt;

using Matrix = std::vector<std::vector<int>>;

TEST_CASE("parse inline matrices and objects") {
    CHECK(parse_quiver("[[0,1],[1,0]]") == Quiver(Matrix{{0, 1}, {1, 0}}));
    CHECK(parse_quiver(R"({"arrows": [[3]]})") == Quiver(Matrix{{3}}));
    CHECK(parse_quiver(" [[2, 1], [1, 1]] ").max_multiplicity() == 2);
}

TEST_CASE("invalid quivers are rejected") {
    CHECK_THROWS_AS(parse_quiver("[]"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("[[0,1]]"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("[[0,1],[2,0]]"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("[[-1]]"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("[[0,1],[1]]"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("not json"), QuiverError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": 2})"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("[[1.5]]"), QuiverError);
}

TEST_CASE("Euler form") {
    const Quiver q(Matrix{{0, 1}, {1, 0}});
    CHECK(euler_form(q, DimVector{1, 1}, DimVector{1, 1}) == 0);
    CHECK(euler_form(q, DimVector{1, 0}, DimVector{0, 1}) == -1);
    CHECK(euler_form(Quiver(Matrix{{3}}), DimVector{2}, DimVector{2}) == -8);
    CHECK(dot_self(DimVector{1, 2, 3}) == 14);
    CHECK_THROWS(euler_form(q, DimVector{1}, DimVector{1, 0}));
}

TEST_CASE("Euler form is symmetric for symmetric quivers") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(0, 3), dim(0, 4);
    for (int t = 0; t < 50; ++t) {
        Matrix m(3, std::vector<int>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = entry(rng);
        const Quiver q(m);
        const DimVector d{dim(rng), dim(rng), dim(rng)}, e{dim(rng), dim(rng), dim(rng)};
        CHECK(euler_form(q, d, e) == euler_form(q, e, d));
        CHECK(euler_form(q, d + e, d + e) == euler_form(q, d, d) + 2 * euler_form(q, d, e) + euler_form(q, e, e));
    }
}

TEST_CASE("almost N-regular quivers") {
    CHECK(almost_n_regular(Quiver(Matrix{{3}})) == 3);
    CHECK(!almost_n_regular(Quiver(Matrix{{0}})));
    CHECK(almost_n_regular(Quiver(Matrix{{1, 1}, {1, 1}})) == 1);
    CHECK(almost_n_regular(Quiver(Matrix{{2, 1}, {1, 1}})) == 1);
    CHECK(almost_n_regular(Quiver(Matrix{{2, 2, 2}, {2, 3, 2}, {2, 2, 2}})) == 2);
    CHECK(!almost_n_regular(Quiver(Matrix{{0, 1}, {1, 0}})));
    CHECK(!almost_n_regular(Quiver(Matrix{{3, 1}, {1, 1}})));
    CHECK(!almost_n_regular(Quiver(Matrix{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}})));
    CHECK(almost_0_regular(Quiver(Matrix{{1, 0}, {0, 0}})));
    CHECK(!almost_0_regular(Quiver(Matrix{{2}})));
    CHECK(!almost_0_regular(Quiver(Matrix{{0, 1}, {1, 0}})));
}
