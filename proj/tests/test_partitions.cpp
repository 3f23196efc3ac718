#include <doctest.h>

#include "qdt/partitions.hpp"

using namespace qdt;

namespace {

std::vector<Partition> small_partitions(int len_max, int part_max) {
    std::vector<Partition> out{Partition()};
    std::vector<Partition> frontier{Partition()};
    for (int len = 1; len <= len_max; ++len) {
        std::vector<Partition> next;
        for (const auto& p : frontier) {
            const int lo = p.parts.empty() ? 0 : p.parts.back();
            for (int x = lo; x <= part_max; ++x) {
                auto parts = p.parts;
                parts.push_back(x);
                next.emplace_back(parts);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("star product") {
    CHECK(star_product(Partition({0}), Partition({0}), 2) == Partition({0, 1}));
    CHECK(star_product(Partition({0, 1}), Partition({0}), 3) == Partition({0, 1, 4}));
    CHECK(star_product(Partition(), Partition({2, 0}), 3) == Partition({0, 2}));
    CHECK(Partition({3, 1, 2}).parts == std::vector<int>{1, 2, 3});
    CHECK(Partition({0, 1, 4}).size() == 5);
}

TEST_CASE("star product is an associative unital product preserving T") {
    const auto ps = small_partitions(3, 3);
    for (int m = 1; m <= 3; ++m)
        for (const auto& a : ps)
            for (const auto& b : ps) {
                CHECK(star_product(a, Partition(), m) == a);
                CHECK(star_product(Partition(), a, m) == a);
                const Partition ab = star_product(a, b, m);
                CHECK(ab.length() == a.length() + b.length());
                if (in_T(a, m) && in_T(b, m)) CHECK(in_T(ab, m));
                for (const auto& c : {Partition({0}), Partition({0, 1}), Partition({1, 2})})
                    CHECK(star_product(ab, c, m) == star_product(a, star_product(b, c, m), m));
            }
}

TEST_CASE("membership in T and T0") {
    CHECK(in_T(Partition({0, 1}), 2));
    CHECK(!in_T0(Partition({0, 1}), 2));
    CHECK(in_T0(Partition({0, 0}), 2));
    CHECK(!in_T(Partition({1}), 2));
    CHECK(in_T0(Partition({0, 1, 3}), 3));
    CHECK(!in_T0(Partition({0, 2}), 3));
}

TEST_CASE("enumerating T0") {
    const auto t = enumerate_T0(2, 3, 5);
    CHECK(t.size() == 4);
    for (const auto& p : t) CHECK(in_T0(p, 2));
    for (const auto& p : enumerate_T0(3, 4, 6)) {
        CHECK(in_T0(p, 3));
        CHECK(p.length() <= 4);
    }
}

TEST_CASE("prefix rules") {
    const Partition a({0}), b({0, 0}), c({0, 1});
    CHECK(t0_less(a, b, PrefixRule::PrefixSmaller));
    CHECK(t0_less(b, a, PrefixRule::PrefixLarger));
    CHECK(t0_less(b, c, PrefixRule::PrefixSmaller));
    CHECK(t0_less(b, c, PrefixRule::PrefixLarger));
    CHECK(!t0_less(a, a, PrefixRule::PrefixLarger));
}

TEST_CASE("partition words map to basis words") {
    CHECK(partition_to_word(0, {Partition({0})}, 2) == one_vertex_word(2, {0}));
    CHECK(partition_to_word(3, {Partition({0})}, 2) == one_vertex_word(2, {3}));
    CHECK(star_concatenate({Partition({0}), Partition({0, 0})}, 2) == Partition({0, 1, 1}));
    CHECK(partition_to_word(0, {Partition({0}), Partition({0, 0})}, 2) == one_vertex_word(2, {0, 0, 1}));
    for (const auto& w : enumerate_TLplus(2, 4, 3)) CHECK(is_super_lyndon(partition_to_word(0, w, 2)));
}

TEST_CASE("bijection holds with the prefix-larger rule only") {
    for (int m = 1; m <= 3; ++m) CHECK(check_partition_bijection(m, 4, 5, PrefixRule::PrefixLarger).ok);
    CHECK(check_partition_bijection(1, 4, 5, PrefixRule::PrefixSmaller).ok);
    CHECK(!check_partition_bijection(2, 4, 5, PrefixRule::PrefixSmaller).ok);
}
