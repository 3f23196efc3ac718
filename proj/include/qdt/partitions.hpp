#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qdt/lieword.hpp"
#include "qdt/verdict.hpp"

namespace qdt {

/// Partition with non-negative parts stored nondecreasing.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    /// Parts are sorted on construction.
    explicit Partition(std::vector<int> p);

    std::size_t length() const { return parts.size(); }
    int size() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;
};

/// lam * mu = lam U S^{(m-1) l(lam)} mu, where S^p adds p to every part.
Partition star_product(const Partition& lam, const Partition& mu, int m);

/// lam_i <= (m-1)(i-1) for all i (1-based).
bool in_T(const Partition& lam, int m);
/// lam_1 = 0 and lam_i < (m-1)(i-1) for i >= 2.
bool in_T0(const Partition& lam, int m);

/// How a proper prefix compares in the lexicographic order on T^0.
enum class PrefixRule { PrefixSmaller, PrefixLarger };

/// The rule under which the bijection with basis words holds.
inline constexpr PrefixRule kDefaultPrefixRule = PrefixRule::PrefixLarger;

/// Entrywise lexicographic comparison with the given prefix rule.
bool t0_less(const Partition& a, const Partition& b, PrefixRule rule);

/// Elements of T^0 with at most len_max parts, each <= part_max.
std::vector<Partition> enumerate_T0(int m, int len_max, int part_max);

using PartitionWord = std::vector<Partition>;

/// Super-Lyndon-Shirshov words in the alphabet T^0 (letter parity
/// (m-1) l(lam) mod 2) with total part count <= len_max and parts <= part_max.
std::vector<PartitionWord> enumerate_TLplus(int m, int len_max, int part_max,
                                            PrefixRule rule = kDefaultPrefixRule);

/// Left-to-right * product of the letters.
Partition star_concatenate(const PartitionWord& w, int m);

/// Word b_{p + (m-1)(i-1) - lam_i} for lam the * product of the letters.
LSWord partition_to_word(int p, const PartitionWord& w, int m);

/// partition_to_word is injective on pairs (p, w) whose image has length <=
/// len_max and levels <= level_max, and its image is one_vertex_basis(m,
/// len_max, level_max).
Verdict check_partition_bijection(int m, int len_max, int level_max, PrefixRule rule = kDefaultPrefixRule);

}  // namespace qdt
