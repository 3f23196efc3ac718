#include "qdt/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qdt {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { std::sort(parts.begin(), parts.end()); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

Partition star_product(const Partition& lam, const Partition& mu, int m) {
    const int shift = (m - 1) * static_cast<int>(lam.length());
    std::vector<int> p = lam.parts;
    for (int x : mu.parts) p.push_back(x + shift);
    return Partition(std::move(p));
}

bool in_T(const Partition& lam, int m) {
    for (std::size_t i = 0; i < lam.length(); ++i)
        if (lam.parts[i] > (m - 1) * static_cast<int>(i)) return false;
    return true;
}

bool in_T0(const Partition& lam, int m) {
    if (lam.length() == 0 || lam.parts[0] != 0) return false;
    for (std::size_t i = 1; i < lam.length(); ++i)
        if (lam.parts[i] >= (m - 1) * static_cast<int>(i)) return false;
    return true;
}

bool t0_less(const Partition& a, const Partition& b, PrefixRule rule) {
    const std::size_t n = std::min(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i)
        if (a.parts[i] != b.parts[i]) return a.parts[i] < b.parts[i];
    if (a.length() == b.length()) return false;
    const bool a_is_prefix = a.length() < b.length();
    return rule == PrefixRule::PrefixSmaller ? a_is_prefix : !a_is_prefix;
}

std::vector<Partition> enumerate_T0(int m, int len_max, int part_max) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self) -> void {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == len_max) return;
        const int i = static_cast<int>(parts.size());
        const int hi = std::min(part_max, (m - 1) * i - 1);
        for (int x = parts.back(); x <= hi; ++x) {
            parts.push_back(x);
            self(self);
            parts.pop_back();
        }
    };
    if (len_max >= 1 && part_max >= 0) {
        parts.push_back(0);
        rec(rec);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionWord> enumerate_TLplus(int m, int len_max, int part_max, PrefixRule rule) {
    const auto alphabet = enumerate_T0(m, len_max, part_max);
    auto less = [rule](const Partition& a, const Partition& b) { return t0_less(a, b, rule); };
    auto parity = [m](const Partition& p) { return ((m - 1) * static_cast<int>(p.length())) % 2; };
    std::vector<PartitionWord> out;
    PartitionWord cur;
    auto rec = [&](auto&& self, int budget) -> void {
        if (!cur.empty() && is_super_lyndon_sequence(cur, less, parity)) {
            // Parts of the * product must respect part_max too.
            const Partition lam = star_concatenate(cur, m);
            if (lam.parts.empty() || lam.parts.back() <= part_max) out.push_back(cur);
        }
        for (const auto& letter : alphabet) {
            if (static_cast<int>(letter.length()) > budget) continue;
            cur.push_back(letter);
            self(self, budget - static_cast<int>(letter.length()));
            cur.pop_back();
        }
    };
    rec(rec, len_max);
    return out;
}

Partition star_concatenate(const PartitionWord& w, int m) {
    Partition acc;
    for (const auto& p : w) acc = star_product(acc, p, m);
    return acc;
}

LSWord partition_to_word(int p, const PartitionWord& w, int m) {
    const Partition lam = star_concatenate(w, m);
    std::vector<int> levels;
    for (std::size_t i = 0; i < lam.length(); ++i)
        levels.push_back(p + (m - 1) * static_cast<int>(i) - lam.parts[i]);
    return one_vertex_word(m, levels);
}

Verdict check_partition_bijection(int m, int len_max, int level_max, PrefixRule rule) {
    // Parts of lam in T are at most (m-1)(len_max-1), so this bound is exact.
    const int part_max = std::max(0, (m - 1) * (len_max - 1));
    const auto words = enumerate_TLplus(m, len_max, part_max, rule);
    const auto basis = one_vertex_basis(m, len_max, level_max);
    const std::set<LSWord> expected(basis.begin(), basis.end());
    std::set<LSWord> image;
    for (const auto& w : words) {
        for (int p = 0; p <= level_max; ++p) {
            const LSWord b = partition_to_word(p, w, m);
            if (b.max_level() > level_max) break;
            if (!image.insert(b).second) return Verdict::fail("partition map not injective at " + b.to_string());
            if (!expected.count(b)) return Verdict::fail("image word is not a basis word: " + b.to_string());
        }
    }
    for (const auto& b : basis)
        if (!image.count(b)) return Verdict::fail("basis word not in the image: " + b.to_string());
    return Verdict::pass();
}

}  // namespace qdt
