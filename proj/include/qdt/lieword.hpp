#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qdt/dimvector.hpp"
#include "qdt/qrat.hpp"
#include "qdt/verdict.hpp"

namespace qdt {

/// Generator b_{i,k} of g_Q: vertex i, level k, with m_ii loops at i.
/// Degree 2k + m_ii + 1, parity (m_ii + 1) mod 2.
struct Letter {
    int vertex = 0;
    int level = 0;
    int loops = 0;

    int parity() const { return (loops + 1) % 2; }
    long degree() const { return 2L * level + loops + 1; }

    /// b_{i,k} < b_{j,l} iff k > l, or k = l and i > j.
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (a.level != b.level) return b.level <=> a.level;
        return b.vertex <=> a.vertex;
    }
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.vertex == b.vertex && a.level == b.level;
    }
};

/// Word in the letters b_{i,k}, compared graded-lexicographically: shorter
/// words first, then letter by letter.
struct LSWord {
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    int parity() const;
    long degree() const;
    DimVector multidegree(std::size_t nvertices) const;
    int min_level() const;
    int max_level() const;
    /// tau^k: add k to every level (k may be negative if levels stay >= 0).
    LSWord shifted(int k) const;

    friend std::strong_ordering operator<=>(const LSWord& a, const LSWord& b);
    friend bool operator==(const LSWord& a, const LSWord& b) = default;

    /// e.g. "b0 b1" for one vertex, "b(1,0) b(0,2)" otherwise.
    std::string to_string(bool show_vertex = false) const;
};

/// One-vertex word b_{p_1} ... b_{p_n} with m loops.
LSWord one_vertex_word(int m, const std::vector<int>& levels);

/// w is strictly greater than each of its nontrivial cyclic shifts; `less`
/// compares letters.
template <class T, class Less>
bool is_lyndon_sequence(const std::vector<T>& w, Less less) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    for (std::size_t s = 1; s < n; ++s) {
        // Compare the rotation starting at s with w.
        bool greater = false;
        bool decided = false;
        for (std::size_t i = 0; i < n && !decided; ++i) {
            const T& a = w[i];
            const T& b = w[(s + i) % n];
            if (less(b, a)) greater = decided = true;
            else if (less(a, b)) decided = true;
        }
        if (!greater) return false;
    }
    return true;
}

/// Lyndon, or v v with v Lyndon of odd parity.
template <class T, class Less, class Parity>
bool is_super_lyndon_sequence(const std::vector<T>& w, Less less, Parity parity) {
    if (is_lyndon_sequence(w, less)) return true;
    const std::size_t n = w.size();
    if (n == 0 || n % 2 != 0) return false;
    const std::vector<T> half(w.begin(), w.begin() + static_cast<long>(n / 2));
    if (!std::equal(half.begin(), half.end(), w.begin() + static_cast<long>(n / 2))) return false;
    int p = 0;
    for (const auto& x : half) p += parity(x);
    return p % 2 == 1 && is_lyndon_sequence(half, less);
}

bool is_lyndon(const LSWord& w);
bool is_super_lyndon(const LSWord& w);

/// Super-Lyndon-Shirshov one-vertex words with length <= len_max, levels <=
/// level_max and p_{i+1} <= p_i + m - 1, in increasing order.
std::vector<LSWord> one_vertex_basis(int m, int len_max, int level_max);

/// Per multidegree, sum over words of (-u)^{deg} (signed) or u^{deg}.
std::map<DimVector, QRat> words_character(const std::vector<LSWord>& words, std::size_t nvertices, bool signed_);

/// Largest homological degree up to which one_vertex_basis(m, *, level_max)
/// contains every basis word: a word of length d and degree D has levels at
/// most (D - d(m+1))/2.
long complete_degree(int m, int level_max);

/// Compare the signed character of one_vertex_basis(m, len_max, level_max)
/// with the g_character of the m-loop quiver for multidegrees <= len_max and
/// homological degrees <= min(degree_max, complete_degree).
Verdict check_basis_character(int m, int len_max, int level_max, long degree_max);

/// w -> (first level k, tau^{-k} w) is a bijection from the bounded basis
/// onto pairs (k, basis word starting at level 0) within bounds.
Verdict check_shift_bijection(int m, int len_max, int level_max);

}  // namespace qdt
