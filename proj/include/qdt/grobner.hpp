#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qdt/errors.hpp"
#include "qdt/linalg.hpp"
#include "qdt/quiver.hpp"
#include "qdt/verdict.hpp"

namespace qdt {

/// Generator a_{i,k} of A_Q: degree (alpha_i, -2k - m_ii), parity m_ii mod 2.
struct Generator {
    int vertex = 0;
    int level = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// How generators of equal level compare. Ascending: a_{i,k} < a_{j,k} iff
/// i < j. Descending: a_{i,k} < a_{j,k} iff i > j. Levels always compare
/// first, lower level smaller.
enum class VertexTieBreak { Ascending, Descending };

/// The tie-break under which the leading-term description holds with the
/// vertex labels as given.
inline constexpr VertexTieBreak kDefaultTieBreak = VertexTieBreak::Descending;

bool generator_less(const Generator& a, const Generator& b, VertexTieBreak tb);

/// A monomial as a word of generators.
using Word = std::vector<Generator>;

/// Graded lexicographic comparison of words.
bool word_less(const Word& a, const Word& b, VertexTieBreak tb);

std::string word_to_string(const Word& w);

/// Normal form of a supercommutative monomial: letters sorted increasingly,
/// with the Koszul sign of the sorting permutation. Sign 0 when an odd
/// generator repeats.
struct SignedWord {
    Word word;
    int sign = 0;
};
SignedWord normal_form(Word w, const Quiver& q, VertexTieBreak tb);

/// Relations of the second group in the bidegree (alpha_i + alpha_j, level
/// sum k), over the normal weight-2 monomials sorted in decreasing order.
struct RelationMatrix {
    int i = 0;
    int j = 0;
    int level = 0;
    std::vector<Word> columns;
    RationalMatrix rows;
};

RelationMatrix relation_rows(const Quiver& q, int i, int j, int k, VertexTieBreak tb = kDefaultTieBreak);

/// Quadratic leading terms that are normal words: matrix pivots together with
/// squares of odd generators. Order-violating products are leading terms as
/// well and are implied.
struct LeadingTerms {
    VertexTieBreak tie_break = kDefaultTieBreak;
    int level_max = 0;
    std::set<Word> normal_words;
    /// Rank of every relation matrix, keyed by (i, j, level sum), i <= j.
    std::map<std::tuple<int, int, int>, std::size_t> ranks;

    /// True iff the word x y is a leading term (including order violations).
    bool contains(const Quiver& q, const Generator& x, const Generator& y) const;
};

/// Leading terms with both levels <= level_max.
LeadingTerms leading_terms(const Quiver& q, int level_max, VertexTieBreak tb = kDefaultTieBreak);

/// The stated leading-term description for the normal word a_{i,k} a_{j,l}
/// (k <= l): 0 <= l-k <= m_ij if i precedes j, and 0 <= l-k <= m_ij - 1
/// otherwise, where "i precedes j" means i < j under the Descending
/// tie-break and i > j under Ascending.
bool claimed_leading(const Quiver& q, const Generator& x, const Generator& y, VertexTieBreak tb = kDefaultTieBreak);

/// leading_terms equals the claimed description for levels <= level_max and
/// every relation matrix has rank equal to the number of claimed terms in its
/// bidegree (odd squares excluded).
Verdict check_leading_terms(const Quiver& q, int level_max, VertexTieBreak tb = kDefaultTieBreak);

/// Homological degree n -> dim of (A_Q)_{d, -n}, for 0 <= n <= degree_cap
/// with n of the parity of sum_i m_ii d_i. Requires |d| <= 3.
std::map<long, long> dim_bruteforce(const Quiver& q, const DimVector& d, long degree_cap);

/// Homological degree n -> number of weight-3 normal words of multidegree d.
std::map<long, long> normal_cubics(const Quiver& q, const DimVector& d, long degree_cap,
                                   VertexTieBreak tb = kDefaultTieBreak);

/// Default degree cap for check_quadratic_gb: 6 max(m) + 8. For two-vertex
/// quivers with entries <= 3 the lowest weight-3 discrepancy under either
/// tie-break is at most 6 max(m) + 5.
long default_degree_cap(const Quiver& q);

/// Weight-3 Diamond-lemma check: normal_cubics equals dim_bruteforce for
/// every |d| = 3 up to degree_cap. The failure names the first failing d in
/// decreasing lexicographic order and its lowest failing degree.
Verdict check_quadratic_gb(const Quiver& q, long degree_cap, VertexTieBreak tb = kDefaultTieBreak);

/// Three model relation families for the leading-term analysis: commuting a(z)
/// with 2m derivative relations, anticommuting b(z) with 2m-1, and a pair
/// c(z), d(z) with m.
enum class RowFamily { Commuting, Anticommuting, Mixed };

/// Leading monomials (i, j) of the family's relation space at index sum k,
/// with monomials ordered by |i-j| ascending being larger, ties (mixed only)
/// broken by smaller i being larger. For the symmetric families i <= j.
/// Squares b_i b_i vanish structurally and are included for Anticommuting.
std::set<std::pair<int, int>> family_leading(RowFamily family, int m, int k);

/// Rank of the family's relation matrix at index sum k.
std::size_t family_rank(RowFamily family, int m, int k);

/// The claimed leading set: 0 <= j-i <= 2m-1, 0 <= j-i <= 2m-2, and
/// {0 <= j-i <= m} U {0 < i-j < m} respectively.
bool family_claimed(RowFamily family, int m, int i, int j);

/// family_leading matches family_claimed for all m in [1, m_max] (m >= 2 for
/// Anticommuting) and indices <= level_max, with full-rank matrices; and the
/// quiver leading terms of the corresponding one- and two-vertex quivers
/// agree with the family sets.
Verdict check_row_reduction_families(int m_max, int level_max);

}  // namespace qdt
