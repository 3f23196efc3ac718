#include "qdt/grobner.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qdt/parallel.hpp"

namespace qdt {

namespace {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool is_odd(const Quiver& q, const Generator& g) { return q.loops(static_cast<std::size_t>(g.vertex)) % 2 != 0; }

long base_degree(const Quiver& q, const DimVector& d) {
    long b = 0;
    for (std::size_t i = 0; i < q.size(); ++i) b += static_cast<long>(q.loops(i)) * d[i];
    return b;
}

// Vertex multiset of d, e.g. (2,1) -> {0,0,1}.
std::vector<int> vertex_list(const DimVector& d) {
    std::vector<int> v;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (int c = 0; c < d[i]; ++c) v.push_back(static_cast<int>(i));
    return v;
}

// All level tuples of the given length summing to k.
void for_each_composition(std::size_t len, int k, const auto& fn) {
    std::vector<int> levels(len, 0);
    auto rec = [&](auto&& self, std::size_t pos, int rest) -> void {
        if (pos + 1 == len) {
            levels[pos] = rest;
            fn(levels);
            return;
        }
        for (int x = 0; x <= rest; ++x) {
            levels[pos] = x;
            self(self, pos + 1, rest - x);
        }
    };
    if (len == 0) {
        if (k == 0) fn(levels);
        return;
    }
    rec(rec, 0, k);
}

// Column index of nonzero normal monomials of the given vertex multiset and
// level sum.
struct MonomialBasis {
    std::map<Word, std::size_t> index;
    std::vector<Word> words;

    std::size_t add(const Word& w) {
        auto [it, inserted] = index.try_emplace(w, words.size());
        if (inserted) words.push_back(w);
        return it->second;
    }
};

MonomialBasis monomials(const Quiver& q, const std::vector<int>& vertices, int k, VertexTieBreak tb) {
    MonomialBasis b;
    for_each_composition(vertices.size(), k, [&](const std::vector<int>& levels) {
        Word w;
        for (std::size_t t = 0; t < vertices.size(); ++t) w.push_back({vertices[t], levels[t]});
        SignedWord nf = normal_form(std::move(w), q, tb);
        if (nf.sign != 0) b.add(nf.word);
    });
    return b;
}

// Adds sign * coeff * (prefix . a_{a,k1} a_{b,k2} . suffix) to `row`.
void add_term(std::vector<mpq_class>& row, const MonomialBasis& basis, const Quiver& q, VertexTieBreak tb,
              Word w, const mpz_class& coeff) {
    if (coeff == 0) return;
    SignedWord nf = normal_form(std::move(w), q, tb);
    if (nf.sign == 0) return;
    row[basis.index.at(nf.word)] += nf.sign * mpq_class(coeff);
}

// Row of the relation sum_{k1+k2=K} C(k2,p) a_{a,k1} a_{b,k2}, optionally
// multiplied on the right by `extra`.
std::vector<mpq_class> relation_row(const Quiver& q, VertexTieBreak tb, const MonomialBasis& basis, int a, int b,
                                    int level_sum, int p, const Generator* extra) {
    std::vector<mpq_class> row(basis.words.size(), mpq_class(0));
    for (int k1 = 0; k1 <= level_sum; ++k1) {
        const int k2 = level_sum - k1;
        Word w{{a, k1}, {b, k2}};
        if (extra) w.push_back(*extra);
        add_term(row, basis, q, tb, std::move(w), binomial(k2, p));
    }
    return row;
}

bool row_is_zero(const std::vector<mpq_class>& row) {
    return std::all_of(row.begin(), row.end(), [](const mpq_class& x) { return x == 0; });
}

}  // namespace

bool generator_less(const Generator& a, const Generator& b, VertexTieBreak tb) {
    if (a.level != b.level) return a.level < b.level;
    return tb == VertexTieBreak::Ascending ? a.vertex < b.vertex : a.vertex > b.vertex;
}

bool word_less(const Word& a, const Word& b, VertexTieBreak tb) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (generator_less(a[i], b[i], tb)) return true;
        if (generator_less(b[i], a[i], tb)) return false;
    }
    return false;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << "a(" << w[i].vertex << "," << w[i].level << ")";
    return os.str();
}

SignedWord normal_form(Word w, const Quiver& q, VertexTieBreak tb) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && generator_less(w[j], w[j - 1], tb); --j) {
            if (is_odd(q, w[j]) && is_odd(q, w[j - 1])) sign = -sign;
            std::swap(w[j], w[j - 1]);
        }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && is_odd(q, w[i])) return {std::move(w), 0};
    return {std::move(w), sign};
}

RelationMatrix relation_rows(const Quiver& q, int i, int j, int k, VertexTieBreak tb) {
    RelationMatrix rm;
    rm.i = std::min(i, j);
    rm.j = std::max(i, j);
    rm.level = k;
    MonomialBasis basis = monomials(q, {rm.i, rm.j}, k, tb);
    // Columns in decreasing monomial order.
    std::vector<std::size_t> perm(basis.words.size());
    for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = t;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        return word_less(basis.words[y], basis.words[x], tb);
    });
    MonomialBasis sorted;
    for (std::size_t t : perm) sorted.add(basis.words[t]);
    rm.columns = sorted.words;
    rm.rows = RationalMatrix(0, rm.columns.size());
    const int m = q.arrows(static_cast<std::size_t>(rm.i), static_cast<std::size_t>(rm.j));
    std::vector<std::pair<int, int>> orders{{rm.i, rm.j}};
    if (rm.i != rm.j) orders.emplace_back(rm.j, rm.i);
    for (const auto& [a, b] : orders)
        for (int p = 0; p < m; ++p) {
            auto row = relation_row(q, tb, sorted, a, b, k, p, nullptr);
            if (!row_is_zero(row)) rm.rows.append_row(std::move(row));
        }
    return rm;
}

bool LeadingTerms::contains(const Quiver& q, const Generator& x, const Generator& y) const {
    if (generator_less(y, x, tie_break)) return true;
    if (x == y && is_odd(q, x)) return true;
    return normal_words.count(Word{x, y}) > 0;
}

LeadingTerms leading_terms(const Quiver& q, int level_max, VertexTieBreak tb) {
    LeadingTerms lt;
    lt.tie_break = tb;
    lt.level_max = level_max;
    const int n = static_cast<int>(q.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k <= 2 * level_max; ++k) {
                RelationMatrix rm = relation_rows(q, i, j, k, tb);
                const auto pivots = rm.rows.rref();
                lt.ranks[{i, j, k}] = pivots.size();
                for (std::size_t c : pivots) {
                    const Word& w = rm.columns[c];
                    if (w[0].level <= level_max && w[1].level <= level_max) lt.normal_words.insert(w);
                }
            }
    for (int i = 0; i < n; ++i)
        if (q.loops(static_cast<std::size_t>(i)) % 2 != 0)
            for (int k = 0; k <= level_max; ++k) lt.normal_words.insert(Word{{i, k}, {i, k}});
    return lt;
}

bool claimed_leading(const Quiver& q, const Generator& x, const Generator& y, VertexTieBreak tb) {
    const int i = x.vertex;
    const int j = y.vertex;
    const int diff = y.level - x.level;
    const bool precedes = tb == VertexTieBreak::Descending ? i < j : i > j;
    const int m = q.arrows(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return diff >= 0 && diff <= (precedes ? m : m - 1);
}

Verdict check_leading_terms(const Quiver& q, int level_max, VertexTieBreak tb) {
    const LeadingTerms lt = leading_terms(q, level_max, tb);
    const int n = static_cast<int>(q.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k <= level_max; ++k)
                for (int l = k; l <= level_max; ++l) {
                    const Generator x{i, k};
                    const Generator y{j, l};
                    if (generator_less(y, x, tb)) continue;
                    const bool found = lt.normal_words.count(Word{x, y}) > 0;
                    if (found != claimed_leading(q, x, y, tb))
                        return Verdict::fail(std::string(found ? "unexpected" : "missing") + " leading term " +
                                             word_to_string(Word{x, y}));
                }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k <= 2 * level_max; ++k) {
                const RelationMatrix rm = relation_rows(q, i, j, k, tb);
                std::size_t claimed = 0;
                for (const Word& w : rm.columns)
                    if (claimed_leading(q, w[0], w[1], tb)) ++claimed;
                if (lt.ranks.at({i, j, k}) != claimed)
                    return Verdict::fail("relation matrix for vertices (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") level " + std::to_string(k) + " has rank " +
                                         std::to_string(lt.ranks.at({i, j, k})) + ", expected " +
                                         std::to_string(claimed));
            }
    return Verdict::pass();
}

std::map<long, long> dim_bruteforce(const Quiver& q, const DimVector& d, long degree_cap) {
    const std::vector<int> vertices = vertex_list(d);
    if (vertices.size() > 3) throw PreconditionError("dim_bruteforce: weight must be at most 3");
    // Any fixed tie-break gives the same dimensions.
    const VertexTieBreak tb = kDefaultTieBreak;
    const long base = base_degree(q, d);
    std::map<long, long> out;
    for (long n = base; n <= degree_cap; n += 2) {
        const int k = static_cast<int>((n - base) / 2);
        const MonomialBasis basis = monomials(q, vertices, k, tb);
        RationalMatrix rows(0, basis.words.size());
        // Weight 2: the relations themselves. Weight 3: relations in two of
        // the positions times a generator in the remaining one.
        const std::size_t extra_positions = vertices.size() == 3 ? 3 : vertices.size() == 2 ? 1 : 0;
        for (std::size_t c = 0; c < extra_positions; ++c) {
            std::vector<int> pair;
            for (std::size_t t = 0; t < vertices.size(); ++t)
                if (vertices.size() == 2 || t != c) pair.push_back(vertices[t]);
            const int a = pair[0];
            const int b = pair[1];
            const int m = q.arrows(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            std::vector<std::pair<int, int>> orders{{a, b}};
            if (a != b) orders.emplace_back(b, a);
            for (const auto& [x, y] : orders)
                for (int p = 0; p < m; ++p) {
                    if (vertices.size() == 2) {
                        auto row = relation_row(q, tb, basis, x, y, k, p, nullptr);
                        if (!row_is_zero(row)) rows.append_row(std::move(row));
                        continue;
                    }
                    for (int s = 0; s <= k; ++s) {
                        const Generator g{vertices[c], k - s};
                        auto row = relation_row(q, tb, basis, x, y, s, p, &g);
                        if (!row_is_zero(row)) rows.append_row(std::move(row));
                    }
                }
        }
        out[n] = static_cast<long>(basis.words.size() - rows.rank());
    }
    return out;
}

std::map<long, long> normal_cubics(const Quiver& q, const DimVector& d, long degree_cap, VertexTieBreak tb) {
    std::vector<int> vertices = vertex_list(d);
    if (vertices.size() != 3) throw PreconditionError("normal_cubics: weight must be 3");
    const long base = base_degree(q, d);
    std::map<long, long> out;
    if (degree_cap < base) return out;
    const int k_max = static_cast<int>((degree_cap - base) / 2);
    const LeadingTerms lt = leading_terms(q, k_max, tb);
    std::vector<std::vector<int>> orders;
    std::sort(vertices.begin(), vertices.end());
    do orders.push_back(vertices);
    while (std::next_permutation(vertices.begin(), vertices.end()));
    for (long n = base; n <= degree_cap; n += 2) {
        const int k = static_cast<int>((n - base) / 2);
        long count = 0;
        for (const auto& vs : orders)
            for_each_composition(3, k, [&](const std::vector<int>& levels) {
                const Generator x{vs[0], levels[0]}, y{vs[1], levels[1]}, z{vs[2], levels[2]};
                if (!lt.contains(q, x, y) && !lt.contains(q, y, z)) ++count;
            });
        out[n] = count;
    }
    return out;
}

long default_degree_cap(const Quiver& q) { return 6L * q.max_multiplicity() + 8; }

Verdict check_quadratic_gb(const Quiver& q, long degree_cap, VertexTieBreak tb) {
    std::vector<DimVector> dims;
    for (auto& d : dimension_vectors(q.size(), 3))
        if (d.total() == 3) dims.push_back(std::move(d));
    struct Mismatch {
        bool found = false;
        long degree = 0;
        long normal = 0;
        long actual = 0;
    };
    const auto results = parallel_map<Mismatch>(dims.size(), [&](std::size_t t) {
        const auto normal = normal_cubics(q, dims[t], degree_cap, tb);
        const auto actual = dim_bruteforce(q, dims[t], degree_cap);
        for (const auto& [n, c] : actual) {
            const long nc = normal.count(n) ? normal.at(n) : 0;
            if (nc != c) return Mismatch{true, n, nc, c};
        }
        return Mismatch{};
    });
    // First failing d in decreasing lexicographic order.
    std::optional<std::size_t> best;
    for (std::size_t t = dims.size(); t-- > 0;)
        if (results[t].found) {
            best = t;
            break;
        }
    if (!best) return Verdict::pass();
    const Mismatch& m = results[*best];
    return Verdict::fail(std::to_string(m.normal) + " normal cubic words but dimension " + std::to_string(m.actual),
                         dims[*best], m.degree);
}

namespace {

struct FamilyMatrix {
    std::vector<std::pair<int, int>> columns;
    RationalMatrix rows;
};

FamilyMatrix family_matrix(RowFamily family, int m, int k) {
    FamilyMatrix fm;
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (family == RowFamily::Commuting && i > j) continue;
        if (family == RowFamily::Anticommuting && i >= j) continue;
        fm.columns.emplace_back(i, j);
    }
    // Decreasing order: smaller |i-j| first, then smaller i.
    std::sort(fm.columns.begin(), fm.columns.end(), [](const auto& a, const auto& b) {
        return std::make_pair(std::abs(a.first - a.second), a.first) < std::make_pair(std::abs(b.first - b.second), b.first);
    });
    const int relations = family == RowFamily::Commuting ? 2 * m : family == RowFamily::Anticommuting ? 2 * m - 1 : m;
    fm.rows = RationalMatrix(0, fm.columns.size());
    for (int p = 0; p < relations; ++p) {
        std::vector<mpq_class> row(fm.columns.size(), mpq_class(0));
        for (std::size_t c = 0; c < fm.columns.size(); ++c) {
            const auto [i, j] = fm.columns[c];
            mpz_class v;
            switch (family) {
                case RowFamily::Commuting: v = i == j ? binomial(i, p) : binomial(j, p) + binomial(i, p); break;
                case RowFamily::Anticommuting: v = binomial(j, p) - binomial(i, p); break;
                case RowFamily::Mixed: v = binomial(j, p); break;
            }
            row[c] = v;
        }
        if (!row_is_zero(row)) fm.rows.append_row(std::move(row));
    }
    return fm;
}

}  // namespace

std::set<std::pair<int, int>> family_leading(RowFamily family, int m, int k) {
    FamilyMatrix fm = family_matrix(family, m, k);
    std::set<std::pair<int, int>> out;
    for (std::size_t c : fm.rows.rref()) out.insert(fm.columns[c]);
    if (family == RowFamily::Anticommuting && k % 2 == 0) out.emplace(k / 2, k / 2);
    return out;
}

std::size_t family_rank(RowFamily family, int m, int k) { return family_matrix(family, m, k).rows.rank(); }

bool family_claimed(RowFamily family, int m, int i, int j) {
    switch (family) {
        case RowFamily::Commuting: return 0 <= j - i && j - i <= 2 * m - 1;
        case RowFamily::Anticommuting: return 0 <= j - i && j - i <= 2 * m - 2;
        case RowFamily::Mixed: return (0 <= j - i && j - i <= m) || (0 < i - j && i - j < m);
    }
    return false;
}

Verdict check_row_reduction_families(int m_max, int level_max) {
    const RowFamily families[] = {RowFamily::Commuting, RowFamily::Anticommuting, RowFamily::Mixed};
    const char* names[] = {"commuting", "anticommuting", "mixed"};
    for (int f = 0; f < 3; ++f) {
        const RowFamily family = families[f];
        for (int m = family == RowFamily::Anticommuting ? 2 : 1; m <= m_max; ++m) {
            const std::string tag = std::string(names[f]) + " family m=" + std::to_string(m);
            std::set<std::pair<int, int>> all;
            for (int k = 0; k <= 2 * level_max; ++k) {
                const auto lead = family_leading(family, m, k);
                const FamilyMatrix fm = family_matrix(family, m, k);
                std::size_t claimed = 0;
                for (const auto& [i, j] : fm.columns)
                    if (family_claimed(family, m, i, j)) ++claimed;
                if (family_rank(family, m, k) != claimed)
                    return Verdict::fail(tag + ": matrix at k=" + std::to_string(k) + " is not of full rank");
                for (int i = 0; i <= k; ++i) {
                    const int j = k - i;
                    if (i > level_max || j > level_max) continue;
                    if (family != RowFamily::Mixed && i > j) continue;
                    const bool found = lead.count({i, j}) > 0;
                    if (found != family_claimed(family, m, i, j))
                        return Verdict::fail(tag + ": leading set differs at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
                    if (found) all.emplace(i, j);
                }
            }
            // The same sets from the quiver engine.
            const Quiver q = family == RowFamily::Commuting       ? Quiver(std::vector<std::vector<int>>{{2 * m}})
                             : family == RowFamily::Anticommuting ? Quiver(std::vector<std::vector<int>>{{2 * m - 1}})
                                                                  : Quiver(std::vector<std::vector<int>>{{0, m}, {m, 0}});
            const LeadingTerms lt = leading_terms(q, level_max, kDefaultTieBreak);
            std::set<std::pair<int, int>> from_quiver;
            for (const Word& w : lt.normal_words) {
                if (family != RowFamily::Mixed) {
                    from_quiver.emplace(w[0].level, w[1].level);
                } else if (w[0].vertex != w[1].vertex) {
                    // c = vertex 0, d = vertex 1.
                    const Generator& c = w[0].vertex == 0 ? w[0] : w[1];
                    const Generator& dd = w[0].vertex == 0 ? w[1] : w[0];
                    from_quiver.emplace(c.level, dd.level);
                }
            }
            if (from_quiver != all) return Verdict::fail(tag + ": quiver leading terms differ from the family");
        }
    }
    return Verdict::pass();
}

}  // namespace qdt
