#include "qdt/lieword.hpp"

#include <set>
#include <sstream>

#include "qdt/motivic.hpp"

namespace qdt {

int LSWord::parity() const {
    int p = 0;
    for (const auto& l : letters) p += l.parity();
    return p % 2;
}

long LSWord::degree() const {
    long d = 0;
    for (const auto& l : letters) d += l.degree();
    return d;
}

DimVector LSWord::multidegree(std::size_t nvertices) const {
    DimVector d = DimVector::zero(nvertices);
    for (const auto& l : letters) d[static_cast<std::size_t>(l.vertex)] += 1;
    return d;
}

int LSWord::min_level() const {
    int r = letters.at(0).level;
    for (const auto& l : letters) r = std::min(r, l.level);
    return r;
}

int LSWord::max_level() const {
    int r = letters.at(0).level;
    for (const auto& l : letters) r = std::max(r, l.level);
    return r;
}

LSWord LSWord::shifted(int k) const {
    LSWord w = *this;
    for (auto& l : w.letters) l.level += k;
    return w;
}

std::strong_ordering operator<=>(const LSWord& a, const LSWord& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a.letters[i] <=> b.letters[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string LSWord::to_string(bool show_vertex) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << " ";
        if (show_vertex) os << "b(" << letters[i].vertex << "," << letters[i].level << ")";
        else os << "b" << letters[i].level;
    }
    return os.str();
}

LSWord one_vertex_word(int m, const std::vector<int>& levels) {
    LSWord w;
    for (int k : levels) w.letters.push_back(Letter{0, k, m});
    return w;
}

namespace {

bool letter_less(const Letter& a, const Letter& b) { return a < b; }
int letter_parity(const Letter& l) { return l.parity(); }

}  // namespace

bool is_lyndon(const LSWord& w) { return is_lyndon_sequence(w.letters, letter_less); }

bool is_super_lyndon(const LSWord& w) { return is_super_lyndon_sequence(w.letters, letter_less, letter_parity); }

std::vector<LSWord> one_vertex_basis(int m, int len_max, int level_max) {
    std::vector<LSWord> out;
    std::vector<int> levels;
    auto rec = [&](auto&& self) -> void {
        if (!levels.empty()) {
            LSWord w = one_vertex_word(m, levels);
            if (is_super_lyndon(w)) out.push_back(std::move(w));
        }
        if (static_cast<int>(levels.size()) == len_max) return;
        const int top = levels.empty() ? level_max : std::min(level_max, levels.back() + m - 1);
        for (int k = 0; k <= top; ++k) {
            levels.push_back(k);
            self(self);
            levels.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<DimVector, QRat> words_character(const std::vector<LSWord>& words, std::size_t nvertices, bool signed_) {
    // Accumulate integer coefficients per (d, degree) before building QRats.
    std::map<DimVector, std::map<long, long>> counts;
    for (const auto& w : words) {
        const long deg = w.degree();
        const long sign = (signed_ && deg % 2 != 0) ? -1 : 1;
        counts[w.multidegree(nvertices)][deg] += sign;
    }
    std::map<DimVector, QRat> out;
    for (const auto& [d, by_degree] : counts) {
        QRat acc;
        for (const auto& [deg, c] : by_degree) acc += QRat(c).times_u_pow(deg);
        if (!acc.is_zero()) out.emplace(d, acc);
    }
    return out;
}

long complete_degree(int m, int level_max) { return 2L * level_max + m + 1; }

Verdict check_basis_character(int m, int len_max, int level_max, long degree_max) {
    const long cap = std::min(degree_max, complete_degree(m, level_max));
    const auto words = one_vertex_basis(m, len_max, level_max);
    const auto chars = words_character(words, 1, true);
    const Quiver q(std::vector<std::vector<int>>{{m}});
    const MSeries g = g_character(q, len_max);
    for (int n = 1; n <= len_max; ++n) {
        const DimVector d{n};
        const auto it = chars.find(d);
        const QRat enumerated = it == chars.end() ? QRat() : it->second;
        const LaurentExpansion expect = laurent_coefficients(g.coeff(d), cap);
        const LaurentExpansion got = laurent_coefficients(enumerated, cap);
        const long lo = std::min(expect.valuation, got.valuation);
        for (long k = lo; k <= cap; ++k)
            if (expect.at(k) != got.at(k)) return Verdict::fail("basis word count differs from the character", d, k);
    }
    return Verdict::pass();
}

Verdict check_shift_bijection(int m, int len_max, int level_max) {
    const auto basis = one_vertex_basis(m, len_max, level_max);
    const std::set<LSWord> members(basis.begin(), basis.end());
    std::set<std::pair<int, LSWord>> pairs;
    for (const auto& w : basis) {
        const int k = w.letters.front().level;
        if (k != w.min_level()) return Verdict::fail("first level is not minimal in " + w.to_string());
        const LSWord anchored = w.shifted(-k);
        if (!is_super_lyndon(anchored)) return Verdict::fail("lowering loses the super-Lyndon property: " + w.to_string());
        if (!members.count(anchored)) return Verdict::fail("lowered word missing from the basis: " + anchored.to_string());
        if (!pairs.emplace(k, anchored).second) return Verdict::fail("shift map not injective at " + w.to_string());
    }
    for (const auto& a : basis) {
        if (a.letters.front().level != 0) continue;
        for (int k = 0; a.max_level() + k <= level_max; ++k) {
            const LSWord w = a.shifted(k);
            if (!is_super_lyndon(w) || !members.count(w))
                return Verdict::fail("shift map not surjective at (" + std::to_string(k) + ", " + a.to_string() + ")");
        }
    }
    if (pairs.size() != basis.size()) return Verdict::fail("shift map size mismatch");
    return Verdict::pass();
}

}  // namespace qdt
