#include "qdt/dimvector.hpp"
#include "qdt/verdict.hpp"

#include <numeric>
#include <sstream>

namespace qdt {

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    DimVector d = zero(n);
    d.v.at(i) = 1;
    return d;
}

int DimVector::total() const { return std::accumulate(v.begin(), v.end(), 0); }

bool DimVector::fits_in(const DimVector& o) const {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > o.v[i]) return false;
    return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
    DimVector r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
    DimVector r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
}

DimVector DimVector::scaled(int n) const {
    DimVector r = *this;
    for (auto& x : r.v) x *= n;
    return r;
}

std::string DimVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<DimVector> dimension_vectors(std::size_t n, int max_total) {
    std::vector<DimVector> out;
    if (max_total < 0) return out;
    DimVector cur = DimVector::zero(n);
    // Odometer over entries with a running budget; yields lexicographic order.
    auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            cur.v[i] = x;
            self(self, i + 1, budget - x);
        }
        cur.v[i] = 0;
    };
    rec(rec, 0, max_total);
    return out;
}

std::string Verdict::describe() const {
    if (ok) return "ok";
    std::string s = message;
    if (d) s += " at d=" + d->to_string();
    if (degree) s += " degree " + std::to_string(*degree);
    return s;
}

}  // namespace qdt
