#include "qdt/quiver.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace qdt {

Quiver::Quiver(std::vector<std::vector<int>> arrows) : m_(std::move(arrows)) {
    const std::size_t n = m_.size();
    if (n == 0) throw QuiverError("quiver must have at least one vertex");
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n)
            throw QuiverError("arrow matrix is not square: row " + std::to_string(i) + " has " +
                              std::to_string(m_[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            if (m_[i][j] < 0)
                throw QuiverError("negative arrow count at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m_[i][j] != m_[j][i])
                throw QuiverError("quiver is not symmetric: m[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + std::to_string(m_[i][j]) + " but m[" + std::to_string(j) + "][" +
                                  std::to_string(i) + "] = " + std::to_string(m_[j][i]));
}

int Quiver::max_multiplicity() const {
    int r = 0;
    for (const auto& row : m_) r = std::max(r, *std::max_element(row.begin(), row.end()));
    return r;
}

std::string Quiver::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m_.size(); ++j) os << (j ? "," : "") << m_[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

Quiver parse_quiver(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw QuiverError(std::string("malformed quiver JSON: ") + e.what());
    }
    if (j.is_object()) {
        if (!j.contains("arrows")) throw QuiverError("quiver object lacks an \"arrows\" field");
        j = j.at("arrows");
    }
    if (!j.is_array()) throw QuiverError("quiver must be a matrix (array of arrays)");
    std::vector<std::vector<int>> m;
    for (const auto& row : j) {
        if (!row.is_array()) throw QuiverError("quiver matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw QuiverError("quiver entries must be integers");
            r.push_back(x.get<int>());
        }
        m.push_back(std::move(r));
    }
    return Quiver(std::move(m));
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (d.size() != q.size() || e.size() != q.size())
        throw QuiverError("dimension vector length does not match the number of vertices");
    long r = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        r += static_cast<long>(d[i]) * e[i];
        for (std::size_t j = 0; j < q.size(); ++j) r -= static_cast<long>(q.arrows(i, j)) * d[i] * e[j];
    }
    return r;
}

long dot_self(const DimVector& d) {
    long r = 0;
    for (int x : d.v) r += static_cast<long>(x) * x;
    return r;
}

std::optional<int> almost_n_regular(const Quiver& q) {
    const std::size_t n = q.size();
    if (n == 1) {
        if (q.loops(0) >= 1) return q.loops(0);
        return std::nullopt;
    }
    const int N = q.arrows(0, 1);
    if (N < 1) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && q.arrows(i, j) != N) return std::nullopt;
        }
        if (q.loops(i) != N && q.loops(i) != N + 1) return std::nullopt;
    }
    return N;
}

bool almost_0_regular(const Quiver& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) {
            const int m = q.arrows(i, j);
            if (i != j ? m != 0 : m > 1) return false;
        }
    return true;
}

}  // namespace qdt
