#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdt/dimvector.hpp"

namespace qdt {

/// Malformed or invalid quiver description.
struct QuiverError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite symmetric quiver given by its arrow multiplicity matrix.
class Quiver {
public:
    /// Validates: nonempty, square, non-negative, symmetric.
    explicit Quiver(std::vector<std::vector<int>> arrows);

    std::size_t size() const { return m_.size(); }
    int arrows(std::size_t i, std::size_t j) const { return m_[i][j]; }
    int loops(std::size_t i) const { return m_[i][i]; }
    int max_multiplicity() const;
    const std::vector<std::vector<int>>& matrix() const { return m_; }

    std::string to_string() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::vector<int>> m_;
};

/// Parse `[[...],...]` or `{"arrows": [[...],...]}`.
Quiver parse_quiver(std::string_view text);

/// chi(d, e) = sum_i d_i e_i - sum_{i,j} m_ij d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// Sum_i d_i^2.
long dot_self(const DimVector& d);

/// N >= 1 with all off-diagonal m_ij = N and all m_ii in {N, N+1}. One-vertex
/// quivers with m >= 1 loops give N = m.
std::optional<int> almost_n_regular(const Quiver& q);

/// All off-diagonal entries 0 and all loop counts in {0, 1}.
bool almost_0_regular(const Quiver& q);

}  // namespace qdt
