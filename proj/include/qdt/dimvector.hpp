#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qdt {

/// A dimension vector d in Z_{>=0}^n. Ordered lexicographically.
struct DimVector {
    std::vector<int> v;

    DimVector() = default;
    explicit DimVector(std::vector<int> entries) : v(std::move(entries)) {}
    DimVector(std::initializer_list<int> entries) : v(entries) {}

    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }
    static DimVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return v.size(); }
    int operator[](std::size_t i) const { return v[i]; }
    int& operator[](std::size_t i) { return v[i]; }
    /// |d| = sum of entries.
    int total() const;
    bool is_zero() const { return total() == 0; }
    /// Componentwise <=.
    bool fits_in(const DimVector& o) const;

    DimVector operator+(const DimVector& o) const;
    DimVector operator-(const DimVector& o) const;
    DimVector scaled(int n) const;

    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend bool operator==(const DimVector&, const DimVector&) = default;

    std::string to_string() const;
};

/// All dimension vectors with n entries and 0 <= |d| <= max_total, in
/// lexicographic order.
std::vector<DimVector> dimension_vectors(std::size_t n, int max_total);

}  // namespace qdt
