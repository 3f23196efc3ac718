#pragma once

#include <optional>
#include <string>

#include "qdt/dimvector.hpp"

namespace qdt {

/// Outcome of a check: pass, or fail with the first offending dimension
/// vector (and homological degree when relevant).
struct Verdict {
    bool ok = true;
    std::optional<DimVector> d;
    std::optional<long> degree;
    std::string message;

    explicit operator bool() const { return ok; }

    static Verdict pass() { return {}; }
    static Verdict fail(std::string message, std::optional<DimVector> d = std::nullopt,
                        std::optional<long> degree = std::nullopt) {
        return Verdict{false, std::move(d), degree, std::move(message)};
    }

    std::string describe() const;
};

}  // namespace qdt
