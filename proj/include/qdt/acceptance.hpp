#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdt/quiver.hpp"

namespace qdt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    /// Time limit in seconds; 0 when the criterion has none.
    double limit = 0;
};

/// {[[0]], [[1]], [[2]], [[3]], [[0,1],[1,0]], [[1,1],[1,1]], [[2,1],[1,1]],
/// [[2,2],[2,2]]}.
std::vector<Quiver> acceptance_suite();

/// Run all acceptance criteria in order. When `out` is given, one line per
/// criterion is written as soon as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* out = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace qdt
