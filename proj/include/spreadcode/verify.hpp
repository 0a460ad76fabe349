// The verification matrix behind `spreadcode verify-paper` and the
// acceptance test binary: twelve rows, each an executable check of one
// published claim about codes built from partial spreads, run over a fixed
// registry of Desarguesian, scalar-graph, companion and seeded random
// instances. All arithmetic is exact, so every row is pass/fail.

#ifndef SPREADCODE_VERIFY_HPP
#define SPREADCODE_VERIFY_HPP

#include <string>
#include <vector>

namespace spreadcode {

struct RowResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every row whose id contains `row_filter` (empty = all rows), in
// declaration order. `threads` caps the workers used by the geometric
// checker and the weight enumerator; results do not depend on it.
std::vector<RowResult> run_verification(const std::string& row_filter = "",
                                        int threads = 1);

}  // namespace spreadcode

#endif
