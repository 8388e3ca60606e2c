#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace spinrep::detail {

// An integer vector x with row . x > 0 for every row, or nullopt when the
// open cone is empty. Exact (rational Phase-I simplex, Bland's rule).
std::optional<std::vector<std::int64_t>> strictly_feasible(
    const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace spinrep::detail
