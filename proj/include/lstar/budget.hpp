#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lstar {

/// Thrown when a lattice-point scan would exceed the configured cell budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cell budget for box scans. Defaults to 5e8, or LSTAR_BUDGET from the
/// environment when set.
std::int64_t counting_budget();
void set_counting_budget(std::int64_t cells);

}  // namespace lstar
