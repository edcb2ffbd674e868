#pragma once

#include <stdexcept>

namespace kneser {

/// A node, edge, or family budget ran out before an exact answer was reached.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kneser
