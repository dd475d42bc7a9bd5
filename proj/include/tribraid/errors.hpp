#pragma once

#include <stdexcept>

namespace tribraid {

/// An operation was called outside its domain (e.g. a degenerate flype
/// triple passed to table2_symbol, or torus_jones with r < 2).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tribraid
