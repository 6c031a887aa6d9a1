#pragma once

#include <stdexcept>

namespace alliance {

// Malformed external input: edge lists, graph6 strings, polynomial text/JSON,
// family specs. Distinct from std::invalid_argument, which flags API misuse.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size cap or enumeration budget was exceeded.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alliance
