#pragma once

#include <stdexcept>
#include <string>

namespace esd {

// Malformed graph input: self-loop, duplicate edge, endpoint out of range,
// or unparsable text.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A labeling that does not fit its graph or pool.
class InvalidLabeling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction that the known closed forms do not cover (e.g. an odd-by-odd
// grid). Callers may fall back to search.
class UnsupportedConstruction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration requested on a graph above the configured size cap.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Search hit its node or time limit before a conclusive answer.
class SearchAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace esd
