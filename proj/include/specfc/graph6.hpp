#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "specfc/graph.hpp"

namespace specfc {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { malformed_header, truncated, trailing_garbage, invalid_byte };

  Graph6Error(Kind kind, const std::string& message)
      : std::runtime_error("graph6: " + message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Decodes one canonical graph6 line (an optional ">>graph6<<" prefix is
/// accepted). Orders up to 258047 (one- and three-byte headers) are supported.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: shortest header form, zero padding bits.
std::string emit_graph6(const Graph& g);

}  // namespace specfc
