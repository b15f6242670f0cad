#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mist/graph.hpp"

namespace mist {

enum class ParseErrorKind { BadHeader, BadEdgeLine, DuplicateEdge, SelfLoop, IdOutOfRange };

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

// "p mist <n> <m>" header, "e <u> <v>" lines with 1-based ids, "c" comments.
Graph parse_graph(std::string_view text);

// Alive vertices renumbered 1..n in id order.
std::string emit_graph(const Graph& g, std::string_view comment = {});

}  // namespace mist
