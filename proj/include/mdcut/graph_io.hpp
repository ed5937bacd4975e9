#pragma once

// Plain-text graph format shared by every tool:
//
//   # comment
//   n m
//   u v            (m lines, 1-based)
//   rot u: v1 ...  (optional, one per vertex, cyclic neighbor order)

#include <iosfwd>
#include <optional>
#include <string>

#include "mdcut/embedding.hpp"
#include "mdcut/errors.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct GraphFile {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

/// Deterministic: edges sorted, rot lines in vertex order.
void write_graph(std::ostream& out, const Graph& g, const RotationSystem* rot = nullptr);
void write_graph_file(const std::string& path, const Graph& g, const RotationSystem* rot = nullptr);

}  // namespace mdcut
