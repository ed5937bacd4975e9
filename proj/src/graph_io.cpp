#include "mdcut/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace mdcut {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<long long> parse_ints(std::string_view s, int line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line, "expected integers, got '" + std::string(s) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<VertexList> rot;
  std::vector<bool> has_rot;
  bool any_rot = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      const auto header = parse_ints(line, line_no);
      if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
        throw ParseError(line_no, "header must be 'n m'");
      }
      n = header[0];
      m = header[1];
      if (n > 100'000'000) throw ParseError(line_no, "vertex count too large");
      rot.assign(static_cast<std::size_t>(n), {});
      has_rot.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    if (line.starts_with("rot")) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, "rot line needs ':'");
      const auto head = parse_ints(trim(line.substr(3, colon - 3)), line_no);
      if (head.size() != 1 || head[0] < 1 || head[0] > n) {
        throw ParseError(line_no, "rot line names an invalid vertex");
      }
      const auto v = static_cast<std::size_t>(head[0] - 1);
      if (has_rot[v]) throw ParseError(line_no, "second rot line for vertex " + std::to_string(head[0]));
      has_rot[v] = true;
      any_rot = true;
      for (long long w : parse_ints(line.substr(colon + 1), line_no)) {
        if (w < 1 || w > n) throw ParseError(line_no, "rot entry out of range");
        rot[v].push_back(static_cast<VertexId>(w));
      }
      continue;
    }
    const auto uv = parse_ints(line, line_no);
    if (uv.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) {
      throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop");
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more than m edges");
    edges.emplace_back(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
  }
  if (n < 0) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  GraphFile out;
  try {
    out.graph = Graph::from_edges(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
  if (any_rot) {
    for (std::size_t v = 0; v < has_rot.size(); ++v) {
      if (!has_rot[v] && out.graph.degree(static_cast<VertexId>(v + 1)) > 0) {
        throw ParseError(line_no, "rot block misses vertex " + std::to_string(v + 1));
      }
    }
    out.rotation = RotationSystem(rot);
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const RotationSystem* rot) {
  std::ostringstream buf;
  buf << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) buf << u << ' ' << v << '\n';
  if (rot != nullptr) {
    for (VertexId v = 1; v <= rot->order(); ++v) {
      buf << "rot " << v << ':';
      for (VertexId w : rot->around(v)) buf << ' ' << w;
      buf << '\n';
    }
  }
  out << buf.str();
}

void write_graph_file(const std::string& path, const Graph& g, const RotationSystem* rot) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_graph(out, g, rot);
}

}  // namespace mdcut
