#include "neurosa/gset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace neurosa {

namespace {

// Splits a line into integer tokens; returns false on any non-integer token.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  const char* p = line.data();
  const char* end = p + line.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long long value = 0;
    const auto res = std::from_chars(p, end, value);
    if (res.ec != std::errc{}) return false;
    if (res.ptr != end && *res.ptr != ' ' && *res.ptr != '\t' &&
        *res.ptr != '\r') {
      return false;
    }
    out.push_back(value);
    p = res.ptr;
  }
  return true;
}

}  // namespace

WeightedGraph parse_gset(std::istream& in, std::string name) {
  std::string line;
  std::vector<long long> tok;
  std::size_t lineno = 0;

  // Header.
  long long n = 0;
  long long m = 0;
  for (;;) {
    if (!std::getline(in, line)) throw ParseError("missing header", lineno + 1);
    ++lineno;
    if (!parse_ints(line, tok)) throw ParseError("malformed header", lineno);
    if (tok.empty()) continue;  // tolerate leading blank lines
    if (tok.size() != 2 || tok[0] < 1 || tok[1] < 0) {
      throw ParseError("header must be 'n m' with n >= 1", lineno);
    }
    n = tok[0];
    m = tok[1];
    break;
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++lineno;
    if (!parse_ints(line, tok)) throw ParseError("malformed edge line", lineno);
    if (tok.empty()) continue;  // tolerate blank/trailing lines
    if (tok.size() != 3) throw ParseError("edge line must be 'i j w'", lineno);
    const long long i = tok[0];
    const long long j = tok[1];
    const long long w = tok[2];
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError("vertex index outside [1, n]", lineno);
    }
    if (i == j) throw ParseError("self-loop rejected", lineno);
    if (w < INT32_MIN || w > INT32_MAX) {
      throw ParseError("edge weight out of range", lineno);
    }
    edges.push_back({static_cast<std::uint32_t>(i - 1),
                     static_cast<std::uint32_t>(j - 1),
                     static_cast<std::int32_t>(w)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge count " + std::to_string(edges.size()) +
                         " does not match header m = " + std::to_string(m),
                     lineno);
  }
  return WeightedGraph::make(static_cast<std::uint32_t>(n), std::move(edges),
                             std::move(name));
}

WeightedGraph parse_gset_string(const std::string& text, std::string name) {
  std::istringstream in(text);
  return parse_gset(in, std::move(name));
}

WeightedGraph load_gset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  // Instance name: file name without directory or extension (Gset files are
  // conventionally named bare, e.g. "G15").
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_gset(in, std::move(name));
}

void write_gset(const WeightedGraph& g, std::ostream& out) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.w << '\n';
  }
}

std::string write_gset_string(const WeightedGraph& g) {
  std::ostringstream out;
  write_gset(g, out);
  return out.str();
}

}  // namespace neurosa
