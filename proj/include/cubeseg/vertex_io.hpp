#ifndef CUBESEG_VERTEX_IO_HPP
#define CUBESEG_VERTEX_IO_HPP

// Vertex-set text format: one vertex per line, blank lines and lines
// starting with '#' ignored. Decimal mode reads non-negative integers;
// binary mode reads exactly n characters of 0/1, most significant
// (x_{n-1}) first.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "cubeseg/cube.hpp"
#include "cubeseg/errors.hpp"

namespace cubeseg {

enum class VertexFormat { decimal, binary };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline Vertex parse_vertex_token(std::string_view tok, int dim, VertexFormat fmt,
                                 std::size_t line_no) {
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("line " + std::to_string(line_no) + ": " + why + " ('" +
                      std::string(tok) + "')");
  };
  Vertex v = 0;
  if (fmt == VertexFormat::binary) {
    if (tok.size() != static_cast<std::size_t>(dim)) {
      throw fail("expected exactly " + std::to_string(dim) + " binary digits");
    }
    for (char ch : tok) {
      if (ch != '0' && ch != '1') throw fail("binary vertex may only contain 0 and 1");
      v = (v << 1) | static_cast<Vertex>(ch - '0');
    }
    return v;
  }
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || tok.front() == '-' || tok.front() == '+') {
    throw fail("not a non-negative integer");
  }
  if (v >= (Vertex{1} << dim)) {
    throw fail("vertex outside the " + std::to_string(dim) + "-cube");
  }
  return v;
}

}  // namespace detail

inline VertexSet read_vertex_set(std::istream& in, int dim,
                                 VertexFormat fmt = VertexFormat::decimal) {
  check_dim(dim);
  VertexSet out(dim);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view tok = detail::trim(line);
    if (tok.empty() || tok.front() == '#') continue;
    const Vertex v = detail::parse_vertex_token(tok, dim, fmt, line_no);
    if (!out.insert(v)) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate vertex " +
                       std::to_string(v));
    }
  }
  return out;
}

inline VertexSet parse_vertex_set(std::string_view text, int dim,
                                  VertexFormat fmt = VertexFormat::decimal) {
  std::istringstream in{std::string(text)};
  return read_vertex_set(in, dim, fmt);
}

inline std::string format_vertex(Vertex v, int dim, VertexFormat fmt) {
  if (fmt == VertexFormat::decimal) return std::to_string(v);
  std::string s(static_cast<std::size_t>(dim), '0');
  for (int r = 0; r < dim; ++r) {
    if ((v >> r) & 1u) s[static_cast<std::size_t>(dim - 1 - r)] = '1';
  }
  return s;
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s,
                             VertexFormat fmt = VertexFormat::decimal) {
  s.for_each([&](Vertex v) { out << format_vertex(v, s.dim(), fmt) << '\n'; });
}

inline std::string format_vertex_set(const VertexSet& s, VertexFormat fmt = VertexFormat::decimal) {
  std::ostringstream out;
  write_vertex_set(out, s, fmt);
  return out.str();
}

}  // namespace cubeseg

#endif  // CUBESEG_VERTEX_IO_HPP
