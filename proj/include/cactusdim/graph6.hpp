// graph6 reader/writer (McKay's format as used by nauty's geng/showg).
#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace cactusdim {

class graph6_error : public graph_error {
 public:
  using graph_error::graph_error;
};

namespace detail {

inline int graph6_value(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw graph6_error("graph6 character outside 63..126");
  return u - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw graph6_error("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_bytes = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) {
      throw graph6_error("truncated graph6 length header");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(detail::graph6_value(text[pos++]));
    return v;
  };
  if (text[0] != '~') {
    n = read_bytes(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = read_bytes(3);
    if (n < 63) throw graph6_error("non-canonical graph6 length header");
  } else {
    pos = 2;
    n = read_bytes(6);
    if (n < 258048) throw graph6_error("non-canonical graph6 length header");
  }
  if (n == 0) throw graph6_error("graph6 encodes the empty graph");
  if (n > 100000) throw graph6_error("graph too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw graph6_error(text.size() - pos < chars ? "truncated graph6 body" : "trailing garbage after graph6 body");
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int value = detail::graph6_value(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (std::uint64_t c = pos; c < text.size(); ++c) detail::graph6_value(text[c]);
  if (bits % 6 != 0) {
    int tail = detail::graph6_value(text.back());
    int pad = static_cast<int>(6 - bits % 6);
    if ((tail & ((1 << pad) - 1)) != 0) throw graph6_error("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put = [&](std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put(n, 3);
  } else {
    out += "~~";
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// One parsed line of a graph6 stream.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
};

/// Non-empty, non-comment lines of a graph6 stream ('#' starts a comment line).
inline std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

}  // namespace cactusdim
