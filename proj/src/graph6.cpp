#include "specfc/graph6.hpp"

namespace specfc {

namespace {

constexpr int kOffset = 63;  // printable range is 63..126
constexpr long kMaxShortOrder = 62;
constexpr long kMaxLongOrder = 258047;  // 2^18 - 1

std::size_t body_bytes(long n) {
  const long bits = n * (n - 1) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (text.empty())
    throw Graph6Error(Graph6Error::Kind::malformed_header, "empty input");

  long n = 0;
  std::size_t pos = 0;
  const int c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126) {
    // three-byte order: '~' then 18 bits, big-endian in 6-bit groups
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw Graph6Error(Graph6Error::Kind::malformed_header,
                        "six-byte order form not supported");
    if (text.size() < 4)
      throw Graph6Error(Graph6Error::Kind::malformed_header, "incomplete long header");
    for (int i = 1; i <= 3; ++i) {
      const int c = static_cast<unsigned char>(text[static_cast<std::size_t>(i)]);
      if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::malformed_header, "header byte out of range");
      n = (n << 6) | (c - kOffset);
    }
    if (n <= kMaxShortOrder)
      throw Graph6Error(Graph6Error::Kind::malformed_header,
                        "non-canonical long header for small order");
    pos = 4;
  } else if (c0 >= 63 && c0 <= 125) {
    n = c0 - kOffset;
    pos = 1;
  } else {
    throw Graph6Error(Graph6Error::Kind::malformed_header, "header byte out of range");
  }

  const std::size_t need = body_bytes(n);
  const std::size_t have = text.size() - pos;
  if (have < need) throw Graph6Error(Graph6Error::Kind::truncated, "bit stream too short");
  if (have > need)
    throw Graph6Error(Graph6Error::Kind::trailing_garbage, "extra bytes after bit stream");

  // bits run column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<std::pair<int, int>> edges;
  long row = 0;
  long col = 1;
  for (std::size_t b = 0; b < need; ++b) {
    const int c = static_cast<unsigned char>(text[pos + b]);
    if (c < 63 || c > 126)
      throw Graph6Error(Graph6Error::Kind::invalid_byte, "body byte out of range");
    const int group = c - kOffset;
    for (int s = 5; s >= 0; --s) {
      const bool set = (group >> s) & 1;
      if (col >= n) {
        if (set)
          throw Graph6Error(Graph6Error::Kind::trailing_garbage, "nonzero padding bits");
        continue;
      }
      if (set) edges.emplace_back(static_cast<int>(row), static_cast<int>(col));
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= kMaxLongOrder) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  } else {
    throw std::invalid_argument("emit_graph6: order above supported range");
  }
  int acc = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace specfc
