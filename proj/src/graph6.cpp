#include "specgraph/graph6.hpp"

namespace specgraph {

namespace {

constexpr int kBias = 63;
constexpr long kMaxExtended = 258047;

}  // namespace

std::string g6_encode(const Graph& g) {
  const long n = g.order();
  if (n > kMaxExtended) throw std::invalid_argument("graph6 encoder supports order <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

Graph g6_decode(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126)
      throw ParseError("graph6: byte " + std::to_string(i) + " (" + std::to_string(c) + ") outside 63..126");
  }

  long n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: 8-byte order header not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated extended order header");
    n = (long{text[1] - kBias} << 12) | (long{text[2] - kBias} << 6) | long{text[3] - kBias};
    if (n <= 62) throw ParseError("graph6: extended header used for order <= 62");
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6: order 0 is not a valid graph here");

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " edge bytes for order " + std::to_string(n) +
                     ", got " + std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace specgraph
