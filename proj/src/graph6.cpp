#include "turmlab/graph6.hpp"

#include <stdexcept>

namespace turmlab {

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::out_of_range("graph6: only n <= 62 supported");
  std::string out(1, (char)(n + 63));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back((char)((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  const unsigned char size = (unsigned char)text[0];
  if (size == 126) throw std::out_of_range("graph6: only n <= 62 supported");
  if (size < 63 || size > 125) throw std::invalid_argument("graph6: bad size byte");
  const int n = size - 63;
  const long long pairs = (long long)n * (n - 1) / 2;
  if ((long long)text.size() != 1 + (pairs + 5) / 6)
    throw std::invalid_argument("graph6: wrong length");

  Graph g(n);
  int i = 0, j = 1;
  long long k = 0;
  for (std::size_t pos = 1; pos < text.size(); ++pos) {
    const unsigned char c = (unsigned char)text[pos];
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad character");
    const int val = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const int bit = (val >> b) & 1;
      if (k < pairs) {
        if (bit) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        throw std::invalid_argument("graph6: nonzero padding");
      }
    }
  }
  return g;
}

}  // namespace turmlab
