#include "szf/graph6.hpp"

#include <string>

#include "szf/error.hpp"

namespace szf {

namespace {

constexpr int kOffset = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > kOffset + 63) {
    throw ParseError("graph6: byte " + std::to_string(c) + " out of range at offset " + std::to_string(pos));
  }
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: empty record at offset " + std::to_string(pos));

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported (offset " + std::to_string(pos) + ")");
    }
    if (pos + 4 > text.size()) throw ParseError("graph6: truncated long header at offset " + std::to_string(pos));
    for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text, pos + i);
    if (n < 63) throw ParseError("graph6: non-canonical long header at offset " + std::to_string(pos));
    pos += 4;
  } else {
    n = decode_byte(text, pos);
    pos += 1;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVertices) +
                        "-vertex cap");
  }

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) + " data bytes for n=" + std::to_string(n) +
                     ", found " + std::to_string(text.size() - pos) + " (offset " + std::to_string(pos) + ")");
  }

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = decode_byte(text, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const std::size_t last = pos + byte_count - 1;
    const int padding_mask = (1 << (6 - bit_count % 6)) - 1;
    if (decode_byte(text, last) & padding_mask) {
      throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(last));
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kOffset);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kOffset);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kOffset);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kOffset);
  return out;
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, const std::string&)>& on_record) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    on_record(number, line);
  }
}

}  // namespace szf
