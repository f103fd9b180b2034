#include "hamreg/graph6.hpp"

namespace hamreg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_bits(std::string& out, std::uint32_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 0x3F)));
}

int char_value(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw Graph6Error("character outside [63,126]: code " + std::to_string(v));
  return v - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    put_bits(out, static_cast<std::uint32_t>(n), 3);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

Graph graph6_decode(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = char_value(line[0]);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') throw Graph6Error("graphs with more than 258047 vertices are not supported");
    if (line.size() < 4) throw Graph6Error("truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | char_value(line[i]);
    if (n < 63) throw Graph6Error("non-canonical size header");
    pos = 4;
  }
  if (n < 1) throw Graph6Error("graph6 line encodes zero vertices");
  if (n > kMaxVertices) throw Graph6Error("vertex count " + std::to_string(n) + " exceeds capacity 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != expected) {
    throw Graph6Error("body length " + std::to_string(line.size() - pos) + ", expected " + std::to_string(expected));
  }

  std::vector<int> values;
  values.reserve(expected);
  for (std::size_t c = 0; c < expected; ++c) values.push_back(char_value(line[pos + c]));
  auto bit_at = [&](long k) { return (values[static_cast<std::size_t>(k / 6)] >> (5 - k % 6)) & 1; };

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) b.add_edge(i, j);
    }
  }
  for (; k < static_cast<long>(expected) * 6; ++k) {
    if (bit_at(k)) throw Graph6Error("nonzero padding bits");
  }
  return b.build();
}

Graph6Stream read_graph6(std::istream& in, bool strict) {
  Graph6Stream out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back(graph6_decode(line));
    } catch (const std::exception& e) {
      if (strict) throw Graph6Error("line " + std::to_string(number) + ": " + e.what());
      out.diagnostics.push_back({number, e.what()});
    }
  }
  return out;
}

}  // namespace hamreg
