#include "gndb/graph6.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <vector>

namespace gndb {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int triangle_bits(int n) { return n * (n - 1) / 2; }

[[noreturn]] void fail(DecodeError::Kind kind, const std::string& what) {
  throw DecodeError(kind, what);
}

int take_byte(std::string_view s, size_t i) {
  int c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    fail(DecodeError::Kind::kBadCharacter,
         "graph6: byte " + std::to_string(c) + " at position " + std::to_string(i) +
             " outside [63,126]");
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // long form: '~' then 18 bits of n, big-endian, 6 per byte
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view s) {
  if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
  while (s.ends_with('\n') || s.ends_with('\r')) s.remove_suffix(1);
  if (s.empty()) fail(DecodeError::Kind::kEmpty, "graph6: empty input");
  if (s.front() == ':' || s.front() == ';' || s.front() == '&')
    fail(DecodeError::Kind::kUnsupportedVariant,
         "graph6: sparse6/digraph6 input not supported");

  size_t pos = 0;
  int n;
  int first = take_byte(s, pos++);
  if (first < 63) {
    n = first;
  } else {
    // '~' size prefix
    if (s.size() < 4) fail(DecodeError::Kind::kTruncated, "graph6: truncated long-form order");
    if (static_cast<unsigned char>(s[1]) == '~')
      fail(DecodeError::Kind::kUnsupportedOrder, "graph6: 8-byte order form exceeds the 64-vertex cap");
    n = (take_byte(s, 1) << 12) | (take_byte(s, 2) << 6) | take_byte(s, 3);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices)
    fail(DecodeError::Kind::kUnsupportedOrder,
         "graph6: order " + std::to_string(n) + " outside [1,64]");

  const int bits = triangle_bits(n);
  const size_t body = static_cast<size_t>((bits + 5) / 6);
  if (s.size() - pos < body)
    fail(DecodeError::Kind::kTruncated,
         "graph6: need " + std::to_string(body) + " bit bytes, got " +
             std::to_string(s.size() - pos));
  if (s.size() - pos > body)
    fail(DecodeError::Kind::kTrailingGarbage,
         "graph6: " + std::to_string(s.size() - pos - body) + " extra byte(s) after bit field");

  Graph g(n);
  int bit = 0;
  for (size_t i = 0; i < body; ++i) {
    int word = take_byte(s, pos + i);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      int value = (word >> shift) & 1;
      if (bit >= bits) {
        if (value)
          fail(DecodeError::Kind::kDirtyPadding, "graph6: nonzero padding bits");
        continue;
      }
      if (value) {
        // column-major upper triangle: bit index -> (u, v)
        int v = 1, rem = bit;
        while (rem >= v) rem -= v, ++v;
        g.add_edge(rem, v);
      }
    }
  }
  return g;
}

std::string adjlist_emit(const Graph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.order(); ++v) {
    out << v << ':';
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      out << ' ' << u;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

int parse_int(std::string_view tok, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("adjlist: non-integer token '" + std::string(tok) + "' in " + context);
  return value;
}

}  // namespace

Graph adjlist_parse(std::string_view text) {
  struct Mention {
    int v, u;
  };
  std::vector<Mention> mentions;
  int declared_n = -1;
  int max_id = -1;

  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;

    const std::string context = "line " + std::to_string(line_no);
    if (line.starts_with("n ") || line.starts_with("n=")) {
      declared_n = parse_int(line.substr(2), context);
      continue;
    }
    size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("adjlist: missing ':' on " + context);
    int v = parse_int(line.substr(0, colon), context);
    max_id = std::max(max_id, v);
    std::string_view rest = line.substr(colon + 1);
    while (!rest.empty()) {
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      if (rest.empty()) break;
      size_t end = rest.find_first_of(" \t");
      std::string_view tok = rest.substr(0, end);
      rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
      int u = parse_int(tok, context);
      if (u == v) throw std::invalid_argument("adjlist: self-loop at vertex " + std::to_string(v));
      max_id = std::max(max_id, u);
      mentions.push_back({v, u});
    }
  }

  int n = declared_n >= 0 ? declared_n : max_id + 1;
  if (n < 1) throw std::invalid_argument("adjlist: no vertices");
  if (n > kMaxVertices) throw std::out_of_range("adjlist: more than 64 vertices");
  if (declared_n >= 0 && max_id >= declared_n)
    throw std::invalid_argument("adjlist: vertex id " + std::to_string(max_id) +
                                " >= declared n " + std::to_string(declared_n));
  Graph g(n);
  for (const Mention& m : mentions) g.add_edge(m.v, m.u);
  return g;
}

}  // namespace gndb
