#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gndb/graph.hpp"

namespace gndb {

// The decoder distinguishes its failure modes so malformed-input tests can
// assert the exact cause.
class DecodeError : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kBadCharacter,        // byte outside [63, 126]
    kTruncated,           // fewer bit bytes than the order requires
    kTrailingGarbage,     // extra bytes after the bit field
    kDirtyPadding,        // nonzero bits in the final partial byte
    kUnsupportedOrder,    // n = 0 or n > 64
    kUnsupportedVariant,  // sparse6 / digraph6 marker
  };

  DecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// graph6: printable encoding of the upper adjacency triangle, column-major
// ((0,1),(0,2),(1,2),(0,3),...), 6 bits per byte offset by 63. Order 1..62
// uses a single size byte; 63..64 the '~'-prefixed long form. Bit-exact with
// the format used by nauty/geng and the common graph databases.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and a trailing newline.
Graph graph6_decode(std::string_view s);

// Human-readable adjacency list, one "v: u1 u2 ..." line per vertex.
// Parsing ignores blank lines and '#' comments, applies symmetric closure,
// and tolerates duplicate edge mentions. The order is inferred as
// 1 + max mentioned id unless an explicit "n N" header line declares it.
std::string adjlist_emit(const Graph& g);
Graph adjlist_parse(std::string_view text);

}  // namespace gndb
