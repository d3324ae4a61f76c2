#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "satgraph/graph.hpp"

namespace satgraph {

/// Standard graph6 text encoding for 0 <= n <= 62: one size byte (63+n)
/// followed by the upper triangle in column-major order, six bits per
/// printable byte, each offset by 63.
std::string graph6_encode(const Graph& g);

/// Strict decoder: rejects bad length, out-of-range bytes, trailing garbage
/// and nonzero padding bits. Error messages carry the byte offset.
Graph graph6_decode(std::string_view s);

/// Newline-delimited graph6 streams; blank lines and an optional
/// ">>graph6<<" header are skipped.
std::vector<Graph> graph6_read_stream(std::istream& in);
void graph6_write_stream(std::ostream& out, const std::vector<Graph>& graphs);

/// DOT export with vertex indices as labels and no layout hints.
std::string dot_export(const Graph& g);

}  // namespace satgraph
