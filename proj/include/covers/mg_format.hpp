// Text format for multigraphs (one item per line, '#' starts a comment):
//   n <vertex_count>
//   e <u> <v>      normal edge, u != v, 0-based
//   l <v>          loop
//   s <v>          semi-edge
// Edge ids are assigned in file order. Serialization writes `n` first, then
// edges in id order, so parse(serialize(g)) == g byte-for-byte.
#pragma once

#include <iosfwd>
#include <string>

#include "covers/multigraph.hpp"

namespace covers {

Multigraph parse_mg(std::istream& in);
Multigraph parse_mg(const std::string& text);
Multigraph load_mg_file(const std::string& path);

std::string serialize_mg(const Multigraph& g);

// DOT export: loops as self-arcs, semi-edges as edges to invisible stub
// nodes named __s<k> (k counts semi-edges in edge order).
std::string to_dot(const Multigraph& g, const std::string& name = "G");

}  // namespace covers
