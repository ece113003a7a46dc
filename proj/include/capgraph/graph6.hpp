#ifndef CAPGRAPH_GRAPH6_HPP
#define CAPGRAPH_GRAPH6_HPP

#include <capgraph/graph.hpp>

#include <string>
#include <string_view>

namespace capgraph
{
    // Standard graph6 encoding: N(n) header, then the upper triangle in
    // column order, 6 bits per printable character offset by 63. A single
    // trailing newline is tolerated on parse.
    Graph parse_graph6(std::string_view text);
    std::string emit_graph6(const Graph & g);
}

#endif
