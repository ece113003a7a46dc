#ifndef CAPGRAPH_RANK_HPP
#define CAPGRAPH_RANK_HPP

#include <capgraph/graph.hpp>

#include <optional>
#include <vector>

namespace capgraph
{
    using GFMatrix = std::vector<std::vector<unsigned>>;

    // Haemers-style upper bound: the rank over GF(p) of a matrix fitting
    // the graph (nonzero diagonal, zero on distinct nonadjacent pairs)
    // bounds the Shannon capacity. Validates the fitting property and
    // throws FittingError naming the first offending entry. p must be a
    // prime below 2^15.
    int rank_bound(const Graph & g, const GFMatrix & b, unsigned p);

    // Tries B = A + c I over GF(p) for every shift c in the list and
    // returns the best (smallest) valid bound, or nullopt when no shift
    // yields a fitting matrix.
    std::optional<int> rank_bound_search(const Graph & g, unsigned p,
        std::span<const unsigned> shifts);

    // Rank of an arbitrary matrix over GF(p) by Gaussian elimination.
    int gf_rank(GFMatrix m, unsigned p);
}

#endif
