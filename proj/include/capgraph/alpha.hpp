#ifndef CAPGRAPH_ALPHA_HPP
#define CAPGRAPH_ALPHA_HPP

#include <capgraph/graph.hpp>

#include <cstdint>

namespace capgraph
{
    struct AlphaOptions
    {
        std::uint64_t max_nodes = 100'000'000;
        double max_seconds = 300.0;
    };

    struct SolveStats
    {
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    struct AlphaResult
    {
        int value = 0;
        StableSetWitness witness;
        SolveStats stats;
    };

    // Exact maximum stable set. Complete branch-and-bound on bitset rows
    // with a greedy clique-cover pruning bound, run per connected
    // component. The value is deterministic; exceeding a budget throws
    // BudgetError rather than returning an approximation.
    AlphaResult alpha(const Graph & g, const AlphaOptions & options = {});

    // Splits into connected components explicitly, solves each, and sums.
    // Always equal to alpha(g).
    AlphaResult alpha_components(const Graph & g, const AlphaOptions & options = {});

    // The flat-index product of two stable sets, stable in
    // strong_product(g, h): the constructive side of alpha(GH) >=
    // alpha(G) alpha(H). Inputs are checked for stability.
    StableSetWitness product_witness(const StableSetWitness & wg, const StableSetWitness & wh,
        const Graph & g, const Graph & h);

    // Independent exhaustive oracle: enumerates all stable sets by plain
    // recursion with no pruning bound. Test and verification use only.
    int alpha_exhaustive(const Graph & g);
}

#endif
