#ifndef CAPGRAPH_GRAPH_HPP
#define CAPGRAPH_GRAPH_HPP

#include <capgraph/errors.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace capgraph
{
    using StableSetWitness = std::vector<int>;

    // Loopless undirected graph with bitset adjacency rows. Immutable once
    // built; all semiring operations below return fresh graphs. The 0-vertex
    // graph is the additive identity, K1 the multiplicative unit.
    class Graph
    {
    public:
        Graph() = default;

        static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
            std::string provenance = {});

        // pred(u, v) is consulted once for every pair u < v.
        template <typename Pred>
        static Graph from_predicate(int n, Pred && pred, std::string provenance = {})
        {
            Graph g(n, std::move(provenance));
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (pred(u, v))
                        g.set_edge(u, v);
            return g;
        }

        int vertex_count() const { return _n; }
        std::size_t edge_count() const;

        bool adjacent(int u, int v) const
        {
            return 0 != (_bits[std::size_t(u) * _words + std::size_t(v >> 6)] >> (v & 63) & 1u);
        }

        int degree(int v) const;

        // Row v of the adjacency matrix as packed 64-bit words.
        std::span<const std::uint64_t> row(int v) const
        {
            return {_bits.data() + std::size_t(v) * _words, std::size_t(_words)};
        }

        int words_per_row() const { return _words; }

        const std::string & provenance() const { return _provenance; }
        Graph with_provenance(std::string p) const;

        // Literal equality: same vertex count and same labeled adjacency.
        // Provenance is ignored. Never isomorphism.
        bool operator==(const Graph & other) const
        {
            return _n == other._n && _bits == other._bits;
        }

    private:
        Graph(int n, std::string provenance);
        void set_edge(int u, int v);

        int _n = 0;
        int _words = 0;
        std::vector<std::uint64_t> _bits;
        std::string _provenance;
    };

    // Semiring operations. Vertex orders are fixed and documented so that
    // identity checks can use explicit reindexing maps.
    //
    // sum: G's vertices keep their indices, H's are shifted by |G|.
    // strong_product: (u, v) maps to u * |H| + v (row-major).
    // power: k-fold strong product, left-associated; power(G, 0) = K1.
    Graph sum(const Graph & g, const Graph & h);
    Graph strong_product(const Graph & g, const Graph & h);
    Graph power(const Graph & g, int k);
    Graph complement(const Graph & g);

    // Relabels vertex v of g to perm[v]. perm must be a permutation of
    // 0..n-1. Used by the canonical-reindexing identity tests.
    Graph relabel(const Graph & g, std::span<const int> perm);

    // Generators.
    Graph empty_graph(int n);
    Graph complete_graph(int n);
    Graph cycle_graph(int n);            // needs n >= 3
    Graph petersen_graph();
    Graph kneser_graph(int n, int k);    // needs k >= 1, n >= 2k
    Graph schlafli_graph();              // the 27-vertex strongly regular graph (27,16,10,8)

    // Spec strings for the CLI: "c5", "k7", "e3", "petersen",
    // "kneser:5,2", "schlafli".
    Graph generate(std::string_view spec);

    // True iff no two members of the set are adjacent. Indices must be
    // in range; duplicates are rejected.
    bool is_stable(const Graph & g, std::span<const int> vertices);

    // The diagonal {(v, v)} as flat indices in strong_product(g,
    // complement(g)). Always stable there: adjacency would need u ~ u' in
    // both g and its complement. Witnesses alpha(G Gbar) >= |V(G)|.
    StableSetWitness diagonal_witness(const Graph & g);

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> connected_components(const Graph & g);

    // Subgraph induced by the given (sorted, distinct) vertices; vertex i of
    // the result is vertices[i].
    Graph induced_subgraph(const Graph & g, std::span<const int> vertices);
}

#endif
