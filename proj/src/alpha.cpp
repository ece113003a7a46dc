#include <capgraph/alpha.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <vector>

namespace capgraph
{
    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Words = std::vector<std::uint64_t>;

        auto popcount(const Words & w) -> int
        {
            int total = 0;
            for (auto x : w)
                total += std::popcount(x);
            return total;
        }

        auto test_bit(const Words & w, int v) -> bool
        {
            return 0 != (w[std::size_t(v >> 6)] >> (v & 63) & 1u);
        }

        auto clear_bit(Words & w, int v) -> void
        {
            w[std::size_t(v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
        }

        struct Solver
        {
            const Graph & graph;
            const AlphaOptions & options;
            Clock::time_point started;

            int words;
            int best = 0;
            StableSetWitness best_witness, current;
            std::uint64_t nodes = 0;

            Solver(const Graph & g, const AlphaOptions & o) :
                graph(g),
                options(o),
                started(Clock::now()),
                words(g.words_per_row())
            {
            }

            auto elapsed() const -> double
            {
                return std::chrono::duration<double>(Clock::now() - started).count();
            }

            auto check_budget() -> void
            {
                if (nodes > options.max_nodes)
                    throw BudgetError{"alpha solve exceeded node budget", nodes, elapsed()};
                if ((nodes & 0xfff) == 0 && elapsed() > options.max_seconds)
                    throw BudgetError{"alpha solve exceeded time budget", nodes, elapsed()};
            }

            // Number of cliques in a greedy sequential clique cover of the
            // subgraph induced by p. Each clique meets any stable set in at
            // most one vertex, so this bounds alpha of the residual.
            auto clique_cover_bound(const Words & p) -> int
            {
                std::vector<Words> clique_cands;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t chunk = p[std::size_t(w)];
                    while (chunk != 0) {
                        int v = w * 64 + std::countr_zero(chunk);
                        chunk &= chunk - 1;
                        auto rv = graph.row(v);
                        bool placed = false;
                        for (auto & cand : clique_cands)
                            if (test_bit(cand, v)) {
                                for (int i = 0; i < words; ++i)
                                    cand[std::size_t(i)] &= rv[std::size_t(i)];
                                placed = true;
                                break;
                            }
                        if (! placed)
                            clique_cands.emplace_back(rv.begin(), rv.end());
                    }
                }
                return int(clique_cands.size());
            }

            auto search(Words & p, int remaining) -> void
            {
                ++nodes;
                check_budget();

                if (remaining == 0) {
                    if (int(current.size()) > best) {
                        best = int(current.size());
                        best_witness = current;
                    }
                    return;
                }

                // Branch vertex: maximum residual degree, lowest index on ties.
                int pick = -1, pick_degree = -1;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t chunk = p[std::size_t(w)];
                    while (chunk != 0) {
                        int v = w * 64 + std::countr_zero(chunk);
                        chunk &= chunk - 1;
                        auto rv = graph.row(v);
                        int d = 0;
                        for (int i = 0; i < words; ++i)
                            d += std::popcount(rv[std::size_t(i)] & p[std::size_t(i)]);
                        if (d > pick_degree) {
                            pick_degree = d;
                            pick = v;
                        }
                    }
                }

                if (pick_degree == 0) {
                    // Residual is edgeless: take everything.
                    if (int(current.size()) + remaining > best) {
                        best = int(current.size()) + remaining;
                        best_witness = current;
                        for (int w = 0; w < words; ++w) {
                            std::uint64_t chunk = p[std::size_t(w)];
                            while (chunk != 0) {
                                best_witness.push_back(w * 64 + std::countr_zero(chunk));
                                chunk &= chunk - 1;
                            }
                        }
                    }
                    return;
                }

                if (int(current.size()) + clique_cover_bound(p) <= best)
                    return;

                // Include pick.
                auto rv = graph.row(pick);
                Words without_neighbourhood(std::size_t(words), 0);
                int removed = 0;
                for (int i = 0; i < words; ++i) {
                    without_neighbourhood[std::size_t(i)] = p[std::size_t(i)] & ~rv[std::size_t(i)];
                    removed += std::popcount(p[std::size_t(i)] & rv[std::size_t(i)]);
                }
                clear_bit(without_neighbourhood, pick);
                current.push_back(pick);
                search(without_neighbourhood, remaining - removed - 1);
                current.pop_back();

                // Exclude pick.
                clear_bit(p, pick);
                search(p, remaining - 1);
            }
        };

        auto solve_connected(const Graph & g, const AlphaOptions & options,
            std::uint64_t & nodes_used, double seconds_left) -> AlphaResult
        {
            AlphaOptions local = options;
            local.max_seconds = seconds_left;
            if (local.max_nodes > nodes_used)
                local.max_nodes -= nodes_used;
            else
                local.max_nodes = 0;

            Solver solver(g, local);
            Words all(std::size_t(g.words_per_row()), 0);
            for (int v = 0; v < g.vertex_count(); ++v)
                all[std::size_t(v >> 6)] |= std::uint64_t(1) << (v & 63);
            if (g.vertex_count() > 0)
                solver.search(all, g.vertex_count());
            nodes_used += solver.nodes;
            std::sort(solver.best_witness.begin(), solver.best_witness.end());
            return {solver.best, std::move(solver.best_witness),
                {solver.nodes, solver.elapsed()}};
        }
    }

    auto alpha(const Graph & g, const AlphaOptions & options) -> AlphaResult
    {
        return alpha_components(g, options);
    }

    auto alpha_components(const Graph & g, const AlphaOptions & options) -> AlphaResult
    {
        auto started = Clock::now();
        AlphaResult total;
        std::uint64_t nodes_used = 0;
        for (auto & component : connected_components(g)) {
            double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
            auto part = solve_connected(induced_subgraph(g, component), options,
                nodes_used, options.max_seconds - elapsed);
            total.value += part.value;
            for (int v : part.witness)
                total.witness.push_back(component[std::size_t(v)]);
        }
        std::sort(total.witness.begin(), total.witness.end());
        total.stats.nodes = nodes_used;
        total.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
        return total;
    }

    auto product_witness(const StableSetWitness & wg, const StableSetWitness & wh,
        const Graph & g, const Graph & h) -> StableSetWitness
    {
        if (! is_stable(g, wg))
            throw ParameterError{"product_witness: first witness is not stable"};
        if (! is_stable(h, wh))
            throw ParameterError{"product_witness: second witness is not stable"};
        StableSetWitness w;
        w.reserve(wg.size() * wh.size());
        for (int u : wg)
            for (int v : wh)
                w.push_back(u * h.vertex_count() + v);
        std::sort(w.begin(), w.end());
        return w;
    }

    auto alpha_exhaustive(const Graph & g) -> int
    {
        int n = g.vertex_count();
        if (n > 25)
            throw ParameterError{"exhaustive oracle is limited to 25 vertices"};

        std::vector<std::uint32_t> adjacency(std::size_t(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.adjacent(u, v))
                    adjacency[std::size_t(u)] |= std::uint32_t(1) << v;

        int best = 0;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            if (std::popcount(mask) <= best)
                continue;
            bool stable = true;
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                if (adjacency[std::size_t(v)] & mask) {
                    stable = false;
                    break;
                }
            }
            if (stable)
                best = std::popcount(mask);
        }
        return best;
    }
}
