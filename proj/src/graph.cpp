#include <capgraph/graph.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace capgraph
{
    namespace
    {
        constexpr std::size_t max_product_vertices = 50'000'000;

        auto words_for(int n) -> int
        {
            return (n + 63) / 64;
        }
    }

    Graph::Graph(int n, std::string provenance) :
        _n(n),
        _words(words_for(n)),
        _bits(std::size_t(n) * words_for(n), 0),
        _provenance(std::move(provenance))
    {
    }

    auto Graph::set_edge(int u, int v) -> void
    {
        _bits[std::size_t(u) * _words + std::size_t(v >> 6)] |= std::uint64_t(1) << (v & 63);
        _bits[std::size_t(v) * _words + std::size_t(u >> 6)] |= std::uint64_t(1) << (u & 63);
    }

    auto Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
        std::string provenance) -> Graph
    {
        if (n < 0)
            throw ParameterError{"vertex count must be nonnegative"};
        Graph g(n, std::move(provenance));
        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParameterError{"edge endpoint out of range"};
            if (u == v)
                throw ParameterError{"loops are not allowed"};
            g.set_edge(u, v);
        }
        return g;
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto w : _bits)
            twice += std::size_t(std::popcount(w));
        return twice / 2;
    }

    auto Graph::degree(int v) const -> int
    {
        int d = 0;
        for (auto w : row(v))
            d += std::popcount(w);
        return d;
    }

    auto Graph::with_provenance(std::string p) const -> Graph
    {
        Graph g = *this;
        g._provenance = std::move(p);
        return g;
    }

    auto sum(const Graph & g, const Graph & h) -> Graph
    {
        int ng = g.vertex_count(), nh = h.vertex_count();
        return Graph::from_predicate(ng + nh,
            [&](int u, int v) {
                if (v < ng)
                    return g.adjacent(u, v);
                if (u >= ng)
                    return h.adjacent(u - ng, v - ng);
                return false;
            },
            "(" + g.provenance() + "+" + h.provenance() + ")");
    }

    auto strong_product(const Graph & g, const Graph & h) -> Graph
    {
        std::size_t ng = std::size_t(g.vertex_count()), nh = std::size_t(h.vertex_count());
        if (ng != 0 && nh > max_product_vertices / ng)
            throw SizeError{"strong product would exceed " +
                std::to_string(max_product_vertices) + " vertices"};

        int n = int(ng * nh);
        return Graph::from_predicate(n,
            [&](int a, int b) {
                int u = a / int(nh), up = b / int(nh);
                int v = a % int(nh), vp = b % int(nh);
                return (u == up || g.adjacent(u, up)) && (v == vp || h.adjacent(v, vp));
            },
            "(" + g.provenance() + "*" + h.provenance() + ")");
    }

    auto power(const Graph & g, int k) -> Graph
    {
        if (k < 0)
            throw ParameterError{"power exponent must be nonnegative"};
        Graph result = complete_graph(1);
        for (int i = 0; i < k; ++i)
            result = strong_product(result, g);
        return result.with_provenance(g.provenance() + "^" + std::to_string(k));
    }

    auto complement(const Graph & g) -> Graph
    {
        return Graph::from_predicate(g.vertex_count(),
            [&](int u, int v) { return ! g.adjacent(u, v); },
            "~" + g.provenance());
    }

    auto relabel(const Graph & g, std::span<const int> perm) -> Graph
    {
        int n = g.vertex_count();
        if (int(perm.size()) != n)
            throw ParameterError{"permutation length mismatch"};
        std::vector<int> inverse(n, -1);
        for (int v = 0; v < n; ++v) {
            if (perm[v] < 0 || perm[v] >= n || inverse[perm[v]] != -1)
                throw ParameterError{"not a permutation"};
            inverse[perm[v]] = v;
        }
        return Graph::from_predicate(n,
            [&](int u, int v) { return g.adjacent(inverse[u], inverse[v]); },
            g.provenance());
    }

    auto empty_graph(int n) -> Graph
    {
        if (n < 0)
            throw ParameterError{"empty graph needs n >= 0"};
        return Graph::from_predicate(n, [](int, int) { return false; },
            "e" + std::to_string(n));
    }

    auto complete_graph(int n) -> Graph
    {
        if (n < 0)
            throw ParameterError{"complete graph needs n >= 0"};
        return Graph::from_predicate(n, [](int, int) { return true; },
            "k" + std::to_string(n));
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw ParameterError{"cycle needs n >= 3"};
        return Graph::from_predicate(n,
            [n](int u, int v) { return v - u == 1 || (u == 0 && v == n - 1); },
            "c" + std::to_string(n));
    }

    auto petersen_graph() -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);          // outer cycle
            edges.emplace_back(i, i + 5);                // spokes
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
        }
        return Graph::from_edges(10, edges, "petersen");
    }

    auto kneser_graph(int n, int k) -> Graph
    {
        if (k < 1 || n < 2 * k)
            throw ParameterError{"kneser needs k >= 1 and n >= 2k"};
        // Vertices are the k-subsets of {0..n-1} in lexicographic order,
        // adjacent iff disjoint.
        std::vector<std::uint64_t> subsets;
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::uint64_t mask = 0;
            for (int x : pick)
                mask |= std::uint64_t(1) << x;
            subsets.push_back(mask);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return Graph::from_predicate(int(subsets.size()),
            [&](int u, int v) { return 0 == (subsets[u] & subsets[v]); },
            "kneser:" + std::to_string(n) + "," + std::to_string(k));
    }

    auto schlafli_graph() -> Graph
    {
        // Model on the 27 lines of a cubic surface: a1..a6 are vertices
        // 0..5, b1..b6 are 6..11, c_{ij} (i < j) fills 12..26. Two lines
        // are adjacent iff skew (they do not meet), which yields the
        // strongly regular graph with parameters (27, 16, 10, 8).
        std::vector<std::pair<int, int>> cpairs;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                cpairs.emplace_back(i, j);

        auto meets = [&](int x, int y) {
            bool xa = x < 6, xb = x >= 6 && x < 12;
            bool ya = y < 6, yb = y >= 6 && y < 12;
            if (xa && ya)
                return false;                              // a_i, a_j skew
            if (xb && yb)
                return false;                              // b_i, b_j skew
            if ((xa && yb) || (xb && ya))
                return x % 6 != y % 6;                     // a_i meets b_j iff i != j
            if (x >= 12 && y >= 12) {                      // c_ij meets c_kl iff the labels are disjoint
                auto [i, j] = cpairs[x - 12];
                auto [k, l] = cpairs[y - 12];
                return i != k && i != l && j != k && j != l;
            }
            int line = xa || xb ? x : y;                   // c_ij meets a_k / b_k iff k in {i,j}
            auto [i, j] = cpairs[(xa || xb ? y : x) - 12];
            return line % 6 == i || line % 6 == j;
        };
        return Graph::from_predicate(27,
            [&](int u, int v) { return ! meets(u, v); }, "schlafli");
    }

    auto generate(std::string_view spec) -> Graph
    {
        auto parse_int = [&](std::string_view s) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw ParameterError{"bad number in generator spec: " + std::string(spec)};
            return value;
        };

        if (spec == "petersen")
            return petersen_graph();
        if (spec == "schlafli")
            return schlafli_graph();
        if (spec.starts_with("kneser:")) {
            auto args = spec.substr(7);
            auto comma = args.find(',');
            if (comma == std::string_view::npos)
                throw ParameterError{"kneser spec needs two parameters: " + std::string(spec)};
            return kneser_graph(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
        }
        if (! spec.empty() && (spec[0] == 'c' || spec[0] == 'k' || spec[0] == 'e')) {
            int n = parse_int(spec.substr(1));
            switch (spec[0]) {
            case 'c': return cycle_graph(n);
            case 'k': return complete_graph(n);
            case 'e': return empty_graph(n);
            }
        }
        throw ParameterError{"unknown generator spec: " + std::string(spec)};
    }

    auto is_stable(const Graph & g, std::span<const int> vertices) -> bool
    {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0 || vertices[i] >= g.vertex_count())
                throw ParameterError{"witness vertex out of range: " + std::to_string(vertices[i])};
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (vertices[i] == vertices[j])
                    throw ParameterError{"witness vertices must be distinct"};
                if (g.adjacent(vertices[i], vertices[j]))
                    return false;
            }
        }
        return true;
    }

    auto diagonal_witness(const Graph & g) -> StableSetWitness
    {
        StableSetWitness w;
        int n = g.vertex_count();
        w.reserve(std::size_t(n));
        for (int v = 0; v < n; ++v)
            w.push_back(v * n + v);
        return w;
    }

    auto connected_components(const Graph & g) -> std::vector<std::vector<int>>
    {
        int n = g.vertex_count();
        std::vector<bool> seen(std::size_t(n), false);
        std::vector<std::vector<int>> components;
        for (int start = 0; start < n; ++start) {
            if (seen[std::size_t(start)])
                continue;
            std::vector<int> component, queue{start};
            seen[std::size_t(start)] = true;
            while (! queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                component.push_back(v);
                for (int u = 0; u < n; ++u)
                    if (! seen[std::size_t(u)] && g.adjacent(v, u)) {
                        seen[std::size_t(u)] = true;
                        queue.push_back(u);
                    }
            }
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
        return components;
    }

    auto induced_subgraph(const Graph & g, std::span<const int> vertices) -> Graph
    {
        for (int v : vertices)
            if (v < 0 || v >= g.vertex_count())
                throw ParameterError{"induced subgraph vertex out of range"};
        return Graph::from_predicate(int(vertices.size()),
            [&](int u, int v) { return g.adjacent(vertices[u], vertices[v]); },
            g.provenance() + "[induced]");
    }
}
