#ifndef CAPGRAPH_TESTS_HELPERS_HPP
#define CAPGRAPH_TESTS_HELPERS_HPP

#include <capgraph/graph.hpp>

#include <algorithm>
#include <vector>

namespace capgraph::test
{
    // Brute-force isomorphism by backtracking on a vertex mapping. Test
    // helper only; intended for small graphs (the degree filter keeps the
    // named 10-vertex cases fast).
    inline auto brute_force_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        int n = a.vertex_count();
        if (n != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;

        std::vector<int> deg_a, deg_b;
        for (int v = 0; v < n; ++v) {
            deg_a.push_back(a.degree(v));
            deg_b.push_back(b.degree(v));
        }
        {
            auto sa = deg_a, sb = deg_b;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return false;
        }

        std::vector<int> image(std::size_t(n), -1);
        std::vector<bool> used(std::size_t(n), false);
        auto extend = [&](auto && self, int v) -> bool {
            if (v == n)
                return true;
            for (int w = 0; w < n; ++w) {
                if (used[std::size_t(w)] || deg_a[std::size_t(v)] != deg_b[std::size_t(w)])
                    continue;
                bool consistent = true;
                for (int u = 0; u < v && consistent; ++u)
                    if (a.adjacent(u, v) != b.adjacent(image[std::size_t(u)], w))
                        consistent = false;
                if (! consistent)
                    continue;
                image[std::size_t(v)] = w;
                used[std::size_t(w)] = true;
                if (self(self, v + 1))
                    return true;
                used[std::size_t(w)] = false;
            }
            return false;
        };
        return extend(extend, 0);
    }

    inline auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> degrees;
        for (int v = 0; v < g.vertex_count(); ++v)
            degrees.push_back(g.degree(v));
        std::sort(degrees.begin(), degrees.end());
        return degrees;
    }
}

#endif
