#include <capgraph/rank.hpp>

#include <string>

namespace capgraph
{
    namespace
    {
        auto check_prime(unsigned p) -> void
        {
            if (p < 2 || p >= (1u << 15))
                throw ParameterError{"field order must be a prime below 2^15"};
            for (unsigned d = 2; d * d <= p; ++d)
                if (p % d == 0)
                    throw ParameterError{"field order " + std::to_string(p) + " is not prime"};
        }

        auto inverse_mod(unsigned a, unsigned p) -> unsigned
        {
            // Fermat: a^(p-2) mod p.
            unsigned long long result = 1, base = a % p;
            for (unsigned e = p - 2; e != 0; e >>= 1) {
                if (e & 1)
                    result = result * base % p;
                base = base * base % p;
            }
            return unsigned(result);
        }

        auto validate_fitting(const Graph & g, const GFMatrix & b, unsigned p) -> void
        {
            int n = g.vertex_count();
            if (int(b.size()) != n)
                throw ParameterError{"fitting matrix has wrong dimensions"};
            for (auto & row : b)
                if (int(row.size()) != n)
                    throw ParameterError{"fitting matrix has wrong dimensions"};

            for (int v = 0; v < n; ++v)
                if (b[std::size_t(v)][std::size_t(v)] % p == 0)
                    throw FittingError{"fitting violation: zero diagonal entry at (" +
                        std::to_string(v) + ", " + std::to_string(v) + ")", v, v};
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && ! g.adjacent(u, v) && b[std::size_t(u)][std::size_t(v)] % p != 0)
                        throw FittingError{"fitting violation: nonzero entry on nonadjacent pair (" +
                            std::to_string(u) + ", " + std::to_string(v) + ")", u, v};
        }
    }

    auto gf_rank(GFMatrix m, unsigned p) -> int
    {
        check_prime(p);
        std::size_t rows = m.size();
        std::size_t cols = rows == 0 ? 0 : m[0].size();
        for (auto & row : m)
            for (auto & x : row)
                x %= p;

        int rank = 0;
        std::size_t pivot_row = 0;
        for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
            std::size_t found = pivot_row;
            while (found < rows && m[found][col] == 0)
                ++found;
            if (found == rows)
                continue;
            std::swap(m[pivot_row], m[found]);

            unsigned long long inv = inverse_mod(m[pivot_row][col], p);
            for (std::size_t c = col; c < cols; ++c)
                m[pivot_row][c] = unsigned(m[pivot_row][c] * inv % p);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pivot_row || m[r][col] == 0)
                    continue;
                unsigned long long factor = m[r][col];
                for (std::size_t c = col; c < cols; ++c)
                    m[r][c] = unsigned((m[r][c] + (p - 1ull) * factor % p * m[pivot_row][c]) % p);
            }
            ++pivot_row;
            ++rank;
        }
        return rank;
    }

    auto rank_bound(const Graph & g, const GFMatrix & b, unsigned p) -> int
    {
        check_prime(p);
        validate_fitting(g, b, p);
        return gf_rank(b, p);
    }

    auto rank_bound_search(const Graph & g, unsigned p, std::span<const unsigned> shifts)
        -> std::optional<int>
    {
        check_prime(p);
        int n = g.vertex_count();
        std::optional<int> best;
        for (unsigned c : shifts) {
            if (c % p == 0)
                continue;   // zero diagonal can never fit
            GFMatrix b(std::size_t(n), std::vector<unsigned>(std::size_t(n), 0));
            for (int u = 0; u < n; ++u) {
                b[std::size_t(u)][std::size_t(u)] = c % p;
                for (int v = 0; v < n; ++v)
                    if (u != v && g.adjacent(u, v))
                        b[std::size_t(u)][std::size_t(v)] = 1;
            }
            int r = rank_bound(g, b, p);
            if (! best || r < *best)
                best = r;
        }
        return best;
    }
}
