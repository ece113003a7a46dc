#include <capgraph/graph6.hpp>

#include <cstdint>

namespace capgraph
{
    namespace
    {
        constexpr char offset = 63;
        constexpr char high = 126;
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);

        if (text.empty())
            throw FormatError{"empty graph6 string", 0};

        std::size_t pos = 0;
        auto need = [&](std::size_t k) {
            if (text.size() - pos < k)
                throw FormatError{"graph6 string truncated", text.size()};
        };
        auto value_at = [&](std::size_t i) -> std::uint64_t {
            if (text[i] < offset || text[i] > high)
                throw FormatError{"invalid graph6 character", i};
            return std::uint64_t(text[i]) - offset;
        };

        std::uint64_t n = 0;
        if (text[pos] != '~') {
            n = value_at(pos);
            pos += 1;
        }
        else if (text.size() > 1 && text[1] != '~') {
            need(4);
            for (std::size_t i = 1; i <= 3; ++i)
                n = n << 6 | value_at(i);
            pos = 4;
        }
        else {
            need(8);
            for (std::size_t i = 2; i <= 7; ++i)
                n = n << 6 | value_at(i);
            pos = 8;
        }

        if (n > 100'000)
            throw FormatError{"graph6 vertex count too large", 0};

        std::size_t bits = n * (n - 1) / 2;
        std::size_t chars = (bits + 5) / 6;
        if (text.size() - pos != chars)
            throw FormatError{"graph6 body has wrong length", text.size()};

        std::vector<std::pair<int, int>> edges;
        std::size_t bit = 0;
        for (std::size_t i = 0; i < chars; ++i) {
            std::uint64_t group = value_at(pos + i);
            for (int b = 5; b >= 0; --b, ++bit) {
                if (bit >= bits) {
                    if (group >> b & 1)
                        throw FormatError{"nonzero padding bits", pos + i};
                    continue;
                }
                if (group >> b & 1) {
                    // Column order: bit index within column j is the row i.
                    std::size_t remaining = bit, col = 1;
                    while (remaining >= col) {
                        remaining -= col;
                        ++col;
                    }
                    edges.emplace_back(int(remaining), int(col));
                }
            }
        }
        return Graph::from_edges(int(n), edges);
    }

    auto emit_graph6(const Graph & g) -> std::string
    {
        std::uint64_t n = std::uint64_t(g.vertex_count());
        std::string out;
        if (n <= 62)
            out.push_back(char(n + offset));
        else if (n <= 258047) {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(char((n >> shift & 63) + offset));
        }
        else {
            out += "~~";
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(char((n >> shift & 63) + offset));
        }

        int group = 0, filled = 0;
        for (std::uint64_t j = 1; j < n; ++j)
            for (std::uint64_t i = 0; i < j; ++i) {
                group = group << 1 | int(g.adjacent(int(i), int(j)));
                if (++filled == 6) {
                    out.push_back(char(group + offset));
                    group = 0;
                    filled = 0;
                }
            }
        if (filled != 0)
            out.push_back(char((group << (6 - filled)) + offset));
        return out;
    }
}
