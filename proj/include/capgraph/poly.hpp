#ifndef CAPGRAPH_POLY_HPP
#define CAPGRAPH_POLY_HPP

#include <capgraph/graph.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capgraph
{
    // Exponent vector over a fixed ambient variable count. Exponents are
    // bounded to 63 bits; coefficients elsewhere are arbitrary-precision.
    struct Monomial
    {
        std::vector<std::uint64_t> exponents;

        std::size_t nvars() const { return exponents.size(); }
        auto operator<=>(const Monomial &) const = default;
    };

    // Element of N[x1..xn]: finite map monomial -> positive coefficient.
    // The zero polynomial is the empty map.
    class Polynomial
    {
    public:
        explicit Polynomial(std::size_t nvars = 0) : _nvars(nvars) {}

        std::size_t nvars() const { return _nvars; }
        bool is_zero() const { return _terms.empty(); }

        // Adds c * x^m; no-op when c = 0.
        void add_term(const Monomial & m, const mpz_class & c);

        const std::map<Monomial, mpz_class> & terms() const { return _terms; }

        Polynomial operator+(const Polynomial & other) const;
        Polynomial operator*(const Polynomial & other) const;
        Polynomial pow(unsigned k) const;

        bool operator==(const Polynomial &) const = default;

        std::string to_string() const;

    private:
        std::size_t _nvars;
        std::map<Monomial, mpz_class> _terms;
    };

    // Text syntax: '+'-separated terms such as "3 x1^2 x2 + x2^3 + 1".
    // Bare variable letters x, y, z, w are accepted as aliases for
    // x1..x4. nvars is the maximum of min_nvars and the largest variable
    // index that occurs.
    Polynomial parse_polynomial(std::string_view text, std::size_t min_nvars = 0);

    // p(G1,...,Gn) in the graph semiring: the disjoint union over terms
    // c * x^e, in lexicographic exponent order, of c contiguous copies of
    // the strong product of the power(Gi, ei). Refuses results with more
    // than vertex_budget vertices.
    Graph evaluate(const Polynomial & p, std::span<const Graph> graphs,
        std::size_t vertex_budget = 5'000'000);

    // The right-hand side of the binomial expansion of (G+H)^n, built
    // directly as sum over k of binom(n,k) copies of G^k H^(n-k), without
    // forming the power of the sum.
    Graph expand_sum_power(const Graph & g, const Graph & h, int n,
        std::size_t vertex_budget = 5'000'000);

    // All exponent tuples (i1..it) with sum k, paired with the multinomial
    // coefficient k! / (i1! ... it!), in lexicographic tuple order. The
    // coefficients sum to t^k.
    std::vector<std::pair<std::vector<std::uint64_t>, mpz_class>>
    multinomial_expand(std::size_t t, unsigned k);

    // True iff mu divides q^N, i.e. mu's exponents are <= N * q's
    // componentwise.
    bool monomial_divides(const Monomial & mu, const Monomial & q, std::uint64_t n);

    std::set<std::size_t> variables_occurring(const Polynomial & p);
}

#endif
