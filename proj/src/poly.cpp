#include <capgraph/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace capgraph
{
    auto Polynomial::add_term(const Monomial & m, const mpz_class & c) -> void
    {
        if (m.nvars() != _nvars)
            throw ParameterError{"monomial arity mismatch"};
        if (c < 0)
            throw ParameterError{"coefficients must be natural numbers"};
        if (c == 0)
            return;
        auto [it, inserted] = _terms.emplace(m, c);
        if (! inserted)
            it->second += c;
    }

    auto Polynomial::operator+(const Polynomial & other) const -> Polynomial
    {
        if (_nvars != other._nvars)
            throw ParameterError{"polynomial arity mismatch"};
        Polynomial result = *this;
        for (auto & [m, c] : other._terms)
            result.add_term(m, c);
        return result;
    }

    auto Polynomial::operator*(const Polynomial & other) const -> Polynomial
    {
        if (_nvars != other._nvars)
            throw ParameterError{"polynomial arity mismatch"};
        Polynomial result(_nvars);
        for (auto & [m1, c1] : _terms)
            for (auto & [m2, c2] : other._terms) {
                Monomial m{m1.exponents};
                for (std::size_t i = 0; i < _nvars; ++i)
                    m.exponents[i] += m2.exponents[i];
                result.add_term(m, c1 * c2);
            }
        return result;
    }

    auto Polynomial::pow(unsigned k) const -> Polynomial
    {
        Polynomial result(_nvars);
        result.add_term(Monomial{std::vector<std::uint64_t>(_nvars, 0)}, 1);
        for (unsigned i = 0; i < k; ++i)
            result = result * *this;
        return result;
    }

    auto Polynomial::to_string() const -> std::string
    {
        if (_terms.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (auto & [m, c] : _terms) {
            if (! first)
                out << " + ";
            first = false;
            bool constant = std::all_of(m.exponents.begin(), m.exponents.end(),
                [](std::uint64_t e) { return e == 0; });
            bool lead = true;
            if (c != 1 || constant) {
                out << c.get_str();
                lead = false;
            }
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m.exponents[i] == 0)
                    continue;
                out << (lead ? "x" : " x") << i + 1;
                lead = false;
                if (m.exponents[i] > 1)
                    out << "^" << m.exponents[i];
            }
        }
        return out.str();
    }

    auto parse_polynomial(std::string_view text, std::size_t min_nvars) -> Polynomial
    {
        struct RawTerm
        {
            mpz_class coefficient;
            std::map<std::size_t, std::uint64_t> powers;   // variable index -> exponent
        };
        std::vector<RawTerm> raw;
        std::size_t nvars = min_nvars;

        std::size_t pos = 0;
        auto skip_space = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        };
        auto parse_number = [&]() -> mpz_class {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            return mpz_class{std::string(text.substr(start, pos - start))};
        };

        skip_space();
        if (pos == text.size())
            throw FormatError{"empty polynomial", pos};

        while (true) {
            RawTerm term{1, {}};
            bool saw_factor = false;
            while (true) {
                skip_space();
                if (pos == text.size() || text[pos] == '+')
                    break;
                if (text[pos] == '*') {
                    ++pos;
                    continue;
                }
                if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    term.coefficient *= parse_number();
                    saw_factor = true;
                    continue;
                }
                std::size_t var = 0;
                char c = text[pos];
                if (c == 'x' && pos + 1 < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                    ++pos;
                    var = parse_number().get_ui();
                    if (var == 0)
                        throw FormatError{"variable indices start at 1", pos};
                }
                else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
                    var = std::size_t(std::string_view("xyzw").find(c)) + 1;
                    ++pos;
                }
                else
                    throw FormatError{"unexpected character in polynomial", pos};

                std::uint64_t exponent = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    if (pos == text.size() || ! std::isdigit(static_cast<unsigned char>(text[pos])))
                        throw FormatError{"exponent expected after '^'", pos};
                    mpz_class e = parse_number();
                    if (! e.fits_ulong_p() || e.get_ui() > (std::uint64_t(1) << 62))
                        throw FormatError{"exponent too large", pos};
                    exponent = e.get_ui();
                }
                term.powers[var - 1] += exponent;
                nvars = std::max(nvars, var);
                saw_factor = true;
            }
            if (! saw_factor)
                throw FormatError{"empty term in polynomial", pos};
            raw.push_back(std::move(term));
            skip_space();
            if (pos == text.size())
                break;
            ++pos;   // consume '+'
        }

        Polynomial p(nvars);
        for (auto & term : raw) {
            Monomial m{std::vector<std::uint64_t>(nvars, 0)};
            for (auto & [var, e] : term.powers)
                m.exponents[var] = e;
            p.add_term(m, term.coefficient);
        }
        return p;
    }

    namespace
    {
        auto disjoint_union_append(Graph & acc, const Graph & next) -> void
        {
            acc = acc.vertex_count() == 0 ? next : sum(acc, next);
        }

        // Vertex count of the evaluated polynomial, computed exactly before
        // any graph is built.
        auto evaluated_vertex_count(const Polynomial & p, std::span<const Graph> graphs)
            -> mpz_class
        {
            mpz_class total = 0;
            for (auto & [m, c] : p.terms()) {
                mpz_class vertices = 1;
                for (std::size_t i = 0; i < m.nvars(); ++i) {
                    mpz_class base = graphs[i].vertex_count();
                    mpz_class pw;
                    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m.exponents[i]));
                    vertices *= pw;
                }
                total += c * vertices;
            }
            return total;
        }
    }

    auto evaluate(const Polynomial & p, std::span<const Graph> graphs,
        std::size_t vertex_budget) -> Graph
    {
        if (graphs.size() != p.nvars())
            throw ParameterError{"evaluate: expected " + std::to_string(p.nvars()) +
                " graphs, got " + std::to_string(graphs.size())};

        mpz_class total = evaluated_vertex_count(p, graphs);
        if (total > vertex_budget)
            throw SizeError{"evaluation result would have " + total.get_str() +
                " vertices, budget is " + std::to_string(vertex_budget)};

        Graph result = empty_graph(0);
        for (auto & [m, c] : p.terms()) {
            Graph term_graph = complete_graph(1);
            for (std::size_t i = 0; i < m.nvars(); ++i)
                if (m.exponents[i] > 0) {
                    // Powers of 0- and 1-vertex graphs are idempotent.
                    std::uint64_t e = graphs[i].vertex_count() <= 1 ? 1 : m.exponents[i];
                    term_graph = strong_product(term_graph, power(graphs[i], int(e)));
                }
            unsigned long copies = mpz_class(c).get_ui();
            for (unsigned long copy = 0; copy < copies; ++copy)
                disjoint_union_append(result, term_graph);
        }
        return result.with_provenance(p.to_string());
    }

    auto expand_sum_power(const Graph & g, const Graph & h, int n,
        std::size_t vertex_budget) -> Graph
    {
        if (n < 1)
            throw ParameterError{"expand_sum_power needs n >= 1"};

        mpz_class total = 0;
        for (int k = 0; k <= n; ++k) {
            mpz_class binom, vg, vh;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            mpz_ui_pow_ui(vg.get_mpz_t(), static_cast<unsigned long>(g.vertex_count()), static_cast<unsigned long>(k));
            mpz_ui_pow_ui(vh.get_mpz_t(), static_cast<unsigned long>(h.vertex_count()), static_cast<unsigned long>(n - k));
            total += binom * vg * vh;
        }
        if (total > vertex_budget)
            throw SizeError{"expansion would have " + total.get_str() +
                " vertices, budget is " + std::to_string(vertex_budget)};

        Graph result = empty_graph(0);
        for (int k = 0; k <= n; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            Graph term_graph = strong_product(power(g, k), power(h, n - k));
            for (unsigned long copy = 0; copy < binom.get_ui(); ++copy)
                disjoint_union_append(result, term_graph);
        }
        return result;
    }

    auto multinomial_expand(std::size_t t, unsigned k)
        -> std::vector<std::pair<std::vector<std::uint64_t>, mpz_class>>
    {
        if (t < 1 || k < 1)
            throw ParameterError{"multinomial_expand needs t >= 1 and k >= 1"};

        mpz_class k_factorial;
        mpz_fac_ui(k_factorial.get_mpz_t(), k);

        std::vector<std::pair<std::vector<std::uint64_t>, mpz_class>> out;
        std::vector<std::uint64_t> tuple(t, 0);

        auto recurse = [&](auto && self, std::size_t slot, unsigned remaining) -> void {
            if (slot + 1 == t) {
                tuple[slot] = remaining;
                mpz_class denom = 1, f;
                for (auto i : tuple) {
                    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
                    denom *= f;
                }
                out.emplace_back(tuple, k_factorial / denom);
                return;
            }
            for (unsigned i = 0; i <= remaining; ++i) {
                tuple[slot] = i;
                self(self, slot + 1, remaining - i);
            }
        };
        recurse(recurse, 0, k);
        return out;
    }

    auto monomial_divides(const Monomial & mu, const Monomial & q, std::uint64_t n) -> bool
    {
        if (mu.nvars() != q.nvars())
            throw ParameterError{"monomial arity mismatch"};
        if (n < 1)
            throw ParameterError{"monomial_divides needs N >= 1"};
        for (std::size_t i = 0; i < mu.nvars(); ++i)
            if (mpz_class(mu.exponents[i]) > mpz_class(q.exponents[i]) * mpz_class(n))
                return false;
        return true;
    }

    auto variables_occurring(const Polynomial & p) -> std::set<std::size_t>
    {
        std::set<std::size_t> vars;
        for (auto & [m, c] : p.terms())
            for (std::size_t i = 0; i < m.nvars(); ++i)
                if (m.exponents[i] > 0)
                    vars.insert(i);
        return vars;
    }
}
