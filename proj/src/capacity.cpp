#include <capgraph/capacity.hpp>
#include <capgraph/graph6.hpp>

#include <cmath>

namespace capgraph
{
    auto root_lower(long long value, int k) -> double
    {
        if (value < 0 || k < 1)
            throw ParameterError{"root_lower needs value >= 0 and k >= 1"};
        if (value == 0)
            return 0.0;
        if (k == 1)
            return double(value);

        // Bisection: keep lo with lo^k <= value; long double evaluation of
        // the power keeps the comparison one-sided.
        long double lo = 0.0L, hi = static_cast<long double>(value) + 1.0L;
        for (int step = 0; step < 200; ++step) {
            long double mid = (lo + hi) / 2.0L;
            long double p = 1.0L;
            for (int i = 0; i < k; ++i)
                p *= mid;
            if (p <= static_cast<long double>(value))
                lo = mid;
            else
                hi = mid;
        }
        return double(lo) * (1.0 - 1e-12);
    }

    auto capacity_interval(const Graph & g, const CapacityOptions & options)
        -> CapacityInterval
    {
        if (options.kmax < 1)
            throw ParameterError{"capacity_interval needs kmax >= 1"};

        CapacityInterval interval;
        interval.graph6 = emit_graph6(g);

        bool have_lower = false;
        mpz_class budget = static_cast<unsigned long>(options.vertex_budget);
        for (int k = 1; k <= options.kmax; ++k) {
            mpz_class vertices;
            mpz_ui_pow_ui(vertices.get_mpz_t(),
                static_cast<unsigned long>(g.vertex_count()), static_cast<unsigned long>(k));
            if (vertices > budget) {
                interval.skipped_k.push_back(k);
                continue;
            }
            try {
                auto result = alpha(power(g, k), options.alpha_budget);
                double candidate = root_lower(result.value, k);
                if (! have_lower || candidate > interval.lower) {
                    interval.lower = candidate;
                    interval.lower_k = k;
                    interval.lower_alpha = result.value;
                    interval.witness = std::move(result.witness);
                }
                have_lower = true;
            }
            catch (const BudgetError &) {
                interval.skipped_k.push_back(k);
            }
        }
        if (! have_lower)
            throw NoLowerBoundError{"every power in the capacity sweep was skipped"};

        auto t = theta(g, options.tol);
        interval.upper = t.upper_cert * (1.0 + 1e-12) + 1e-12;
        interval.upper_source = "theta";
        return interval;
    }

    namespace
    {
        auto poly_value(const Polynomial & p, const std::vector<double> & at) -> double
        {
            double total = 0.0;
            for (auto & [m, c] : p.terms()) {
                double term = c.get_d();
                for (std::size_t i = 0; i < m.nvars(); ++i)
                    for (std::uint64_t e = 0; e < m.exponents[i]; ++e)
                        term *= at[i];
                total += term;
            }
            return total;
        }
    }

    auto poly_capacity_lower(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options) -> double
    {
        if (graphs.size() != p.nvars())
            throw ParameterError{"poly_capacity_lower: arity mismatch"};
        std::vector<double> lows;
        for (auto & g : graphs)
            lows.push_back(capacity_interval(g, options).lower);
        return poly_value(p, lows) * (1.0 - 1e-12);
    }

    auto poly_capacity_upper(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options, bool restrict_to_monomial) -> double
    {
        if (graphs.size() != p.nvars())
            throw ParameterError{"poly_capacity_upper: arity mismatch"};
        if (restrict_to_monomial && p.terms().size() > 1)
            throw ParameterError{
                "poly_capacity_upper restricted to single-monomial polynomials"};
        std::vector<double> ups;
        for (auto & g : graphs)
            ups.push_back(theta(g, options.tol).upper_cert);
        return poly_value(p, ups) * (1.0 + 1e-12) + 1e-12;
    }

    auto product_strictness_from_bounds(double lower_gh, double upper_g, double upper_h,
        double lower_g, double lower_h) -> std::optional<StrictnessCertificate>
    {
        double rhs = upper_g * upper_h * (1.0 + 1e-12);
        double lhs = lower_gh * (1.0 - 1e-12);
        if (lhs <= rhs)
            return std::nullopt;
        return StrictnessCertificate{StrictnessCertificate::Kind::product_strict,
            lower_g, lower_h, lower_gh, upper_g, upper_h, lhs - rhs};
    }

    auto strict_product_certificate(const Graph & g, const Graph & h,
        const CapacityOptions & options) -> std::optional<StrictnessCertificate>
    {
        auto ig = capacity_interval(g, options);
        auto ih = capacity_interval(h, options);
        auto igh = capacity_interval(strong_product(g, h), options);
        return product_strictness_from_bounds(igh.lower, ig.upper, ih.upper,
            ig.lower, ih.lower);
    }

    auto derive_sum_certificate(const StrictnessCertificate & product_cert)
        -> StrictnessCertificate
    {
        if (product_cert.kind != StrictnessCertificate::Kind::product_strict)
            throw ParameterError{"derive_sum_certificate needs a product-strict certificate"};

        // Theta(G+H)^2 = Theta(G^2 + 2GH + H^2) >= L(G)^2 + 2 L(GH) + L(H)^2,
        // against the upper bound (U(G) + U(H))^2.
        double squared_lower = (product_cert.lower_g * product_cert.lower_g +
            2.0 * product_cert.lower_gh +
            product_cert.lower_h * product_cert.lower_h) * (1.0 - 1e-12);
        double sum_upper = product_cert.upper_g + product_cert.upper_h;
        double squared_upper = sum_upper * sum_upper * (1.0 + 1e-12);

        double slack = squared_lower - squared_upper;
        if (slack <= 0.0)
            throw DerivationError{"sum-strictness chain has nonpositive slack", -slack};

        StrictnessCertificate cert = product_cert;
        cert.kind = StrictnessCertificate::Kind::sum_strict;
        cert.slack = slack;
        return cert;
    }

    auto theorem2_converse_bound(double upper_g, double upper_h, int i, int j) -> double
    {
        if (i < 0 || j < 0 || i + j < 1)
            throw ParameterError{"theorem2_converse_bound needs i, j >= 0 with i + j >= 1"};
        return std::pow(upper_g, i) * std::pow(upper_h, j) * (1.0 + 1e-12);
    }

    auto converse_alpha_check(const Graph & g, const Graph & h, int n,
        const CapacityOptions & options) -> ConverseCheck
    {
        if (n < 1)
            throw ParameterError{"converse_alpha_check needs n >= 1"};
        ConverseCheck check;
        check.alpha_value = alpha(power(sum(g, h), n), options.alpha_budget).value;
        double bound = theta(g, options.tol).upper_cert + theta(h, options.tol).upper_cert;
        check.theta_sum_power = std::pow(bound, n) * (1.0 + 1e-12) + 1e-9;
        check.pass = double(check.alpha_value) <= check.theta_sum_power;
        return check;
    }
}
