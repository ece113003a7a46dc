#ifndef CAPGRAPH_CAPACITY_HPP
#define CAPGRAPH_CAPACITY_HPP

#include <capgraph/alpha.hpp>
#include <capgraph/graph.hpp>
#include <capgraph/poly.hpp>
#include <capgraph/theta.hpp>

#include <optional>
#include <string>
#include <vector>

namespace capgraph
{
    // Certified enclosure of the Shannon capacity. The lower endpoint is
    // alpha(G^k)^(1/k) for the recorded k, rounded down; the upper endpoint
    // is a theta (or rank) certificate, rounded up.
    struct CapacityInterval
    {
        double lower = 0.0;
        double upper = 0.0;

        int lower_k = 0;                  // the k that achieved the lower bound
        long long lower_alpha = 0;        // alpha(G^lower_k)
        StableSetWitness witness;         // stable set in G^lower_k
        std::string upper_source;         // "theta" or "rank"
        std::vector<int> skipped_k;       // powers dropped for budget reasons
        std::string graph6;               // the graph the interval encloses

        double width() const { return upper - lower; }
        bool collapsed(double tol) const { return width() <= tol; }
    };

    struct CapacityOptions
    {
        int kmax = 2;
        double tol = 1e-6;
        AlphaOptions alpha_budget;
        std::size_t vertex_budget = 5'000'000;
    };

    CapacityInterval capacity_interval(const Graph & g, const CapacityOptions & options = {});

    // p evaluated at the per-graph interval lower bounds: a certified lower
    // bound on Theta(p(G1..Gn)).
    double poly_capacity_lower(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options = {});

    // p evaluated at the per-graph theta upper certificates: a certified
    // upper bound, relying on theta's multiplicativity under the strong
    // product and (from the wider literature) additivity over disjoint
    // union. restrict_to_monomial rejects polynomials with more than one
    // term so only the multiplicative fact is used.
    double poly_capacity_upper(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options = {}, bool restrict_to_monomial = false);

    struct StrictnessCertificate
    {
        enum class Kind { product_strict, sum_strict };
        Kind kind;
        double lower_g = 0.0, lower_h = 0.0, lower_gh = 0.0;
        double upper_g = 0.0, upper_h = 0.0;
        double slack = 0.0;               // at the squared level for sum_strict
    };

    // Arithmetic core of the product-strictness comparison: a certificate
    // exists iff lower(GH) exceeds upper(G) * upper(H) after sound rounding.
    std::optional<StrictnessCertificate> product_strictness_from_bounds(
        double lower_gh, double upper_g, double upper_h,
        double lower_g = 0.0, double lower_h = 0.0);

    std::optional<StrictnessCertificate> strict_product_certificate(
        const Graph & g, const Graph & h, const CapacityOptions & options = {});

    // Upgrades a product-strict certificate to a sum-strict one through
    // Theta(G+H)^2 >= L(G)^2 + 2 L(GH) + L(H)^2 versus (U(G) + U(H))^2.
    // Throws DerivationError when the chain slack is nonpositive.
    StrictnessCertificate derive_sum_certificate(const StrictnessCertificate & product_cert);

    // Under the assumed bounds U(G), U(H) on Theta, the implied bound
    // on Theta(G)^i Theta(H)^j used by the converse direction of the
    // strictness argument.
    double theorem2_converse_bound(double upper_g, double upper_h, int i, int j);

    // Unconditional sound variant of the converse's final display:
    // alpha((G+H)^n) <= (theta(G) + theta(H))^n. Returns both sides.
    struct ConverseCheck
    {
        long long alpha_value = 0;
        double theta_sum_power = 0.0;
        bool pass = false;
    };
    ConverseCheck converse_alpha_check(const Graph & g, const Graph & h, int n,
        const CapacityOptions & options = {});

    // alpha(G^k)^(1/k) rounded down: bisection on the k-th root to 12
    // decimal digits, then a downward nudge so the result is a sound lower
    // bound.
    double root_lower(long long value, int k);
}

#endif
