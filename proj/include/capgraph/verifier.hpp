#ifndef CAPGRAPH_VERIFIER_HPP
#define CAPGRAPH_VERIFIER_HPP

#include <capgraph/capacity.hpp>
#include <capgraph/graph.hpp>
#include <capgraph/poly.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace capgraph
{
    // One executed identity or inequality check, with everything needed to
    // re-derive it.
    struct CheckResult
    {
        std::string id;
        nlohmann::json inputs;
        double lhs = 0.0;
        double rhs = 0.0;
        std::string relation;   // "eq", "ge" or "le"
        bool pass = false;
        double tol = 0.0;
        bool strict = false;    // recorded strictness of an inequality

        nlohmann::json to_json() const;
    };

    // Membership evidence for the class of polynomials whose capacity
    // commutes with evaluation on a fixed graph tuple.
    struct PClassCertificate
    {
        enum class Verdict { in_class, not_in_class, inconclusive };

        std::string polynomial;
        std::vector<std::string> graphs;                  // graph6 forms
        std::vector<CapacityInterval> graph_intervals;    // per-graph Theta enclosures
        double value_lower = 0.0, value_upper = 0.0;      // enclosure of Theta(p(Gs))
        double predicted = 0.0;                           // p(Theta(G1)..Theta(Gn))
        Verdict verdict = Verdict::inconclusive;

        nlohmann::json to_json() const;
    };

    // Eq-level checks. Exact integer comparison wherever both sides are
    // alpha values; a tolerance applies only where theta enters.
    CheckResult check_alpha_additivity(const Graph & g, const Graph & h,
        const AlphaOptions & budget = {});
    CheckResult check_alpha_supermult(const Graph & g, const Graph & h,
        const AlphaOptions & budget = {});
    CheckResult check_sum_power_expansion(const Graph & g, const Graph & h, int n,
        const AlphaOptions & budget = {});
    CheckResult check_theorem1_link(const Graph & g, const Graph & h, int n, int t,
        const AlphaOptions & budget = {});
    CheckResult check_shannon_superadditivity(const Graph & g, const Graph & h,
        const CapacityOptions & options = {});
    CheckResult check_theta_multiplicativity(const Graph & g, const Graph & h,
        double tol = 1e-6);
    CheckResult check_diagonal_witness(const Graph & g);

    // Theta enclosure for p on a graph tuple, combining the polynomial
    // bounds with (when affordable) a direct interval on the evaluated
    // graph.
    PClassCertificate pclass_certificate(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options, double tol);

    // Runs the closure-rule checks for p, q, p+q, pq and p^k and reports a
    // hard failure only when a certified premise meets a certified negative
    // conclusion.
    std::vector<CheckResult> check_pclass_closure(const Polynomial & p, const Polynomial & q,
        std::span<const Graph> graphs, const CapacityOptions & options, double tol,
        unsigned power_k = 2);

    struct SuiteConfig
    {
        std::uint64_t seed = 20240915;
        int kmax = 2;
        double tol = 1e-4;
        double theta_tol = 1e-6;
        AlphaOptions alpha_budget;
        int additivity_pairs = 100;
        int supermult_pairs = 50;
        int expansion_pairs = 20;
        int theta_pairs = 20;
        bool inject_failure = false;      // harness self-test: adds a failing check
        std::vector<std::string> graphs = {
            "k1", "e2", "e3", "k3", "k5", "c5", "c7", "petersen"};

        static SuiteConfig from_json(const nlohmann::json & j);
        nlohmann::json to_json() const;
    };

    struct VerificationReport
    {
        SuiteConfig config;
        std::vector<CheckResult> results;   // sorted by check id
        int failures = 0;

        bool hard_failure() const { return failures > 0; }
        nlohmann::json to_json() const;
    };

    VerificationReport run_suite(const SuiteConfig & config);

    // Seeded graph sampling shared by the suite and the acceptance tests.
    Graph random_graph(std::uint64_t & state, int n, double edge_probability);
    std::uint64_t next_random(std::uint64_t & state);
}

#endif
