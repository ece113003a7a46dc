#include <capgraph/verifier.hpp>

#include <capgraph/graph6.hpp>
#include <capgraph/rank.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace capgraph
{
    namespace
    {
        auto g6(const Graph & g) -> std::string
        {
            return emit_graph6(g);
        }

        auto verdict_name(PClassCertificate::Verdict v) -> std::string
        {
            switch (v) {
            case PClassCertificate::Verdict::in_class: return "in";
            case PClassCertificate::Verdict::not_in_class: return "not-in";
            default: return "inconclusive";
            }
        }

        auto verdict_code(PClassCertificate::Verdict v) -> double
        {
            switch (v) {
            case PClassCertificate::Verdict::in_class: return 1.0;
            case PClassCertificate::Verdict::not_in_class: return -1.0;
            default: return 0.0;
            }
        }
    }

    auto CheckResult::to_json() const -> nlohmann::json
    {
        return {{"check_id", id}, {"inputs", inputs}, {"lhs", lhs}, {"rhs", rhs},
            {"relation", relation}, {"pass", pass}, {"tol", tol}, {"strict", strict}};
    }

    auto PClassCertificate::to_json() const -> nlohmann::json
    {
        nlohmann::json intervals = nlohmann::json::array();
        for (auto & i : graph_intervals)
            intervals.push_back({{"lower", i.lower}, {"upper", i.upper},
                {"lower_k", i.lower_k}, {"lower_alpha", i.lower_alpha}});
        return {{"polynomial", polynomial}, {"graphs", graphs},
            {"graph_intervals", intervals}, {"value_lower", value_lower},
            {"value_upper", value_upper}, {"predicted", predicted},
            {"verdict", verdict_name(verdict)}};
    }

    auto next_random(std::uint64_t & state) -> std::uint64_t
    {
        // splitmix64: identical streams on every platform.
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    auto random_graph(std::uint64_t & state, int n, double edge_probability) -> Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                double r = double(next_random(state) >> 11) * 0x1.0p-53;
                if (r < edge_probability)
                    edges.emplace_back(u, v);
            }
        return Graph::from_edges(n, edges, "random");
    }

    auto check_alpha_additivity(const Graph & g, const Graph & h,
        const AlphaOptions & budget) -> CheckResult
    {
        CheckResult r;
        r.id = "alpha_additivity";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)}};
        r.lhs = alpha(sum(g, h), budget).value;
        r.rhs = alpha(g, budget).value + alpha(h, budget).value;
        r.relation = "eq";
        r.pass = r.lhs == r.rhs;
        return r;
    }

    auto check_alpha_supermult(const Graph & g, const Graph & h,
        const AlphaOptions & budget) -> CheckResult
    {
        auto rg = alpha(g, budget);
        auto rh = alpha(h, budget);
        auto witness = product_witness(rg.witness, rh.witness, g, h);
        auto product = strong_product(g, h);

        CheckResult r;
        r.id = "alpha_supermult";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)}};
        r.lhs = alpha(product, budget).value;
        r.rhs = double(rg.value) * double(rh.value);
        r.relation = "ge";
        r.strict = r.lhs > r.rhs;
        r.pass = r.lhs >= r.rhs && is_stable(product, witness);
        return r;
    }

    auto check_sum_power_expansion(const Graph & g, const Graph & h, int n,
        const AlphaOptions & budget) -> CheckResult
    {
        CheckResult r;
        r.id = "sum_power_expansion";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)}, {"n", n}};
        r.lhs = alpha(power(sum(g, h), n), budget).value;
        r.rhs = alpha(expand_sum_power(g, h, n), budget).value;
        r.relation = "eq";
        r.pass = r.lhs == r.rhs;
        return r;
    }

    auto check_theorem1_link(const Graph & g, const Graph & h, int n, int t,
        const AlphaOptions & budget) -> CheckResult
    {
        if (t < 1 || t > n)
            throw ParameterError{"theorem1 link needs 1 <= t <= n"};
        long long alpha_gt = alpha(power(g, t), budget).value;
        long long alpha_ht = alpha(power(h, t), budget).value;

        CheckResult r;
        r.id = "theorem1_link";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)}, {"n", n}, {"t", t},
            {"alpha_g_t", alpha_gt}, {"alpha_h_t", alpha_ht}};
        r.lhs = alpha(power(sum(g, h), n), budget).value;
        double base = root_lower(alpha_gt, t) + root_lower(alpha_ht, t);
        r.rhs = std::pow(base, n) / (double(alpha_gt) * double(alpha_ht)) * (1.0 - 1e-12);
        r.relation = "ge";
        r.pass = r.lhs >= r.rhs;
        return r;
    }

    auto check_shannon_superadditivity(const Graph & g, const Graph & h,
        const CapacityOptions & options) -> CheckResult
    {
        auto ig = capacity_interval(g, options);
        auto ih = capacity_interval(h, options);
        auto isum = capacity_interval(sum(g, h), options);

        CheckResult r;
        r.id = "shannon_superadditivity";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)},
            {"interval_g", {ig.lower, ig.upper}}, {"interval_h", {ih.lower, ih.upper}},
            {"interval_sum", {isum.lower, isum.upper}}};
        r.lhs = isum.upper;
        r.rhs = ig.lower + ih.lower;
        r.relation = "ge";
        r.tol = options.tol;
        r.pass = r.lhs >= r.rhs - options.tol;
        return r;
    }

    auto check_theta_multiplicativity(const Graph & g, const Graph & h, double tol)
        -> CheckResult
    {
        auto report = theta_product_check(g, h, std::min(1e-6, tol / 10.0));

        CheckResult r;
        r.id = "theta_multiplicativity";
        r.inputs = {{"g", g6(g)}, {"h", g6(h)},
            {"theta_g", report.g.value}, {"theta_h", report.h.value}};
        r.lhs = report.product.value;
        r.rhs = report.g.value * report.h.value;
        r.relation = "eq";
        r.tol = tol;
        r.pass = report.difference <= std::max(tol, report.combined_tol);
        return r;
    }

    auto check_diagonal_witness(const Graph & g) -> CheckResult
    {
        auto witness = diagonal_witness(g);
        auto product = strong_product(g, complement(g));

        CheckResult r;
        r.id = "diagonal_witness";
        r.inputs = {{"g", g6(g)}, {"witness_size", witness.size()}};
        r.lhs = double(witness.size());
        r.rhs = double(g.vertex_count());
        r.relation = "eq";
        r.pass = witness.size() == std::size_t(g.vertex_count()) && is_stable(product, witness);
        return r;
    }

    namespace
    {
        auto poly_at(const Polynomial & p, const std::vector<double> & at) -> double
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

    auto pclass_certificate(const Polynomial & p, std::span<const Graph> graphs,
        const CapacityOptions & options, double tol) -> PClassCertificate
    {
        PClassCertificate cert;
        cert.polynomial = p.to_string();

        std::vector<double> lows, highs, mids;
        bool all_collapsed = true;
        for (auto & g : graphs) {
            cert.graphs.push_back(g6(g));
            auto interval = capacity_interval(g, options);
            lows.push_back(interval.lower);
            highs.push_back(interval.upper);
            mids.push_back((interval.lower + interval.upper) / 2.0);
            all_collapsed = all_collapsed && interval.collapsed(tol);
            cert.graph_intervals.push_back(std::move(interval));
        }

        cert.predicted = poly_at(p, mids);
        cert.value_lower = poly_at(p, lows) * (1.0 - 1e-12);
        cert.value_upper = poly_at(p, highs) * (1.0 + 1e-12) + 1e-12;

        if (! p.is_zero()) {
            // Direct refinement on the evaluated graph, where affordable.
            try {
                Graph value = evaluate(p, graphs, options.vertex_budget);
                CapacityOptions direct = options;
                direct.alpha_budget.max_nodes =
                    std::min<std::uint64_t>(direct.alpha_budget.max_nodes, 2'000'000);
                direct.alpha_budget.max_seconds =
                    std::min(direct.alpha_budget.max_seconds, 20.0);
                if (value.vertex_count() >= 1 && value.vertex_count() <= 1000) {
                    try {
                        auto direct_alpha = alpha(value, direct.alpha_budget);
                        cert.value_lower = std::max(cert.value_lower,
                            double(direct_alpha.value));
                    }
                    catch (const BudgetError &) {
                    }
                    if (value.vertex_count() <= 40) {
                        try {
                            auto t = theta(value, options.tol);
                            cert.value_upper = std::min(cert.value_upper,
                                t.upper_cert * (1.0 + 1e-12) + 1e-12);
                        }
                        catch (const ConvergenceError &) {
                        }
                    }
                }
            }
            catch (const SizeError &) {
            }
        }

        double width = cert.value_upper - cert.value_lower;
        double mid = (cert.value_lower + cert.value_upper) / 2.0;
        if (all_collapsed && width <= tol && std::abs(mid - cert.predicted) <= tol)
            cert.verdict = PClassCertificate::Verdict::in_class;
        else if (all_collapsed && (cert.value_lower > cert.predicted + tol ||
                     cert.value_upper < cert.predicted - tol))
            cert.verdict = PClassCertificate::Verdict::not_in_class;
        else
            cert.verdict = PClassCertificate::Verdict::inconclusive;
        return cert;
    }

    auto check_pclass_closure(const Polynomial & p, const Polynomial & q,
        std::span<const Graph> graphs, const CapacityOptions & options, double tol,
        unsigned power_k) -> std::vector<CheckResult>
    {
        for (auto & g : graphs)
            if (g.vertex_count() < 1)
                throw ParameterError{"pclass checks need graphs with at least one vertex"};
        if (q.is_zero())
            throw ParameterError{"pclass product rule needs q != 0"};
        if (power_k < 1 || power_k > 3)
            throw ParameterError{"pclass power rule supports k in 1..3"};

        struct Named
        {
            std::string name;
            PClassCertificate cert;
        };
        std::vector<Named> members;
        auto certify = [&](const std::string & name, const Polynomial & poly) {
            members.push_back({name, pclass_certificate(poly, graphs, options, tol)});
            return members.back().cert.verdict;
        };

        auto vp = certify("p", p);
        auto vq = certify("q", q);
        auto vsum = certify("p+q", p + q);
        auto vprod = certify("pq", p * q);
        auto vpow = certify("p^k", p.pow(power_k));

        std::vector<CheckResult> results;
        for (auto & member : members) {
            CheckResult r;
            r.id = "pclass_membership";
            r.inputs = {{"role", member.name}, {"certificate", member.cert.to_json()}};
            r.lhs = (member.cert.value_lower + member.cert.value_upper) / 2.0;
            r.rhs = member.cert.predicted;
            r.relation = "eq";
            r.tol = tol;
            r.pass = member.cert.verdict != PClassCertificate::Verdict::not_in_class;
            results.push_back(std::move(r));
        }

        auto implication = [&](const std::string & rule,
                               PClassCertificate::Verdict premise,
                               PClassCertificate::Verdict conclusion) {
            CheckResult r;
            r.id = "pclass_rule_" + rule;
            r.inputs = {{"premise", verdict_name(premise)},
                {"conclusion", verdict_name(conclusion)}};
            r.lhs = verdict_code(premise);
            r.rhs = verdict_code(conclusion);
            r.relation = "implies";
            // Hard failure only on a certified premise with a certified
            // negative conclusion; anything else is satisfied or inconclusive.
            r.pass = ! (premise == PClassCertificate::Verdict::in_class &&
                conclusion == PClassCertificate::Verdict::not_in_class);
            results.push_back(std::move(r));
        };
        implication("sum", vsum, vp);      // p+q in P  =>  p in P
        implication("product", vprod, vp); // pq in P, q != 0  =>  p in P
        implication("power", vp, vpow);    // p in P  =>  p^k in P
        (void) vq;
        return results;
    }

    auto SuiteConfig::from_json(const nlohmann::json & j) -> SuiteConfig
    {
        SuiteConfig c;
        c.seed = j.value("seed", c.seed);
        c.kmax = j.value("kmax", c.kmax);
        c.tol = j.value("tol", c.tol);
        c.theta_tol = j.value("theta_tol", c.theta_tol);
        c.alpha_budget.max_nodes = j.value("budget_nodes", c.alpha_budget.max_nodes);
        c.alpha_budget.max_seconds = j.value("budget_seconds", c.alpha_budget.max_seconds);
        c.additivity_pairs = j.value("additivity_pairs", c.additivity_pairs);
        c.supermult_pairs = j.value("supermult_pairs", c.supermult_pairs);
        c.expansion_pairs = j.value("expansion_pairs", c.expansion_pairs);
        c.theta_pairs = j.value("theta_pairs", c.theta_pairs);
        c.inject_failure = j.value("inject_failure", c.inject_failure);
        if (j.contains("graphs"))
            c.graphs = j.at("graphs").get<std::vector<std::string>>();
        return c;
    }

    auto SuiteConfig::to_json() const -> nlohmann::json
    {
        return {{"seed", seed}, {"kmax", kmax}, {"tol", tol}, {"theta_tol", theta_tol},
            {"budget_nodes", alpha_budget.max_nodes},
            {"budget_seconds", alpha_budget.max_seconds},
            {"additivity_pairs", additivity_pairs}, {"supermult_pairs", supermult_pairs},
            {"expansion_pairs", expansion_pairs}, {"theta_pairs", theta_pairs},
            {"inject_failure", inject_failure}, {"graphs", graphs}};
    }

    auto VerificationReport::to_json() const -> nlohmann::json
    {
        nlohmann::json checks = nlohmann::json::array();
        for (auto & r : results)
            checks.push_back(r.to_json());
        return {{"config", config.to_json()}, {"results", checks}, {"failures", failures}};
    }

    auto run_suite(const SuiteConfig & config) -> VerificationReport
    {
        VerificationReport report;
        report.config = config;

        CapacityOptions capacity_options;
        capacity_options.kmax = config.kmax;
        capacity_options.tol = config.theta_tol;
        capacity_options.alpha_budget = config.alpha_budget;

        const double probabilities[] = {0.2, 0.5, 0.8};
        std::uint64_t state = config.seed;
        auto sample = [&](int max_vertices) {
            int n = 1 + int(next_random(state) % std::uint64_t(max_vertices));
            double p = probabilities[next_random(state) % 3];
            return random_graph(state, n, p);
        };

        auto & results = report.results;

        for (int i = 0; i < config.additivity_pairs; ++i) {
            auto g = sample(10), h = sample(10);
            results.push_back(check_alpha_additivity(g, h, config.alpha_budget));
        }

        for (int i = 0; i < config.supermult_pairs; ++i) {
            auto g = sample(6), h = sample(6);
            results.push_back(check_alpha_supermult(g, h, config.alpha_budget));
        }
        results.push_back(check_alpha_supermult(cycle_graph(5), cycle_graph(5),
            config.alpha_budget));

        for (int i = 0; i < config.expansion_pairs; ++i) {
            auto g = sample(4), h = sample(4);
            results.push_back(check_sum_power_expansion(g, h, i % 2 == 0 ? 2 : 3,
                config.alpha_budget));
        }
        results.push_back(check_sum_power_expansion(cycle_graph(5), cycle_graph(5), 2,
            config.alpha_budget));

        for (int t : {1, 2}) {
            results.push_back(check_theorem1_link(cycle_graph(5), cycle_graph(5), 2, t,
                config.alpha_budget));
            results.push_back(check_theorem1_link(cycle_graph(5), cycle_graph(7), 2, t,
                config.alpha_budget));
        }

        results.push_back(check_shannon_superadditivity(cycle_graph(5), cycle_graph(5),
            capacity_options));
        results.push_back(check_shannon_superadditivity(empty_graph(2), empty_graph(3),
            capacity_options));
        results.push_back(check_shannon_superadditivity(complete_graph(1), complete_graph(1),
            capacity_options));

        for (int i = 0; i < config.theta_pairs; ++i) {
            int ng = 2 + int(next_random(state) % 7), nh = 2 + int(next_random(state) % 7);
            auto g = random_graph(state, ng, 0.5), h = random_graph(state, nh, 0.5);
            results.push_back(check_theta_multiplicativity(g, h, 1e-3));
        }
        results.push_back(check_theta_multiplicativity(cycle_graph(5), cycle_graph(5), 1e-3));

        results.push_back(check_diagonal_witness(petersen_graph()));
        results.push_back(check_diagonal_witness(schlafli_graph()));

        {
            std::vector<Graph> edgeless{empty_graph(2), empty_graph(3)};
            auto px = parse_polynomial("x1", 2);
            auto qy = parse_polynomial("x2", 2);
            for (auto & r : check_pclass_closure(px, qy, edgeless, capacity_options,
                     config.tol))
                results.push_back(r);

            std::vector<Graph> pentagon{cycle_graph(5)};
            auto p2 = parse_polynomial("x1^2", 1);
            auto q1 = parse_polynomial("x1", 1);
            for (auto & r : check_pclass_closure(p2, q1, pentagon, capacity_options,
                     config.tol))
                results.push_back(r);
        }

        {
            // Rank-bound sanity: any fitting rank is at least alpha.
            for (auto & g : {cycle_graph(5), complete_graph(4), empty_graph(4)}) {
                unsigned shifts[] = {1};
                auto bound = rank_bound_search(g, 2, shifts);
                CheckResult r;
                r.id = "rank_sanity";
                r.inputs = {{"g", g6(g)}, {"field", 2}};
                r.lhs = bound ? double(*bound) : -1.0;
                r.rhs = alpha(g, config.alpha_budget).value;
                r.relation = "ge";
                r.pass = bound && r.lhs >= r.rhs;
                results.push_back(std::move(r));
            }
        }

        if (config.inject_failure) {
            CheckResult r;
            r.id = "self_test_injected";
            r.inputs = {{"note", "adversarial harness self-test"}};
            r.lhs = 1.0;
            r.rhs = 2.0;
            r.relation = "eq";
            r.pass = false;
            results.push_back(std::move(r));
        }

        // Stable, deterministic report order: by id, then by insertion index.
        std::vector<std::size_t> order(results.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return results[a].id < results[b].id; });
        std::vector<CheckResult> sorted;
        sorted.reserve(results.size());
        for (auto i : order)
            sorted.push_back(std::move(results[std::size_t(i)]));
        results = std::move(sorted);

        for (auto & r : results)
            if (! r.pass)
                ++report.failures;
        return report;
    }
}
