// End-to-end acceptance suite. Each numbered criterion prints one
// [PASS]/[FAIL] line; the exit status is nonzero when any of them fails.

#include <capgraph/capacity.hpp>
#include <capgraph/cli.hpp>
#include <capgraph/rank.hpp>
#include <capgraph/verifier.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace capgraph;
using nlohmann::json;

namespace
{
    int failures = 0;

    void criterion(int number, const std::string & label, double time_limit_seconds,
        const std::function<bool()> & body)
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        }
        catch (const std::exception & e) {
            note = std::string(" (") + e.what() + ")";
        }
        double seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        if (time_limit_seconds > 0.0 && seconds > time_limit_seconds) {
            ok = false;
            note += " (over time limit)";
        }
        if (!ok)
            ++failures;
        std::printf("[%s] %2d %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number,
            label.c_str(), seconds, note.c_str());
        std::fflush(stdout);
    }
}

int main()
{
    criterion(1, "capacity enclosure of the five-cycle", 10.0, [] {
        auto c5 = cycle_graph(5);
        auto sq = power(c5, 2);
        if (alpha(sq).value != 5 || alpha_exhaustive(sq) != 5)
            return false;
        auto t = theta(c5, 1e-6);
        if (std::abs(t.value - 2.2360680) > 1e-5)
            return false;
        std::ostringstream out, err;
        if (run_cli({"capacity", "c5", "--kmax", "2", "--format", "json"}, out, err) != 0)
            return false;
        auto j = json::parse(out.str());
        return j["width"].get<double>() <= 1e-4 &&
            j["lower"].get<double>() <= std::sqrt(5.0) &&
            j["upper"].get<double>() >= std::sqrt(5.0);
    });

    criterion(2, "stability number additive over disjoint union, 100 pairs", 30.0, [] {
        std::uint64_t state = 1001;
        double probs[] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 100; ++i) {
            auto g = random_graph(state, 1 + int(next_random(state) % 10), probs[i % 3]);
            auto h = random_graph(state, 1 + int(next_random(state) % 10), probs[(i + 1) % 3]);
            if (!check_alpha_additivity(g, h).pass)
                return false;
        }
        return true;
    });

    criterion(3, "supermultiplicative under the strong product, 50 pairs + strict case", 60.0, [] {
        std::uint64_t state = 1003;
        double probs[] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 50; ++i) {
            auto g = random_graph(state, 1 + int(next_random(state) % 6), probs[i % 3]);
            auto h = random_graph(state, 1 + int(next_random(state) % 6), probs[(i + 1) % 3]);
            if (!check_alpha_supermult(g, h).pass)
                return false;
        }
        auto strict = check_alpha_supermult(cycle_graph(5), cycle_graph(5));
        return strict.pass && strict.strict && strict.lhs == 5.0 && strict.rhs == 4.0;
    });

    criterion(4, "sum-power expansion identity, 20 pairs + (C5, C5, 2)", 120.0, [] {
        std::uint64_t state = 1004;
        double probs[] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 20; ++i) {
            auto g = random_graph(state, 1 + int(next_random(state) % 4), probs[i % 3]);
            auto h = random_graph(state, 1 + int(next_random(state) % 4), probs[(i + 1) % 3]);
            int n = 2 + int(next_random(state) % 2);
            if (!check_sum_power_expansion(g, h, n).pass)
                return false;
        }
        return check_sum_power_expansion(cycle_graph(5), cycle_graph(5), 2).pass;
    });

    criterion(5, "root-combination lower bound for sums of powers", 0.0, [] {
        for (int t : {1, 2}) {
            if (!check_theorem1_link(cycle_graph(5), cycle_graph(5), 2, t).pass)
                return false;
            if (!check_theorem1_link(cycle_graph(5), cycle_graph(7), 2, t).pass)
                return false;
        }
        return true;
    });

    criterion(6, "theta multiplicative under the strong product, 20 pairs", 0.0, [] {
        std::uint64_t state = 1006;
        for (int i = 0; i < 20; ++i) {
            auto g = random_graph(state, 2 + int(next_random(state) % 7), 0.5);
            auto h = random_graph(state, 2 + int(next_random(state) % 7), 0.5);
            if (!check_theta_multiplicativity(g, h, 1e-3).pass)
                return false;
        }
        auto c5 = theta_product_check(cycle_graph(5), cycle_graph(5), 1e-6);
        return c5.pass && std::abs(c5.product.value - 5.0) <= 1e-3;
    });

    criterion(7, "diagonal stable set in the product with the complement", 5.0, [] {
        auto pet = check_diagonal_witness(petersen_graph());
        auto sch = check_diagonal_witness(schlafli_graph());
        return pet.pass && pet.lhs == 10.0 && sch.pass && sch.lhs == 27.0;
    });

    criterion(8, "sum-strictness derivation agrees with direct arithmetic on 1000 tuples", 0.0, [] {
        // 10 x 10 x 10 grid over (L(G), L(GH), U(G)); L(H) and U(H) mirror
        // L(G) and U(G). Multiples of 0.5 keep every comparison far from
        // the rounding nudges.
        for (int a = 0; a < 10; ++a)
            for (int b = 0; b < 10; ++b)
                for (int c = 0; c < 10; ++c) {
                    StrictnessCertificate cert;
                    cert.kind = StrictnessCertificate::Kind::product_strict;
                    cert.lower_g = 1.0 + 0.5 * a;
                    cert.lower_h = cert.lower_g;
                    cert.lower_gh = 1.0 + 0.5 * b;
                    cert.upper_g = 1.0 + 0.5 * c;
                    cert.upper_h = cert.upper_g;
                    double lhs = cert.lower_g * cert.lower_g + 2.0 * cert.lower_gh +
                        cert.lower_h * cert.lower_h;
                    double rhs = (cert.upper_g + cert.upper_h) * (cert.upper_g + cert.upper_h);
                    bool direct = lhs > rhs;
                    bool derived = true;
                    try {
                        derive_sum_certificate(cert);
                    }
                    catch (const DerivationError &) {
                        derived = false;
                    }
                    if (derived != direct)
                        return false;
                }
        return true;
    });

    criterion(9, "capacity-polynomial class closure on edgeless tuples and the five-cycle", 0.0, [] {
        auto run = [](const Polynomial & p, const Polynomial & q,
                       std::vector<Graph> graphs, int kmax) {
            CapacityOptions opts;
            opts.kmax = kmax;
            return check_pclass_closure(p, q, graphs, opts, 1e-3, 2);
        };
        auto all_pass = [](const std::vector<CheckResult> & rs) {
            if (rs.empty())
                return false;
            for (const auto & r : rs)
                if (!r.pass)
                    return false;
            return true;
        };
        auto to_json = [](const std::vector<CheckResult> & rs) {
            json j = json::array();
            for (const auto & r : rs)
                j.push_back(r.to_json());
            return j;
        };

        std::vector<Graph> eg = {empty_graph(2), empty_graph(3)};
        auto edgeless = run(parse_polynomial("x1", 2), parse_polynomial("x2", 2), eg, 1);
        if (!all_pass(edgeless))
            return false;

        std::vector<Graph> c5 = {cycle_graph(5)};
        auto cyc = run(parse_polynomial("x^2", 1), parse_polynomial("x", 1), c5, 2);
        if (!all_pass(cyc))
            return false;

        // Membership verdicts on every role must certify inside the class.
        for (const auto * batch : {&edgeless, &cyc})
            for (const auto & r : *batch)
                if (r.id.find("membership") != std::string::npos && !r.pass)
                    return false;

        // Determinism under a fixed configuration.
        auto again = run(parse_polynomial("x^2", 1), parse_polynomial("x", 1), c5, 2);
        return to_json(cyc) == to_json(again);
    });

    criterion(10, "branch-and-bound matches exhaustive enumeration on 200 graphs", 120.0, [] {
        std::uint64_t state = 1010;
        double probs[] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 200; ++i) {
            auto g = random_graph(state, 1 + int(next_random(state) % 12), probs[i % 3]);
            if (alpha(g).value != alpha_exhaustive(g))
                return false;
        }
        return true;
    });

    criterion(11, "rank bound fitting validation and rank >= alpha sanity", 0.0, [] {
        auto fits = [](const Graph & g) {
            int n = g.vertex_count();
            GFMatrix m(n, std::vector<unsigned>(n, 0));
            for (int i = 0; i < n; ++i) {
                m[i][i] = 1;
                for (int j = 0; j < n; ++j)
                    if (g.adjacent(i, j))
                        m[i][j] = 1;
            }
            return m;
        };
        auto c5 = cycle_graph(5);
        GFMatrix bad = fits(c5);
        bad[0][0] = 0;
        bool threw = false;
        try {
            rank_bound(c5, bad, 2);
        }
        catch (const FittingError &) {
            threw = true;
        }
        if (!threw)
            return false;
        for (const auto & g : {c5, complete_graph(4), complete_graph(7),
                 empty_graph(3), empty_graph(6)})
            if (rank_bound(g, fits(g), 2) < int(alpha(g).value))
                return false;
        GFMatrix ones(4, std::vector<unsigned>(4, 1));
        return rank_bound(complete_graph(4), ones, 2) == 1;
    });

    std::printf("%s: %d criterion failure%s\n", failures == 0 ? "OK" : "FAILED",
        failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
