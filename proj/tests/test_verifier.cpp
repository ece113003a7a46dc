#include <doctest.h>

#include <capgraph/graph6.hpp>
#include <capgraph/verifier.hpp>

#include <cmath>

using namespace capgraph;

TEST_CASE("additivity and supermultiplicativity checks on small graphs")
{
    auto c5 = cycle_graph(5);
    auto k3 = complete_graph(3);

    auto add = check_alpha_additivity(c5, k3);
    CHECK(add.pass);
    CHECK(add.relation == "eq");
    CHECK(add.lhs == doctest::Approx(3.0));
    CHECK(add.rhs == doctest::Approx(3.0));

    auto mul = check_alpha_supermult(c5, c5);
    CHECK(mul.pass);
    CHECK(mul.relation == "ge");
    CHECK(mul.lhs == doctest::Approx(5.0));
    CHECK(mul.rhs == doctest::Approx(4.0));
    CHECK(mul.strict);

    auto even = check_alpha_supermult(empty_graph(2), complete_graph(4));
    CHECK(even.pass);
    CHECK(!even.strict);
}

TEST_CASE("sum power expansion against the multinomial identity")
{
    auto r = check_sum_power_expansion(cycle_graph(5), complete_graph(2), 2);
    CHECK(r.pass);
    CHECK(r.relation == "eq");
    // alpha((C5 + K2)^2): both sides computed along different routes agree.
    CHECK(r.lhs == r.rhs);

    auto deep = check_sum_power_expansion(empty_graph(2), complete_graph(1), 3);
    CHECK(deep.pass);
    CHECK(deep.lhs == doctest::Approx(27.0)); // alpha((E2 + K1)^3) = 3^3
}

TEST_CASE("the root-combination lower bound holds")
{
    for (int t : {1, 2}) {
        for (const auto & other : {cycle_graph(5), cycle_graph(7)}) {
            auto r = check_theorem1_link(cycle_graph(5), other, 2, t);
            CHECK(r.pass);
            CHECK(r.relation == "ge");
            CHECK(r.lhs >= r.rhs - 1e-9);
        }
    }
}

TEST_CASE("shannon capacity superadditivity over disjoint union")
{
    CapacityOptions opts;
    opts.kmax = 2;
    auto r = check_shannon_superadditivity(cycle_graph(5), complete_graph(3), opts);
    CHECK(r.pass);
    CHECK(r.relation == "ge");
    CHECK(r.lhs >= std::sqrt(5.0) + 1.0 - 1e-3);
}

TEST_CASE("theta multiplicativity check")
{
    auto r = check_theta_multiplicativity(cycle_graph(5), cycle_graph(5), 1e-4);
    CHECK(r.pass);
    CHECK(r.relation == "eq");
    CHECK(r.lhs == doctest::Approx(5.0).epsilon(1e-3));
}

TEST_CASE("diagonal witnesses on vertex-transitive graphs")
{
    CHECK(check_diagonal_witness(petersen_graph()).pass);
    CHECK(check_diagonal_witness(cycle_graph(7)).pass);
    CHECK(check_diagonal_witness(complete_graph(1)).pass);
    auto r = check_diagonal_witness(petersen_graph());
    CHECK(r.lhs == doctest::Approx(10.0));
}

TEST_CASE("check results serialize with their inputs")
{
    auto r = check_alpha_additivity(cycle_graph(5), complete_graph(2));
    auto j = r.to_json();
    CHECK(j["check_id"] == r.id);
    CHECK(j["pass"] == true);
    CHECK(j["relation"] == "eq");
    CHECK(j.contains("inputs"));
    // Re-derive from the recorded inputs.
    auto g = parse_graph6(j["inputs"]["g"].get<std::string>());
    auto h = parse_graph6(j["inputs"]["h"].get<std::string>());
    auto again = check_alpha_additivity(g, h);
    CHECK(again.lhs == r.lhs);
    CHECK(again.rhs == r.rhs);
}

TEST_CASE("class membership for projections and products of edgeless graphs")
{
    std::vector<Graph> eg = {empty_graph(2), empty_graph(3)};
    CapacityOptions opts;
    opts.kmax = 1;

    auto p = parse_polynomial("x", 2);
    auto cx = pclass_certificate(p, eg, opts, 1e-4);
    CHECK(cx.verdict == PClassCertificate::Verdict::in_class);
    CHECK(cx.predicted == doctest::Approx(2.0).epsilon(1e-6));

    auto pq = parse_polynomial("x y", 2);
    auto cxy = pclass_certificate(pq, eg, opts, 1e-4);
    CHECK(cxy.verdict == PClassCertificate::Verdict::in_class);
    CHECK(cxy.predicted == doctest::Approx(6.0).epsilon(1e-6));

    auto sum = parse_polynomial("x + y", 2);
    auto cs = pclass_certificate(sum, eg, opts, 1e-4);
    CHECK(cs.verdict == PClassCertificate::Verdict::in_class);
    CHECK(cs.predicted == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("closure rules on edgeless tuples never certify a violation")
{
    std::vector<Graph> eg = {empty_graph(2), empty_graph(3)};
    CapacityOptions opts;
    opts.kmax = 1;
    auto p = parse_polynomial("x1", 2);
    auto q = parse_polynomial("x2", 2);
    auto results = check_pclass_closure(p, q, eg, opts, 1e-4, 2);
    CHECK(!results.empty());
    for (const auto & r : results)
        CHECK(r.pass);
    // Both membership and rule-implication checks are present.
    int membership = 0, rules = 0;
    for (const auto & r : results) {
        membership += r.id.find("membership") != std::string::npos;
        rules += r.id.find("rule") != std::string::npos;
    }
    CHECK(membership >= 4);
    CHECK(rules == 3);
}

TEST_CASE("monomial membership on the five-cycle")
{
    std::vector<Graph> c5 = {cycle_graph(5)};
    CapacityOptions opts;
    opts.kmax = 2;
    auto p = parse_polynomial("x^2", 1);
    auto cert = pclass_certificate(p, c5, opts, 1e-3);
    // Theta(C5^2) = 5 = Theta(C5)^2 exactly.
    CHECK(cert.verdict == PClassCertificate::Verdict::in_class);
    CHECK(cert.predicted == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(cert.value_lower <= 5.0);
    CHECK(cert.value_upper >= 5.0);
}

TEST_CASE("raising kmax never flips a membership verdict to negative")
{
    std::vector<Graph> c5 = {cycle_graph(5)};
    auto p = parse_polynomial("x", 1);
    CapacityOptions shallow, deep;
    shallow.kmax = 1;
    deep.kmax = 2;
    auto a = pclass_certificate(p, c5, shallow, 1e-3);
    auto b = pclass_certificate(p, c5, deep, 1e-3);
    CHECK(a.verdict != PClassCertificate::Verdict::not_in_class);
    CHECK(b.verdict != PClassCertificate::Verdict::not_in_class);
    // Deeper powers can only tighten the enclosure.
    CHECK(b.value_upper - b.value_lower <= a.value_upper - a.value_lower + 1e-9);
}

TEST_CASE("suite configuration round-trips through json")
{
    SuiteConfig c;
    c.seed = 7;
    c.additivity_pairs = 3;
    c.graphs = {"c5", "k2"};
    auto j = c.to_json();
    auto back = SuiteConfig::from_json(j);
    CHECK(back.seed == 7);
    CHECK(back.additivity_pairs == 3);
    CHECK(back.graphs == c.graphs);
    CHECK(back.tol == c.tol);
}

TEST_CASE("a reduced suite run passes and is deterministic")
{
    SuiteConfig c;
    c.additivity_pairs = 6;
    c.supermult_pairs = 4;
    c.expansion_pairs = 2;
    c.theta_pairs = 2;
    c.kmax = 2;
    c.graphs = {"k1", "e2", "k3", "c5"};

    auto first = run_suite(c);
    CHECK(first.failures == 0);
    CHECK(!first.hard_failure());
    CHECK(!first.results.empty());

    auto second = run_suite(c);
    CHECK(first.to_json() == second.to_json());
}

TEST_CASE("failure injection surfaces as a hard failure")
{
    SuiteConfig c;
    c.additivity_pairs = 1;
    c.supermult_pairs = 1;
    c.expansion_pairs = 1;
    c.theta_pairs = 1;
    c.graphs = {"k1", "e2"};
    c.inject_failure = true;
    auto report = run_suite(c);
    CHECK(report.failures >= 1);
    CHECK(report.hard_failure());
    bool found = false;
    for (const auto & r : report.results)
        if (r.id.find("self_test") != std::string::npos && !r.pass)
            found = true;
    CHECK(found);
}

TEST_CASE("seeded sampling is platform independent")
{
    std::uint64_t s1 = 99, s2 = 99;
    CHECK(next_random(s1) == next_random(s2));
    auto g1 = random_graph(s1, 8, 0.5);
    auto g2 = random_graph(s2, 8, 0.5);
    CHECK(g1 == g2);
    CHECK(g1.vertex_count() == 8);
}
