#include <doctest.h>

#include <capgraph/capacity.hpp>

#include <cmath>

using namespace capgraph;

TEST_CASE("root_lower is a sound k-th root lower bound")
{
    CHECK(root_lower(5, 1) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(root_lower(5, 2) <= std::sqrt(5.0));
    CHECK(root_lower(5, 2) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(root_lower(27, 3) <= 3.0);
    CHECK(root_lower(27, 3) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(root_lower(1, 7) == doctest::Approx(1.0).epsilon(1e-9));
    // Soundness: raising back to the k-th power never overshoots.
    for (long long v : {2LL, 10LL, 125LL, 1000LL})
        for (int k : {1, 2, 3, 4})
            CHECK(std::pow(root_lower(v, k), k) <= double(v) + 1e-6);
}

TEST_CASE("capacity of the five-cycle collapses at k = 2")
{
    CapacityOptions opts;
    opts.kmax = 2;
    auto iv = capacity_interval(cycle_graph(5), opts);
    CHECK(iv.lower_k == 2);
    CHECK(iv.lower_alpha == 5);
    CHECK(iv.lower <= std::sqrt(5.0));
    CHECK(iv.upper >= std::sqrt(5.0));
    CHECK(iv.width() <= 1e-4);
    CHECK(is_stable(power(cycle_graph(5), 2), iv.witness));
    CHECK(int(iv.witness.size()) == 5);
}

TEST_CASE("capacity collapses immediately for edgeless and complete graphs")
{
    for (int n : {1, 2, 4, 7}) {
        auto e = capacity_interval(empty_graph(n));
        CHECK(e.lower == doctest::Approx(double(n)).epsilon(1e-6));
        CHECK(e.collapsed(1e-4));
        auto k = capacity_interval(complete_graph(n));
        CHECK(k.lower == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(k.collapsed(1e-4));
    }
}

TEST_CASE("higher powers never worsen the lower bound")
{
    CapacityOptions one, two;
    one.kmax = 1;
    two.kmax = 2;
    auto a = capacity_interval(cycle_graph(5), one);
    auto b = capacity_interval(cycle_graph(5), two);
    CHECK(a.lower == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(b.lower > a.lower);
    CHECK(b.upper <= a.upper + 1e-9);
}

TEST_CASE("budget exhaustion on every power is reported")
{
    CapacityOptions opts;
    opts.kmax = 1;
    opts.vertex_budget = 2; // the five-cycle itself is already too large
    CHECK_THROWS_AS(capacity_interval(cycle_graph(5), opts), NoLowerBoundError);
}

TEST_CASE("polynomial capacity bounds")
{
    std::vector<Graph> eg = {empty_graph(2), empty_graph(3)};
    auto p = parse_polynomial("x^2 + 2 x y", 2);
    CapacityOptions opts;
    opts.kmax = 1;
    // Theta(p(E2, E3)) = 4 + 2*6 = 16 exactly for edgeless graphs.
    CHECK(poly_capacity_lower(p, eg, opts) <= 16.0);
    CHECK(poly_capacity_lower(p, eg, opts) == doctest::Approx(16.0).epsilon(1e-6));
    CHECK(poly_capacity_upper(p, eg, opts) >= 16.0);
    CHECK(poly_capacity_upper(p, eg, opts) == doctest::Approx(16.0).epsilon(1e-4));

    std::vector<Graph> c5 = {cycle_graph(5)};
    auto x = parse_polynomial("x", 1);
    CapacityOptions deep;
    deep.kmax = 2;
    CHECK(poly_capacity_lower(x, c5, deep) <= std::sqrt(5.0));
    CHECK(poly_capacity_lower(x, c5, deep) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-4));
    CHECK(poly_capacity_upper(x, c5, deep) >= std::sqrt(5.0));
    CHECK(poly_capacity_upper(x, c5, deep) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-4));

    auto one = parse_polynomial("1", 0);
    std::vector<Graph> none;
    CHECK(poly_capacity_lower(one, none, opts) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(poly_capacity_upper(one, none, opts) >= 1.0);

    // restrict_to_monomial rejects genuine sums but admits single terms.
    CHECK_THROWS_AS(poly_capacity_upper(p, eg, opts, true), ParameterError);
    auto xy = parse_polynomial("x y", 2);
    CHECK(poly_capacity_upper(xy, eg, opts, true) >= 6.0 - 1e-6);
}

TEST_CASE("product strictness certificates")
{
    // C5 with itself: lower(GH) = alpha(C5^2) = 5, upper = sqrt(5)^2; no slack.
    CHECK(!strict_product_certificate(cycle_graph(5), cycle_graph(5)).has_value());
    // Edgeless graphs multiply exactly; no strictness.
    CHECK(!strict_product_certificate(empty_graph(2), empty_graph(3)).has_value());

    auto cert = product_strictness_from_bounds(7.1, 7.0, 1.0, 2.0, 3.0);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == StrictnessCertificate::Kind::product_strict);
    CHECK(cert->slack == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(cert->lower_g == doctest::Approx(2.0));
    CHECK(cert->lower_h == doctest::Approx(3.0));

    CHECK(!product_strictness_from_bounds(7.0, 7.0, 1.0).has_value());
    CHECK(!product_strictness_from_bounds(6.9, 7.0, 1.0).has_value());
}

TEST_CASE("deriving sum strictness from product strictness")
{
    StrictnessCertificate c;
    c.kind = StrictnessCertificate::Kind::product_strict;
    c.lower_g = 2.0;
    c.lower_h = 2.0;
    c.lower_gh = 5.0;
    c.upper_g = 2.1;
    c.upper_h = 2.1;
    // Derived lhs = 4 + 10 + 4 = 18 > (4.2)^2 = 17.64.
    auto s = derive_sum_certificate(c);
    CHECK(s.kind == StrictnessCertificate::Kind::sum_strict);
    CHECK(s.slack == doctest::Approx(18.0 - 17.64).epsilon(1e-6));

    // Zero slack at the squared level must be rejected.
    StrictnessCertificate tight = c;
    tight.upper_g = 1.5;
    tight.upper_h = 1.5;
    tight.lower_gh = 0.5;
    tight.lower_g = 1.0;
    tight.lower_h = 1.0;
    // lhs = 1 + 1 + 1 = 3, rhs = 9.
    CHECK_THROWS_AS(derive_sum_certificate(tight), DerivationError);
}

TEST_CASE("grid agreement between derived and direct sum comparisons")
{
    for (double lg = 1.0; lg <= 3.0; lg += 0.5)
        for (double lgh = 4.0; lgh <= 8.0; lgh += 1.0)
            for (double ug = lg; ug <= lg + 1.0; ug += 0.5) {
                StrictnessCertificate c;
                c.kind = StrictnessCertificate::Kind::product_strict;
                c.lower_g = lg;
                c.lower_h = lg;
                c.lower_gh = lgh;
                c.upper_g = ug;
                c.upper_h = ug;
                double lhs = lg * lg + 2.0 * lgh + lg * lg;
                double rhs = (ug + ug) * (ug + ug);
                bool direct = lhs > rhs;
                bool derived = true;
                double slack = 0.0;
                try {
                    slack = derive_sum_certificate(c).slack;
                } catch (const DerivationError &) {
                    derived = false;
                }
                CHECK(derived == direct);
                if (derived)
                    CHECK(slack == doctest::Approx(lhs - rhs).epsilon(1e-9));
            }
}

TEST_CASE("converse bound arithmetic")
{
    CHECK(theorem2_converse_bound(7.0, 3.0, 1, 0) == doctest::Approx(7.0).epsilon(1e-9));
    CHECK(theorem2_converse_bound(7.0, 3.0, 0, 1) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(theorem2_converse_bound(2.0, 3.0, 2, 1) >= 12.0 - 1e-9);
    CHECK_THROWS_AS(theorem2_converse_bound(2.0, 3.0, -1, 0), ParameterError);
}

TEST_CASE("alpha of sum powers stays below the theta sum power")
{
    auto c5 = cycle_graph(5);
    auto check = converse_alpha_check(c5, c5, 2);
    CHECK(check.alpha_value == 20);
    CHECK(check.theta_sum_power >= 20.0 - 1e-6);
    CHECK(check.pass);

    auto e = converse_alpha_check(empty_graph(2), empty_graph(3), 3);
    CHECK(e.alpha_value == 125);
    CHECK(e.theta_sum_power >= 125.0 - 1e-4);
    CHECK(e.pass);
}
