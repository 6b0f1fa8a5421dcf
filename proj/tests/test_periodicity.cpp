#include <doctest.h>

#include <grwalk/drg.hpp>
#include <grwalk/graph.hpp>
#include <grwalk/periodicity.hpp>

#include "test_util.hpp"

using namespace grwalk;

namespace {

// equivalent to testing every proper divisor: the order divides `period`
// exactly when U^period = I, and it is a proper divisor exactly when some
// U^(period/p) = I for a prime p | period
void check_exact_period(const Graph& g, long period) {
    RatMatrix u = grover_unitary(g);
    CHECK(pow(u, Integer(period)).is_identity());
    for (long p = 2; p <= period; ++p) {
        if (period % p != 0)
            continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0)
                prime = false;
        if (!prime)
            continue;
        CHECK_FALSE(pow(u, Integer(period / p)).is_identity());
    }
}

} // namespace

TEST_CASE("walk-operator route on the periodic corpus") {
    struct Case {
        Graph g;
        long period;
    };
    const std::vector<Case> cases = {
        {complete_graph(2), 2},
        {complete_graph(3), 3},
        {cycle_graph(4), 4},
        {cycle_graph(5), 5},
        {cycle_graph(6), 6},
        {cycle_graph(7), 7},
        {cycle_graph(8), 8},
        {complete_multipartite_graph({2, 2}), 4},
        {complete_multipartite_graph({3, 3}), 4},
        {complete_multipartite_graph({2, 2, 2}), 12},
        {hamming_graph(2, 2), 4},
        {johnson_graph(4, 2), 12},
    };
    for (const auto& c : cases) {
        auto v = is_periodic_unitary(c.g);
        CHECK(v.periodic);
        CHECK(v.route == Route::unitary);
        REQUIRE(v.period.has_value());
        CHECK(*v.period == Integer(c.period));
        REQUIRE(v.cert.has_value());
        CHECK(v.cert->order_lcm == Integer(c.period));
        check_exact_period(c.g, c.period);
    }
}

TEST_CASE("walk-operator route on the largest periodic family member") {
    Graph h33 = hamming_graph(3, 3);
    auto v = is_periodic_unitary(h33);
    CHECK(v.periodic);
    CHECK(v.period == Integer(12));
    check_exact_period(h33, 12);
}

TEST_CASE("non-periodic graphs carry a witness") {
    for (const Graph& g : {complete_graph(4), complete_graph(5), petersen_graph(),
                           hamming_graph(2, 3), johnson_graph(5, 2)}) {
        auto v = is_periodic_unitary(g);
        CHECK_FALSE(v.periodic);
        CHECK_FALSE(v.period.has_value());
        CHECK_FALSE(v.cert.has_value());
        REQUIRE(v.failure_witness.has_value());
        CHECK_FALSE(v.failure_witness->empty());

        auto s = is_periodic_spectral(g);
        CHECK_FALSE(s.periodic);
        REQUIRE(s.failure_witness.has_value());
    }
}

TEST_CASE("spectral route agrees on the bit and may refine upward") {
    // even cycles and bipartite doubles: both routes give the same period
    for (auto [build, period] :
         std::vector<std::pair<Graph, long>>{{cycle_graph(4), 4},
                                             {cycle_graph(6), 6},
                                             {complete_multipartite_graph({2, 2}), 4},
                                             {complete_multipartite_graph({2, 2, 2}), 12},
                                             {johnson_graph(4, 2), 12}}) {
        auto u = is_periodic_unitary(build);
        auto s = is_periodic_spectral(build);
        CHECK(u.periodic);
        CHECK(s.periodic);
        CHECK(s.route == Route::spectral);
        CHECK(*u.period == Integer(period));
        CHECK(*s.period == Integer(period));
    }

    // odd cycles: the spectrum-support route cannot see that the extra
    // factor of two is already absorbed, so it reports twice the true period
    for (int n : {3, 5, 7}) {
        Graph c = cycle_graph(n);
        auto u = is_periodic_unitary(c);
        auto s = is_periodic_spectral(c);
        CHECK(u.periodic);
        CHECK(s.periodic);
        CHECK(*u.period == Integer(n));
        CHECK(*s.period == Integer(2 * n));
    }
}

TEST_CASE("quotient route matches the spectral route on distance-regular graphs") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(3),
                           complete_multipartite_graph({2, 2}), petersen_graph(),
                           johnson_graph(4, 2), complete_multipartite_graph({2, 2, 2})}) {
        auto arr = intersection_array_of(g);
        REQUIRE(arr.has_value());
        auto q = drg_periodicity(*arr);
        auto s = is_periodic_spectral(g);
        CHECK(q.periodic == s.periodic);
        if (q.periodic && s.periodic)
            CHECK(*q.period == *s.period);
    }
}

TEST_CASE("rational spectrum checks on periodic graphs") {
    auto h22 = rational_spectrum_check(hamming_graph(2, 2));
    CHECK(h22.splits);
    CHECK(h22.periodic);
    CHECK(h22.applicable);
    REQUIRE(h22.eigenvalues.size() == 3);
    CHECK(h22.eigenvalues[0].value == make_rational(-1));
    CHECK(h22.eigenvalues[1].value == make_rational(0));
    CHECK(h22.eigenvalues[2].value == make_rational(1));
    CHECK(h22.distinct_count == 3);
    CHECK(h22.diameter == 2);
    CHECK(h22.values_allowed == true);
    CHECK(h22.count_bounded == true);
    CHECK(h22.diameter_bounded == true);
    CHECK(h22.diameter_below_distinct);

    auto h42 = rational_spectrum_check(hamming_graph(4, 2));
    CHECK(h42.splits);
    CHECK(h42.applicable);
    REQUIRE(h42.eigenvalues.size() == 5);
    CHECK(h42.eigenvalues[1].value == make_rational(-1, 2));
    CHECK(h42.eigenvalues[3].value == make_rational(1, 2));
    CHECK(h42.distinct_count == 5);
    CHECK(h42.diameter == 4);
    CHECK(h42.values_allowed == true);
    CHECK(h42.count_bounded == true);
    CHECK(h42.diameter_bounded == true);

    // periodic but with irrational eigenvalues: the checks do not apply
    auto c5 = rational_spectrum_check(cycle_graph(5));
    CHECK_FALSE(c5.splits);
    CHECK(c5.periodic);
    CHECK_FALSE(c5.applicable);
    CHECK_FALSE(c5.values_allowed.has_value());
    CHECK_FALSE(c5.count_bounded.has_value());
    CHECK_FALSE(c5.diameter_bounded.has_value());
    CHECK(c5.distinct_count == 3);
    CHECK(c5.diameter == 2);
    CHECK(c5.diameter_below_distinct);

    // rational spectrum but not periodic: also out of scope
    auto pet = rational_spectrum_check(petersen_graph());
    CHECK(pet.splits);
    CHECK_FALSE(pet.periodic);
    CHECK_FALSE(pet.applicable);
    REQUIRE(pet.eigenvalues.size() == 3);
    CHECK(pet.eigenvalues[0].value == make_rational(-2, 3));
    CHECK(pet.eigenvalues[1].value == make_rational(1, 3));
    CHECK(pet.eigenvalues[2].value == make_rational(1));
    CHECK(pet.diameter_below_distinct);
}

TEST_CASE("diameter stays below the distinct eigenvalue count") {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 5; ++n)
        corpus.push_back(complete_graph(n));
    for (int n = 3; n <= 8; ++n)
        corpus.push_back(cycle_graph(n));
    corpus.push_back(hamming_graph(2, 3));
    corpus.push_back(hamming_graph(3, 2));
    corpus.push_back(johnson_graph(5, 2));
    corpus.push_back(Graph::from_edge_list(
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
    for (const Graph& g : corpus) {
        auto rep = rational_spectrum_check(g);
        CHECK(rep.diameter < rep.distinct_count);
        CHECK(rep.diameter_below_distinct);
    }
}

TEST_CASE("coefficient filter on whole transition spectra") {
    auto c5 = general_coefficient_filter(cycle_graph(5));
    CHECK(c5.pass);
    CHECK_FALSE(c5.failing_j.has_value());
    // the scaled coefficients 2^j rho_{n-j} are 1, 0, -5, 0, 5, -2
    CHECK(c5.charpoly ==
          std::vector<Rational>{make_rational(-1, 16), make_rational(5, 16), Rational(0),
                                make_rational(-5, 4), Rational(0), Rational(1)});

    CHECK(general_coefficient_filter(complete_multipartite_graph({2, 2})).pass);
    CHECK(general_coefficient_filter(complete_graph(2)).pass);

    auto pet = general_coefficient_filter(petersen_graph());
    CHECK_FALSE(pet.pass);
    CHECK(pet.failing_j == 2);

    // second elementary symmetric function of {1, -1/3, -1/3, -1/3} is -2/3
    auto k4 = general_coefficient_filter(complete_graph(4));
    CHECK_FALSE(k4.pass);
    CHECK(k4.failing_j == 2);
}
