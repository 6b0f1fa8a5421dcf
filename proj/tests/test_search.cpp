#include <doctest.h>

#include <grwalk/report.hpp>
#include <grwalk/search.hpp>

#include "test_util.hpp"

using namespace grwalk;

namespace {

std::vector<std::vector<long long>> periodic_params(const SearchReport& rep) {
    std::vector<std::vector<long long>> out;
    for (const auto& r : rep.rows)
        if (r.periodic)
            out.push_back(r.params);
    return out;
}

const SearchRow* find_row(const SearchReport& rep, const std::vector<long long>& params) {
    for (const auto& r : rep.rows)
        if (r.params == params)
            return &r;
    return nullptr;
}

} // namespace

TEST_CASE("hamming scan in a small window") {
    auto rep = search_hamming({1, 4}, {2, 4});
    CHECK(rep.family == "hamming");
    CHECK(rep.param_names == std::vector<std::string>{"d", "q"});
    CHECK(rep.bounds_label == "d=1..4, q=2..4");
    CHECK(rep.rows.size() == 12);
    // lexicographic parameter order
    CHECK(rep.rows[0].params == std::vector<long long>{1, 2});
    CHECK(rep.rows[1].params == std::vector<long long>{1, 3});
    CHECK(rep.rows[11].params == std::vector<long long>{4, 4});

    CHECK(rep.matches_expected);
    CHECK(periodic_params(rep) ==
          std::vector<std::vector<long long>>{{1, 2}, {1, 3}, {2, 2}, {3, 3}, {4, 2}});
    CHECK(rep.expected_periodic == periodic_params(rep));

    // small survivors get rebuilt and confirmed
    for (const auto& r : rep.rows)
        if (r.periodic)
            CHECK(r.confirmed_by_unitary);

    const SearchRow* k2 = find_row(rep, {1, 2});
    REQUIRE(k2 != nullptr);
    CHECK(k2->period == Integer(2));
    const SearchRow* k3 = find_row(rep, {1, 3});
    REQUIRE(k3 != nullptr);
    // closed-form support gives 6; the walk operator halves it
    CHECK(k3->period == Integer(3));
    REQUIRE(k3->note.has_value());
    CHECK(k3->note->find("refined") != std::string::npos);
    const SearchRow* h33 = find_row(rep, {3, 3});
    REQUIRE(h33 != nullptr);
    CHECK(h33->period == Integer(12));
    const SearchRow* h42 = find_row(rep, {4, 2});
    REQUIRE(h42 != nullptr);
    CHECK(h42->period == Integer(12));
    const SearchRow* h23 = find_row(rep, {2, 3});
    REQUIRE(h23 != nullptr);
    CHECK_FALSE(h23->periodic);
    CHECK_FALSE(h23->period.has_value());

    // expected set restricted by the window
    auto narrow = search_hamming({2, 2}, {2, 2});
    CHECK(narrow.rows.size() == 1);
    CHECK(narrow.expected_periodic == std::vector<std::vector<long long>>{{2, 2}});
    CHECK(narrow.matches_expected);

    CHECK_THROWS_AS(search_hamming({3, 2}, {2, 4}), InvalidParamsError);
    CHECK_THROWS_AS(search_hamming({0, 2}, {2, 4}), InvalidParamsError);
    CHECK_THROWS_AS(search_hamming({1, 2}, {1, 4}), InvalidParamsError);
}

TEST_CASE("survivors beyond the caps keep the closed-form verdict") {
    SearchOptions opts;
    opts.limits.max_vertices = 8; // excludes the 27-vertex survivor
    auto rep = search_hamming({3, 3}, {3, 3}, opts);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].periodic);
    CHECK_FALSE(rep.rows[0].confirmed_by_unitary);
    REQUIRE(rep.rows[0].note.has_value());
    CHECK(rep.rows[0].note->find("caps") != std::string::npos);
    CHECK(rep.rows[0].period == Integer(12));
}

TEST_CASE("johnson scan folds mirrored parameters") {
    auto rep = search_johnson({2, 6}, {1, 3});
    CHECK(rep.family == "johnson");
    // canonical points (n, min(k, n-k)); J(4,3) folds onto J(4,1)
    std::vector<std::vector<long long>> params;
    for (const auto& r : rep.rows)
        params.push_back(r.params);
    CHECK(params == std::vector<std::vector<long long>>{{2, 1},
                                                        {3, 1},
                                                        {4, 1},
                                                        {4, 2},
                                                        {5, 1},
                                                        {5, 2},
                                                        {6, 1},
                                                        {6, 2},
                                                        {6, 3}});

    CHECK(rep.matches_expected);
    CHECK(periodic_params(rep) ==
          std::vector<std::vector<long long>>{{2, 1}, {3, 1}, {4, 2}});
    for (const auto& r : rep.rows)
        if (r.periodic)
            CHECK(r.confirmed_by_unitary);

    const SearchRow* j42 = find_row(rep, {4, 2});
    REQUIRE(j42 != nullptr);
    CHECK(j42->period == Integer(12));
    // J(5,2) is the petersen graph
    const SearchRow* j52 = find_row(rep, {5, 2});
    REQUIRE(j52 != nullptr);
    CHECK_FALSE(j52->periodic);

    CHECK_THROWS_AS(search_johnson({1, 4}, {1, 2}), InvalidParamsError);
    CHECK_THROWS_AS(search_johnson({2, 4}, {0, 2}), InvalidParamsError);
    CHECK_THROWS_AS(search_johnson({4, 2}, {1, 2}), InvalidParamsError);
}

TEST_CASE("srg scan wraps the classification") {
    auto rep = search_srg(4);
    CHECK(rep.family == "srg");
    CHECK(rep.param_names == std::vector<std::string>{"n", "k", "lambda", "mu"});
    CHECK(rep.bounds_label == "k=2..4");
    CHECK(rep.rows.size() == 7);
    CHECK(rep.matches_expected);
    CHECK(periodic_params(rep) == rep.expected_periodic);

    const SearchRow* pet = find_row(rep, {10, 3, 0, 1});
    REQUIRE(pet != nullptr);
    CHECK_FALSE(pet->periodic);
    REQUIRE(pet->note.has_value()); // carries the failure witness
    const SearchRow* pent = find_row(rep, {5, 2, 0, 1});
    REQUIRE(pent != nullptr);
    CHECK(pent->periodic);
    CHECK(pent->period == Integer(10));

    CHECK_THROWS_AS(search_srg(1), InvalidParamsError);
}

TEST_CASE("worker count does not change the rendered report") {
    SearchOptions serial;
    serial.jobs = 1;
    SearchOptions parallel;
    parallel.jobs = 4;

    auto ham1 = render_json(to_json(search_hamming({1, 4}, {2, 5}, serial)));
    auto ham4 = render_json(to_json(search_hamming({1, 4}, {2, 5}, parallel)));
    CHECK(ham1 == ham4);

    auto joh1 = render_json(to_json(search_johnson({2, 7}, {1, 3}, serial)));
    auto joh4 = render_json(to_json(search_johnson({2, 7}, {1, 3}, parallel)));
    CHECK(joh1 == joh4);

    auto srg1 = render_json(to_json(search_srg(6, serial)));
    auto srg4 = render_json(to_json(search_srg(6, parallel)));
    CHECK(srg1 == srg4);
}
