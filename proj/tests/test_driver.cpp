#include "excol/driver.hpp"
#include "excol/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace excol;
using namespace excol::driver;

namespace {

seq::DegreeSequence progression(int n, seq::Value a = 0, seq::Value d = 1) {
    std::vector<seq::Value> out;
    for (int i = 0; i < n; ++i) out.push_back(a + i * d);
    return seq::DegreeSequence(out);
}

std::vector<Rational> interval(int from, int to) {
    std::vector<Rational> out;
    for (int v = from; v <= to; ++v) out.emplace_back(v);
    return out;
}

// Roots sorted by absolute value, as the table lists them.
std::vector<Rational> by_magnitude(std::vector<Rational> v) {
    std::sort(v.begin(), v.end(), [](const Rational& x, const Rational& y) {
        if (x.abs() != y.abs()) return x.abs() < y.abs();
        return x < y;
    });
    return v;
}

bool has_rule(const std::vector<Certificate>& certs, const std::string& rule) {
    return std::any_of(certs.begin(), certs.end(), [&](const Certificate& c) { return c.rule == rule; });
}

std::string value_of(const Certificate& c, const std::string& key) {
    for (const auto& [k, v] : c.values)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST_CASE("rank bookkeeping examples") {
    auto four = rank_bookkeeping(4, 6);
    CHECK(four.status == RankStatus::PicardRankOne);
    REQUIRE(four.profile);
    CHECK(four.profile->ranks == std::vector<int>{1, 1, 2, 1, 1});

    CHECK(rank_bookkeeping(5, 7).status == RankStatus::OddDimension);
    CHECK_FALSE(rank_bookkeeping(5, 7).profile);

    auto three = rank_bookkeeping(3, 4);
    CHECK(three.status == RankStatus::PicardRankOne);
    CHECK(three.profile->ranks == std::vector<int>{1, 1, 1, 1});

    CHECK_THROWS_AS(rank_bookkeeping(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(rank_bookkeeping(2, 3), std::invalid_argument);
}

TEST_CASE("rank bookkeeping: profiles sum to the length, parity exactly for odd n") {
    for (int n = 3; n <= 15; ++n) {
        for (int length : {n + 1, n + 2}) {
            auto r = rank_bookkeeping(n, length);
            if (length == n + 2 && n % 2 == 1) {
                CHECK(r.status == RankStatus::OddDimension);
                continue;
            }
            CHECK(r.status == RankStatus::PicardRankOne);
            REQUIRE(r.profile);
            const auto& ranks = r.profile->ranks;
            CHECK(ranks.size() == static_cast<std::size_t>(n + 1));
            int sum = 0;
            for (int k : ranks) {
                CHECK(k >= 1);
                sum += k;
            }
            CHECK(sum == length);
            for (int i = 0; i <= n; ++i) CHECK(ranks[i] == ranks[n - i]);
        }
    }
}

TEST_CASE("length n+1 examples") {
    auto three = classify_length_n_plus_1(3, seq::DegreeSequence({0, 1, 2}));
    CHECK(three.verdict == Verdict::EitherPnOrQn);
    CHECK(three.solutions.size() == 2);
    CHECK(has_rule(three.trace, "BondalPolishchuk"));
    CHECK(has_rule(three.trace, "KobayashiOchiai"));

    CHECK(classify_length_n_plus_1(4, progression(4)).verdict == Verdict::ProjectiveSpace);
    CHECK(classify_length_n_plus_1(5, seq::DegreeSequence({0, 1, 2, 3, 5})).verdict == Verdict::ProjectiveSpace);

    auto wide = classify_length_n_plus_1(5, seq::DegreeSequence({0, 3, 7, 12, 18}));
    CHECK(wide.verdict == Verdict::Contradiction);
    CHECK(wide.reason == "CardinalityOutOfRange");

    auto type2 = classify_length_n_plus_1(5, seq::DegreeSequence({0, 2, 3, 4, 6}));
    CHECK(type2.verdict == Verdict::Contradiction);
    CHECK(type2.reason == "NonIntegerDegree");

    CHECK_THROWS_AS(classify_length_n_plus_1(4, progression(3)), std::invalid_argument);
}

TEST_CASE("length n+1: increasing progressions never contradict") {
    for (int n = 3; n <= 10; ++n)
        for (seq::Value a = -6; a <= 6; ++a) {
            auto out = classify_length_n_plus_1(n, progression(n, a));
            CHECK(out.verdict != Verdict::Contradiction);
            CHECK(out.verdict == (n % 2 == 0 ? Verdict::ProjectiveSpace : Verdict::EitherPnOrQn));
        }
}

TEST_CASE("length n+1: decreasing progressions are not Fano") {
    for (int n = 3; n <= 8; ++n) CHECK(classify_length_n_plus_1(n, progression(n, 0, -1)).verdict == Verdict::Contradiction);
}

TEST_CASE("length n+2 examples") {
    auto six = classify_length_n_plus_2(6, progression(6));
    CHECK(six.verdict == Verdict::Quadric);
    REQUIRE(six.table.size() == 5);
    CHECK_FALSE(six.table[0].excluded());
    CHECK(has_rule(six.table[1].eliminations, "K0Rank"));
    for (int i = 2; i < 5; ++i) CHECK(has_rule(six.table[i].eliminations, "PseudoheightObstruction"));

    auto four = classify_length_n_plus_2(4, seq::DegreeSequence({0, 1, 3, 4}));
    CHECK(four.verdict == Verdict::Quadric);
    REQUIRE(four.candidates.size() == 1);
    CHECK(four.candidates[0].lambda == Rational(5));
    auto survey = std::find_if(four.trace.begin(), four.trace.end(),
                               [](const Certificate& c) { return c.rule == "PairOfPairsSurvey"; });
    REQUIRE(survey != four.trace.end());
    CHECK(value_of(*survey, "survivors") == "(0,1,3,4) lambda=5");

    auto five = classify_length_n_plus_2(5, progression(5));
    CHECK(five.verdict == Verdict::Contradiction);
    CHECK(five.reason == "OddDimension");
}

TEST_CASE("length n+2: reversed pair of pairs is eliminated by pseudoheight") {
    auto out = classify_length_n_plus_2(4, seq::DegreeSequence({4, 3, 1, 0}));
    CHECK(out.verdict == Verdict::Contradiction);
    CHECK(out.reason == "PseudoheightObstruction");
}

TEST_CASE("length n+2: every even n in [4, 12] gives the quadric on progressions") {
    for (int n = 4; n <= 12; n += 2) {
        auto out = classify_length_n_plus_2(n, progression(n, 3));
        CHECK(out.verdict == Verdict::Quadric);
        for (const auto& row : out.table) {
            if (row.index == 1) {
                CHECK(row.eliminations.empty());
                continue;
            }
            REQUIRE_FALSE(row.eliminations.empty());
            const auto& c = row.eliminations.front();
            if (c.rule == "K0Rank") {
                CHECK(value_of(c, "compatible") == "false");
                CHECK(value_of(c, "rk_K0") == std::to_string(n + 1));
            } else {
                CHECK(c.rule == "PseudoheightObstruction");
                CHECK(value_of(c, "lower_bound") == "AtLeast(-3)");
            }
        }
    }
}

TEST_CASE("length n+2: decreasing progressions are eliminated") {
    for (int n = 4; n <= 10; n += 2) {
        auto out = classify_length_n_plus_2(n, progression(n, 0, -1));
        CHECK(out.verdict == Verdict::Contradiction);
        CHECK(out.reason == "PseudoheightObstruction");
    }
}

TEST_CASE("case table rows") {
    for (int n : {6, 8, 10, 12}) {
        auto rows = case_table(n);
        REQUIRE(rows.size() == 5);
        CHECK(rows[0].roots == by_magnitude(interval(-(n - 1), -1)));
        CHECK(rows[1].roots == by_magnitude(interval(-n, -1)));
        CHECK(rows[2].roots == interval(1, n - 1));
        CHECK(rows[3].roots == interval(1, n));
        CHECK(rows[4].roots == interval(1, n));
        std::vector<Rational> lambdas;
        for (const auto& r : rows) lambdas.push_back(r.lambda);
        CHECK(lambdas == std::vector<Rational>{n, n + 1, -n, -n - 1, -n - 1});
        CHECK(rows[0].label == "Q^n");
        CHECK(rows[1].label == "P^n");
        for (int i = 2; i < 5; ++i) CHECK(rows[i].label == "general type");
        for (int i = 0; i < 5; ++i) CHECK(rows[i].index == i + 1);
        CHECK(rows[4].sequences.size() == static_cast<std::size_t>(n - 1));
    }
    auto six = case_table(6);
    CHECK(six[1].roots == by_magnitude(interval(-6, -1)));
    CHECK(six[3].label == "general type");
    CHECK_THROWS_AS(case_table(7), std::invalid_argument);
    CHECK_THROWS_AS(case_table(4), std::invalid_argument);
}

TEST_CASE("case table is derived from the solvers") {
    const int n = 6;
    auto progression = hilbert::solve_arithmetic_case(n, hilbert::IndexBranch::AllowAntiFano);
    auto gap = hilbert::solve_type_case(n, seq::Type1{0, -1, 1}, hilbert::IndexBranch::AllowAntiFano);
    auto full = assemble_table(n, progression, gap);
    CHECK(full.size() == 5);

    // Drop each progression solution in turn: the table loses exactly that row.
    const auto& list = std::get<hilbert::Solutions>(progression).list;
    for (std::size_t skip = 0; skip < list.size(); ++skip) {
        hilbert::Solutions fewer;
        for (std::size_t i = 0; i < list.size(); ++i)
            if (i != skip) fewer.list.push_back(list[i]);
        auto rows = assemble_table(n, fewer, gap);
        CHECK(rows.size() == 4);
        bool found = std::any_of(rows.begin(), rows.end(), [&](const TableRow& r) {
            return r.lambda == Rational(list[skip].lambda) && r.shape == full[0].shape;
        });
        CHECK_FALSE(found);
    }
    // Drop the gap branch.
    auto no_gap = assemble_table(n, progression, hilbert::Solutions{});
    CHECK(no_gap.size() == 4);
    // Perturb a solution: the table follows.
    auto altered = std::get<hilbert::Solutions>(progression);
    altered.list[0].lambda += 100;
    auto rows = assemble_table(n, altered, gap);
    bool moved = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.lambda > Rational(100); });
    CHECK(moved);
}

TEST_CASE("placement sweep") {
    hilbert::Hypothetical model{6, 1, -7, std::nullopt};
    auto sweep = sweep_placements(6, model, {progression(6, 0, -1)});
    CHECK(sweep.placements == 28);
    CHECK(sweep.all_not_full);
    CHECK(sweep.weakest == height::HeightBound::at_least(-3));
}

TEST_CASE("structured output uses p/q rationals") {
    auto out = classify_length_n_plus_2(6, progression(6));
    auto doc = report::to_json(out);
    CHECK(doc["verdict"] == "Quadric");
    REQUIRE(doc["table"].size() == 5);
    CHECK(doc["table"][1]["lambda"] == "7/1");
    CHECK(doc["table"][0]["roots"][0] == "-1/1");
    CHECK(doc["certificates"][0]["rule"] == "RankBookkeeping");
    for (const auto& c : doc["certificates"]) {
        CHECK(c.contains("anchor"));
        CHECK(c.contains("values"));
    }
    auto three = report::to_json(classify_length_n_plus_1(3, seq::DegreeSequence({0, 1, 2})));
    REQUIRE(three["solutions"].size() == 2);
    CHECK(three["solutions"][1]["N"] == "3/2");
}
