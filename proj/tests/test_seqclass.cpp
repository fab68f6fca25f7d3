#include "excol/seqclass.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

using namespace excol::seq;

namespace {

using Entries = std::vector<Value>;

std::size_t naive_mu(const Entries& a) {
    std::set<Value> d;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) d.insert(a[j] - a[i]);
    return d.size();
}

// Visits every sequence (0, a_2, ..., a_n) of distinct entries in [lo, hi].
template <class F>
void for_each_sequence(std::size_t n, Value lo, Value hi, F&& f) {
    Entries a{0};
    std::vector<bool> used(static_cast<std::size_t>(hi - lo + 1), false);
    used[static_cast<std::size_t>(-lo)] = true;
    auto rec = [&](auto&& self) -> void {
        if (a.size() == n) {
            f(a);
            return;
        }
        for (Value v = lo; v <= hi; ++v) {
            auto idx = static_cast<std::size_t>(v - lo);
            if (used[idx]) continue;
            used[idx] = true;
            a.push_back(v);
            self(self);
            a.pop_back();
            used[idx] = false;
        }
    };
    rec(rec);
}

void collect_swap_sets(int n, int from, std::vector<std::pair<int, int>>& cur,
                       std::vector<std::vector<std::pair<int, int>>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int i = from; i + 1 < n; ++i) {
        cur.emplace_back(i, i + 1);
        collect_swap_sets(n, i + 2, cur, out);
        cur.pop_back();
    }
}

// Every template shape with a_1 = 0 and entries in [lo, hi], written out
// independently of the library, keyed by the type it should classify as.
std::map<Entries, std::string> template_sequences(std::size_t n, Value lo, Value hi) {
    std::map<Entries, std::string> out;
    auto add = [&](Entries t, const std::string& type) {
        Value shift = t[0];
        for (auto& x : t) x -= shift;
        for (auto x : t)
            if (x < lo || x > hi) return;
        out.emplace(t, type);
    };
    const Value span = hi - lo;
    for (Value d = -span; d <= span; ++d) {
        if (d == 0) continue;
        for (std::size_t k = 1; k < n; ++k) {
            Entries t;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != k) t.push_back(static_cast<Value>(i) * d);
            add(t, "Type1");
        }
        Entries t2{0};
        for (std::size_t i = 2; i < n; ++i) t2.push_back(static_cast<Value>(i) * d);
        t2.push_back(static_cast<Value>(n + 1) * d);
        add(t2, "Type2");

        std::vector<std::vector<std::pair<int, int>>> sets;
        std::vector<std::pair<int, int>> cur;
        collect_swap_sets(static_cast<int>(n), 0, cur, sets);
        for (const auto& swaps : sets) {
            Entries t3;
            for (std::size_t i = 0; i < n; ++i) t3.push_back(static_cast<Value>(i) * d);
            for (auto [i, j] : swaps) std::swap(t3[static_cast<std::size_t>(i)], t3[static_cast<std::size_t>(j)]);
            add(t3, "Type3");
        }
    }
    return out;
}

void check_exhaustive(std::size_t n, Value lo, Value hi) {
    auto templates = template_sequences(n, lo, hi);
    std::size_t with_mu_n = 0, disagreements = 0, unclassified = 0, bad_reconstruction = 0, type_mismatch = 0;
    for_each_sequence(n, lo, hi, [&](const Entries& a) {
        if (naive_mu(a) != n) return;
        ++with_mu_n;
        DegreeSequence s(a);
        auto cls = classify(s);
        if (!(cls == brute_force_classify(s))) ++disagreements;
        if (std::holds_alternative<Unclassified>(cls)) {
            ++unclassified;
            return;
        }
        if (!(reconstruct(n, cls) == s)) ++bad_reconstruction;
        auto it = templates.find(a);
        if (it == templates.end() || it->second != type_name(cls)) ++type_mismatch;
    });
    CHECK(with_mu_n > 0);
    CHECK(disagreements == 0);
    CHECK(unclassified == 0);
    CHECK(bad_reconstruction == 0);
    CHECK(type_mismatch == 0);
    // Conversely every template in the window has mu = n.
    for (const auto& [t, type] : templates) CHECK(naive_mu(t) == n);
    CHECK(templates.size() == with_mu_n);
}

}  // namespace

TEST_CASE("difference set examples") {
    CHECK(difference_set(DegreeSequence({0, 1, 2, 3, 4})).values == std::set<Value>{1, 2, 3, 4});
    CHECK(difference_set(DegreeSequence({0, 2, 3, 4, 6})).values == std::set<Value>{1, 2, 3, 4, 6});
    CHECK(difference_set(DegreeSequence({1, 0, 2, 3, 4})).values == std::set<Value>{-1, 1, 2, 3, 4});
    CHECK(difference_set(DegreeSequence({1, 0, 2, 3, 4})).mu() == 5);
    CHECK_THROWS_AS(DegreeSequence({0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({}), std::invalid_argument);
}

TEST_CASE("classify examples") {
    CHECK(classify(DegreeSequence({0, 1, 2, 3, 5})) == SequenceClassification{Type1{0, 1, 4}});
    CHECK(classify(DegreeSequence({0, 2, 3, 4, 6})) == SequenceClassification{Type2{0, 1}});
    CHECK(classify(DegreeSequence({1, 0, 2, 3, 4})) == SequenceClassification{Type3{0, 1, {Swap{1, 2}}}});
    CHECK(classify(DegreeSequence({0, 1, 3, 4})) == SequenceClassification{PairOfPairs{0, 3, 1, {0, 1, 2, 3}}});
    CHECK(classify(DegreeSequence({0, -1, -2, -3, -4})) == SequenceClassification{Arithmetic{0, -1}});
    CHECK(classify(DegreeSequence({0, 3, 7, 12, 18})) == SequenceClassification{Unclassified{10}});
    CHECK(brute_force_classify(DegreeSequence({0, 1, 2, 3, 5})) == SequenceClassification{Type1{0, 1, 4}});
    CHECK(brute_force_classify(DegreeSequence({0, 3, 7, 12, 18})) == SequenceClassification{Unclassified{10}});
    CHECK_THROWS_AS(classify(DegreeSequence({0, 1})), std::invalid_argument);
}

TEST_CASE("n = 3 and n = 4 special cases") {
    CHECK(std::holds_alternative<Arithmetic>(classify(DegreeSequence({5, 3, 1}))));
    CHECK(classify(DegreeSequence({0, 1, 3})) == SequenceClassification{Unclassified{3}});
    // The two gap shapes of dimension four.
    CHECK(classify(DegreeSequence({0, 2, 3, 4})) == SequenceClassification{Type1{0, 1, 1}});
    CHECK(classify(DegreeSequence({0, 1, 2, 4})) == SequenceClassification{Type1{0, 1, 3}});
    // A progression permutation that is not a product of adjacent swaps.
    CHECK(std::holds_alternative<PairOfPairs>(classify(DegreeSequence({1, 3, 0, 2}))));
    CHECK(std::holds_alternative<Type3>(classify(DegreeSequence({1, 0, 3, 2}))));
}

TEST_CASE("n = 4: every mu = 4 sequence is classified and matches the oracle") {
    std::size_t count = 0;
    std::map<std::string, std::size_t> by_type;
    for_each_sequence(4, -12, 12, [&](const Entries& a) {
        if (naive_mu(a) != 4) return;
        ++count;
        DegreeSequence s(a);
        auto cls = classify(s);
        REQUIRE_FALSE(std::holds_alternative<Unclassified>(cls));
        CHECK(cls == brute_force_classify(s));
        CHECK(reconstruct(4, cls) == s);
        ++by_type[type_name(cls)];
    });
    CHECK(count > 0);
    CHECK(by_type.count("Type2") == 0);
    CHECK(by_type["Type1"] > 0);
    CHECK(by_type["Type3"] > 0);
    CHECK(by_type["PairOfPairs"] > 0);
}

TEST_CASE("n = 5 exhaustive over [-14, 14]") { check_exhaustive(5, -14, 14); }

TEST_CASE("n = 6 exhaustive over [-10, 10]") { check_exhaustive(6, -10, 10); }

TEST_CASE("n = 7 exhaustive over [-6, 6]") { check_exhaustive(7, -6, 6); }

TEST_CASE("progressions are classified with their own step") {
    for (std::size_t n = 3; n <= 9; ++n)
        for (Value d = -7; d <= 7; ++d) {
            if (d == 0) continue;
            for (Value base = -5; base <= 5; ++base) {
                Entries a;
                for (std::size_t i = 0; i < n; ++i) a.push_back(base + static_cast<Value>(i) * d);
                CHECK(classify(DegreeSequence(a)) == SequenceClassification{Arithmetic{base, d}});
            }
        }
}

TEST_CASE("shift invariance and reconstruction on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Value> entry(-20, 20), shift(-1000, 1000);
    std::size_t classified = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        std::size_t n = 4 + static_cast<std::size_t>(trial % 4);
        std::set<Value> seen;
        Entries a;
        while (a.size() < n) {
            Value v = entry(rng);
            if (seen.insert(v).second) a.push_back(v);
        }
        DegreeSequence s(a);
        auto cls = classify(s);
        Value c = shift(rng);
        auto moved = classify(s.shifted(c));
        CHECK(same_shape(cls, moved));
        CHECK(type_name(cls) == type_name(moved));
        if (!std::holds_alternative<Unclassified>(cls)) {
            ++classified;
            CHECK(reconstruct(n, cls) == s);
        }
    }
    CHECK(classified > 0);
}

TEST_CASE("shift invariance on every template") {
    for (std::size_t n = 5; n <= 6; ++n)
        for (const auto& [t, type] : template_sequences(n, -8, 8)) {
            DegreeSequence s(t);
            auto cls = classify(s);
            for (Value c : {-17, -1, 1, 42}) {
                auto moved = classify(s.shifted(c));
                CHECK(same_shape(cls, moved));
                CHECK(reconstruct(n, moved) == s.shifted(c));
            }
        }
}

TEST_CASE("reconstruct rejects bad input") {
    CHECK_THROWS_AS(reconstruct(5, Unclassified{3}), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(5, Type1{0, 1, 5}), std::invalid_argument);
}

TEST_CASE("describe names the parameters") {
    CHECK(describe(classify(DegreeSequence({0, 2, 3, 4, 6}))) == "Type2 { base=0, d=1 }");
    CHECK(describe(Type3{0, 1, {Swap{1, 2}}}) == "Type3 { base=0, d=1, swaps=[(1,2)] }");
}
