#include "excol/seqclass.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace excol::seq {

DegreeSequence::DegreeSequence(std::vector<Value> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("degree sequence is empty");
    std::vector<Value> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("degree sequence has duplicate entries");
}

DegreeSequence DegreeSequence::shifted(Value by) const {
    std::vector<Value> out = entries_;
    for (auto& x : out) x += by;
    return DegreeSequence(std::move(out));
}

DifferenceSet difference_set(const DegreeSequence& seq) {
    DifferenceSet out;
    const auto& a = seq.entries();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) out.values.insert(a[j] - a[i]);
    return out;
}

namespace {

void require_classifiable(const DegreeSequence& seq) {
    if (seq.size() < 3) throw std::invalid_argument("classification needs at least 3 entries");
}

std::vector<Value> progression(Value base, Value d, std::size_t count) {
    std::vector<Value> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = base + static_cast<Value>(i) * d;
    return out;
}

std::vector<Value> type1_template(Value base, Value d, int k, std::size_t n) {
    std::vector<Value> out;
    for (std::size_t i = 0; i <= n; ++i)
        if (static_cast<int>(i) != k) out.push_back(base + static_cast<Value>(i) * d);
    return out;
}

std::vector<Value> type2_template(Value base, Value d, std::size_t n) {
    std::vector<Value> out{base};
    for (std::size_t i = 2; i < n; ++i) out.push_back(base + static_cast<Value>(i) * d);
    out.push_back(base + static_cast<Value>(n + 1) * d);
    return out;
}

void apply_swaps(std::vector<Value>& values, const std::vector<Swap>& swaps) {
    for (const auto& s : swaps) std::swap(values.at(s.first - 1), values.at(s.second - 1));
}

// Gap type k for n = 4 covers only the two shapes listed for that dimension;
// the middle gap (k = 2) belongs to the pair-of-pairs family.
bool type1_allowed(std::size_t n, int k) { return n != 4 || k == 1 || k == 3; }

std::optional<PairOfPairs> match_pair_of_pairs(const std::vector<Value>& a) {
    std::vector<Value> v = a;
    std::sort(v.begin(), v.end());
    Value d = v[1] - v[0];
    if (v[3] - v[2] != d || v[2] <= v[1]) return std::nullopt;
    PairOfPairs out{v[0], v[2], d, {}};
    for (std::size_t i = 0; i < 4; ++i)
        out.permutation[i] = static_cast<int>(std::find(v.begin(), v.end(), a[i]) - v.begin());
    return out;
}

std::optional<SequenceClassification> match_monotone(const std::vector<Value>& a) {
    const std::size_t n = a.size();
    std::vector<Value> gaps(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) gaps[i] = a[i + 1] - a[i];
    bool increasing = std::all_of(gaps.begin(), gaps.end(), [](Value g) { return g > 0; });
    bool decreasing = std::all_of(gaps.begin(), gaps.end(), [](Value g) { return g < 0; });
    if (!increasing && !decreasing) return std::nullopt;

    Value d = *std::min_element(gaps.begin(), gaps.end(),
                                [](Value x, Value y) { return std::abs(x) < std::abs(y); });
    std::vector<std::size_t> doubled;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] == 2 * d)
            doubled.push_back(i);
        else if (gaps[i] != d)
            return std::nullopt;
    }
    if (doubled.size() == 1) {
        int k = static_cast<int>(doubled.front()) + 1;
        if (type1_allowed(n, k)) return Type1{a[0], d, k};
    }
    if (n >= 5 && doubled.size() == 2 && doubled[0] == 0 && doubled[1] == n - 2) return Type2{a[0], d};
    return std::nullopt;
}

std::optional<Type3> match_swapped(const std::vector<Value>& a) {
    const std::size_t n = a.size();
    std::vector<Value> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    Value step = sorted[1] - sorted[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (sorted[i + 1] - sorted[i] != step) return std::nullopt;

    for (auto [d, base] : {std::pair{step, sorted.front()}, std::pair{-step, sorted.back()}}) {
        std::vector<Swap> swaps;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok;) {
            auto index = [&](std::size_t pos) { return static_cast<std::size_t>((a[pos] - base) / d); };
            if (index(i) == i) {
                ++i;
            } else if (i + 1 < n && index(i) == i + 1 && index(i + 1) == i) {
                swaps.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 2});
                i += 2;
            } else {
                ok = false;
            }
        }
        if (ok && !swaps.empty()) return Type3{base, d, std::move(swaps)};
    }
    return std::nullopt;
}

}  // namespace

SequenceClassification classify(const DegreeSequence& seq) {
    require_classifiable(seq);
    const auto& a = seq.entries();
    const std::size_t n = a.size();
    const std::size_t mu = difference_set(seq).mu();

    if (mu == n - 1) {
        Value d = a[1] - a[0];
        if (a == progression(a[0], d, n)) return Arithmetic{a[0], d};
        return Unclassified{mu};
    }
    if (mu != n || n == 3) return Unclassified{mu};

    if (auto m = match_monotone(a)) return *m;
    if (auto m = match_swapped(a)) return *m;
    if (n == 4)
        if (auto m = match_pair_of_pairs(a)) return *m;
    return Unclassified{mu};
}

namespace {

std::vector<std::vector<Swap>> disjoint_swap_sets(std::size_t n) {
    std::vector<std::vector<Swap>> out;
    std::vector<Swap> current;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos + 1 >= n) {
            out.push_back(current);
            return;
        }
        self(self, pos + 1);
        current.push_back({static_cast<int>(pos) + 1, static_cast<int>(pos) + 2});
        self(self, pos + 2);
        current.pop_back();
    };
    rec(rec, 0);
    return out;
}

}  // namespace

SequenceClassification brute_force_classify(const DegreeSequence& seq) {
    require_classifiable(seq);
    const auto& a = seq.entries();
    const std::size_t n = a.size();

    std::vector<Value> diffs;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) diffs.push_back(a[j] - a[i]);
    std::sort(diffs.begin(), diffs.end());
    const auto mu = static_cast<std::size_t>(std::unique(diffs.begin(), diffs.end()) - diffs.begin());

    const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    const Value span = *hi - *lo;

    if (mu == n - 1) {
        for (Value d = -span; d <= span; ++d)
            if (d != 0 && progression(a[0], d, n) == a) return Arithmetic{a[0], d};
        return Unclassified{mu};
    }
    if (mu != n || n < 4) return Unclassified{mu};

    for (Value d = -span; d <= span; ++d) {
        if (d == 0) continue;
        for (int k = 1; k < static_cast<int>(n); ++k)
            if (type1_allowed(n, k) && type1_template(a[0], d, k, n) == a) return Type1{a[0], d, k};
    }
    if (n >= 5)
        for (Value d = -span; d <= span; ++d)
            if (d != 0 && type2_template(a[0], d, n) == a) return Type2{a[0], d};

    for (const auto& swaps : disjoint_swap_sets(n)) {
        if (swaps.empty()) continue;
        std::vector<Value> t = a;
        apply_swaps(t, swaps);  // adjacent swaps are involutions
        Value d = t[1] - t[0];
        if (d != 0 && progression(t[0], d, n) == t) return Type3{t[0], d, swaps};
    }

    if (n == 4) {
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            std::array<Value, 4> t{};
            for (std::size_t i = 0; i < 4; ++i) t[static_cast<std::size_t>(perm[i])] = a[i];
            Value d = t[1] - t[0];
            if (d > 0 && t[3] - t[2] == d && t[2] > t[0] + d) return PairOfPairs{t[0], t[2], d, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Unclassified{mu};
}

DegreeSequence reconstruct(std::size_t n, const SequenceClassification& cls) {
    struct Visitor {
        std::size_t n;
        std::vector<Value> operator()(const Arithmetic& c) const { return progression(c.base, c.d, n); }
        std::vector<Value> operator()(const Type1& c) const {
            if (c.k < 1 || c.k >= static_cast<int>(n)) throw std::invalid_argument("Type1 gap index out of range");
            return type1_template(c.base, c.d, c.k, n);
        }
        std::vector<Value> operator()(const Type2& c) const { return type2_template(c.base, c.d, n); }
        std::vector<Value> operator()(const Type3& c) const {
            auto t = progression(c.base, c.d, n);
            apply_swaps(t, c.swaps);
            return t;
        }
        std::vector<Value> operator()(const PairOfPairs& c) const {
            if (n != 4) throw std::invalid_argument("pair-of-pairs shape needs n = 4");
            std::array<Value, 4> t{c.a, c.a + c.d, c.b, c.b + c.d};
            std::vector<Value> out(4);
            for (std::size_t i = 0; i < 4; ++i) out[i] = t.at(static_cast<std::size_t>(c.permutation[i]));
            return out;
        }
        std::vector<Value> operator()(const Unclassified&) const {
            throw std::invalid_argument("cannot reconstruct an unclassified sequence");
        }
    };
    return DegreeSequence(std::visit(Visitor{n}, cls));
}

bool same_shape(const SequenceClassification& lhs, const SequenceClassification& rhs) {
    if (lhs.index() != rhs.index()) return false;
    struct Visitor {
        const SequenceClassification& other;
        bool operator()(const Arithmetic& c) const { return c.d == std::get<Arithmetic>(other).d; }
        bool operator()(const Type1& c) const {
            const auto& o = std::get<Type1>(other);
            return c.d == o.d && c.k == o.k;
        }
        bool operator()(const Type2& c) const { return c.d == std::get<Type2>(other).d; }
        bool operator()(const Type3& c) const {
            const auto& o = std::get<Type3>(other);
            return c.d == o.d && c.swaps == o.swaps;
        }
        bool operator()(const PairOfPairs& c) const {
            const auto& o = std::get<PairOfPairs>(other);
            return c.d == o.d && c.b - c.a == o.b - o.a && c.permutation == o.permutation;
        }
        bool operator()(const Unclassified& c) const { return c.mu == std::get<Unclassified>(other).mu; }
    };
    return std::visit(Visitor{rhs}, lhs);
}

std::string type_name(const SequenceClassification& cls) {
    static constexpr const char* names[] = {"Arithmetic", "Type1", "Type2", "Type3", "PairOfPairs", "Unclassified"};
    return names[cls.index()];
}

std::string describe(const SequenceClassification& cls) {
    std::ostringstream out;
    out << type_name(cls) << " {";
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Arithmetic> || std::is_same_v<T, Type2>) {
                out << " base=" << c.base << ", d=" << c.d;
            } else if constexpr (std::is_same_v<T, Type1>) {
                out << " base=" << c.base << ", d=" << c.d << ", k=" << c.k;
            } else if constexpr (std::is_same_v<T, Type3>) {
                out << " base=" << c.base << ", d=" << c.d << ", swaps=[";
                for (std::size_t i = 0; i < c.swaps.size(); ++i)
                    out << (i ? ", " : "") << "(" << c.swaps[i].first << "," << c.swaps[i].second << ")";
                out << "]";
            } else if constexpr (std::is_same_v<T, PairOfPairs>) {
                out << " a=" << c.a << ", b=" << c.b << ", d=" << c.d << ", permutation=(";
                for (std::size_t i = 0; i < 4; ++i) out << (i ? "," : "") << c.permutation[i];
                out << ")";
            } else {
                out << " mu=" << c.mu;
            }
        },
        cls);
    out << " }";
    return out.str();
}

}  // namespace excol::seq
