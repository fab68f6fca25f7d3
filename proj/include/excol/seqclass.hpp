#pragma once

// Classification of integer degree sequences (a_1, ..., a_n) by the
// cardinality mu of their ordered difference set {a_j - a_i : i < j}.
//
// For mu = n-1 the sequence is an arithmetic progression. For mu = n and
// n >= 5 it is one of three shapes (gap series, skip-then-jump series, or a
// progression with disjoint adjacent positions swapped); for n = 4 a fourth
// shape appears, a permuted pair of equal-width pairs (a, a+d, b, b+d).

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace excol::seq {

using Value = std::int64_t;

/// Ordered list of pairwise distinct integers, n >= 1.
class DegreeSequence {
public:
    /// Throws std::invalid_argument on duplicate entries or an empty list.
    explicit DegreeSequence(std::vector<Value> entries);

    const std::vector<Value>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Value operator[](std::size_t i) const { return entries_[i]; }

    DegreeSequence shifted(Value by) const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<Value> entries_;
};

struct DifferenceSet {
    std::set<Value> values;
    std::size_t mu() const { return values.size(); }
};

/// {a_j - a_i : i < j}, i and j taken as positions.
DifferenceSet difference_set(const DegreeSequence& seq);

// Each shape records the template it was matched against. `base` is the first
// entry of the unpermuted template, so every shape can be rebuilt exactly.

struct Arithmetic {
    Value base;
    Value d;
    friend bool operator==(const Arithmetic&, const Arithmetic&) = default;
};

/// (base, base+d, ..., base+n*d) with the entry base+k*d omitted, 1 <= k <= n-1.
struct Type1 {
    Value base;
    Value d;
    int k;
    friend bool operator==(const Type1&, const Type1&) = default;
};

/// (base, base+2d, base+3d, ..., base+(n-1)d, base+(n+1)d).
struct Type2 {
    Value base;
    Value d;
    friend bool operator==(const Type2&, const Type2&) = default;
};

/// 1-based positions (i, i+1) exchanged in the template.
struct Swap {
    int first;
    int second;
    friend bool operator==(const Swap&, const Swap&) = default;
};

/// (base, base+d, ..., base+(n-1)d) with the listed disjoint adjacent swaps applied.
struct Type3 {
    Value base;
    Value d;
    std::vector<Swap> swaps;
    friend bool operator==(const Type3&, const Type3&) = default;
};

/// n = 4 only: a permutation of (a, a+d, b, b+d) with d > 0 and b > a+d.
/// permutation[i] is the template index found at position i.
struct PairOfPairs {
    Value a;
    Value b;
    Value d;
    std::array<int, 4> permutation;
    friend bool operator==(const PairOfPairs&, const PairOfPairs&) = default;
};

struct Unclassified {
    std::size_t mu;
    friend bool operator==(const Unclassified&, const Unclassified&) = default;
};

using SequenceClassification = std::variant<Arithmetic, Type1, Type2, Type3, PairOfPairs, Unclassified>;

/// Structural classifier. n >= 3; for n = 3 only Arithmetic or Unclassified is
/// returned. Throws std::invalid_argument for n < 3.
SequenceClassification classify(const DegreeSequence& seq);

/// Independent oracle: enumerates every template (all d in the span window,
/// every k, every disjoint swap set, every permutation for n = 4) and tests
/// reconstruction equality. Intended for n <= 8.
SequenceClassification brute_force_classify(const DegreeSequence& seq);

/// Rebuilds the sequence a classification describes. Throws
/// std::invalid_argument for Unclassified or a shape that does not fit n.
DegreeSequence reconstruct(std::size_t n, const SequenceClassification& cls);

/// Same shape and parameters, ignoring the base point.
bool same_shape(const SequenceClassification& lhs, const SequenceClassification& rhs);

std::string type_name(const SequenceClassification& cls);
std::string describe(const SequenceClassification& cls);

}  // namespace excol::seq
