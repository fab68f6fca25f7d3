#pragma once

#include "excol/hilbert.hpp"
#include "excol/rational.hpp"
#include "excol/seqclass.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace excol::collection {

struct LineBundle {
    seq::Value degree;
    friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

/// An object of the collection about which nothing is known beyond being a
/// coherent sheaf.
struct OpaqueSheaf {
    std::string label;
    friend bool operator==(const OpaqueSheaf&, const OpaqueSheaf&) = default;
};

using CollectionSlot = std::variant<LineBundle, OpaqueSheaf>;

/// Slots in exceptional-collection order on a fixed variety model.
class CollectionSkeleton {
public:
    /// Throws std::invalid_argument for an empty slot list or repeated labels.
    CollectionSkeleton(std::vector<CollectionSlot> slots, hilbert::VarietyModel model);

    /// Line bundles O(a) for each degree, in order.
    static CollectionSkeleton line_bundles(const std::vector<seq::Value>& degrees, hilbert::VarietyModel model);

    /// Parses "0,-1,-2,?,?": integers are line bundle degrees, '?' an opaque sheaf.
    static CollectionSkeleton parse(const std::string& slots, hilbert::VarietyModel model);

    const std::vector<CollectionSlot>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }
    const hilbert::VarietyModel& model() const { return model_; }

private:
    std::vector<CollectionSlot> slots_;
    hilbert::VarietyModel model_;
};

std::string slot_name(const CollectionSlot& slot);

/// entries[i][j] = chi(E_i, E_j); nullopt where the pairing is unknown.
struct GramMatrix {
    std::vector<std::vector<std::optional<Rational>>> entries;
    std::size_t size() const { return entries.size(); }
};

/// chi(O(a_i), O(a_j)) = P(a_j - a_i). Pairs involving an opaque sheaf, and
/// every pair on a Hypothetical model without roots, are unknown.
GramMatrix gram_matrix(const CollectionSkeleton& c);

enum class Exceptionality { Exceptional, NotExceptional, Undecidable };

/// Witness positions are 1-based: (later, earlier) = (j, i) with chi(E_j, E_i)
/// the offending pairing, or (i, i) for a diagonal entry.
struct ExceptionalityResult {
    Exceptionality verdict;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::optional<Rational> value;  // the offending pairing when known
};

/// A definite violation wins over unknown entries; unknown required entries
/// without a violation give Undecidable.
ExceptionalityResult is_numerically_exceptional(const GramMatrix& g);

/// {a_i - a_j : i < j} by position.
std::set<seq::Value> roots_from_sequence(const seq::DegreeSequence& seq);

struct SerreClosure {
    std::set<Rational> closure;
    bool consistent;  // |closure| <= capacity
};

/// roots together with {-r - lambda}: vanishing of chi(L_j, L_i) transfers to
/// chi(L_i, L_j (x) K_X) by Serre duality.
SerreClosure serre_closure(const std::set<Rational>& roots, const Integer& lambda, std::size_t capacity);

}  // namespace excol::collection
