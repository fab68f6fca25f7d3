#pragma once

// Relative heights e(F, F') = min{k : Ext^k(F, F') != 0} and the
// anticanonical pseudoheight
//
//   ph(C) = min over chains a_0 < ... < a_p of
//           e(E_a0, E_a1) + ... + e(E_a(p-1), E_ap) + e(E_ap, E_a0 (x) K^-1) - p
//
// By Kuznetsov's criterion a collection with ph(C) > -dim X is not full.
// Heights of unknown objects are only bounded from below, so everything is
// computed in a small semiring of certified lower bounds.

#include "excol/collection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace excol::height {

class HeightBound {
public:
    enum class Kind { Exact, AtLeast, Infinite };

    static HeightBound exact(long k) { return {Kind::Exact, k}; }
    static HeightBound at_least(long k) { return {Kind::AtLeast, k}; }
    static HeightBound infinite() { return {Kind::Infinite, 0}; }

    Kind kind() const { return kind_; }
    /// Meaningless for Infinite.
    long value() const { return value_; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    friend HeightBound operator+(const HeightBound& lhs, const HeightBound& rhs);
    friend HeightBound operator+(const HeightBound& lhs, long shift);
    /// Certified bound on min(x, y) given bounds on x and y.
    friend HeightBound meet(const HeightBound& lhs, const HeightBound& rhs);

    friend bool operator==(const HeightBound& lhs, const HeightBound& rhs);

    std::string str() const;

private:
    HeightBound(Kind kind, long value) : kind_(kind), value_(value) {}

    Kind kind_;
    long value_;
};

/// Edge heights for the chain minimization: forward[i][j] = e(E_i, E_j) for
/// i < j, closing[j][s] = e(E_j, E_s (x) K^-1) for s <= j.
struct HeightTable {
    std::vector<std::vector<HeightBound>> forward;
    std::vector<std::vector<HeightBound>> closing;

    explicit HeightTable(std::size_t size);
    std::size_t size() const { return forward.size(); }
};

/// e(E_i, E_j), or e(E_i, E_j (x) K^-1) when closing. Exact on P^n and Q^n
/// line-bundle pairs; Kodaira-type and positivity lower bounds otherwise.
HeightBound relative_height(const collection::CollectionSkeleton& c, std::size_t i, std::size_t j, bool closing);

HeightTable height_table(const collection::CollectionSkeleton& c);

struct PseudoheightResult {
    HeightBound value = HeightBound::infinite();
    std::vector<std::size_t> witness_chain;  // 0-based slot indices, strictly increasing
};

/// Dynamic programme over the ordered slots: O(m^3) for m slots.
PseudoheightResult minimize_chains(const HeightTable& table);

PseudoheightResult pseudoheight_ac(const collection::CollectionSkeleton& c);

/// Cost of one chain under the table; used for witnesses and by oracles.
HeightBound chain_cost(const HeightTable& table, const std::vector<std::size_t>& chain);

enum class Fullness { NotFull, NoObstruction };

/// NotFull when the certified lower bound exceeds -n.
Fullness fullness_obstruction(const PseudoheightResult& ph, int n);

std::string fullness_name(Fullness f);

}  // namespace excol::height
