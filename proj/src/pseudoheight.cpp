#include "excol/pseudoheight.hpp"

#include <algorithm>
#include <stdexcept>

namespace excol::height {

HeightBound operator+(const HeightBound& lhs, const HeightBound& rhs) {
    using K = HeightBound::Kind;
    if (lhs.is_infinite() || rhs.is_infinite()) return HeightBound::infinite();
    K kind = (lhs.kind_ == K::Exact && rhs.kind_ == K::Exact) ? K::Exact : K::AtLeast;
    return {kind, lhs.value_ + rhs.value_};
}

HeightBound operator+(const HeightBound& lhs, long shift) {
    if (lhs.is_infinite()) return lhs;
    return {lhs.kind_, lhs.value_ + shift};
}

HeightBound meet(const HeightBound& lhs, const HeightBound& rhs) {
    using K = HeightBound::Kind;
    if (lhs.is_infinite()) return rhs;
    if (rhs.is_infinite()) return lhs;
    long low = std::min(lhs.value_, rhs.value_);
    // The minimum is known exactly only if an exact operand attains the lower value.
    bool exact = (lhs.kind_ == K::Exact && lhs.value_ == low) || (rhs.kind_ == K::Exact && rhs.value_ == low);
    return {exact ? K::Exact : K::AtLeast, low};
}

bool operator==(const HeightBound& lhs, const HeightBound& rhs) {
    if (lhs.kind_ != rhs.kind_) return false;
    return lhs.is_infinite() || lhs.value_ == rhs.value_;
}

std::string HeightBound::str() const {
    switch (kind_) {
        case Kind::Exact: return "Exact(" + std::to_string(value_) + ")";
        case Kind::AtLeast: return "AtLeast(" + std::to_string(value_) + ")";
        case Kind::Infinite: return "Infinite";
    }
    return "?";
}

HeightTable::HeightTable(std::size_t size)
    : forward(size, std::vector<HeightBound>(size, HeightBound::infinite())),
      closing(size, std::vector<HeightBound>(size, HeightBound::infinite())) {}

HeightBound relative_height(const collection::CollectionSkeleton& c, std::size_t i, std::size_t j, bool closing) {
    using collection::LineBundle;
    const auto* source = std::get_if<LineBundle>(&c.slots().at(i));
    const auto* target = std::get_if<LineBundle>(&c.slots().at(j));
    // Coherent sheaves have no negative Ext groups.
    if (!source || !target) return HeightBound::at_least(0);

    const int n = hilbert::dimension(c.model());
    const Integer lambda = hilbert::index(c.model());
    // Ext^k(O(s), O(t)) = H^k(O(t - s)); the closing edge twists the target by -K = lambda H.
    Integer twist = Integer(target->degree) - source->degree;
    if (closing) twist += lambda;

    if (hilbert::is_known(c.model())) {
        // P^n and Q^n: O(m) has only H^0 (m >= 0) or only H^n (m <= -lambda).
        if (twist >= 0) return HeightBound::exact(0);
        if (twist <= -lambda) return HeightBound::exact(n);
        return HeightBound::infinite();
    }
    if (twist == 0) return HeightBound::exact(0);
    // O(twist) anti-ample: Kodaira vanishing kills H^k for k < n.
    if (twist < 0) return HeightBound::at_least(n);
    return HeightBound::at_least(0);
}

HeightTable height_table(const collection::CollectionSkeleton& c) {
    HeightTable table(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i < j) table.forward[i][j] = relative_height(c, i, j, false);
            if (j <= i) table.closing[i][j] = relative_height(c, i, j, true);
        }
    return table;
}

HeightBound chain_cost(const HeightTable& table, const std::vector<std::size_t>& chain) {
    if (chain.empty()) throw std::invalid_argument("empty chain");
    HeightBound cost = HeightBound::exact(0);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) cost = cost + table.forward.at(chain[k]).at(chain[k + 1]);
    cost = cost + table.closing.at(chain.back()).at(chain.front());
    return cost + -static_cast<long>(chain.size() - 1);
}

PseudoheightResult minimize_chains(const HeightTable& table) {
    const std::size_t m = table.size();
    PseudoheightResult best;
    constexpr auto none = static_cast<std::size_t>(-1);
    for (std::size_t start = 0; start < m; ++start) {
        // partial[j]: best bound on sum over forward edges of (e - 1) for chains start -> ... -> j.
        std::vector<std::optional<HeightBound>> partial(m);
        std::vector<std::size_t> previous(m, none);
        partial[start] = HeightBound::exact(0);
        for (std::size_t j = start + 1; j < m; ++j) {
            for (std::size_t i = start; i < j; ++i) {
                if (!partial[i] || partial[i]->is_infinite()) continue;
                HeightBound candidate = *partial[i] + (table.forward[i][j] + -1);
                if (candidate.is_infinite()) continue;
                if (!partial[j]) {
                    partial[j] = candidate;
                    previous[j] = i;
                } else {
                    HeightBound merged = meet(*partial[j], candidate);
                    if (candidate.value() < partial[j]->value()) previous[j] = i;
                    partial[j] = merged;
                }
            }
        }
        for (std::size_t j = start; j < m; ++j) {
            if (!partial[j]) continue;
            HeightBound total = *partial[j] + table.closing[j][start];
            if (total.is_infinite()) continue;
            bool improves = best.value.is_infinite() || total.value() < best.value.value();
            best.value = meet(best.value, total);
            if (improves) {
                best.witness_chain.clear();
                for (std::size_t k = j; k != none; k = previous[k]) best.witness_chain.push_back(k);
                std::reverse(best.witness_chain.begin(), best.witness_chain.end());
            }
        }
    }
    return best;
}

PseudoheightResult pseudoheight_ac(const collection::CollectionSkeleton& c) { return minimize_chains(height_table(c)); }

Fullness fullness_obstruction(const PseudoheightResult& ph, int n) {
    if (ph.value.is_infinite() || ph.value.value() > -n) return Fullness::NotFull;
    return Fullness::NoObstruction;
}

std::string fullness_name(Fullness f) { return f == Fullness::NotFull ? "NotFull" : "NoObstruction"; }

}  // namespace excol::height
