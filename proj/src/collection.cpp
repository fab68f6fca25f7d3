#include "excol/collection.hpp"

#include <charconv>
#include <stdexcept>

namespace excol::collection {

CollectionSkeleton::CollectionSkeleton(std::vector<CollectionSlot> slots, hilbert::VarietyModel model)
    : slots_(std::move(slots)), model_(std::move(model)) {
    if (slots_.empty()) throw std::invalid_argument("collection needs at least one slot");
    std::set<std::string> labels;
    for (const auto& s : slots_)
        if (const auto* o = std::get_if<OpaqueSheaf>(&s))
            if (!labels.insert(o->label).second) throw std::invalid_argument("repeated sheaf label '" + o->label + "'");
}

CollectionSkeleton CollectionSkeleton::line_bundles(const std::vector<seq::Value>& degrees,
                                                    hilbert::VarietyModel model) {
    std::vector<CollectionSlot> slots;
    for (auto a : degrees) slots.emplace_back(LineBundle{a});
    return CollectionSkeleton(std::move(slots), std::move(model));
}

CollectionSkeleton CollectionSkeleton::parse(const std::string& text, hilbert::VarietyModel model) {
    std::vector<CollectionSlot> slots;
    std::size_t start = 0, opaque = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item == "?") {
            slots.emplace_back(OpaqueSheaf{"S" + std::to_string(++opaque)});
        } else {
            seq::Value a = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), a);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
                throw std::invalid_argument("bad slot '" + item + "' (expected an integer or '?')");
            slots.emplace_back(LineBundle{a});
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return CollectionSkeleton(std::move(slots), std::move(model));
}

std::string slot_name(const CollectionSlot& slot) {
    if (const auto* l = std::get_if<LineBundle>(&slot)) return "O(" + std::to_string(l->degree) + ")";
    return std::get<OpaqueSheaf>(slot).label;
}

GramMatrix gram_matrix(const CollectionSkeleton& c) {
    const auto poly = hilbert::hilbert_polynomial(c.model());
    const std::size_t n = c.size();
    GramMatrix g{std::vector(n, std::vector<std::optional<Rational>>(n))};
    if (!poly) return g;
    for (std::size_t i = 0; i < n; ++i) {
        const auto* source = std::get_if<LineBundle>(&c.slots()[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const auto* target = std::get_if<LineBundle>(&c.slots()[j]);
            if (source && target) g.entries[i][j] = (*poly)(Rational(Integer(target->degree - source->degree)));
        }
    }
    return g;
}

ExceptionalityResult is_numerically_exceptional(const GramMatrix& g) {
    std::optional<std::pair<std::size_t, std::size_t>> unknown;
    auto inspect = [&](std::size_t row, std::size_t col, const Rational& expected) -> std::optional<ExceptionalityResult> {
        const auto& entry = g.entries[row][col];
        if (!entry) {
            if (!unknown) unknown = std::pair{row + 1, col + 1};
            return std::nullopt;
        }
        if (*entry != expected)
            return ExceptionalityResult{Exceptionality::NotExceptional, std::pair{row + 1, col + 1}, *entry};
        return std::nullopt;
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        if (auto bad = inspect(i, i, Rational(1))) return *bad;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (auto bad = inspect(j, i, Rational(0))) return *bad;
    if (unknown) return {Exceptionality::Undecidable, unknown, std::nullopt};
    return {Exceptionality::Exceptional, std::nullopt, std::nullopt};
}

std::set<seq::Value> roots_from_sequence(const seq::DegreeSequence& seq) {
    std::set<seq::Value> roots;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) roots.insert(seq[i] - seq[j]);
    return roots;
}

SerreClosure serre_closure(const std::set<Rational>& roots, const Integer& lambda, std::size_t capacity) {
    SerreClosure out{roots, true};
    for (const auto& r : roots) out.closure.insert(-r - Rational(lambda));
    out.consistent = out.closure.size() <= capacity;
    return out;
}

}  // namespace excol::collection
