#include "excol/report.hpp"

#include <sstream>

namespace excol::report {

namespace {

std::string set_text(const std::vector<Rational>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
    return out + "}";
}

Json rationals(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.fraction());
    return out;
}

std::string fraction(const Integer& v) { return Rational(v).fraction(); }

std::string fullness_text(const height::PseudoheightResult& ph, int n) {
    return height::fullness_name(height::fullness_obstruction(ph, n));
}

std::string exceptionality_name(collection::Exceptionality e) {
    switch (e) {
        case collection::Exceptionality::Exceptional: return "Exceptional";
        case collection::Exceptionality::NotExceptional: return "NotExceptional";
        case collection::Exceptionality::Undecidable: return "Undecidable";
    }
    return "?";
}

}  // namespace

Json to_json(const seq::DegreeSequence& s) { return s.entries(); }

Json to_json(const seq::SequenceClassification& cls) {
    Json out{{"type", seq::type_name(cls)}};
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, seq::Arithmetic> || std::is_same_v<T, seq::Type2>) {
                out["base"] = c.base;
                out["d"] = c.d;
            } else if constexpr (std::is_same_v<T, seq::Type1>) {
                out["base"] = c.base;
                out["d"] = c.d;
                out["k"] = c.k;
            } else if constexpr (std::is_same_v<T, seq::Type3>) {
                out["base"] = c.base;
                out["d"] = c.d;
                Json swaps = Json::array();
                for (const auto& s : c.swaps) swaps.push_back({s.first, s.second});
                out["swaps"] = swaps;
            } else if constexpr (std::is_same_v<T, seq::PairOfPairs>) {
                out["a"] = c.a;
                out["b"] = c.b;
                out["d"] = c.d;
                out["permutation"] = c.permutation;
            } else {
                out["mu"] = c.mu;
            }
        },
        cls);
    return out;
}

Json to_json(const hilbert::FanoSolution& s) {
    Json out{{"d", fraction(s.d)},
             {"degH", fraction(s.degH)},
             {"lambda", fraction(s.lambda)},
             {"N", s.N.fraction()},
             {"roots", rationals(s.roots)}};
    if (s.sequence) out["sequence"] = to_json(*s.sequence);
    return out;
}

Json to_json(const hilbert::CaseOutcome& outcome) {
    if (const auto* c = std::get_if<hilbert::Contradiction>(&outcome))
        return {{"verdict", "Contradiction"}, {"reason", hilbert::reason_name(c->reason)}, {"detail", c->detail}};
    Json list = Json::array();
    for (const auto& s : std::get<hilbert::Solutions>(outcome).list) list.push_back(to_json(s));
    return {{"verdict", "Solutions"}, {"solutions", list}};
}

Json to_json(const driver::Certificate& c) {
    Json values = Json::object();
    for (const auto& [k, v] : c.values) values[k] = v;
    return {{"rule", c.rule}, {"anchor", c.anchor}, {"values", values}};
}

Json to_json(const driver::TableRow& row) {
    Json seqs = Json::array();
    for (const auto& s : row.sequences) seqs.push_back(to_json(s));
    Json elim = Json::array();
    for (const auto& c : row.eliminations) elim.push_back(to_json(c));
    return {{"index", row.index},
            {"shape", row.shape},
            {"sequences", seqs},
            {"roots", rationals(row.roots)},
            {"degH", row.degH.fraction()},
            {"lambda", row.lambda.fraction()},
            {"label", row.label},
            {"verdict", row.excluded() ? "Eliminated" : "Survives"},
            {"certificates", elim}};
}

Json to_json(const driver::ClassificationOutcome& outcome) {
    Json out{{"verdict", driver::verdict_name(outcome.verdict)}, {"n", outcome.n}, {"length", outcome.length}};
    if (!outcome.reason.empty()) {
        out["reason"] = outcome.reason;
        out["step"] = outcome.step;
    }
    Json trace = Json::array();
    for (const auto& c : outcome.trace) trace.push_back(to_json(c));
    out["certificates"] = trace;
    Json sols = Json::array();
    for (const auto& s : outcome.solutions) sols.push_back(to_json(s));
    out["solutions"] = sols;
    if (!outcome.candidates.empty()) {
        Json rows = Json::array();
        for (const auto& r : outcome.candidates) rows.push_back(to_json(r));
        out["candidates"] = rows;
    }
    if (!outcome.table.empty()) {
        Json rows = Json::array();
        for (const auto& r : outcome.table) rows.push_back(to_json(r));
        out["table"] = rows;
    }
    return out;
}

Json to_json(const collection::CollectionSkeleton& c, const collection::GramMatrix& g,
             const collection::ExceptionalityResult& verdict) {
    Json slots = Json::array();
    for (const auto& s : c.slots()) slots.push_back(collection::slot_name(s));
    Json matrix = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e ? Json(e->fraction()) : Json(nullptr));
        matrix.push_back(r);
    }
    Json out{{"model", hilbert::model_name(c.model())},
             {"slots", slots},
             {"gram", matrix},
             {"verdict", exceptionality_name(verdict.verdict)}};
    if (verdict.witness) out["witness"] = {verdict.witness->first, verdict.witness->second};
    if (verdict.value) out["value"] = verdict.value->fraction();
    return out;
}

Json to_json(const collection::CollectionSkeleton& c, const height::PseudoheightResult& ph) {
    Json slots = Json::array();
    for (const auto& s : c.slots()) slots.push_back(collection::slot_name(s));
    Json bound{{"kind", ph.value.kind() == height::HeightBound::Kind::Exact     ? "Exact"
                        : ph.value.kind() == height::HeightBound::Kind::AtLeast ? "AtLeast"
                                                                                : "Infinite"}};
    if (!ph.value.is_infinite()) bound["value"] = fraction(Integer(ph.value.value()));
    return {{"model", hilbert::model_name(c.model())},
            {"slots", slots},
            {"bound", bound},
            {"witness_chain", ph.witness_chain},
            {"verdict", fullness_text(ph, hilbert::dimension(c.model()))}};
}

std::string render(const hilbert::CaseOutcome& outcome) {
    std::ostringstream out;
    if (const auto* c = std::get_if<hilbert::Contradiction>(&outcome)) {
        out << "Contradiction(" << hilbert::reason_name(c->reason) << "): " << c->detail << "\n";
        return out.str();
    }
    const auto& list = std::get<hilbert::Solutions>(outcome).list;
    out << list.size() << " solution(s)\n";
    for (const auto& s : list)
        out << "  d=" << s.d << "  degH=" << s.degH << "  lambda=" << s.lambda << "  N=" << s.N
            << "  roots=" << set_text(s.roots) << "\n";
    return out.str();
}

std::string render(const std::vector<driver::TableRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "(" << row.index << ") " << row.shape << "\n"
            << "    roots " << set_text(row.roots) << "  lambda " << row.lambda << "  degH " << row.degH << "  "
            << row.label << (row.excluded() ? "  [eliminated]" : "") << "\n";
        for (const auto& c : row.eliminations) {
            out << "    " << c.rule << ":";
            for (const auto& [k, v] : c.values) out << " " << k << "=" << v;
            out << "\n";
        }
    }
    return out.str();
}

std::string render(const driver::ClassificationOutcome& outcome) {
    std::ostringstream out;
    out << "verdict: " << driver::verdict_name(outcome.verdict) << " (n=" << outcome.n
        << ", length=" << outcome.length << ")\n";
    if (!outcome.reason.empty()) out << "reason: " << outcome.reason << " -- " << outcome.step << "\n";
    out << "trace:\n";
    for (std::size_t i = 0; i < outcome.trace.size(); ++i) {
        const auto& c = outcome.trace[i];
        out << "  " << i + 1 << ". " << c.rule << " [" << c.anchor << "]\n";
        for (const auto& [k, v] : c.values) out << "       " << k << " = " << v << "\n";
    }
    if (!outcome.candidates.empty()) out << "candidate cases:\n" << render(outcome.candidates);
    if (!outcome.table.empty()) out << "case table:\n" << render(outcome.table);
    return out.str();
}

std::string render(const collection::CollectionSkeleton& c, const collection::GramMatrix& g,
                   const collection::ExceptionalityResult& verdict) {
    std::ostringstream out;
    out << "model " << hilbert::model_name(c.model()) << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << "  " << collection::slot_name(c.slots()[i]) << "\t";
        for (const auto& e : g.entries[i]) out << " " << (e ? e->str() : "?");
        out << "\n";
    }
    out << exceptionality_name(verdict.verdict);
    if (verdict.witness) out << " at (" << verdict.witness->first << "," << verdict.witness->second << ")";
    if (verdict.value) out << " value " << *verdict.value;
    out << "\n";
    return out.str();
}

std::string render(const collection::CollectionSkeleton& c, const height::PseudoheightResult& ph) {
    std::ostringstream out;
    out << "model " << hilbert::model_name(c.model()) << "\n"
        << "pseudoheight " << ph.value.str() << "\n"
        << "witness chain";
    for (auto i : ph.witness_chain) out << " " << i;
    out << "\n" << fullness_text(ph, hilbert::dimension(c.model())) << "\n";
    return out.str();
}

}  // namespace excol::report
