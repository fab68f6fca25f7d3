#include "excol/driver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace excol::driver {

using hilbert::CaseOutcome;
using hilbert::FanoSolution;
using hilbert::IndexBranch;
using hilbert::Solutions;

namespace {

std::string str(long v) { return std::to_string(v); }

std::string join_sequence(const seq::DegreeSequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
    return out + "}";
}

// Index-to-variety rule for a Fano of Picard rank one with n line bundles in
// a numerically exceptional collection: lambda = n+1 gives P^n, lambda = n Q^n.
std::string label_for(int n, const Rational& lambda) {
    if (lambda == Rational(n + 1)) return "P^n";
    if (lambda == Rational(n)) return "Q^n";
    if (lambda.sign() < 0) return "general type";
    if (lambda.is_zero()) return "trivial canonical class";
    return "Fano of index " + lambda.str();
}

int k0_rank_projective(int n) { return n + 1; }
int k0_rank_quadric(int n) { return n % 2 == 0 ? n + 2 : n + 1; }

Certificate k0_certificate(int length, const std::string& variety, int rank) {
    return {"K0Rank", "rank of K_0 equals the collection length",
            {{"variety", variety}, {"rk_K0", str(rank)}, {"collection_length", str(length)},
             {"compatible", rank == length ? "true" : "false"}}};
}

Certificate classification_certificate(const seq::DegreeSequence& s, const seq::SequenceClassification& cls) {
    return {"SequenceClassification", "difference-set cardinality of the degree sequence",
            {{"sequence", join_sequence(s)}, {"mu", str(static_cast<long>(seq::difference_set(s).mu()))},
             {"type", seq::describe(cls)}}};
}

Certificate solution_certificate(int n, const FanoSolution& s) {
    return {"RiemannRoch", "leading, subleading and constant coefficients of chi(O(aH))",
            {{"d", s.d.get_str()},
             {"degH", s.degH.get_str()},
             {"lambda", s.lambda.get_str()},
             {"N", s.N.fraction()},
             {"roots", join_rationals(s.roots)},
             {"leading_equation", hilbert::satisfies_leading_equation(n, s) ? "holds" : "fails"},
             {"subleading_equation", hilbert::satisfies_subleading_equation(n, s) ? "holds" : "fails"}}};
}

std::vector<Rational> distinct_roots(int n, const Rational& degH, const std::vector<Rational>& roots) {
    auto poly = poly_from_roots(degH / Rational(factorial(static_cast<unsigned long>(n))), roots);
    auto found = rational_roots(poly);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::sort(found.begin(), found.end(), [](const Rational& x, const Rational& y) {
        if (x.abs() != y.abs()) return x.abs() < y.abs();
        return x < y;
    });
    return found;
}

std::string progression_shape(const Integer& d) {
    if (d == 1) return "(a1, a1+1, ..., a1+(n-1))";
    if (d == -1) return "(a1, a1-1, ..., a1-(n-1))";
    return "(a1, a1+" + d.get_str() + ", ..., a1+(n-1)*" + d.get_str() + ")";
}

std::string gap_shape(const Integer& d) {
    if (d == 1) return "(a1, ..., ^(a1+k), ..., a1+n)";
    if (d == -1) return "(a1, ..., ^(a1-k), ..., a1-n)";
    return "(a1, ..., ^(a1+k*" + d.get_str() + "), ..., a1+n*" + d.get_str() + ")";
}

seq::DegreeSequence progression_sequence(int n, const Integer& d) {
    return seq::reconstruct(static_cast<std::size_t>(n), seq::Arithmetic{0, d.get_si()});
}

TableRow row_from_solution(int n, const FanoSolution& s, std::string shape, std::vector<seq::DegreeSequence> seqs) {
    TableRow row;
    row.shape = std::move(shape);
    row.sequences = std::move(seqs);
    row.degH = Rational(s.degH);
    row.lambda = Rational(s.lambda);
    row.roots = distinct_roots(n, row.degH, s.roots);
    row.label = label_for(n, row.lambda);
    return row;
}

// Filters that rule out numerics on any variety, plus the K_0 identification
// for length n+2.
void annotate(TableRow& row, int n, int length) {
    if (!row.lambda.is_integer() || !row.degH.is_integer() || row.degH.sign() <= 0) return;
    const Integer lambda = row.lambda.to_integer();

    for (const auto& s : row.sequences) {
        std::set<Rational> roots;
        for (auto r : collection::roots_from_sequence(s)) roots.insert(Rational(Integer(r)));
        auto closure = collection::serre_closure(roots, lambda, static_cast<std::size_t>(n));
        if (!closure.consistent) {
            std::vector<Rational> closed(closure.closure.begin(), closure.closure.end());
            row.eliminations.push_back({"SerreClosure", "a_j - a_i - lambda is a root whenever a_j - a_i is",
                                        {{"sequence", join_sequence(s)},
                                         {"lambda", lambda.get_str()},
                                         {"closure", join_rationals(closed)},
                                         {"closure_size", str(static_cast<long>(closed.size()))},
                                         {"capacity", str(n)}}});
            break;
        }
    }

    if (lambda < 0) {
        hilbert::Hypothetical model{n, row.degH.to_integer(), lambda, std::nullopt};
        auto sweep = sweep_placements(n, model, row.sequences);
        if (sweep.all_not_full) {
            std::string placement;
            for (auto p : sweep.weakest_placement) placement += (placement.empty() ? "" : ",") + std::to_string(p);
            row.eliminations.push_back({"PseudoheightObstruction",
                                        "anticanonical pseudoheight above -dim X forbids fullness",
                                        {{"lower_bound", sweep.weakest.str()},
                                         {"threshold", str(-n)},
                                         {"placements_checked", str(static_cast<long>(sweep.placements))},
                                         {"weakest_placement", "{" + placement + "}"},
                                         {"weakest_sequence", join_sequence(sweep.weakest_sequence)}}});
        }
    }

    if (lambda > n + 1)
        row.eliminations.push_back({"IndexExceedsBound", "index of a Fano n-fold is at most n+1",
                                    {{"lambda", lambda.get_str()}, {"bound", str(n + 1)}}});
    if (lambda == n + 1) row.eliminations.push_back(k0_certificate(length, "P^n", k0_rank_projective(n)));
}

void require_sequence(int n, const seq::DegreeSequence& s) {
    if (n < 3) throw std::invalid_argument("dimension must be at least 3");
    if (s.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("expected " + std::to_string(n) + " line bundle degrees, got " +
                                    std::to_string(s.size()));
}

}  // namespace

bool TableRow::excluded() const {
    return std::any_of(eliminations.begin(), eliminations.end(), [](const Certificate& c) { return c.rule != "K0Rank"; });
}

RankDeduction rank_bookkeeping(int n, int length) {
    if (n < 3) throw std::invalid_argument("rank bookkeeping needs n >= 3");
    if (length != n + 1 && length != n + 2) throw std::invalid_argument("collection length must be n+1 or n+2");

    RankDeduction out;
    out.derivation.push_back("rk K_0(X) = " + str(length) + " = sum of rk CH^i_Q(X) over i = 0.." + str(n) +
                             ", each rank at least 1");
    out.certificate = {"RankBookkeeping", "rk K_0(X) = sum of rk CH^i_Q(X)",
                       {{"n", str(n)}, {"length", str(length)}}};
    if (length == n + 1) {
        out.status = RankStatus::PicardRankOne;
        out.profile = ChowRankProfile{n, length, std::vector<int>(static_cast<std::size_t>(n + 1), 1)};
        out.derivation.push_back("n+1 slots for n+1 groups: every rank is 1, so Pic(X) has rank 1");
    } else {
        out.derivation.push_back("cycle class maps are isomorphisms, so CH^i_Q and CH^(n-i)_Q are dual");
        out.derivation.push_back("rk CH^i = rk CH^(n-i) = 1 for i != n-i; the extra rank must sit at i = n/2");
        if (n % 2 != 0) {
            out.status = RankStatus::OddDimension;
            out.derivation.push_back("n = " + str(n) + " is odd: no middle degree, contradiction");
        } else {
            out.status = RankStatus::PicardRankOne;
            std::vector<int> ranks(static_cast<std::size_t>(n + 1), 1);
            ranks[static_cast<std::size_t>(n / 2)] = 2;
            out.profile = ChowRankProfile{n, length, ranks};
            out.derivation.push_back("rk CH^" + str(n / 2) + " = 2, all other ranks 1; Pic(X) has rank 1");
        }
    }
    out.certificate.values.emplace_back("status", out.status == RankStatus::PicardRankOne ? "PicardRankOne"
                                                                                         : "OddDimension");
    if (out.profile) {
        std::string ranks;
        for (auto r : out.profile->ranks) ranks += (ranks.empty() ? "" : ",") + str(r);
        out.certificate.values.emplace_back("ranks", "(" + ranks + ")");
    }
    return out;
}

PlacementSweep sweep_placements(int n, const hilbert::Hypothetical& model,
                                const std::vector<seq::DegreeSequence>& sequences, std::size_t opaque) {
    PlacementSweep sweep;
    for (const auto& s : sequences) {
        const std::size_t slots = s.size() + opaque;
        std::vector<bool> is_opaque(slots, false);
        std::fill(is_opaque.end() - static_cast<long>(opaque), is_opaque.end(), true);
        do {
            std::vector<collection::CollectionSlot> layout;
            std::vector<std::size_t> placement;
            std::size_t next = 0;
            for (std::size_t i = 0; i < slots; ++i) {
                if (is_opaque[i]) {
                    placement.push_back(i);
                    layout.emplace_back(collection::OpaqueSheaf{"S" + std::to_string(placement.size())});
                } else {
                    layout.emplace_back(collection::LineBundle{s[next++]});
                }
            }
            collection::CollectionSkeleton skeleton(std::move(layout), model);
            auto ph = height::pseudoheight_ac(skeleton);
            ++sweep.placements;
            if (height::fullness_obstruction(ph, n) != height::Fullness::NotFull) sweep.all_not_full = false;
            bool weaker = sweep.weakest.is_infinite() ||
                          (!ph.value.is_infinite() && ph.value.value() < sweep.weakest.value());
            sweep.weakest = meet(sweep.weakest, ph.value);
            if (weaker) {
                sweep.weakest_placement = placement;
                sweep.weakest_sequence = s;
            }
        } while (std::next_permutation(is_opaque.begin(), is_opaque.end()));
    }
    return sweep;
}

std::vector<TableRow> assemble_table(int n, const CaseOutcome& progression, const CaseOutcome& decreasing_gap) {
    std::vector<FanoSolution> solutions;
    if (const auto* s = std::get_if<Solutions>(&progression)) solutions = s->list;
    std::sort(solutions.begin(), solutions.end(), [](const FanoSolution& x, const FanoSolution& y) {
        if (x.d != y.d) return x.d > y.d;
        return abs(x.lambda) < abs(y.lambda);
    });

    std::vector<TableRow> rows;
    for (const auto& s : solutions)
        rows.push_back(row_from_solution(n, s, progression_shape(s.d), {progression_sequence(n, s.d)}));
    if (const auto* gap = std::get_if<Solutions>(&decreasing_gap)) {
        for (const auto& s : gap->list) {
            std::vector<seq::DegreeSequence> seqs;
            for (int k = 1; k < n; ++k)
                seqs.push_back(seq::reconstruct(static_cast<std::size_t>(n), seq::Type1{0, s.d.get_si(), k}));
            rows.push_back(row_from_solution(n, s, gap_shape(s.d), std::move(seqs)));
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].index = static_cast<int>(i) + 1;
        annotate(rows[i], n, n + 2);
    }
    return rows;
}

std::vector<TableRow> case_table(int n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("the case table is defined for even n >= 6");
    auto progression = hilbert::solve_arithmetic_case(n, IndexBranch::AllowAntiFano);
    auto gap = hilbert::solve_type_case(n, seq::Type1{0, -1, 1}, IndexBranch::AllowAntiFano);
    return assemble_table(n, progression, gap);
}

PairOfPairsSurvey pair_of_pairs_survey() {
    PairOfPairsSurvey survey;
    std::set<std::vector<seq::Value>> seen;
    for (seq::Value d = 1; d < 24; ++d) {
        for (seq::Value b = d + 1; b + d <= 24; ++b) {
            std::array<int, 4> perm{0, 1, 2, 3};
            do {
                const std::array<seq::Value, 4> templ{0, d, b, b + d};
                std::vector<seq::Value> entries;
                for (int p : perm) entries.push_back(templ[static_cast<std::size_t>(p)]);
                seq::DegreeSequence s(entries);
                auto cls = seq::classify(s);
                if (!std::holds_alternative<seq::PairOfPairs>(cls) || !seen.insert(entries).second) continue;
                ++survey.examined;
                auto outcome = hilbert::solve_type_case(4, cls, IndexBranch::AllowAntiFano);
                if (const auto* c = std::get_if<hilbert::Contradiction>(&outcome)) {
                    ++survey.eliminated_by[hilbert::reason_name(c->reason)];
                    continue;
                }
                for (const auto& sol : std::get<Solutions>(outcome).list) {
                    auto row = row_from_solution(4, sol, seq::describe(cls), {s});
                    annotate(row, 4, 6);
                    if (row.excluded()) {
                        for (const auto& e : row.eliminations)
                            if (e.rule != "K0Rank") {
                                ++survey.eliminated_by[e.rule];
                                break;
                            }
                    } else {
                        survey.survivors.push_back(std::move(row));
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return survey;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ProjectiveSpace: return "ProjectiveSpace";
        case Verdict::Quadric: return "Quadric";
        case Verdict::EitherPnOrQn: return "EitherPnOrQn";
        case Verdict::Contradiction: return "Contradiction";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

ClassificationOutcome contradiction(ClassificationOutcome out, std::string reason, std::string step) {
    out.verdict = Verdict::Contradiction;
    out.reason = std::move(reason);
    out.step = std::move(step);
    return out;
}

Certificate numeric_contradiction_certificate(const hilbert::Contradiction& c) {
    return {hilbert::reason_name(c.reason), "integrality and sign of deg(H^n) and lambda", {{"detail", c.detail}}};
}

}  // namespace

ClassificationOutcome classify_length_n_plus_1(int n, const seq::DegreeSequence& s) {
    require_sequence(n, s);
    ClassificationOutcome out;
    out.n = n;
    out.length = n + 1;

    auto rank = rank_bookkeeping(n, n + 1);
    out.trace.push_back(rank.certificate);
    out.trace.push_back({"BondalPolishchuk", "a full exceptional collection of sheaves of length n+1 forces X Fano",
                         {{"fano", "assumed"}}});

    auto cls = seq::classify(s);
    out.trace.push_back(classification_certificate(s, cls));
    const std::size_t mu = seq::difference_set(s).mu();
    if (mu != static_cast<std::size_t>(n) - 1 && mu != static_cast<std::size_t>(n))
        return contradiction(std::move(out), "CardinalityOutOfRange",
                             "mu = " + str(static_cast<long>(mu)) + " but the n-1 or n differences are roots of P");

    auto outcome = hilbert::solve_sequence(s, IndexBranch::FanoOnly);
    if (const auto* c = std::get_if<hilbert::Contradiction>(&outcome)) {
        out.trace.push_back(numeric_contradiction_certificate(*c));
        return contradiction(std::move(out), hilbert::reason_name(c->reason), c->detail);
    }

    bool projective = false, quadric = false;
    for (const auto& sol : std::get<Solutions>(outcome).list) {
        out.solutions.push_back(sol);
        out.trace.push_back(solution_certificate(n, sol));
        std::string label = label_for(n, Rational(sol.lambda));
        out.trace.push_back({"KobayashiOchiai", "index n+1 gives P^n, index n gives Q^n",
                             {{"lambda", sol.lambda.get_str()}, {"variety", label}}});
        if (label == "P^n") projective = true;
        if (label == "Q^n") {
            auto cert = k0_certificate(n + 1, "Q^n", k0_rank_quadric(n));
            out.trace.push_back(cert);
            if (k0_rank_quadric(n) == n + 1) quadric = true;
        }
    }
    if (projective && quadric) {
        out.verdict = Verdict::EitherPnOrQn;
    } else if (projective) {
        out.verdict = Verdict::ProjectiveSpace;
    } else if (quadric) {
        out.verdict = Verdict::Quadric;
    } else {
        return contradiction(std::move(out), "K0Rank", "no surviving variety has K_0 of rank n+1");
    }
    return out;
}

ClassificationOutcome classify_length_n_plus_2(int n, const seq::DegreeSequence& s) {
    require_sequence(n, s);
    ClassificationOutcome out;
    out.n = n;
    out.length = n + 2;

    auto rank = rank_bookkeeping(n, n + 2);
    out.trace.push_back(rank.certificate);
    if (rank.status == RankStatus::OddDimension)
        return contradiction(std::move(out), "OddDimension", "rank n+2 needs a middle Chow group, so n is even");

    auto cls = seq::classify(s);
    out.trace.push_back(classification_certificate(s, cls));
    if (std::holds_alternative<seq::Unclassified>(cls))
        return contradiction(std::move(out), "CardinalityOutOfRange",
                             "mu = " + str(static_cast<long>(seq::difference_set(s).mu())) +
                                 " but the n-1 or n differences are roots of P");

    if (n >= 6) out.table = case_table(n);

    auto outcome = hilbert::solve_sequence(s, IndexBranch::AllowAntiFano);
    if (const auto* sols = std::get_if<Solutions>(&outcome)) {
        for (const auto& sol : sols->list) {
            out.solutions.push_back(sol);
            out.trace.push_back(solution_certificate(n, sol));
            auto shape = std::holds_alternative<seq::Arithmetic>(cls) ? progression_shape(sol.d) : seq::describe(cls);
            out.candidates.push_back(row_from_solution(n, sol, shape, {s}));
        }
    } else {
        const auto& c = std::get<hilbert::Contradiction>(outcome);
        out.trace.push_back(numeric_contradiction_certificate(c));
        if (std::holds_alternative<seq::Arithmetic>(cls))
            return contradiction(std::move(out), hilbert::reason_name(c.reason), c.detail);
        // Record the remaining filters on the numerics the shape forces.
        auto inv = hilbert::invariants_from_roots(n, hilbert::type_roots(n, cls));
        TableRow row;
        row.shape = seq::describe(cls);
        row.sequences = {s};
        row.degH = inv.degH;
        row.lambda = inv.lambda;
        row.label = label_for(n, inv.lambda);
        row.eliminations.push_back(numeric_contradiction_certificate(c));
        out.candidates.push_back(std::move(row));
    }

    for (auto& row : out.candidates) annotate(row, n, n + 2);

    if (n == 4 && std::holds_alternative<seq::PairOfPairs>(cls)) {
        auto survey = pair_of_pairs_survey();
        Certificate cert{"PairOfPairsSurvey", "every (a, a+d, b, b+d) arrangement through all filters",
                         {{"examined", str(static_cast<long>(survey.examined))}}};
        for (const auto& [rule, count] : survey.eliminated_by)
            cert.values.emplace_back("eliminated_by_" + rule, str(static_cast<long>(count)));
        std::string kept;
        for (const auto& row : survey.survivors)
            kept += (kept.empty() ? "" : ";") + join_sequence(row.sequences.front()) + " lambda=" + row.lambda.str();
        cert.values.emplace_back("survivors", kept);
        out.trace.push_back(std::move(cert));
    }

    std::vector<const TableRow*> surviving;
    std::set<std::string> rules;
    for (const auto& row : out.candidates) {
        out.trace.push_back({"CandidateCase", "numerics forced by the sequence, filtered",
                             {{"shape", row.shape},
                              {"lambda", row.lambda.fraction()},
                              {"degH", row.degH.fraction()},
                              {"excluded", row.excluded() ? "true" : "false"}}});
        for (const auto& e : row.eliminations) out.trace.push_back(e);
        if (row.excluded())
            rules.insert(row.eliminations.front().rule == "K0Rank" ? row.eliminations.back().rule
                                                                   : row.eliminations.front().rule);
        else
            surviving.push_back(&row);
    }

    if (surviving.empty()) {
        std::string reason = rules.size() == 1 ? *rules.begin() : "AllCasesEliminated";
        return contradiction(std::move(out), reason, "every case the sequence allows is eliminated");
    }
    std::string survivors;
    for (const auto* row : surviving) {
        survivors += (survivors.empty() ? "" : ",") + row->lambda.str();
        if (row->lambda.sign() <= 0) {
            out.verdict = Verdict::Undetermined;
            out.reason = "NonFanoCaseSurvives";
            out.step = "lambda = " + row->lambda.str() + " is not excluded by any filter";
            return out;
        }
    }
    out.trace.push_back({"FanoEstablished", "every surviving case has lambda > 0",
                         {{"surviving_lambdas", "{" + survivors + "}"}}});
    out.trace.push_back({"KobayashiOchiai", "a Fano with Pic = Z and n exceptional line bundles is P^n or Q^n",
                         {{"candidates", "P^n,Q^n"}}});
    out.trace.push_back(k0_certificate(n + 2, "P^n", k0_rank_projective(n)));
    out.trace.push_back(k0_certificate(n + 2, "Q^n", k0_rank_quadric(n)));
    out.verdict = Verdict::Quadric;
    return out;
}

}  // namespace excol::driver
