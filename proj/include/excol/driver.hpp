#pragma once

// End-to-end classification of varieties carrying a full exceptional
// collection of coherent sheaves of length n+1 or n+2 that contains n line
// bundles. Every step is recorded as a Certificate so the output reads as an
// auditable deduction trace. Results from outside this library (index bounds,
// Fano criteria, Chow-group facts) enter as named rules.

#include "excol/collection.hpp"
#include "excol/hilbert.hpp"
#include "excol/pseudoheight.hpp"
#include "excol/seqclass.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace excol::driver {

struct Certificate {
    std::string rule;
    std::string anchor;  // the argument this step carries out
    std::vector<std::pair<std::string, std::string>> values;  // exact values, rationals as strings
};

struct ChowRankProfile {
    int n;
    int length;
    std::vector<int> ranks;  // rk CH^i_Q(X), i = 0..n
};

enum class RankStatus { PicardRankOne, OddDimension };

struct RankDeduction {
    RankStatus status;
    std::optional<ChowRankProfile> profile;
    std::vector<std::string> derivation;
    Certificate certificate;
};

/// K_0 rank bookkeeping for a full exceptional collection of the given length.
/// Throws std::invalid_argument unless n >= 3 and length is n+1 or n+2.
RankDeduction rank_bookkeeping(int n, int length);

/// One line of the case table: a sequence shape, the roots of P it forces, the
/// index, and what eliminated it. degH and lambda are Rational because a
/// candidate may be numerically impossible.
struct TableRow {
    int index = 0;  // 1..5 for the rows of the standard table, 0 otherwise
    std::string shape;
    std::vector<seq::DegreeSequence> sequences;  // representatives (a_1 = 0); several for the gap row
    std::vector<Rational> roots;                 // distinct roots of P
    Rational degH;
    Rational lambda;
    std::string label;
    std::vector<Certificate> eliminations;

    /// Eliminated by a rule that rules out this numerics on any variety
    /// (integrality, Serre closure, pseudoheight). The K_0 rank rule only
    /// identifies which of P^n / Q^n the row describes, so it does not count.
    bool excluded() const;
};

/// Rows assembled from solver outputs; exposed so tests can perturb the inputs.
std::vector<TableRow> assemble_table(int n, const hilbert::CaseOutcome& progression,
                                     const hilbert::CaseOutcome& decreasing_gap);

/// The five cases for length n+2 and even n >= 6, regenerated from the solvers
/// and annotated with their eliminations. Throws std::invalid_argument otherwise.
std::vector<TableRow> case_table(int n);

enum class Verdict { ProjectiveSpace, Quadric, EitherPnOrQn, Contradiction, Undetermined };

std::string verdict_name(Verdict v);

struct ClassificationOutcome {
    Verdict verdict = Verdict::Undetermined;
    int n = 0;
    int length = 0;
    std::string reason;  // Contradiction / Undetermined only
    std::string step;    // the deduction step that produced the reason
    std::vector<Certificate> trace;
    std::vector<hilbert::FanoSolution> solutions;
    std::vector<TableRow> candidates;  // length n+2: rows for the given sequence
    std::vector<TableRow> table;       // length n+2, even n >= 6: the full case table
};

/// Throws std::invalid_argument unless |seq| = n and n >= 3.
ClassificationOutcome classify_length_n_plus_1(int n, const seq::DegreeSequence& seq);
ClassificationOutcome classify_length_n_plus_2(int n, const seq::DegreeSequence& seq);

/// Lower bound on the pseudoheight over every placement of `opaque` unknown
/// sheaves among the line bundles, on a Hypothetical model.
struct PlacementSweep {
    height::HeightBound weakest = height::HeightBound::infinite();
    std::vector<std::size_t> weakest_placement;  // slot positions of the opaque sheaves
    seq::DegreeSequence weakest_sequence{std::vector<seq::Value>{0}};
    bool all_not_full = true;
    std::size_t placements = 0;
};

PlacementSweep sweep_placements(int n, const hilbert::Hypothetical& model,
                                const std::vector<seq::DegreeSequence>& sequences, std::size_t opaque = 2);

/// n = 4, length 6: every permuted pair of pairs (0, d, b, b+d) with
/// b + d <= 24 (deg(H^4) >= 1 bounds the root product by 4!), pushed through
/// the numeric solver, the Serre closure and the pseudoheight sweep.
struct PairOfPairsSurvey {
    std::size_t examined = 0;
    std::map<std::string, std::size_t> eliminated_by;  // first rule that fired
    std::vector<TableRow> survivors;
};

PairOfPairsSurvey pair_of_pairs_survey();

}  // namespace excol::driver
