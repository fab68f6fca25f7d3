#pragma once

// Euler-characteristic polynomials P(a) = chi(O_X(aH)) on varieties of Picard
// rank one, and the constraints Riemann-Roch puts on them.
//
// With deg P = n, leading coefficient deg(H^n)/n!, subleading coefficient
// deg(H^n) * lambda / (2 (n-1)!) where c_1(X) = lambda H, and P(0) = 1, a
// multiset of n roots r_1..r_n pins down both invariants:
//
//     deg(H^n) = n! / prod(-r_i)        lambda = -(2/n) * sum(r_i)
//
// The solvers below apply this to the root sets that exceptional sequences of
// line bundles force, and report exactly which integrality or sign condition
// rules each shape out.

#include "excol/polynomial.hpp"
#include "excol/rational.hpp"
#include "excol/seqclass.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace excol::hilbert {

struct Projective {
    int n;
};

struct Quadric {
    int n;
};

/// A variety of Picard rank one known only through its numerics. When the
/// factored Hilbert polynomial is supplied (roots), chi can be evaluated.
struct Hypothetical {
    int n;
    Integer degH;
    Integer lambda;
    std::optional<std::vector<Rational>> roots;
};

using VarietyModel = std::variant<Projective, Quadric, Hypothetical>;

int dimension(const VarietyModel& model);
/// lambda with c_1(X) = lambda H: n+1 for P^n, n for Q^n.
Integer index(const VarietyModel& model);
/// deg(H^n): 1 for P^n, 2 for Q^n.
Integer top_degree(const VarietyModel& model);
bool is_known(const VarietyModel& model);

/// "P3", "Q4", "H6:1:-7" (dimension:degH:lambda). Throws std::invalid_argument.
VarietyModel parse_model(const std::string& text);
std::string model_name(const VarietyModel& model);

/// {-1, ..., -n}.
std::vector<Rational> projective_roots(int n);
/// {-1, ..., -(n-1)} together with -n/2 (a double root when n is even).
std::vector<Rational> quadric_roots(int n);

/// chi(O_X(aH)) on P^n or Q^n. Throws std::invalid_argument for Hypothetical.
Rational chi_line_bundle(const VarietyModel& model, const Integer& a);

/// (degH/n!) * prod (a - r). Throws std::invalid_argument unless |roots| = n.
RationalPolynomial hilbert_poly_factored(int n, const Integer& degH, std::span<const Rational> roots);

/// The Hilbert polynomial when it is known: always for P^n and Q^n, and for a
/// Hypothetical model only when its roots are given.
std::optional<RationalPolynomial> hilbert_polynomial(const VarietyModel& model);

struct RootInvariants {
    Rational degH;
    Rational lambda;
};

/// deg(H^n) and lambda forced by P(0) = 1 and the subleading Riemann-Roch
/// coefficient, for a polynomial of degree n with the given roots.
RootInvariants invariants_from_roots(int n, std::span<const Rational> roots);

/// A solution of the two progression equations
///   (degH/n!) (n-1)! d^(n-1) N = 1        N + d n(n-1)/2 = lambda n/2
/// i.e. a polynomial with roots {-d, ..., -(n-1)d, -N}.
struct FanoSolution {
    Integer d;
    Integer degH;
    Integer lambda;
    Rational N;
    std::vector<Rational> roots;              // full multiset, ascending
    std::optional<seq::DegreeSequence> sequence;  // set when derived from a specific sequence

    friend bool operator==(const FanoSolution&, const FanoSolution&) = default;
};

bool satisfies_leading_equation(int n, const FanoSolution& s);
bool satisfies_subleading_equation(int n, const FanoSolution& s);

enum class ContradictionReason {
    NonIntegerDegree,        // deg(H^n) forced to a non-integer
    NegativeLeadingProduct,  // deg(H^n) forced negative
    NonIntegerIndex,         // lambda forced to a non-integer
    NonPositiveIndex,        // lambda <= 0 where the variety is Fano
    TrivialIndex,            // lambda = 0: neither Fano nor of general type
    IndexExceedsBound,       // lambda > n+1, impossible for a Fano of this dimension
};

std::string reason_name(ContradictionReason reason);

struct Contradiction {
    ContradictionReason reason;
    std::string detail;
};

struct Solutions {
    std::vector<FanoSolution> list;
};

using CaseOutcome = std::variant<Solutions, Contradiction>;

enum class IndexBranch {
    FanoOnly,        // keep lambda > 0
    AllowAntiFano,   // also keep lambda < 0
};

/// Solves the progression equations for (d, degH, N, lambda) with d a nonzero
/// integer, degH a positive integer and lambda an integer. Requires n >= 3.
CaseOutcome solve_arithmetic_case(int n, IndexBranch branch = IndexBranch::FanoOnly);

/// Closed-form root multiset of P for a non-progression shape, ascending.
std::vector<Rational> type_roots(int n, const seq::SequenceClassification& cls);

/// Eliminates or solves a non-progression shape. Throws std::invalid_argument
/// for Arithmetic or Unclassified input.
CaseOutcome solve_type_case(int n, const seq::SequenceClassification& cls,
                            IndexBranch branch = IndexBranch::FanoOnly);

/// Full numeric analysis of one concrete sequence: progressions are matched
/// against solve_arithmetic_case with their own d; the n = 3 non-progression
/// case is solved from its three roots; everything else goes through
/// solve_type_case. Throws std::invalid_argument for Unclassified shapes with n >= 4.
CaseOutcome solve_sequence(const seq::DegreeSequence& seq, IndexBranch branch = IndexBranch::FanoOnly);

}  // namespace excol::hilbert
