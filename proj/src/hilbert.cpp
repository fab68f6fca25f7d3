#include "excol/hilbert.hpp"

#include "divisors.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <stdexcept>

namespace excol::hilbert {

int dimension(const VarietyModel& model) {
    return std::visit([](const auto& m) { return m.n; }, model);
}

Integer index(const VarietyModel& model) {
    struct Visitor {
        Integer operator()(const Projective& m) const { return m.n + 1; }
        Integer operator()(const Quadric& m) const { return m.n; }
        Integer operator()(const Hypothetical& m) const { return m.lambda; }
    };
    return std::visit(Visitor{}, model);
}

Integer top_degree(const VarietyModel& model) {
    struct Visitor {
        Integer operator()(const Projective&) const { return 1; }
        Integer operator()(const Quadric&) const { return 2; }
        Integer operator()(const Hypothetical& m) const { return m.degH; }
    };
    return std::visit(Visitor{}, model);
}

bool is_known(const VarietyModel& model) { return !std::holds_alternative<Hypothetical>(model); }

namespace {

long parse_long(std::string_view text, const std::string& context) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("bad integer '" + std::string(text) + "' in " + context);
    return value;
}

void require_dimension(int n) {
    if (n < 1) throw std::invalid_argument("variety dimension must be positive");
}

}  // namespace

VarietyModel parse_model(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("bad model '" + text + "'");
    std::string_view rest(text);
    char kind = rest.front();
    rest.remove_prefix(1);
    if (kind == 'P' || kind == 'Q') {
        int n = static_cast<int>(parse_long(rest, text));
        require_dimension(n);
        if (kind == 'P') return Projective{n};
        return Quadric{n};
    }
    if (kind == 'H') {
        std::vector<long> parts;
        std::size_t start = 0;
        while (true) {
            auto colon = rest.find(':', start);
            parts.push_back(parse_long(rest.substr(start, colon - start), text));
            if (colon == std::string_view::npos) break;
            start = colon + 1;
        }
        if (parts.size() != 3) throw std::invalid_argument("hypothetical model is H<n>:<degH>:<lambda>, got '" + text + "'");
        int n = static_cast<int>(parts[0]);
        require_dimension(n);
        if (parts[1] <= 0) throw std::invalid_argument("deg(H^n) must be positive");
        return Hypothetical{n, parts[1], parts[2], std::nullopt};
    }
    throw std::invalid_argument("unknown model '" + text + "' (expected P<n>, Q<n> or H<n>:<degH>:<lambda>)");
}

std::string model_name(const VarietyModel& model) {
    struct Visitor {
        std::string operator()(const Projective& m) const { return "P" + std::to_string(m.n); }
        std::string operator()(const Quadric& m) const { return "Q" + std::to_string(m.n); }
        std::string operator()(const Hypothetical& m) const {
            return "H" + std::to_string(m.n) + ":" + m.degH.get_str() + ":" + m.lambda.get_str();
        }
    };
    return std::visit(Visitor{}, model);
}

std::vector<Rational> projective_roots(int n) {
    std::vector<Rational> roots;
    for (int l = 1; l <= n; ++l) roots.emplace_back(-l);
    return roots;
}

std::vector<Rational> quadric_roots(int n) {
    std::vector<Rational> roots;
    for (int l = 1; l < n; ++l) roots.emplace_back(-l);
    roots.push_back(Rational(-n, 2));
    std::sort(roots.begin(), roots.end());
    return roots;
}

RationalPolynomial hilbert_poly_factored(int n, const Integer& degH, std::span<const Rational> roots) {
    if (roots.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("hilbert_poly_factored: need exactly n roots");
    return poly_from_roots(Rational(degH, factorial(static_cast<unsigned long>(n))), roots);
}

std::optional<RationalPolynomial> hilbert_polynomial(const VarietyModel& model) {
    struct Visitor {
        std::optional<RationalPolynomial> operator()(const Projective& m) const {
            auto roots = projective_roots(m.n);
            return hilbert_poly_factored(m.n, 1, roots);
        }
        std::optional<RationalPolynomial> operator()(const Quadric& m) const {
            auto roots = quadric_roots(m.n);
            return hilbert_poly_factored(m.n, 2, roots);
        }
        std::optional<RationalPolynomial> operator()(const Hypothetical& m) const {
            if (!m.roots) return std::nullopt;
            return hilbert_poly_factored(m.n, m.degH, *m.roots);
        }
    };
    return std::visit(Visitor{}, model);
}

Rational chi_line_bundle(const VarietyModel& model, const Integer& a) {
    if (const auto* p = std::get_if<Projective>(&model)) return binomial(a + p->n, p->n);
    if (const auto* q = std::get_if<Quadric>(&model)) {
        auto poly = *hilbert_polynomial(*q);
        if (poly(0) != Rational(1)) throw std::logic_error("quadric Hilbert polynomial not normalized");
        return poly(Rational(a));
    }
    throw std::invalid_argument("chi_line_bundle needs a known model (P^n or Q^n)");
}

RootInvariants invariants_from_roots(int n, std::span<const Rational> roots) {
    if (roots.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("invariants_from_roots: need n roots");
    Rational product(1), sum;
    for (const auto& r : roots) {
        product *= -r;
        sum += r;
    }
    if (product.is_zero()) throw std::invalid_argument("a root at 0 contradicts P(0) = 1");
    return {Rational(factorial(static_cast<unsigned long>(n))) / product, Rational(-2, n) * sum};
}

bool satisfies_leading_equation(int n, const FanoSolution& s) {
    auto nn = static_cast<unsigned long>(n);
    Rational lhs = Rational(s.degH, factorial(nn)) * Rational(factorial(nn - 1)) * Rational(s.d).pow(nn - 1) * s.N;
    return lhs == Rational(1);
}

bool satisfies_subleading_equation(int n, const FanoSolution& s) {
    Rational lhs = s.N + Rational(s.d) * Rational(n * (n - 1), 2);
    return lhs == Rational(s.lambda) * Rational(n, 2);
}

std::string reason_name(ContradictionReason reason) {
    switch (reason) {
        case ContradictionReason::NonIntegerDegree: return "NonIntegerDegree";
        case ContradictionReason::NegativeLeadingProduct: return "NegativeLeadingProduct";
        case ContradictionReason::NonIntegerIndex: return "NonIntegerIndex";
        case ContradictionReason::NonPositiveIndex: return "NonPositiveIndex";
        case ContradictionReason::TrivialIndex: return "TrivialIndex";
        case ContradictionReason::IndexExceedsBound: return "IndexExceedsBound";
    }
    return "?";
}

namespace {

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::vector<Rational> progression_roots(int n, const Integer& d, const Rational& N) {
    std::vector<Rational> roots;
    for (int l = 1; l < n; ++l) roots.emplace_back(Integer(-l * d));
    roots.push_back(-N);
    std::sort(roots.begin(), roots.end());
    return roots;
}

FanoSolution make_solution(int n, Integer d, Integer degH, Integer lambda, Rational N) {
    FanoSolution s{std::move(d), std::move(degH), std::move(lambda), std::move(N), {}, std::nullopt};
    s.roots = progression_roots(n, s.d, s.N);
    if (!satisfies_leading_equation(n, s) || !satisfies_subleading_equation(n, s))
        throw std::logic_error("solver produced a solution failing back-substitution");
    return s;
}

// Writes a root multiset as {-d, ..., -(n-1)d} plus one extra root -N.
std::optional<std::pair<Integer, Rational>> progression_form(int n, const std::vector<Rational>& roots) {
    std::vector<Integer> candidates;
    for (const auto& r : roots)
        if (r.is_integer() && !r.is_zero()) candidates.push_back(abs(r.to_integer()));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& magnitude : candidates) {
        for (int sign : {1, -1}) {
            Integer d = sign * magnitude;
            std::vector<Rational> rest = roots;
            bool ok = true;
            for (int l = 1; l < n && ok; ++l) {
                auto it = std::find(rest.begin(), rest.end(), Rational(Integer(-l * d)));
                if (it == rest.end())
                    ok = false;
                else
                    rest.erase(it);
            }
            if (ok && rest.size() == 1) return std::pair{d, -rest.front()};
        }
    }
    return std::nullopt;
}

enum class Check { DegreeIntegral, DegreeSign, IndexIntegral, IndexSign, IndexBound };

std::optional<Contradiction> run_check(Check check, int n, const RootInvariants& inv, IndexBranch branch) {
    const std::string dim = std::to_string(n);
    const Rational& lambda = inv.lambda;
    switch (check) {
        case Check::DegreeIntegral:
            if (!inv.degH.is_integer())
                return Contradiction{ContradictionReason::NonIntegerDegree,
                                     "deg(H^" + dim + ") = " + inv.degH.str() + " is not an integer"};
            break;
        case Check::DegreeSign:
            if (inv.degH.sign() <= 0)
                return Contradiction{ContradictionReason::NegativeLeadingProduct,
                                     "P(0) = 1 forces deg(H^" + dim + ") = " + inv.degH.str() + " <= 0"};
            break;
        case Check::IndexIntegral:
            if (!lambda.is_integer())
                return Contradiction{ContradictionReason::NonIntegerIndex,
                                     "lambda = " + lambda.str() + " is not an integer"};
            break;
        case Check::IndexSign:
            if (lambda.is_zero()) return Contradiction{ContradictionReason::TrivialIndex, "lambda = 0"};
            if (lambda.sign() < 0 && branch == IndexBranch::FanoOnly)
                return Contradiction{ContradictionReason::NonPositiveIndex,
                                     "lambda = " + lambda.str() + " but X is Fano"};
            break;
        case Check::IndexBound:
            if (lambda > Rational(n + 1))
                return Contradiction{ContradictionReason::IndexExceedsBound,
                                     "lambda = " + lambda.str() + " exceeds n+1 = " + std::to_string(n + 1)};
            break;
    }
    return std::nullopt;
}

// Runs the shape-specific checks in the given order, then every check that
// was not listed, in declaration order.
std::optional<Contradiction> run_checks(int n, const RootInvariants& inv, std::initializer_list<Check> order,
                                        IndexBranch branch) {
    std::vector<Check> all(order);
    for (Check c : {Check::DegreeIntegral, Check::DegreeSign, Check::IndexIntegral, Check::IndexSign,
                    Check::IndexBound})
        if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
    for (Check c : all)
        if (auto failure = run_check(c, n, inv, branch)) return failure;
    return std::nullopt;
}

CaseOutcome solve_from_roots(int n, std::vector<Rational> roots, std::initializer_list<Check> order,
                             IndexBranch branch, std::optional<seq::DegreeSequence> sequence) {
    auto inv = invariants_from_roots(n, roots);
    if (auto failure = run_checks(n, inv, order, branch)) return *failure;
    std::sort(roots.begin(), roots.end());
    auto form = progression_form(n, roots);
    if (!form) throw std::logic_error("surviving root set is not of progression form");
    auto s = make_solution(n, form->first, inv.degH.to_integer(), inv.lambda.to_integer(), form->second);
    s.sequence = std::move(sequence);
    return Solutions{{std::move(s)}};
}

std::vector<Rational> negated_differences(const seq::DegreeSequence& seq) {
    std::vector<Rational> roots;
    for (auto v : seq::difference_set(seq).values) roots.emplace_back(-v);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

CaseOutcome solve_arithmetic_case(int n, IndexBranch branch) {
    if (n < 3) throw std::invalid_argument("solve_arithmetic_case needs n >= 3");
    auto nn = static_cast<unsigned long>(n);
    // The leading equation gives N = n / (degH d^(n-1)); substituting into the subleading one,
    //   lambda = 2 / (degH d^(n-1)) + d (n-1),
    // so lambda is an integer exactly when m = degH |d|^(n-1) divides 2.
    const Integer numerator = 2;
    Solutions found;
    bool over_bound = false;
    for (int sign : {1, -1}) {
        for (const auto& m : detail::positive_divisors(numerator)) {
            for (Integer magnitude = 1; ipow(magnitude, nn - 1) <= m; ++magnitude) {
                Integer power = ipow(magnitude, nn - 1);
                if (m % power != 0) continue;
                Integer degH = m / power;
                Integer d = sign * magnitude;
                Rational N = Rational(n) / (Rational(degH) * Rational(ipow(d, nn - 1)));
                Rational lambda = Rational(2) * N / Rational(n) + Rational(d * (n - 1));
                if (lambda.is_zero() || (lambda.sign() < 0 && branch == IndexBranch::FanoOnly)) continue;
                if (lambda > Rational(n + 1)) {
                    over_bound = true;
                    continue;
                }
                found.list.push_back(make_solution(n, d, degH, lambda.to_integer(), N));
            }
        }
    }
    if (found.list.empty() && over_bound)
        return Contradiction{ContradictionReason::IndexExceedsBound, "every solution has lambda > n+1"};
    return found;
}

std::vector<Rational> type_roots(int n, const seq::SequenceClassification& cls) {
    std::vector<Rational> roots;
    auto push = [&](const Integer& v) { roots.emplace_back(v); };
    if (const auto* t = std::get_if<seq::Type1>(&cls)) {
        for (int l = 1; l <= n; ++l) push(Integer(-l) * t->d);
    } else if (const auto* t2 = std::get_if<seq::Type2>(&cls)) {
        for (int l = 1; l < n; ++l) push(Integer(-l) * t2->d);
        push(Integer(-(n + 1)) * t2->d);
    } else if (const auto* t3 = std::get_if<seq::Type3>(&cls)) {
        push(Integer(t3->d));
        for (int l = 1; l < n; ++l) push(Integer(-l) * t3->d);
    } else if (std::holds_alternative<seq::PairOfPairs>(cls)) {
        return negated_differences(seq::reconstruct(static_cast<std::size_t>(n), cls));
    } else {
        throw std::invalid_argument("type_roots: progression or unclassified shape");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

CaseOutcome solve_type_case(int n, const seq::SequenceClassification& cls, IndexBranch branch) {
    if (n < 3) throw std::invalid_argument("solve_type_case needs n >= 3");
    if (std::holds_alternative<seq::Arithmetic>(cls))
        throw std::invalid_argument("progressions are handled by solve_arithmetic_case");
    if (std::holds_alternative<seq::Unclassified>(cls))
        throw std::invalid_argument("solve_type_case needs a classified shape");

    auto sequence = seq::reconstruct(static_cast<std::size_t>(n), cls);
    auto roots = type_roots(n, cls);
    if (std::holds_alternative<seq::Type1>(cls))
        return solve_from_roots(n, roots, {Check::DegreeIntegral, Check::DegreeSign}, branch, sequence);
    if (std::holds_alternative<seq::Type2>(cls)) {
        // |degH| = n / (|d|^n (n+1)) is never an integer, whatever the sign.
        auto inv = invariants_from_roots(n, roots);
        if (!inv.degH.abs().is_integer())
            return Contradiction{ContradictionReason::NonIntegerDegree,
                                 "deg(H^" + std::to_string(n) + ") * d^" + std::to_string(n) + " * " +
                                     std::to_string(n + 1) + " = " + std::to_string(n) + " has no integer solution"};
        return solve_from_roots(n, roots, {}, branch, sequence);
    }
    if (std::holds_alternative<seq::Type3>(cls)) {
        if (n == 4) return solve_from_roots(n, roots, {Check::DegreeSign}, branch, sequence);
        return solve_from_roots(n, roots, {Check::IndexIntegral, Check::DegreeIntegral}, branch, sequence);
    }
    return solve_from_roots(n, roots, {Check::DegreeSign, Check::DegreeIntegral, Check::IndexIntegral}, branch,
                            sequence);
}

CaseOutcome solve_sequence(const seq::DegreeSequence& sequence, IndexBranch branch) {
    const int n = static_cast<int>(sequence.size());
    auto cls = seq::classify(sequence);

    if (const auto* a = std::get_if<seq::Arithmetic>(&cls)) {
        auto outcome = solve_arithmetic_case(n, branch);
        if (auto* c = std::get_if<Contradiction>(&outcome)) return *c;
        Solutions matching;
        for (auto s : std::get<Solutions>(outcome).list) {
            if (s.d != a->d) continue;
            s.sequence = sequence;
            matching.list.push_back(std::move(s));
        }
        if (!matching.list.empty()) return matching;
        if (a->d == 1 || a->d == -1)
            return Contradiction{ContradictionReason::NonPositiveIndex,
                                 "a progression with d = " + std::to_string(a->d) + " forces lambda <= 0"};
        return Contradiction{ContradictionReason::NonIntegerIndex,
                             "lambda = 2/(degH d^(n-1)) + d(n-1) is not an integer for d = " + std::to_string(a->d)};
    }
    if (n == 3) {
        // Three distinct roots a_i - a_j; lambda = (4/3)(a_3 - a_1).
        std::vector<Rational> roots;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) roots.emplace_back(sequence[i] - sequence[j]);
        return solve_from_roots(n, roots, {Check::IndexIntegral, Check::IndexSign, Check::IndexBound}, branch,
                                sequence);
    }
    if (std::holds_alternative<seq::Unclassified>(cls))
        throw std::invalid_argument("solve_sequence: difference set size is neither n-1 nor n");
    return solve_type_case(n, cls, branch);
}

}  // namespace excol::hilbert
