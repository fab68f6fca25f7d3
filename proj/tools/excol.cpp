// Command-line front end. Exit status: 0 classified / computed, 2 contradiction,
// 1 usage error.

#include "excol/collection.hpp"
#include "excol/driver.hpp"
#include "excol/hilbert.hpp"
#include "excol/pseudoheight.hpp"
#include "excol/report.hpp"
#include "excol/seqclass.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace excol;
using report::Json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kContradiction = 2;

seq::DegreeSequence parse_sequence(const std::vector<seq::Value>& values) {
    if (values.empty()) throw std::invalid_argument("empty degree list");
    return seq::DegreeSequence(values);
}

int parse_length(const std::string& text, int n) {
    if (text == "n+1") return n + 1;
    if (text == "n+2") return n + 2;
    std::size_t used = 0;
    int length = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad length '" + text + "'");
    return length;
}

void emit(bool json, const Json& doc, const std::string& text) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for exceptional collections of line bundles"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output");

    std::vector<seq::Value> seq_values;
    auto* classify_seq = app.add_subcommand("classify-seq", "classify a degree sequence by its difference set");
    classify_seq->add_option("--seq", seq_values, "comma-separated distinct integers")->required()->delimiter(',');

    std::string model_text;
    long degree = 0;
    auto* chi = app.add_subcommand("chi", "chi(O(a)) on P<n> or Q<n>");
    chi->add_option("--model", model_text, "P<n> or Q<n>")->required();
    chi->add_option("--degree", degree, "twist a")->required();

    int dim = 0;
    bool anti_fano = false;
    auto* solve = app.add_subcommand("solve", "solve the arithmetic-progression equations");
    solve->add_option("--dim", dim, "dimension n >= 3")->required();
    solve->add_flag("--allow-anti-fano", anti_fano, "also keep negative index");

    std::vector<seq::Value> degrees;
    auto* gram = app.add_subcommand("gram", "Gram matrix of line bundles and exceptionality");
    gram->add_option("--model", model_text, "P<n>, Q<n> or H<n>:<degH>:<lambda>")->required();
    gram->add_option("--degrees", degrees, "comma-separated degrees")->required()->delimiter(',');

    std::string slots_text;
    auto* pseudo = app.add_subcommand("pseudoheight", "anticanonical pseudoheight lower bound");
    pseudo->add_option("--model", model_text, "P<n>, Q<n> or H<n>:<degH>:<lambda>")->required();
    pseudo->add_option("--slots", slots_text, "comma-separated degrees, '?' for an unknown sheaf")->required();

    std::string length_text;
    auto* classify = app.add_subcommand("classify", "classify X from the n line bundles of a full collection");
    classify->add_option("--dim", dim, "dimension n")->required();
    classify->add_option("--length", length_text, "n+1, n+2 or a number")->required();
    classify->add_option("--degrees", degrees, "comma-separated degrees of the line bundles")
        ->required()
        ->delimiter(',');

    auto* table = app.add_subcommand("table", "case table for length n+2, even n >= 6");
    table->add_option("--dim", dim, "even dimension n >= 6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_seq) {
            auto s = parse_sequence(seq_values);
            auto cls = seq::classify(s);
            Json doc{{"sequence", report::to_json(s)},
                     {"mu", seq::difference_set(s).mu()},
                     {"classification", report::to_json(cls)}};
            emit(json, doc, seq::describe(cls) + "\n");
            return kOk;
        }
        if (*chi) {
            auto model = hilbert::parse_model(model_text);
            auto value = hilbert::chi_line_bundle(model, Integer(degree));
            Json doc{{"model", hilbert::model_name(model)}, {"degree", degree}, {"chi", value.fraction()}};
            emit(json, doc, value.str() + "\n");
            return kOk;
        }
        if (*solve) {
            if (dim < 3) throw std::invalid_argument("dimension must be at least 3");
            auto outcome = hilbert::solve_arithmetic_case(
                dim, anti_fano ? hilbert::IndexBranch::AllowAntiFano : hilbert::IndexBranch::FanoOnly);
            emit(json, report::to_json(outcome), report::render(outcome));
            return std::holds_alternative<hilbert::Contradiction>(outcome) ? kContradiction : kOk;
        }
        if (*gram) {
            auto c = collection::CollectionSkeleton::line_bundles(degrees, hilbert::parse_model(model_text));
            auto g = collection::gram_matrix(c);
            auto verdict = collection::is_numerically_exceptional(g);
            emit(json, report::to_json(c, g, verdict), report::render(c, g, verdict));
            return kOk;
        }
        if (*pseudo) {
            auto c = collection::CollectionSkeleton::parse(slots_text, hilbert::parse_model(model_text));
            auto ph = height::pseudoheight_ac(c);
            emit(json, report::to_json(c, ph), report::render(c, ph));
            return kOk;
        }
        if (*classify) {
            auto s = parse_sequence(degrees);
            const int length = parse_length(length_text, dim);
            driver::ClassificationOutcome outcome;
            if (length == dim + 1)
                outcome = driver::classify_length_n_plus_1(dim, s);
            else if (length == dim + 2)
                outcome = driver::classify_length_n_plus_2(dim, s);
            else
                throw std::invalid_argument("collection length must be n+1 or n+2");
            emit(json, report::to_json(outcome), report::render(outcome));
            return outcome.verdict == driver::Verdict::Contradiction ? kContradiction : kOk;
        }
        if (*table) {
            auto rows = driver::case_table(dim);
            Json doc = Json::array();
            for (const auto& r : rows) doc.push_back(report::to_json(r));
            emit(json, Json{{"n", dim}, {"rows", doc}}, report::render(rows));
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
