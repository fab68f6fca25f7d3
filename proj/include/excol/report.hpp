#pragma once

// Structured (JSON) and plain-text renderings of library results. Every
// rational in the JSON form is a "p/q" string.

#include "excol/collection.hpp"
#include "excol/driver.hpp"
#include "excol/hilbert.hpp"
#include "excol/pseudoheight.hpp"
#include "excol/seqclass.hpp"

#include <json.hpp>

#include <string>

namespace excol::report {

using Json = nlohmann::ordered_json;

Json to_json(const seq::DegreeSequence& s);
Json to_json(const seq::SequenceClassification& cls);
Json to_json(const hilbert::FanoSolution& s);
Json to_json(const hilbert::CaseOutcome& outcome);
Json to_json(const driver::Certificate& c);
Json to_json(const driver::TableRow& row);
Json to_json(const driver::ClassificationOutcome& outcome);
Json to_json(const collection::CollectionSkeleton& c, const collection::GramMatrix& g,
             const collection::ExceptionalityResult& verdict);
Json to_json(const collection::CollectionSkeleton& c, const height::PseudoheightResult& ph);

std::string render(const hilbert::CaseOutcome& outcome);
std::string render(const std::vector<driver::TableRow>& rows);
std::string render(const driver::ClassificationOutcome& outcome);
std::string render(const collection::CollectionSkeleton& c, const collection::GramMatrix& g,
                   const collection::ExceptionalityResult& verdict);
std::string render(const collection::CollectionSkeleton& c, const height::PseudoheightResult& ph);

}  // namespace excol::report
