#pragma once

// Verification reports: ordered machine-checked steps with certificates,
// an explicit registry of assumed facts, and deterministic text/JSON
// serialization.

#include <json.hpp>

#include <string>
#include <vector>

namespace curvecert::report {

enum class Status { VERIFIED, ASSUMED, FAILED };

std::string to_string(Status s);

// A fact the library takes as input instead of recomputing.
struct AssumedFact {
  std::string id;
  std::string statement;
  std::string citation;  // nonempty
  std::string kind;      // "rank-zero" or "external-lemma"
};

struct VerificationStep {
  std::string id;
  std::string statement;
  Status status = Status::VERIFIED;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> citations;
  std::vector<std::string> assumed;  // ids of AssumedFacts this step relies on
};

struct Report {
  std::string title;
  std::vector<VerificationStep> steps;
  std::vector<AssumedFact> assumptions;

  bool any_failed() const;
  std::vector<std::string> assumed_ids() const;  // sorted, deduplicated

  // Appends another fragment; its steps get the fragment title as a prefix
  // and referenced assumptions are merged without duplicates.
  void absorb(const Report& fragment);

  nlohmann::ordered_json to_json() const;
  std::string to_json_string() const;  // byte-stable for fixed inputs
  std::string to_text() const;
};

// Marks a step FAILED when ok is false; convenience used all over the
// pipeline.
VerificationStep check_step(std::string id, std::string statement, bool ok,
                            nlohmann::ordered_json data = nlohmann::ordered_json::object());

}  // namespace curvecert::report
