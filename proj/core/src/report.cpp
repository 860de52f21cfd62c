#include "curvecert/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace curvecert::report {

namespace {
constexpr const char* kVersion = "1";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::VERIFIED: return "VERIFIED";
    case Status::ASSUMED: return "ASSUMED";
    case Status::FAILED: return "FAILED";
  }
  throw std::logic_error("unreachable");
}

bool Report::any_failed() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const VerificationStep& s) { return s.status == Status::FAILED; });
}

std::vector<std::string> Report::assumed_ids() const {
  std::set<std::string> ids;
  for (const VerificationStep& s : steps) ids.insert(s.assumed.begin(), s.assumed.end());
  return {ids.begin(), ids.end()};
}

void Report::absorb(const Report& fragment) {
  for (VerificationStep s : fragment.steps) {
    if (!fragment.title.empty()) s.id = fragment.title + "/" + s.id;
    steps.push_back(std::move(s));
  }
  for (const AssumedFact& f : fragment.assumptions) {
    bool seen = std::any_of(assumptions.begin(), assumptions.end(),
                            [&](const AssumedFact& g) { return g.id == f.id; });
    if (!seen) assumptions.push_back(f);
  }
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["title"] = title;
  auto& st = j["steps"] = nlohmann::ordered_json::array();
  for (const VerificationStep& s : steps) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["statement"] = s.statement;
    e["status"] = to_string(s.status);
    e["data"] = s.data;
    e["citations"] = s.citations;
    e["assumed"] = s.assumed;
    st.push_back(std::move(e));
  }
  auto& as = j["assumptions"] = nlohmann::ordered_json::array();
  for (const AssumedFact& f : assumptions) {
    nlohmann::ordered_json e;
    e["id"] = f.id;
    e["statement"] = f.statement;
    e["citation"] = f.citation;
    e["kind"] = f.kind;
    as.push_back(std::move(e));
  }
  return j;
}

std::string Report::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string Report::to_text() const {
  std::string out;
  if (!title.empty()) out += "== " + title + " ==\n";
  for (const VerificationStep& s : steps) {
    out += "[" + to_string(s.status) + "] " + s.id + ": " + s.statement;
    if (!s.assumed.empty()) {
      out += "  (assumes";
      for (const std::string& a : s.assumed) out += " " + a;
      out += ")";
    }
    out += "\n";
  }
  if (!assumptions.empty()) {
    out += "assumed facts:\n";
    for (const AssumedFact& f : assumptions)
      out += "  " + f.id + " [" + f.kind + "]: " + f.statement + " -- " + f.citation + "\n";
  }
  int failed = 0;
  for (const VerificationStep& s : steps)
    if (s.status == Status::FAILED) ++failed;
  out += "steps: " + std::to_string(steps.size()) + ", failed: " + std::to_string(failed) + "\n";
  return out;
}

VerificationStep check_step(std::string id, std::string statement, bool ok, nlohmann::ordered_json data) {
  VerificationStep s;
  s.id = std::move(id);
  s.statement = std::move(statement);
  s.status = ok ? Status::VERIFIED : Status::FAILED;
  s.data = std::move(data);
  return s;
}

}  // namespace curvecert::report
