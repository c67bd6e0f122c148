#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adlab/conditions.hpp"
#include "adlab/groups/finite_group.hpp"

namespace adlab::certificates {

/// Replays operations by name on JSON inputs, caching constructed groups.
class StepRunner {
 public:
  /// Errors: UnknownOperation, ParseError and any module error.
  nlohmann::json run(std::string_view op, const nlohmann::json& inputs);
  const groups::FiniteGroup& group(const std::string& spec);

  static std::vector<std::string> operations();

 private:
  std::map<std::string, std::shared_ptr<groups::FiniteGroup>> groups_;
};

/// Subset match of actual against expected. Objects match key by key, arrays and
/// scalars exactly; {">=": x}, {"<=": x}, {">": x}, {"<": x}, {"!=": x} compare
/// numbers and {"contains": x} looks for a matching array element.
bool matches(const nlohmann::json& expected, const nlohmann::json& actual);

struct Step {
  std::string kind;  // CHECKED or CITED
  std::string op;    // CHECKED
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  std::vector<std::string> supports;  // "holds:5", "fails:3"
  std::string theorem;                // CITED: theorem key
  std::string statement;              // CITED: the invocation quoted
};

struct Params {
  std::optional<std::uint64_t> p, q, n;
  std::optional<std::string> field;
};

struct Certificate {
  std::string id;
  std::string title;
  nlohmann::json params = nlohmann::json::object();
  std::string scope = "full";  // or "arithmetic-only"
  nlohmann::json data = nlohmann::json::object();
  conditions::ExampleClaims claims;
  std::vector<Step> steps;
};

std::vector<std::string> example_ids();
nlohmann::json example_list();

/// Errors: UnknownExample, Precondition.
Certificate build_certificate(std::string_view id, const Params& params);

struct StepOutcome {
  std::string status;  // PASS, FAIL, CITED
  nlohmann::json result;
  std::string message;
};

struct VerificationReport {
  std::string id;
  std::string scope;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t cited = 0;
  std::vector<StepOutcome> outcomes;
  std::vector<std::string> unsupported;  // claims without a supporting step
  std::vector<std::string> problems;
};

/// Replays every CHECKED step. Passes iff all of them pass, at least one exists,
/// every CITED step names its theorem and every claim has a supporting step.
VerificationReport verify_certificate(const Certificate& cert, StepRunner& runner);
VerificationReport verify_certificate(const Certificate& cert);

nlohmann::json to_json(const Step& s);
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerificationReport& r, const Certificate& c);

}  // namespace adlab::certificates
