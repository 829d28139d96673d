#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace hookbias {

/// Structured pass/fail record. Field order in the JSON rendering is fixed
/// (keys sorted), so equal reports serialize to identical bytes.
struct VerificationReport {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::uint64_t checked = 0;
  /// Violations that were declared in advance and therefore do not fail the run.
  nlohmann::json exceptions = nlohmann::json::array();
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json observations = nlohmann::json::object();

  /// Stored counterexamples are capped; the rest are only counted.
  static constexpr std::size_t kMaxCounterexamples = 50;

  void fail(nlohmann::json counterexample);
  /// Folds another report's counts and failures into this one.
  void absorb(const VerificationReport& other);

  nlohmann::json to_json() const;
  std::string dump() const { return to_json().dump(2); }
};

}  // namespace hookbias
