#include "hookbias/report.hpp"

namespace hookbias {

void VerificationReport::fail(nlohmann::json counterexample) {
  pass = false;
  if (counterexamples.size() < kMaxCounterexamples) {
    counterexamples.push_back(std::move(counterexample));
  } else {
    auto& omitted = observations["counterexamples_omitted"];
    omitted = omitted.is_number() ? omitted.get<std::uint64_t>() + 1 : 1;
  }
}

void VerificationReport::absorb(const VerificationReport& other) {
  checked += other.checked;
  for (const auto& e : other.exceptions) exceptions.push_back(e);
  for (const auto& c : other.counterexamples) fail(c);
  if (!other.pass) pass = false;
  if (auto it = other.observations.find("counterexamples_omitted"); it != other.observations.end()) {
    auto& omitted = observations["counterexamples_omitted"];
    omitted = (omitted.is_number() ? omitted.get<std::uint64_t>() : 0) + it->get<std::uint64_t>();
  }
}

nlohmann::json VerificationReport::to_json() const {
  return nlohmann::json{{"kind", kind},
                        {"params", params},
                        {"status", pass ? "pass" : "fail"},
                        {"checked", checked},
                        {"exceptions", exceptions},
                        {"counterexamples", counterexamples},
                        {"observations", observations}};
}

}  // namespace hookbias
