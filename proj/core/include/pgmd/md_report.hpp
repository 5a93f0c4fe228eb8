#ifndef PGMD_MD_REPORT_HPP
#define PGMD_MD_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace pgmd {

enum class MdMethod {
  oracle,
  formula_theorem1,
  formula_mdpg,
  formula_mdcyc,
  formula_mdDi,
};

std::string to_string(MdMethod m);

// Outcome of checking a formula result against the exact search.
struct CrossCheck {
  enum class State { agree, disagree, not_attempted };
  State state = State::agree;
  std::string details;  // set for disagree / not_attempted

  static CrossCheck agree() { return {State::agree, {}}; }
  static CrossCheck disagree(std::string d) {
    return {State::disagree, std::move(d)};
  }
  static CrossCheck not_attempted(std::string d) {
    return {State::not_attempted, std::move(d)};
  }
};

// Metric dimension plus provenance. witness_basis is populated by the exact
// search and by the twin-class formula; the group formulas report the value
// only.
struct MdReport {
  int beta = 0;
  std::vector<int> witness_basis;
  MdMethod method = MdMethod::oracle;
  std::optional<CrossCheck> cross_check;
};

struct ExchangeCounterexample {
  std::vector<int> w1;
  std::vector<int> w2;
  int removed = 0;  // the u in W1 with no valid replacement from W2
};

struct ExchangeReport {
  bool holds = false;
  long long minimal_sets_count = 0;
  std::optional<ExchangeCounterexample> counterexample;
};

}  // namespace pgmd

#endif  // PGMD_MD_REPORT_HPP
