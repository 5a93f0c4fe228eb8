#include "pgmd/report_json.hpp"

namespace pgmd {

using nlohmann::json;

std::string to_string(MdMethod m) {
  switch (m) {
    case MdMethod::oracle: return "oracle";
    case MdMethod::formula_theorem1: return "formula-theorem1";
    case MdMethod::formula_mdpg: return "formula-mdpg";
    case MdMethod::formula_mdcyc: return "formula-mdcyc";
    case MdMethod::formula_mdDi: return "formula-mdDi";
  }
  return "oracle";
}

json twin_report_json(const TwinPartition& part) {
  json classes = json::array();
  for (const auto& cls : part.classes) classes.push_back(cls);
  json singletons = json::array();
  for (int id : part.singleton_ids) singletons.push_back(part.classes[id][0]);
  return json{{"classes", classes}, {"singletons", singletons}};
}

json md_report_json(const MdReport& report) {
  json j{{"beta", report.beta},
         {"basis", report.witness_basis},
         {"method", to_string(report.method)}};
  if (report.cross_check) {
    switch (report.cross_check->state) {
      case CrossCheck::State::agree:
        j["cross_check"] = "agree";
        break;
      case CrossCheck::State::disagree:
        j["cross_check"] = json{{"disagree", report.cross_check->details}};
        break;
      case CrossCheck::State::not_attempted:
        j["cross_check"] = report.cross_check->details;
        break;
    }
  }
  return j;
}

json exchange_report_json(const ExchangeReport& report) {
  json j{{"holds", report.holds},
         {"minimal_sets_count", report.minimal_sets_count}};
  if (report.counterexample) {
    j["counterexample"] = json{{"w1", report.counterexample->w1},
                               {"w2", report.counterexample->w2},
                               {"u", report.counterexample->removed}};
  }
  return j;
}

json involution_report_json(const InvolutionReport& report) {
  json witnesses = json::object();
  for (const auto& [w, xy] : report.witnesses)
    witnesses[std::to_string(w)] = json::array({xy.first, xy.second});
  return json{{"resolving_involutions", report.resolving_involutions},
              {"witnesses", witnesses}};
}

namespace {

json psi_condition_json(const PsiCondition& c) {
  json j{{"holds", c.holds}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

}  // namespace

json psi_verdict_json(const PsiVerdict& verdict) {
  json conditions{{"noncyclic", psi_condition_json(verdict.noncyclic)},
                  {"C1", psi_condition_json(verdict.c1)},
                  {"C2", psi_condition_json(verdict.c2)},
                  {"C3", psi_condition_json(verdict.c3)},
                  {"C4", psi_condition_json(verdict.c4)}};
  json j{{"in_psi", verdict.in_psi}, {"conditions", conditions}};
  if (verdict.odd_prime > 0) j["p"] = verdict.odd_prime;
  return j;
}

json verification_report_json(const VerificationReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back(json{{"case", row.case_name},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"pass", row.pass}});
  return rows;
}

}  // namespace pgmd
