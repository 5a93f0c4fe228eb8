#ifndef PGMD_REPORT_JSON_HPP
#define PGMD_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "pgmd/md_report.hpp"
#include "pgmd/theory.hpp"
#include "pgmd/twins.hpp"

namespace pgmd {

// JSON renderings of the report types. Objects are key-sorted, so a given
// value always serializes to the same bytes.
//
//   twins:    {"classes":[[...],...],"singletons":[...]}
//   md:       {"beta":k,"basis":[...],"method":"...","cross_check":...}
//   exchange: {"holds":b,"minimal_sets_count":k,"counterexample":{...}?}
//   verify:   [{"case":"...","expected":...,"computed":...,"pass":b},...]
nlohmann::json twin_report_json(const TwinPartition& part);
nlohmann::json md_report_json(const MdReport& report);
nlohmann::json exchange_report_json(const ExchangeReport& report);
nlohmann::json involution_report_json(const InvolutionReport& report);
nlohmann::json psi_verdict_json(const PsiVerdict& verdict);
nlohmann::json verification_report_json(const VerificationReport& report);

}  // namespace pgmd

#endif  // PGMD_REPORT_JSON_HPP
