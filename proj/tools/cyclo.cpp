// Command-line front end for the claim registry.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cyclo/claims.hpp"

namespace {

using cyclo::ClaimReport;
using cyclo::ClaimStatus;

std::string human_report(const std::vector<ClaimReport>& reports) {
  std::size_t width = 8;
  for (const auto& r : reports) width = std::max(width, r.claim_id.size());
  std::ostringstream os;
  std::map<ClaimStatus, int> counts;
  for (const auto& r : reports) {
    ++counts[r.status];
    os << std::left << std::setw(14) << to_string(r.status) << std::setw(static_cast<int>(width) + 2) << r.claim_id
       << std::right << std::setw(7) << r.runtime_ms << " ms  " << r.paper_location << "\n";
    os << "    " << r.witness << "\n";
  }
  os << reports.size() << " claims: " << counts[ClaimStatus::kPass] << " pass, " << counts[ClaimStatus::kFail] << " fail, "
     << counts[ClaimStatus::kInconclusive] << " inconclusive, " << counts[ClaimStatus::kExternalData] << " external-data\n";
  return os.str();
}

std::string structured_report(const std::vector<ClaimReport>& reports, const cyclo::RunOptions& opt, const std::string& filter) {
  nlohmann::ordered_json doc;
  doc["filter"] = filter;
  doc["budget"] = opt.budget;
  doc["precision"] = opt.precision;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    doc["claims"].push_back({{"claim_id", r.claim_id},
                             {"paper_location", r.paper_location},
                             {"status", to_string(r.status)},
                             {"witness", r.witness},
                             {"runtime_ms", r.runtime_ms}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of index, Galois, planar-algebra and T-matrix computations"};
  app.require_subcommand(1);

  std::string filter, format = "human", out;
  cyclo::RunOptions opt;
  auto* verify = app.add_subcommand("verify", "Run claims and report verdicts");
  verify->add_option("--filter", filter, "Claim id or glob (default: all)");
  verify->add_option("--budget", opt.budget, "Prime search bound")->check(CLI::PositiveNumber);
  verify->add_option("--precision", opt.precision, "Embedding precision in bits")->check(CLI::Range(16u, 1u << 16));
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  verify->add_option("--out", out, "Write the report to a file instead of stdout");

  auto* list = app.add_subcommand("list-claims", "List claim ids with locations and summaries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& c : cyclo::claim_registry()) std::cout << c.id << "\t" << c.paper_location << "\t" << c.summary << "\n";
    return 0;
  }

  std::vector<ClaimReport> reports;
  try {
    reports = cyclo::run_claims(filter, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string text = format == "structured" ? structured_report(reports, opt, filter) : human_report(reports);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  for (const auto& r : reports)
    if (r.status == ClaimStatus::kFail) return 1;
  return 0;
}
