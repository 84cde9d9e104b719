// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cyclo/claims.hpp"
#include "property_suites.hpp"

using namespace cyclo;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> claims;
};

const std::vector<Criterion> kCriteria = {
    {1, "constants and their minimal polynomials", {"L0.constants.index", "L1.constants.index", "L0.constants.lambda", "L1.constants.lambda"}},
    {2, "cyclotomic expressions for the indices", {"L0.cyclotomic.index", "L1.cyclotomic.index"}},
    {3, "non-cyclotomicity witnesses", {"L0.galois.noncyclotomic", "L1.galois.noncyclotomic"}},
    {4, "Galois groups", {"L0.galois.order8", "L1.galois.order24", "L1.galois.wreath"}},
    {5, "quantum-integer identities and parity", {"L0.qint.identities", "L1.qint.identities", "L0.qint.parity", "L1.qint.parity"}},
    {6, "Temperley-Lieb suite",
     {"L0.tl.jw-idempotents", "L1.tl.jw-idempotents", "L0.tl.jw2-formulas", "L1.tl.jw2-formulas", "L0.tl.trace-table",
      "L1.tl.trace-table", "L0.tl.left-right", "L1.tl.left-right"}},
    {7, "branch idempotents and tower",
     {"L0.branch.principal-idempotents", "L1.branch.principal-idempotents", "L0.branch.dual-idempotents",
      "L1.branch.dual-idempotents", "L0.branch.tower", "L1.branch.tower"}},
    {8, "twisted moments and M3",
     {"L0.M3.twisted-moments", "L1.M3.twisted-moments", "L0.M3.closed-form", "L1.M3.closed-form", "L0.M3.field-membership",
      "L1.M3.field-membership"}},
    {9, "fusion graphs",
     {"L0.fusion.principal-norm", "L0.fusion.dual-norm", "L1.fusion.principal-norm", "L1.fusion.dual-norm",
      "L0.fusion.branch-ratios", "L1.fusion.branch-ratios"}},
    {10, "Drinfel'd center T-matrix", {"H0.center.t-field", "H0.center.averaging", "H0.center.separation"}},
};

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, ClaimReport> by_id;
  for (auto& r : run_claims("", RunOptions{})) by_id[r.claim_id] = r;

  bool all = true;
  for (const auto& c : kCriteria) {
    std::string detail;
    bool ok = true;
    for (const auto& id : c.claims) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        ok = false;
        detail += " " + id + "=missing";
      } else if (it->second.status != ClaimStatus::kPass) {
        ok = false;
        detail += " " + id + "=" + to_string(it->second.status);
      }
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << c.claims.size() << " claims)"
              << detail << "\n";
  }

  const std::pair<const char*, props::SuiteResult (*)(int, std::uint64_t)> suites[] = {
      {"field axioms", props::field_axioms},
      {"factorization re-expansion", props::factorization_reexpansion},
      {"TL associativity", props::tl_associativity},
      {"M3 scaling", props::m3_scaling}};
  bool props_ok = true;
  std::string detail;
  for (const auto& [name, fn] : suites) {
    auto r = fn(props::kCases, props::kSeed);
    bool ok = r.ok() && r.cases >= 1000;
    props_ok = props_ok && ok;
    detail += std::string(" ") + name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + ";";
    if (!r.ok()) detail += " first failure: " + r.first_failure + ";";
  }
  all = all && props_ok;
  std::cout << (props_ok ? "PASS" : "FAIL") << " criterion 11: property suites (seed " << props::kSeed << ")" << detail << "\n";

  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "total " << secs << " s\n";
  return all ? 0 : 1;
}
