// Runs every verification suite and prints one line per acceptance criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "mitosis/verify.hpp"

namespace {

const std::map<int, const char*> kCriteria{
    {1, "paramitosis identity, boxes n<=5 with bounds in {0,1,2}"},
    {2, "M^2 = 0 and L-class closure on the same family"},
    {3, "GZ and SP certified parapolytope, balanced, admissible"},
    {4, "mitosis chains give Demazure characters (GL3, GL4, Sp4)"},
    {5, "dimension counts; SP_rho has 16 points and 11 vertices"},
    {6, "Newton-Okounkov body and the 16 valuation points"},
    {7, "Sp4 catalog counts, intersection identity, chains = catalog"},
    {8, "skew pipe dream mitosis = geometric mitosis on C_0"},
    {9, "GL pipe dream mitosis = geometric mitosis on GZ"},
};

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  std::map<int, std::vector<mitosis::CaseResult>> by_criterion;
  std::map<int, double> seconds;
  for (const auto& name : mitosis::suite_names()) {
    auto rep = mitosis::run_suite(name, MITOSIS_GOLDEN_DIR);
    std::map<int, int> share;
    for (const auto& c : rep.cases) ++share[c.criterion];
    for (const auto& [k, count] : share) seconds[k] += rep.seconds * count / rep.cases.size();
    for (auto& c : rep.cases) by_criterion[c.criterion].push_back(std::move(c));
  }
  bool all = true;
  for (const auto& [k, text] : kCriteria) {
    const auto& cases = by_criterion[k];
    int passed = 0;
    for (const auto& c : cases) passed += c.passed;
    const bool ok = !cases.empty() && passed == static_cast<int>(cases.size());
    all = all && ok;
    std::printf("[%s] criterion %d: %s (%d/%zu cases, %.1fs)\n", ok ? "PASS" : "FAIL", k, text, passed,
                cases.size(), seconds[k]);
    for (const auto& c : cases) {
      if (!c.passed || verbose) {
        std::printf("    %s %s: %s\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
      }
    }
  }
  return all ? 0 : 1;
}
