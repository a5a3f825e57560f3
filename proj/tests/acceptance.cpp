// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>
#include <vector>

#include "chinoid/congruence.hpp"
#include "chinoid/diagram.hpp"
#include "chinoid/rep.hpp"
#include "chinoid/verify.hpp"

using namespace chinoid;
using verify::CheckResult;

namespace {

int failures = 0;

void report(int number, const std::string& title,
            const std::vector<CheckResult>& parts) {
  bool pass = true;
  std::string detail;
  for (const CheckResult& part : parts) {
    if (!part.pass) {
      pass = false;
      detail = part.name + ": " + part.detail;
      break;
    }
  }
  if (!pass) {
    ++failures;
  }
  std::printf("%s  criterion %d  %s%s%s\n", pass ? "PASS" : "FAIL", number,
              title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
}

CheckResult leaf_count_check() {
  const std::vector<std::pair<int, std::size_t>> expected{{2, 1}, {3, 3}, {4, 5}};
  for (const auto& [n, count] : expected) {
    if (enumerate_leaves(n).size() != count) {
      return {"leaf-count", false,
              "rank " + std::to_string(n) + " disagrees with the figures"};
    }
  }
  return {"leaf-count", true, ""};
}

}  // namespace

int main() {
  const std::size_t budget = kDefaultClassBudget;
  const std::uint64_t seed = kDefaultSeed;

  report(1, "canonical-form uniqueness (n=2 len<=8, n=3 len<=6, n=4 len<=5)",
         {verify::canonical_uniqueness(2, 8, budget),
          verify::canonical_uniqueness(3, 6, budget),
          verify::canonical_uniqueness(4, 5, budget)});

  report(2, "relation compliance of all catalog representations",
         {verify::standard_relation_compliance(2, 4),
          verify::standard_relation_compliance(4, 4),
          verify::standard_relation_compliance(6, 4),
          verify::family_relation_compliance(3, 5),
          verify::family_relation_compliance(4, 5),
          verify::six_case_identities(2, 4),
          verify::six_case_identities(4, 4),
          verify::six_case_identities(6, 4)});

  report(3, "tree and catalog fidelity (2n-3 levels, 1/3/5 leaves, P-lists)",
         {verify::first_level_counts(), leaf_count_check(),
          verify::prime_catalog_fidelity(3, budget),
          verify::prime_catalog_fidelity(4, budget)});

  report(4, "simplicity mechanics (central scalars, cyclic reach)",
         {verify::central_scalar_values(2, 4),
          verify::central_scalar_values(4, 4),
          verify::central_scalar_values(6, 4),
          verify::cyclic_reach_sweep(2, 50, 4, seed),
          verify::cyclic_reach_sweep(4, 50, 4, seed),
          verify::cyclic_reach_sweep(6, 50, 4, seed)});

  report(5, "inductive construction reproduces the standard modules",
         {verify::inductive_agreement(4, 4), verify::inductive_agreement(6, 4)});

  report(6, "leaf images separate inequivalent words (n=3, len<=4)",
         {verify::embedding_separation(3, 4, budget)});

  report(7, "monomiality of every catalog representation",
         {verify::monomiality_sweep(2, 5), verify::monomiality_sweep(3, 5),
          verify::monomiality_sweep(4, 5), verify::monomiality_sweep(6, 5)});

  report(8, "single-site corruptions are always detected",
         {verify::mutation_sensitivity(4)});

  if (failures == 0) {
    std::printf("all 8 criteria pass\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
