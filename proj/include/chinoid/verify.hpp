#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chinoid/congruence.hpp"
#include "chinoid/rep.hpp"
#include "json.hpp"

namespace chinoid::verify {

struct Options {
  long box = 4;
  int sweep_len = 0;  // 0 = per-rank default
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultClassBudget;
  int samples = 50;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Exhaustive word length used by the canonical-form sweep at rank n.
int default_sweep_len(int n);

// Canonical forms and the congruence.
CheckResult canonical_uniqueness(int n, int maxlen, std::size_t budget);
CheckResult relation_triples_normalize(int n, std::size_t budget);
CheckResult multiply_properties(int n, std::uint64_t seed, std::size_t budget);
CheckResult left_divisor_shift(int n, std::size_t budget);

// Target monoids and branch images.
CheckResult bicyclic_laws();
CheckResult kernel_generator_images(int n, std::size_t budget);
CheckResult quotient_relation_families(int n, std::size_t budget);
CheckResult branch_multiplicativity(int n, std::uint64_t seed,
                                    std::size_t budget);
CheckResult congruence_growth(int n, std::uint64_t seed, std::size_t budget);
CheckResult embedding_separation(int n, int maxlen, std::size_t budget);

// The diagram tree and the prime catalogs.
CheckResult first_level_counts();
CheckResult leaf_counts();
CheckResult tree_shape(int n);
CheckResult prime_catalog_fidelity(int n, std::size_t budget);

// Representations.
CheckResult standard_relation_compliance(int n, long box);
CheckResult family_relation_compliance(int n, long box);
CheckResult six_case_identities(int n, long box);
CheckResult central_scalar_values(int n, long box);
CheckResult cyclic_reach_sweep(int n, int samples, long box,
                               std::uint64_t seed);
CheckResult inductive_agreement(int n, long box);
CheckResult monomiality_sweep(int n, long box);
CheckResult annihilator_catalog(int n, long box);
CheckResult zero_pair_consequence(int n, long box);
CheckResult mutation_sensitivity(long box);

/// Parameter sets used to instantiate a family in sweeps: one generic
/// choice plus boundary choices (zero where the constraints allow it).
std::vector<std::vector<Scalar>> family_test_params(const Family& family);

/// Every check applicable to rank n, in a fixed order.
std::vector<CheckResult> run_all(int n, const Options& options);

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results,
                                   const Options& options);

}  // namespace chinoid::verify
