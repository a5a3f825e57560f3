#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chinoid/canonical.hpp"
#include "chinoid/errors.hpp"
#include "chinoid/word.hpp"

namespace chinoid {

/// Default cap on closure size. Override per call or, in the CLI, through
/// the CHINOID_CLASS_BUDGET environment variable.
inline constexpr std::size_t kDefaultClassBudget = 200'000;

/// Appends to `out` every single-step rewrite of `w` under the defining
/// relations a_j a_k a_i = a_k a_j a_i = a_k a_i a_j (i <= j <= k), applied
/// to each 3-letter factor.
void chinese_rewrites(const Word& w, std::vector<Word>& out);

using NeighborFn = std::function<void(const Word&, std::vector<Word>&)>;

/// BFS closure of {seed} under `neighbors`, in discovery order. Throws
/// ClassBudgetExceeded once more than `budget` distinct words are seen.
std::vector<Word> word_closure(const Word& seed, const NeighborFn& neighbors,
                               std::size_t budget);

/// True iff `target` lies in the closure of {seed}; stops early on a hit.
bool closure_reaches(const Word& seed, const Word& target,
                     const NeighborFn& neighbors, std::size_t budget);

/// The full congruence class of `w`. The relations preserve length and
/// letter multiset, so the class is finite.
std::vector<Word> congruence_class(const Word& w, int n,
                                   std::size_t budget = kDefaultClassBudget);

/// The unique canonically shaped member of the congruence class of `w`,
/// found by scanning the closure. A class with no shaped member or more
/// than one would contradict normal-form uniqueness; either aborts.
CanonicalForm normalize(const Word& w, int n,
                        std::size_t budget = kDefaultClassBudget);

/// Monoid product: normalize(expand(x) . expand(y)). Degree-additive in
/// every generator.
CanonicalForm multiply(const CanonicalForm& x, const CanonicalForm& y,
                       std::size_t budget = kDefaultClassBudget);

/// A witness w with  a_n x a_1 == a_n a_1 w,  located inside the congruence
/// class of a_n x a_1. Such a member always exists.
Word left_divisor_shift_witness(int n, const Word& x,
                                std::size_t budget = kDefaultClassBudget);

}  // namespace chinoid
