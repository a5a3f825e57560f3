#include <algorithm>
#include <set>

#include "chinoid/congruence.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

namespace {

std::set<Word> as_set(const std::vector<Word>& words) {
  return {words.begin(), words.end()};
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("classes of short words") {
    CHECK(as_set(congruence_class({}, 2)) == std::set<Word>{{}});
    CHECK(as_set(congruence_class({1, 2, 1}, 2)) ==
          std::set<Word>{{1, 2, 1}, {2, 1, 1}});
    // no factor of a1 a1 a2 matches a relation pattern
    CHECK(as_set(congruence_class({1, 1, 2}, 2)) == std::set<Word>{{1, 1, 2}});
  }

  TEST_CASE("normalize picks the shaped member") {
    const CanonicalForm nf = normalize({2, 1, 1}, 2);
    CHECK(nf.exponent(1, 1) == 1);
    CHECK(nf.exponent(2, 1) == 1);
    CHECK(nf.exponent(2, 2) == 0);
    CHECK(nf.expand() == Word{1, 2, 1});

    const CanonicalForm id = normalize({}, 3);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= i; ++j) {
        CHECK(id.exponent(i, j) == 0);
      }
    }

    const CanonicalForm pair = normalize({2, 1}, 2);
    CHECK(pair.exponent(2, 1) == 1);
    CHECK(pair.total_degree() == 2);
  }

  TEST_CASE("multiply") {
    const CanonicalForm one(2);
    const CanonicalForm a1 = normalize({1}, 2);
    const CanonicalForm a2 = normalize({2}, 2);
    CHECK(multiply(one, a2) == a2);
    const CanonicalForm a1a2 = multiply(a1, a2);
    CHECK(a1a2.exponent(1, 1) == 1);
    CHECK(a1a2.exponent(2, 2) == 1);
    const CanonicalForm a2a1 = multiply(a2, a1);
    CHECK(a2a1.exponent(2, 1) == 1);
    CHECK(a2a1.exponent(1, 1) == 0);
    CHECK_THROWS_AS(multiply(CanonicalForm(2), CanonicalForm(3)),
                    std::invalid_argument);
  }

  TEST_CASE("degrees") {
    CHECK(CanonicalForm(3).degree(2) == 0);
    CHECK(normalize({2, 1}, 2).degree(1) == 1);
    CHECK(normalize({3, 1, 2}, 3).degree(3) == 1);
  }

  TEST_CASE("left divisor shift") {
    CHECK(left_divisor_shift_witness(2, {}) == Word{});
    CHECK(left_divisor_shift_witness(3, {2}) == Word{2});
    const Word w = left_divisor_shift_witness(3, {2, 2});
    Word lhs{3, 2, 2, 1};
    Word rhs{3, 1};
    rhs.insert(rhs.end(), w.begin(), w.end());
    CHECK(normalize(lhs, 3) == normalize(rhs, 3));
  }

  TEST_CASE("budget") {
    CHECK_THROWS_AS(congruence_class({3, 2, 1, 3, 2, 1}, 3, 2),
                    ClassBudgetExceeded);
    try {
      congruence_class({3, 2, 1, 3, 2, 1}, 3, 2);
    } catch (const ClassBudgetExceeded& e) {
      CHECK(e.budget() == 2);
    }
  }

  TEST_CASE("relation triples collapse under normalize") {
    CHECK(verify::relation_triples_normalize(4, kDefaultClassBudget).pass);
  }

  TEST_CASE("product laws on sampled words") {
    CHECK(verify::multiply_properties(3, 99, kDefaultClassBudget).pass);
  }

  TEST_CASE("uniqueness sweep at small scale") {
    CHECK(verify::canonical_uniqueness(2, 5, kDefaultClassBudget).pass);
    CHECK(verify::canonical_uniqueness(3, 4, kDefaultClassBudget).pass);
  }
}
