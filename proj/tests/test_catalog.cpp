#include "chinoid/catalog.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

TEST_SUITE("catalog") {
  TEST_CASE("rank 3 and 4 catalogs verify in full") {
    const CatalogReport three = prime_catalog_check(3);
    CHECK(three.all_pass);
    CHECK(three.lines.size() == 5);  // 2 + 1 + 2 relations
    const CatalogReport four = prime_catalog_check(4);
    CHECK(four.all_pass);
    CHECK(four.lines.size() == 19);  // 5 + 3 + 3 + 3 + 5 relations
  }

  TEST_CASE("spot relations for rank 3") {
    const auto leaves = enumerate_leaves(3);
    const Branch& from_dot = leaves[0];  // arc around the dot at 2
    const Branch& arc12 = leaves[1];
    // a2 a3 = a3 a2 and a2 a1 central behind the (1,2) arc
    CHECK(congruent_mod(arc12, {2, 3}, {3, 2}));
    for (Gen i = 1; i <= 3; ++i) {
      CHECK(congruent_mod(arc12, {i, 2, 1}, {2, 1, i}));
    }
    // a2 central behind the dot; a1 and a3 stay apart there
    for (Gen i = 1; i <= 3; ++i) {
      CHECK(congruent_mod(from_dot, {i, 2}, {2, i}));
    }
    CHECK(!congruent_mod(from_dot, {1, 3}, {3, 1}));
  }

  TEST_CASE("entry lookup") {
    CHECK(catalog_entry_for(enumerate_leaves(4)[2].tip()) != nullptr);
    CHECK(catalog_entry_for(Diagram::level1_dot(4, 2)) == nullptr);
    CHECK_THROWS_AS(prime_catalog(5), std::invalid_argument);
  }

  TEST_CASE("relation word pairs") {
    CatalogRelation central;
    central.kind = CatalogRelation::Kind::Central;
    central.element = {2, 1};
    const auto pairs = central.word_pairs(3);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].first == Word{1, 2, 1});
    CHECK(pairs[0].second == Word{2, 1, 1});
    CHECK(central.text() == "a2a1 central");
  }

  TEST_CASE("catalog check through the verify wrapper") {
    CHECK(verify::prime_catalog_fidelity(3, kDefaultClassBudget).pass);
    CHECK(verify::prime_catalog_fidelity(4, kDefaultClassBudget).pass);
  }
}
