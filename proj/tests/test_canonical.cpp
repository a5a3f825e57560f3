#include <random>

#include "chinoid/canonical.hpp"
#include "chinoid/word.hpp"
#include "doctest.h"

using namespace chinoid;

TEST_SUITE("canonical") {
  TEST_CASE("word text round trip") {
    CHECK(word_to_string({}) == "1");
    CHECK(word_from_string("1").empty());
    CHECK(word_from_string("") == Word{});
    CHECK(word_from_string("a3 a1 a2") == Word{3, 1, 2});
    CHECK(word_to_string({3, 1, 2}) == "a3 a1 a2");
    CHECK_THROWS_AS(word_from_string("b7"), std::invalid_argument);
    CHECK_THROWS_AS(word_from_string("a0"), std::invalid_argument);
    CHECK_THROWS_AS(check_word({1, 5}, 4), std::invalid_argument);
  }

  TEST_CASE("shape matching") {
    CHECK(match_canonical_shape({}, 3).has_value());
    CHECK(match_canonical_shape({2, 1, 2}, 2).has_value());
    CHECK(!match_canonical_shape({2, 2, 1}, 2).has_value());
    CHECK(!match_canonical_shape({1, 2, 1}, 1).has_value());
    // pair partners inside a block may not decrease
    CHECK(match_canonical_shape({3, 1, 3, 2, 3}, 3).has_value());
    CHECK(!match_canonical_shape({3, 2, 3, 1}, 3).has_value());
    // pairs may not follow the plain run
    CHECK(!match_canonical_shape({2, 2, 1, 1}, 2).has_value());

    const auto cf = match_canonical_shape({1, 2, 1}, 2);
    REQUIRE(cf.has_value());
    CHECK(cf->exponent(1, 1) == 1);
    CHECK(cf->exponent(2, 1) == 1);
    CHECK(cf->exponent(2, 2) == 0);
  }

  TEST_CASE("expand and re-match agree on random triangles") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> exp_dist(0, 3);
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 30; ++trial) {
        CanonicalForm cf(n);
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= i; ++j) {
            cf.set_exponent(i, j, exp_dist(rng));
          }
        }
        const auto back = match_canonical_shape(cf.expand(), n);
        REQUIRE(back.has_value());
        CHECK(*back == cf);
      }
    }
  }

  TEST_CASE("degrees count letters in the expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> exp_dist(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
      CanonicalForm cf(4);
      for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= i; ++j) {
          cf.set_exponent(i, j, exp_dist(rng));
        }
      }
      const Word w = cf.expand();
      long total = 0;
      for (Gen i = 1; i <= 4; ++i) {
        CHECK(cf.degree(i) == letter_count(w, i));
        total += cf.degree(i);
      }
      CHECK(cf.total_degree() == total);
      CHECK(total == static_cast<long>(w.size()));
    }
  }

  TEST_CASE("json") {
    CanonicalForm cf(3);
    cf.set_exponent(2, 1, 1);
    cf.set_exponent(3, 3, 1);
    const std::string expected = R"({"n":3,"k":[[0],[1,0],[0,0,1]]})";
    CHECK(cf.to_json().dump() == expected);
    CHECK(CanonicalForm::from_json(cf.to_json()) == cf);
    const auto negative = nlohmann::json::parse(R"({"n":2,"k":[[0],[-1,0]]})");
    CHECK_THROWS_AS(CanonicalForm::from_json(negative), std::invalid_argument);
    const std::vector<std::vector<long>> short_triangle{{0}};
    CHECK_THROWS_AS(CanonicalForm::from_triangle(2, short_triangle),
                    std::invalid_argument);
  }
}
