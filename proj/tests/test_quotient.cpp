#include "chinoid/quotient.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

TEST_SUITE("quotient") {
  TEST_CASE("quotient word equality") {
    // both letters sit in the commutative low block
    const QuotientWord x{4, 3, 3, {1, 2}};
    const QuotientWord y{4, 3, 3, {2, 1}};
    CHECK(quotient_equal(x, y));
    CHECK(quotient_equal(x, x));

    const QuotientWord rep{3, 1, 2, {3, 3}};
    CHECK(quotient_equal(rep, rep));

    // outside any commutative block the order matters
    const QuotientWord a{3, 2, 2, {1, 3}};
    const QuotientWord b{3, 2, 2, {3, 1}};
    CHECK(!quotient_equal(a, b));

    CHECK_THROWS_AS(quotient_equal(x, a), std::invalid_argument);
  }

  TEST_CASE("first-level letter images match the defining tables") {
    for (int n : {3, 4, 5}) {
      // dot at s: a_s maps to the cyclic generator, everything else passes
      // through untouched
      for (int s = 2; s <= n - 1; ++s) {
        const Branch b(Diagram::level1_dot(n, s));
        for (Gen i = 1; i <= n; ++i) {
          const ProductElement img = generator_image(b, i);
          REQUIRE(img.factors.size() == 1);
          CHECK(img.factors[0].kind == StepKind::Dot);
          CHECK(img.factors[0].g == Cyclic{i == s ? 1 : 0});
          CHECK(img.quotient.word == (i == s ? Word{} : Word{i}));
        }
      }
      // arc (s, s+1): letters at or below s pick up p (with g exactly at
      // s), letters above pick up q; the two arc letters leave the quotient
      for (int s = 1; s <= n - 1; ++s) {
        const Branch b(Diagram::level1_arc(n, s));
        for (Gen i = 1; i <= n; ++i) {
          const ProductElement img = generator_image(b, i);
          REQUIRE(img.factors.size() == 1);
          const Factor& f = img.factors[0];
          CHECK(f.kind == StepKind::Arc);
          CHECK(f.b == (i <= s ? Bicyclic{1, 0} : Bicyclic{0, 1}));
          CHECK(f.g == Cyclic{i == s ? 1 : 0});
          const bool absorbed = i == s || i == s + 1;
          CHECK(img.quotient.word == (absorbed ? Word{} : Word{i}));
        }
      }
    }
  }

  TEST_CASE("letter images along a branch") {
    const Branch arc12(Diagram::level1_arc(4, 1));
    const ProductElement a1 = generator_image(arc12, 1);
    CHECK(a1.quotient.word.empty());
    CHECK(a1.factors.size() == 1);
    CHECK(a1.factors[0].b == Bicyclic{1, 0});
    CHECK(a1.factors[0].g == Cyclic{1});
    const ProductElement a3 = generator_image(arc12, 3);
    CHECK(a3.quotient.word == Word{3});
    CHECK(a3.factors[0].b == Bicyclic{0, 1});
    CHECK(a3.factors[0].g == Cyclic{0});
  }

  TEST_CASE("word images") {
    // the arc pair collapses: image of a2 a1 is the cyclic generator alone
    const Branch arc(Diagram::level1_arc(2, 1));
    const ProductElement img = apply_branch(arc, {2, 1});
    CHECK(img.quotient.word.empty());
    CHECK(img.factors[0].b == Bicyclic{0, 0});
    CHECK(img.factors[0].g == Cyclic{1});

    const ProductElement id = apply_branch(arc, {});
    CHECK(id.quotient.word.empty());
    CHECK(id.factors[0].b.is_identity());
    CHECK(id.factors[0].g == Cyclic{0});

    const Branch dot(Diagram::level1_dot(3, 2));
    const ProductElement dot_img = apply_branch(dot, {2});
    CHECK(dot_img.quotient.word.empty());
    CHECK(dot_img.factors[0].kind == StepKind::Dot);
    CHECK(dot_img.factors[0].g == Cyclic{1});
  }

  TEST_CASE("congruences through branches") {
    const Branch arc(Diagram::level1_arc(2, 1));
    CHECK(congruent_mod(arc, {2, 1, 1}, {1, 2, 1}));
    CHECK(congruent_mod(arc, {1, 2}, {1, 2}));

    const Branch dot(Diagram::level1_dot(3, 2));
    CHECK(congruent_mod(dot, {1, 2}, {2, 1}));
    CHECK(!congruent_mod(dot, {1, 3}, {3, 1}));
  }

  TEST_CASE("kernel generating pairs have equal images") {
    for (int n = 2; n <= 5; ++n) {
      const auto result = verify::kernel_generator_images(n, kDefaultClassBudget);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("relation families hold in every matching quotient") {
    for (int n = 3; n <= 6; ++n) {
      const auto result =
          verify::quotient_relation_families(n, kDefaultClassBudget);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("images are multiplicative") {
    const auto result =
        verify::branch_multiplicativity(3, kDefaultSeed, kDefaultClassBudget);
    CHECK_MESSAGE(result.pass, result.detail);
  }

  TEST_CASE("congruences only grow along branches") {
    for (int n = 3; n <= 4; ++n) {
      const auto result =
          verify::congruence_growth(n, kDefaultSeed, kDefaultClassBudget);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("distinct elements are separated by some leaf") {
    const auto result =
        verify::embedding_separation(2, 5, kDefaultClassBudget);
    CHECK_MESSAGE(result.pass, result.detail);
  }

  TEST_CASE("json round trip") {
    const Branch dot2(Diagram::level1_dot(3, 2));
    const Branch full = dot2.extended(dot2.tip().with_arc(1, 3));
    const ProductElement img = apply_branch(full, {2, 1, 3});
    const ProductElement back = ProductElement::from_json(img.to_json());
    CHECK(back.quotient == img.quotient);
    CHECK(back.factors == img.factors);

    const auto parsed = ProductElement::from_json(nlohmann::json::parse(
        R"({"quotient":"1","factors":[{"arc":{"p":1,"q":0,"g":1}},{"dot":{"g":2}}],"n":4,"u":2,"v":3})"));
    CHECK(parsed.factors.size() == 2);
    CHECK(parsed.factors[0].kind == StepKind::Arc);
    CHECK(parsed.factors[1].kind == StepKind::Dot);
    CHECK(parsed.factors[1].g == Cyclic{2});
  }
}
