#include "chinoid/rep.hpp"

#include "chinoid/catalog.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

namespace {

const Scalar kL(3, 2);
const Scalar kM(2);

MonomialRep v4() { return standard_module(4, {kL, kM}); }

MonomialRep family_rep(int n, const std::string& id,
                       const std::vector<Scalar>& params) {
  for (const Family& f : family_catalog(n)) {
    if (f.id == id) {
      return f.make(params);
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("sparse vectors") {
    SparseVector v(2);
    CHECK(v.is_zero());
    v.add_term({1, 0}, Scalar(1, 2));
    v.add_term({1, 0}, Scalar(-1, 2));
    CHECK(v.is_zero());
    v.add_term({2, 1}, 1);
    const std::string expected = R"x({"(2,1)":"1"})x";
    CHECK(v.to_json().dump() == expected);
    CHECK(SparseVector::from_json(v.to_json(), 2) == v);
    CHECK_THROWS_AS(v.add_term({1}, 1), std::invalid_argument);
  }

  TEST_CASE("standard module actions") {
    const MonomialRep z = standard_module(2, {kL});
    CHECK(act(z, {1}, SparseVector::basis({3})) ==
          SparseVector::basis({4}).scaled(kL));
    CHECK(act(z, {2}, SparseVector::basis({3})) == SparseVector::basis({2}));
    CHECK(act(z, {2}, SparseVector::basis({0})).is_zero());

    const MonomialRep v = v4();
    CHECK(act(v, {3}, SparseVector::basis({2, 3})) ==
          SparseVector::basis({2, 2}));
    CHECK(act(v, {4}, SparseVector::basis({2, 3})) ==
          SparseVector::basis({1, 2}));
    CHECK(act(v, {4}, SparseVector::basis({0, 3})).is_zero());

    CHECK_THROWS_AS(standard_module(3, {kL}), OddRank);
    CHECK_THROWS_AS(standard_module(4, {kL, Scalar(0)}), ZeroParameter);
  }

  TEST_CASE("acting by words") {
    const MonomialRep v = v4();
    const SparseVector e = SparseVector::basis({1, 2});
    CHECK(act(v, {}, e) == e);
    // a3 a1 bumps the first index; a4 a1 and a3 a2 are the constants
    CHECK(act(v, {3, 1}, e) == SparseVector::basis({2, 2}).scaled(kL));
    CHECK(act(v, {4, 1}, e) == e.scaled(kL));
    CHECK(act(v, {3, 2}, e) == e.scaled(kM));
    CHECK_THROWS_AS(act(v, {5}, e), std::invalid_argument);
    CHECK_THROWS_AS(act(v, {1}, SparseVector::basis({1})),
                    std::invalid_argument);
  }

  TEST_CASE("relation sweep and a breaking corruption") {
    CHECK(verify_relations(v4(), 4).pass);
    // flattening the second index of a4 breaks a mixed relation
    GeneratorAction bad = v4().action(4);
    bad.shift[1] = 0;
    const RelationReport report = verify_relations(v4().with_action(4, bad), 3);
    CHECK(!report.pass);
    CHECK(!report.witness.empty());
  }

  TEST_CASE("central scalars") {
    const auto scalars = central_scalars(v4(), 4);
    REQUIRE(scalars.size() == 2);
    CHECK(scalars[0] == std::pair<int, Scalar>{1, kL});
    CHECK(scalars[1] == std::pair<int, Scalar>{2, kM});

    const auto single = central_scalars(standard_module(2, {Scalar(3)}), 4);
    CHECK(single == std::vector<std::pair<int, Scalar>>{{1, Scalar(3)}});

    CHECK(central_scalars(standard_module(4, {kM, kM}), 4) != scalars);

    GeneratorAction bad = v4().action(1);
    bad.shift[0] = 0;
    CHECK_THROWS_AS(central_scalars(v4().with_action(1, bad), 3), NotScalar);
    CHECK_THROWS_AS(central_scalars(family_rep(3, "1", {kL, kM}), 3),
                    std::invalid_argument);
  }

  TEST_CASE("cyclic reach") {
    const MonomialRep v = v4();
    const auto at_origin = cyclic_reach(v, SparseVector::basis({0, 0}));
    CHECK(at_origin.word.empty());
    CHECK(at_origin.coeff == 1);

    const auto from21 = cyclic_reach(v, SparseVector::basis({2, 1}));
    CHECK(from21.word == Word{3, 4, 2, 4, 2});
    CHECK(from21.coeff == kM * kM);

    const MonomialRep z = standard_module(2, {kL});
    SparseVector mixed(1);
    mixed.add_term({3}, 1);
    mixed.add_term({1}, 1);
    const auto reach = cyclic_reach(z, mixed);
    CHECK(reach.word == Word{2, 2, 2});
    CHECK(reach.coeff == 1);

    CHECK_THROWS_AS(cyclic_reach(v, SparseVector(2)), ZeroVector);
  }

  TEST_CASE("inductive construction") {
    const MonomialRep z = standard_module(2, {kL});
    const MonomialRep w4 = inductive_extend(z, kM);
    CHECK(w4 == v4());
    const MonomialRep w6 = inductive_extend(w4, Scalar(5, 3));
    CHECK(w6 == standard_module(6, {kL, kM, Scalar(5, 3)}));
    // the top generator is guarded on the new index
    CHECK(act(w6, {6}, SparseVector::basis({1, 1, 0})).is_zero());

    CHECK_THROWS_AS(inductive_extend(z, Scalar(0)), ZeroParameter);
    CHECK_THROWS_AS(inductive_extend(family_rep(3, "1", {kL, kM}), kL),
                    HypothesisViolated);
    // a base whose low generators fail to commute is rejected
    const MonomialRep bad(4, 2,
                          {GeneratorAction{1, {1, 0}, {}},
                           GeneratorAction{1, {-1, 0}, {1}},
                           GeneratorAction{1, {0, 0}, {}},
                           GeneratorAction{1, {0, 0}, {}}});
    CHECK_THROWS_AS(inductive_extend(bad, kL), HypothesisViolated);
  }

  TEST_CASE("family catalog") {
    const MonomialRep f2 = family_rep(3, "2", {Scalar(2), Scalar(5)});
    CHECK(act(f2, {1}, SparseVector::basis({1})) ==
          SparseVector::basis({2}).scaled(Scalar(2)));
    CHECK(act(f2, {2}, SparseVector::basis({1})) ==
          SparseVector::basis({1}).scaled(Scalar(5)));
    CHECK(act(f2, {3}, SparseVector::basis({1})) == SparseVector::basis({0}));

    const MonomialRep f5 = family_rep(4, "5", {kL, kM, Scalar(1)});
    CHECK(act(f5, {3}, SparseVector::basis({0})) == SparseVector::basis({1}));

    CHECK_THROWS_AS(family_rep(4, "3.2", {kL, Scalar(1), Scalar(1)}),
                    ConstraintViolation);
    CHECK_THROWS_AS(family_rep(2, "Z", {Scalar(0)}), ConstraintViolation);
    CHECK_THROWS_AS(family_catalog(5), std::invalid_argument);

    for (int n : {2, 3, 4}) {
      const auto result = verify::family_relation_compliance(n, 5);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("annihilator membership") {
    const auto leaves = enumerate_leaves(4);
    const Branch* p5 = nullptr;
    for (const Branch& b : leaves) {
      if (catalog_entry_for(b.tip())->name == "P5") {
        p5 = &b;
      }
    }
    REQUIRE(p5 != nullptr);
    CHECK(!annihilator_membership(family_rep(4, "1", {kL, kM, Scalar(5, 3)}),
                                  *p5, 4));
    for (int n : {3, 4}) {
      const auto result = verify::annihilator_catalog(n, 4);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("monomiality and guard coherence") {
    for (int n : {2, 3, 4, 6}) {
      const auto result = verify::monomiality_sweep(n, 5);
      CHECK_MESSAGE(result.pass, result.detail);
    }
    CHECK(guards_match_negative_shifts(v4()));
    GeneratorAction unguarded = v4().action(4);
    unguarded.guard = {1};
    CHECK(!guards_match_negative_shifts(v4().with_action(4, unguarded)));
  }

  TEST_CASE("vanishing products force a vanishing factor") {
    for (int n : {2, 3, 4}) {
      const auto result = verify::zero_pair_consequence(n, 4);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("six mixed-letter identities") {
    for (int n : {2, 4, 6}) {
      const auto result = verify::six_case_identities(n, 3);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("corruption sweep") {
    const auto result = verify::mutation_sensitivity(4);
    CHECK_MESSAGE(result.pass, result.detail);
  }

  TEST_CASE("reach sweep on random vectors") {
    for (int n : {2, 4, 6}) {
      const auto result = verify::cyclic_reach_sweep(n, 25, 4, kDefaultSeed);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("json round trip") {
    const MonomialRep v = v4();
    CHECK(MonomialRep::from_json(v.to_json()) == v);
    const auto j = v.to_json();
    CHECK(j.at("actions")[0].at("scalar") == "3/2");
    CHECK(j.at("actions")[0].at("shift") == std::vector<int>{1, 1});
    CHECK(j.at("actions")[3].at("guard") == std::vector<int>{1, 2});
  }
}
