#include "chinoid/diagram.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

TEST_SUITE("diagram") {
  TEST_CASE("first level") {
    CHECK_THROWS_AS(first_level(1), RankTooSmall);
    CHECK(first_level(2) == std::vector<Diagram>{Diagram::level1_arc(2, 1)});
    const auto level3 = first_level(3);
    REQUIRE(level3.size() == 3);
    CHECK(level3[0] == Diagram::level1_dot(3, 2));
    CHECK(level3[1] == Diagram::level1_arc(3, 1));
    CHECK(level3[2] == Diagram::level1_arc(3, 2));
    CHECK(first_level(4).size() == 5);
    for (int n = 2; n <= 8; ++n) {
      CHECK(first_level(n).size() == static_cast<std::size_t>(2 * n - 3));
    }
  }

  TEST_CASE("children") {
    // a first-level dot grows only into the arc around it
    const auto dot_kids = Diagram::level1_dot(3, 2).children();
    REQUIRE(dot_kids.size() == 1);
    CHECK(dot_kids[0].arcs() == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(dot_kids[0].dots() == std::vector<int>{2});

    // after an arc: enclosing arc, then the two boundary dots
    const auto arc_kids = Diagram::level1_arc(4, 2).children();
    REQUIRE(arc_kids.size() == 3);
    CHECK(arc_kids[0].arcs() ==
          std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
    CHECK(arc_kids[1].dots() == std::vector<int>{1});
    CHECK(arc_kids[2].dots() == std::vector<int>{4});

    CHECK_THROWS_AS(Diagram::level1_arc(2, 1).children(), IsLeaf);

    // a dot pinned against the boundary is a dead end, not a leaf
    const Diagram stuck = arc_kids[1];
    CHECK(!is_leaf(stuck));
    CHECK(stuck.children().empty());

    CHECK(Diagram::root(3).children() == first_level(3));
  }

  TEST_CASE("leaf predicate") {
    CHECK(is_leaf(Diagram::level1_arc(3, 1)));
    CHECK(!is_leaf(Diagram::level1_dot(3, 2)));
    CHECK(!is_leaf(Diagram::root(3)));
  }

  TEST_CASE("a worked rank-15 construction ends in a leaf") {
    Branch b(Diagram::level1_arc(15, 10));
    b = b.extended(b.tip().with_arc(9, 12));
    b = b.extended(b.tip().with_dot(8));
    b = b.extended(b.tip().with_dot(7));
    b = b.extended(b.tip().with_dot(6));
    b = b.extended(b.tip().with_arc(5, 13));
    b = b.extended(b.tip().with_dot(14));
    b = b.extended(b.tip().with_arc(4, 15));
    CHECK(is_leaf(b.tip()));
    CHECK(b.tip().arcs() == std::vector<std::pair<int, int>>{
                                {4, 15}, {5, 13}, {9, 12}, {10, 11}});
    CHECK(b.tip().dots() == std::vector<int>{6, 7, 8, 14});
    CHECK(b.tip().lo() == 4);
    CHECK(b.tip().hi() == 15);
  }

  TEST_CASE("leaf enumeration") {
    const auto two = enumerate_leaves(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].tip() == Diagram::level1_arc(2, 1));

    const auto three = enumerate_leaves(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].tip().dots() == std::vector<int>{2});  // arc around dot 2
    CHECK(three[1].tip() == Diagram::level1_arc(3, 1));
    CHECK(three[2].tip() == Diagram::level1_arc(3, 2));

    CHECK(enumerate_leaves(4).size() == 5);
    CHECK_THROWS_AS(enumerate_leaves(1), RankTooSmall);
  }

  TEST_CASE("leaf counts stay frozen") {
    const auto result = verify::leaf_counts();
    CHECK_MESSAGE(result.pass, result.detail);
  }

  TEST_CASE("tree shape invariants") {
    for (int n = 2; n <= 7; ++n) {
      const auto result = verify::tree_shape(n);
      CHECK_MESSAGE(result.pass, result.detail);
    }
  }

  TEST_CASE("branch validation") {
    Branch b(Diagram::level1_arc(4, 2));
    CHECK_THROWS_AS(b.extended(Diagram::level1_arc(4, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Branch(Diagram::root(4)), std::invalid_argument);
    const auto steps = branch_steps(b.extended(b.tip().with_dot(1)));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0] == BranchStep{StepKind::Arc, 2, 3});
    CHECK(steps[1] == BranchStep{StepKind::Dot, 1, 1});
  }

  TEST_CASE("json and ascii") {
    const Diagram d = Diagram::from_json(
        nlohmann::json::parse(R"({"n":4,"arcs":[[2,3]],"dots":[1]})"));
    CHECK(d.arcs() == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(d.dots() == std::vector<int>{1});
    CHECK(Diagram::from_json(d.to_json()) == d);
    const auto overlapping =
        nlohmann::json::parse(R"({"n":4,"arcs":[[1,2],[2,3]],"dots":[]})");
    CHECK_THROWS_AS(Diagram::from_json(overlapping), std::invalid_argument);
    const auto gapped =
        nlohmann::json::parse(R"({"n":4,"arcs":[],"dots":[1,3]})");
    CHECK_THROWS_AS(Diagram::from_json(gapped), std::invalid_argument);
    const auto p2 = enumerate_leaves(3)[0].tip();
    CHECK(p2.ascii() == "( ● )");
    CHECK(Diagram::level1_arc(3, 2).ascii() == "○ ( )");
  }
}
