#include "chinoid/bicyclic.hpp"
#include "chinoid/verify.hpp"
#include "doctest.h"

using namespace chinoid;

TEST_SUITE("bicyclic") {
  TEST_CASE("defining relation and identity") {
    const Bicyclic p{1, 0};
    const Bicyclic q{0, 1};
    CHECK(q * p == Bicyclic{});
    CHECK(Bicyclic{} * p == p);
    CHECK(q * Bicyclic{} == q);
    // pq is idempotent: free reduction of pqpq deletes the inner qp
    CHECK(Bicyclic{1, 1} * Bicyclic{1, 1} == Bicyclic{1, 1});
  }

  TEST_CASE("cyclic exponents add") {
    CHECK(Cyclic{2} * Cyclic{-3} == Cyclic{-1});
  }

  TEST_CASE("exhaustive laws and reduction oracle") {
    const auto result = verify::bicyclic_laws();
    CHECK_MESSAGE(result.pass, result.detail);
  }
}
