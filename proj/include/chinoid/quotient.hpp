#pragma once

#include <vector>

#include "chinoid/bicyclic.hpp"
#include "chinoid/congruence.hpp"
#include "chinoid/diagram.hpp"
#include "chinoid/word.hpp"
#include "json.hpp"

namespace chinoid {

/// A word in the quotient monoid attached to a used interval lo..hi: the
/// letters avoid lo..hi, and equality holds modulo the defining relations
/// together with commutativity inside {1..lo-1} and inside {hi+1..n}.
struct QuotientWord {
  int n = 0;
  int lo = 0;
  int hi = 0;
  Word word;

  bool operator==(const QuotientWord&) const = default;
};

/// Monoid equality in the quotient: same frame, and `y.word` lies in the
/// closure of `x.word` under the defining rewrites plus the two commutation
/// families. Equal length and letter multiset are necessary, so mismatches
/// are rejected up front.
bool quotient_equal(const QuotientWord& x, const QuotientWord& y,
                    std::size_t budget = kDefaultClassBudget);

/// One factor of a branch image: an arc step carries a bicyclic part and a
/// cyclic exponent, a dot step a cyclic exponent only.
struct Factor {
  StepKind kind = StepKind::Arc;
  Bicyclic b;
  Cyclic g;

  bool operator==(const Factor&) const = default;
};

/// An element of the product monoid targeted by a branch homomorphism:
/// quotient part plus one factor per construction step, first level first.
struct ProductElement {
  QuotientWord quotient;
  std::vector<Factor> factors;

  /// Componentwise product; both sides must share frame and factor shape.
  friend ProductElement operator*(const ProductElement& x,
                                  const ProductElement& y);

  /// {"quotient":"a3 a1","factors":[{"arc":{"p":1,"q":0,"g":1}},
  ///  {"dot":{"g":2}}],"n":4,"u":2,"v":3}
  nlohmann::ordered_json to_json() const;
  static ProductElement from_json(const nlohmann::json& j);
};

/// Image of a single generator under the branch homomorphism. A generator
/// still unused when a step happens picks up that step's letter image; an
/// already-absorbed generator passes through as the identity.
ProductElement generator_image(const Branch& branch, Gen gen);

/// The identity of the branch's target monoid.
ProductElement identity_element(const Branch& branch);

/// Image of a word: the product of its letter images.
ProductElement apply_branch(const Branch& branch, const Word& w);

/// Equality in the target monoid: exact on the bicyclic and cyclic factors,
/// quotient_equal on the quotient part.
bool product_equal(const ProductElement& x, const ProductElement& y,
                   std::size_t budget = kDefaultClassBudget);

/// Whether x and y are congruent modulo the branch's kernel congruence,
/// i.e. have equal images.
bool congruent_mod(const Branch& branch, const Word& x, const Word& y,
                   std::size_t budget = kDefaultClassBudget);

}  // namespace chinoid
