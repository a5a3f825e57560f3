#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chinoid/diagram.hpp"
#include "chinoid/errors.hpp"
#include "chinoid/scalar.hpp"
#include "chinoid/word.hpp"
#include "json.hpp"

namespace chinoid {

/// Basis label (i_1, ..., i_s); all entries nonnegative.
using MultiIndex = std::vector<long>;

/// A finite scalar-weighted combination of basis vectors. Zero coefficients
/// are never stored; the empty map is the zero vector.
class SparseVector {
 public:
  explicit SparseVector(int arity);
  static SparseVector basis(const MultiIndex& index);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }

  void add_term(const MultiIndex& index, const Scalar& coeff);
  SparseVector scaled(const Scalar& c) const;
  friend SparseVector operator+(const SparseVector& x, const SparseVector& y);

  bool operator==(const SparseVector&) const = default;

  /// {"(2,1)":"1","(0,0)":"-3/2"}
  nlohmann::ordered_json to_json() const;
  static SparseVector from_json(const nlohmann::json& j, int arity);

  std::string to_string() const;

 private:
  int arity_;
  std::map<MultiIndex, Scalar> terms_;
};

/// How one generator acts on a basis vector: check the guards (positions
/// that must be positive, otherwise the result is zero), shift every index
/// position by its delta, and multiply by the scalar. An index pushed below
/// zero also gives zero.
struct GeneratorAction {
  Scalar scalar = 1;
  std::vector<int> shift;  // one delta per index position
  std::vector<int> guard;  // 1-based positions required to be > 0

  bool operator==(const GeneratorAction&) const = default;
};

/// A representation acting on the multi-indexed basis by index shifts and
/// scalars. The action table is plain data, so the one-basis-vector-to-one
/// property is visible by construction and instances serialize directly.
class MonomialRep {
 public:
  MonomialRep(int rank, int arity, std::vector<GeneratorAction> actions);

  int rank() const { return rank_; }
  int arity() const { return arity_; }
  const GeneratorAction& action(Gen j) const;

  /// A copy with one generator's action replaced (used by corruption
  /// sweeps).
  MonomialRep with_action(Gen j, GeneratorAction action) const;

  /// Image of one generator on one basis index; nullopt means zero.
  std::optional<std::pair<MultiIndex, Scalar>> apply(
      Gen j, const MultiIndex& index) const;

  bool operator==(const MonomialRep&) const = default;

  /// {"n":2,"s":1,"actions":[{"scalar":"3/2","shift":[1],"guard":[]},...]}
  nlohmann::ordered_json to_json() const;
  static MonomialRep from_json(const nlohmann::json& j);

 private:
  int rank_;
  int arity_;
  std::vector<GeneratorAction> actions_;
};

/// Left action of a word, rightmost letter first; vanished terms drop out.
SparseVector act(const MonomialRep& rep, const Word& w, const SparseVector& v);

/// The simple module V(lambda_1..lambda_s) for even rank n = 2s: generator
/// j <= s scales by lambda_j and shifts positions j..s up; generator j > s
/// shifts positions n-j+1..s down, guarded by positivity.
MonomialRep standard_module(int rank, const std::vector<Scalar>& lambdas);

struct RelationReport {
  bool pass = true;
  std::string witness;  // first failing triple and basis vector
};

/// Checks, for every i <= j <= k and every basis vector in [0..box]^s, that
/// the three spellings a_j a_k a_i, a_k a_j a_i, a_k a_i a_j act equally.
RelationReport verify_relations(const MonomialRep& rep, long box);

/// Confirms that each two-letter product a_{n-i+1} a_i (i <= s) acts as one
/// constant scalar on the boxed basis, and returns the scalars. These
/// constants separate non-isomorphic parameter choices. Throws NotScalar
/// with a witness otherwise.
std::vector<std::pair<int, Scalar>> central_scalars(const MonomialRep& rep,
                                                    long box);

struct ReachResult {
  Word word;
  Scalar coeff;
};

/// For v != 0, the lowering word a_{s+1}^{m_s} (a_{s+2} a_s)^{m_{s-1}} ...
/// (a_n a_2)^{m_1} built from the lexicographic maxima m of v's support,
/// together with the nonzero scalar c such that word . v = c e_{0..0}.
ReachResult cyclic_reach(const MonomialRep& rep, const SparseVector& v);

/// Builds the rank n = 2s module on arity-s indices from a rank n-2 module
/// `base` of arity s-1: generators below s act as in `base` with the last
/// index raised, generator s scales by `lambda_top` and raises the last
/// index, generator s+1 lowers it guarded, and generators above s+1 act as
/// in `base` with the last index lowered guarded.
///
/// The block-commutativity hypotheses on `base` are checked by a boxed
/// sweep (HypothesisViolated on failure). Cyclic reachability of `base` is
/// not finitely checkable and is not verified here; modules produced by
/// standard_module satisfy it (see cyclic_reach).
MonomialRep inductive_extend(const MonomialRep& base, const Scalar& lambda_top,
                             long check_box = 4);

/// A parameterized family of irreducible monomial representations.
struct Family {
  std::string id;
  int rank = 0;
  int arity = 0;
  std::size_t param_count = 0;
  std::string signature;  // constraint summary, e.g. "lambda != 0; mu free"
  std::function<MonomialRep(const std::vector<Scalar>&)> make;
};

/// The complete catalog for ranks 2, 3 and 4. Constructors enforce the
/// parameter constraints (ConstraintViolation).
const std::vector<Family>& family_catalog(int n);

/// True iff every generating relation of the leaf's cataloged prime acts
/// identically through `rep` on the boxed basis.
bool annihilator_membership(const MonomialRep& rep, const Branch& leaf_branch,
                            long box);

/// All indices in [0..box]^arity, lexicographic order.
std::vector<MultiIndex> box_indices(int arity, long box);

/// Every generator maps every boxed basis vector to zero or a single scaled
/// basis vector.
bool monomial_on_box(const MonomialRep& rep, long box);

/// Structural coherence: the guarded positions are exactly the ones shifted
/// downward.
bool guards_match_negative_shifts(const MonomialRep& rep);

/// Fixed default seed for randomized sweeps, recorded in reports.
inline constexpr std::uint64_t kDefaultSeed = 0xC41E5E;

/// A random nonzero vector with small rational coefficients and indices in
/// [0..max_index]^arity.
SparseVector random_vector(int arity, long max_index, std::mt19937_64& rng);

}  // namespace chinoid
