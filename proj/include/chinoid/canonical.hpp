#pragma once

#include <optional>
#include <vector>

#include "chinoid/word.hpp"
#include "json.hpp"

namespace chinoid {

/// Normal form of a monoid element, stored as the exponent triangle k(i,j)
/// for 1 <= j <= i <= n. The associated word is the concatenation of blocks
///
///   b_i = (a_i a_1)^{k(i,1)} (a_i a_2)^{k(i,2)} ... (a_i a_{i-1})^{k(i,i-1)} a_i^{k(i,i)}
///
/// for i = 1..n. Every congruence class contains exactly one word of this
/// shape.
class CanonicalForm {
 public:
  /// The identity element of rank n (all exponents zero).
  explicit CanonicalForm(int n);

  /// Builds from rows {{k11},{k21,k22},...}; validates shape and signs.
  static CanonicalForm from_triangle(int n,
                                     const std::vector<std::vector<long>>& rows);

  int rank() const { return n_; }

  long exponent(int i, int j) const;
  void set_exponent(int i, int j, long value);

  /// The canonically shaped word this triangle encodes.
  Word expand() const;

  /// Letter count of a_i in the expansion:
  /// k(i,i) + sum_{j<i} k(i,j) + sum_{l>i} k(l,i).
  long degree(Gen i) const;

  /// Total letter count (sum of the per-generator degrees).
  long total_degree() const;

  bool operator==(const CanonicalForm&) const = default;

  /// {"n":3,"k":[[k11],[k21,k22],[k31,k32,k33]]}
  nlohmann::ordered_json to_json() const;
  static CanonicalForm from_json(const nlohmann::json& j);

 private:
  std::size_t cell(int i, int j) const;

  int n_;
  std::vector<long> k_;  // lower triangle, row-major
};

/// Parses `w` against the block shape above. Returns the exponent triangle
/// when `w` is canonically shaped, nullopt otherwise.
std::optional<CanonicalForm> match_canonical_shape(const Word& w, int n);

}  // namespace chinoid
