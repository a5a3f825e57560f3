#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chinoid/diagram.hpp"
#include "chinoid/quotient.hpp"
#include "chinoid/word.hpp"

namespace chinoid {

/// One generating relation of a cataloged minimal prime: either a commuting
/// pair of generators or a central element.
struct CatalogRelation {
  enum class Kind { Commute, Central };

  Kind kind = Kind::Commute;
  Word element;   // Commute: {x}; Central: the central word
  Gen other = 0;  // Commute: y

  std::string text() const;

  /// The word pairs this relation asserts equal: (xy, yx) for a commuting
  /// pair, (a_i z, z a_i) for every generator i when z is central.
  std::vector<std::pair<Word, Word>> word_pairs(int n) const;
};

/// One minimal prime: the leaf diagram it belongs to and its generating
/// relations.
struct CatalogEntry {
  std::string name;  // P1, P2, ...
  Diagram leaf;
  std::vector<CatalogRelation> relations;
};

/// The golden minimal-prime catalogs for rank 3 and rank 4.
const std::vector<CatalogEntry>& prime_catalog(int n);

/// Catalog entry whose leaf diagram matches `leaf`, or nullptr.
const CatalogEntry* catalog_entry_for(const Diagram& leaf);

struct CatalogCheckLine {
  std::string leaf_name;
  std::string relation;
  bool pass = false;
};

struct CatalogReport {
  int n = 0;
  std::vector<CatalogCheckLine> lines;
  bool all_pass = false;
};

/// Verifies through the branch images that every cataloged relation holds
/// in the quotient of each leaf, and that leaves and catalog entries match
/// one for one. Throws CatalogMismatch naming the first failure.
CatalogReport prime_catalog_check(int n,
                                  std::size_t budget = kDefaultClassBudget);

}  // namespace chinoid
