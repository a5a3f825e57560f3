#include "chinoid/catalog.hpp"

#include <stdexcept>

namespace chinoid {

namespace {

CatalogRelation commute(Gen x, Gen y) {
  CatalogRelation r;
  r.kind = CatalogRelation::Kind::Commute;
  r.element = {x};
  r.other = y;
  return r;
}

CatalogRelation central(Word z) {
  CatalogRelation r;
  r.kind = CatalogRelation::Kind::Central;
  r.element = std::move(z);
  return r;
}

Diagram leaf_diagram(int n, std::vector<std::pair<int, int>> arcs,
                     std::vector<int> dots) {
  nlohmann::ordered_json j{{"n", n}, {"arcs", arcs}, {"dots", dots}};
  return Diagram::from_json(j);
}

std::vector<CatalogEntry> build_rank3() {
  return {
      {"P1",
       leaf_diagram(3, {{1, 2}}, {}),
       {commute(2, 3), central({2, 1})}},
      {"P2",
       leaf_diagram(3, {{1, 3}}, {2}),
       {central({2})}},
      {"P3",
       leaf_diagram(3, {{2, 3}}, {}),
       {commute(1, 2), central({3, 2})}},
  };
}

std::vector<CatalogEntry> build_rank4() {
  return {
      {"P1",
       leaf_diagram(4, {{1, 2}}, {}),
       {commute(2, 3), commute(2, 4), commute(3, 4), central({2, 1}),
        central({3, 1})}},
      {"P2",
       leaf_diagram(4, {{1, 3}}, {2}),
       {commute(3, 4), central({2}), central({3, 1})}},
      {"P3",
       leaf_diagram(4, {{1, 4}, {2, 3}}, {}),
       {commute(1, 2), commute(3, 4), central({3, 2})}},
      {"P4",
       leaf_diagram(4, {{2, 4}}, {3}),
       {commute(1, 2), central({3}), central({4, 2})}},
      {"P5",
       leaf_diagram(4, {{3, 4}}, {}),
       {commute(1, 2), commute(1, 3), commute(2, 3), central({4, 2}),
        central({4, 3})}},
  };
}

}  // namespace

std::string CatalogRelation::text() const {
  if (kind == Kind::Commute) {
    return "a" + std::to_string(element[0]) + ",a" + std::to_string(other) +
           " commute";
  }
  std::string z;
  for (Gen g : element) {
    z += "a" + std::to_string(g);
  }
  return z + " central";
}

std::vector<std::pair<Word, Word>> CatalogRelation::word_pairs(int n) const {
  std::vector<std::pair<Word, Word>> out;
  if (kind == Kind::Commute) {
    out.emplace_back(Word{element[0], other}, Word{other, element[0]});
    return out;
  }
  for (Gen i = 1; i <= n; ++i) {
    Word left{i};
    left.insert(left.end(), element.begin(), element.end());
    Word right = element;
    right.push_back(i);
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

const std::vector<CatalogEntry>& prime_catalog(int n) {
  static const std::vector<CatalogEntry> rank3 = build_rank3();
  static const std::vector<CatalogEntry> rank4 = build_rank4();
  if (n == 3) {
    return rank3;
  }
  if (n == 4) {
    return rank4;
  }
  throw std::invalid_argument("the prime catalog covers ranks 3 and 4 only");
}

const CatalogEntry* catalog_entry_for(const Diagram& leaf) {
  for (const CatalogEntry& entry : prime_catalog(leaf.rank())) {
    if (entry.leaf == leaf) {
      return &entry;
    }
  }
  return nullptr;
}

CatalogReport prime_catalog_check(int n, std::size_t budget) {
  const auto& catalog = prime_catalog(n);
  const auto leaves = enumerate_leaves(n);
  if (leaves.size() != catalog.size()) {
    throw CatalogMismatch("rank " + std::to_string(n) + " has " +
                          std::to_string(leaves.size()) +
                          " leaves but the catalog lists " +
                          std::to_string(catalog.size()));
  }
  CatalogReport report;
  report.n = n;
  report.all_pass = true;
  std::vector<bool> matched(catalog.size(), false);
  for (const Branch& leaf : leaves) {
    const CatalogEntry* entry = catalog_entry_for(leaf.tip());
    if (entry == nullptr) {
      throw CatalogMismatch("no catalog entry matches the leaf " +
                            leaf.tip().to_json().dump());
    }
    const std::size_t idx = entry - catalog.data();
    if (matched[idx]) {
      throw CatalogMismatch("two leaves match catalog entry " + entry->name);
    }
    matched[idx] = true;
    for (const CatalogRelation& rel : entry->relations) {
      bool pass = true;
      for (const auto& [left, right] : rel.word_pairs(n)) {
        if (!congruent_mod(leaf, left, right, budget)) {
          pass = false;
          break;
        }
      }
      report.lines.push_back({entry->name, rel.text(), pass});
      if (!pass) {
        report.all_pass = false;
        throw CatalogMismatch(entry->name + ": relation '" + rel.text() +
                              "' fails in the leaf quotient");
      }
    }
  }
  return report;
}

}  // namespace chinoid
