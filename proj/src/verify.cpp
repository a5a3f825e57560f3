#include "chinoid/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "chinoid/bicyclic.hpp"
#include "chinoid/catalog.hpp"
#include "chinoid/diagram.hpp"
#include "chinoid/quotient.hpp"

namespace chinoid::verify {

namespace {

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, std::move(detail)};
}

/// Runs `body` and converts any exception into a failed result.
CheckResult guarded(const std::string& name,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const ClassBudgetExceeded&) {
    throw;  // budget exhaustion is an operational error, not a verdict
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out;
  Word w(len, 1);
  if (len == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(w);
    int pos = len - 1;
    while (pos >= 0 && w[pos] == n) {
      w[pos] = 1;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++w[pos];
  }
  return out;
}

Word random_word(int n, int maxlen, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(0, maxlen);
  std::uniform_int_distribution<int> letter(1, n);
  Word w(len_dist(rng));
  for (Gen& g : w) {
    g = letter(rng);
  }
  return w;
}

std::string pair_text(const Word& x, const Word& y) {
  return "'" + word_to_string(x) + "' vs '" + word_to_string(y) + "'";
}

}  // namespace

int default_sweep_len(int n) {
  switch (n) {
    case 2:
      return 8;
    case 3:
      return 6;
    case 4:
      return 5;
    default:
      return 3;
  }
}

CheckResult canonical_uniqueness(int n, int maxlen, std::size_t budget) {
  const std::string name = "canonical-uniqueness";
  return guarded(name, [&]() -> CheckResult {
    long classes = 0;
    long words = 0;
    for (int len = 0; len <= maxlen; ++len) {
      std::set<Word> seen;
      long covered = 0;
      for (const Word& w : all_words(n, len)) {
        ++words;
        if (seen.count(w)) {
          continue;
        }
        const auto cls = congruence_class(w, n, budget);
        ++classes;
        std::optional<Word> canonical;
        for (const Word& member : cls) {
          if (member.size() != w.size()) {
            return fail(name, "length not preserved in the class of '" +
                                  word_to_string(w) + "'");
          }
          if (!seen.insert(member).second) {
            return fail(name, "classes overlap at '" +
                                  word_to_string(member) + "'");
          }
          ++covered;
          if (match_canonical_shape(member, n)) {
            if (canonical) {
              return fail(name, "two shaped words in the class of '" +
                                    word_to_string(w) + "': '" +
                                    word_to_string(*canonical) + "' and '" +
                                    word_to_string(member) + "'");
            }
            canonical = member;
          }
        }
        if (!canonical) {
          return fail(name, "no shaped word in the class of '" +
                                word_to_string(w) + "'");
        }
        // normalize agrees from the representative and from another member,
        // and is idempotent on the canonical word
        const CanonicalForm nf = normalize(w, n, budget);
        if (nf.expand() != *canonical) {
          return fail(name, "normalize('" + word_to_string(w) +
                                "') missed the shaped class member");
        }
        if (cls.size() > 1 && normalize(cls[1], n, budget) != nf) {
          return fail(name, "normalize is not constant on the class of '" +
                                word_to_string(w) + "'");
        }
        if (normalize(nf.expand(), n, budget) != nf) {
          return fail(name, "normalize is not idempotent at '" +
                                word_to_string(nf.expand()) + "'");
        }
      }
      if (covered != static_cast<long>(seen.size()) ||
          seen.size() != all_words(n, len).size()) {
        return fail(name, "classes do not partition length " +
                              std::to_string(len));
      }
    }
    return pass(name, std::to_string(words) + " words in " +
                          std::to_string(classes) + " classes, rank " +
                          std::to_string(n) + ", length <= " +
                          std::to_string(maxlen));
  });
}

CheckResult relation_triples_normalize(int n, std::size_t budget) {
  const std::string name = "relation-triples-normalize";
  return guarded(name, [&]() -> CheckResult {
    for (Gen i = 1; i <= n; ++i) {
      for (Gen j = i; j <= n; ++j) {
        for (Gen k = j; k <= n; ++k) {
          const CanonicalForm a = normalize({j, k, i}, n, budget);
          const CanonicalForm b = normalize({k, j, i}, n, budget);
          const CanonicalForm c = normalize({k, i, j}, n, budget);
          if (!(a == b && b == c)) {
            return fail(name, "triple (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," +
                                  std::to_string(k) + ") splits");
          }
        }
      }
    }
    return pass(name);
  });
}

CheckResult multiply_properties(int n, std::uint64_t seed,
                                std::size_t budget) {
  const std::string name = "multiply-properties";
  return guarded(name, [&]() -> CheckResult {
    std::mt19937_64 rng(seed);
    const CanonicalForm one(n);
    for (int trial = 0; trial < 40; ++trial) {
      const CanonicalForm x = normalize(random_word(n, 3, rng), n, budget);
      const CanonicalForm y = normalize(random_word(n, 3, rng), n, budget);
      const CanonicalForm z = normalize(random_word(n, 3, rng), n, budget);
      if (multiply(one, x, budget) != x || multiply(x, one, budget) != x) {
        return fail(name, "identity law fails");
      }
      const CanonicalForm xy = multiply(x, y, budget);
      if (multiply(xy, z, budget) != multiply(x, multiply(y, z, budget),
                                              budget)) {
        return fail(name, "associativity fails");
      }
      for (Gen i = 1; i <= n; ++i) {
        if (xy.degree(i) != x.degree(i) + y.degree(i)) {
          return fail(name, "degree additivity fails at a" +
                                std::to_string(i));
        }
      }
    }
    return pass(name);
  });
}

CheckResult left_divisor_shift(int n, std::size_t budget) {
  const std::string name = "left-divisor-shift";
  return guarded(name, [&]() -> CheckResult {
    for (int len = 0; len <= 3; ++len) {
      for (const Word& x : all_words(n, len)) {
        const Word witness = left_divisor_shift_witness(n, x, budget);
        Word lhs{n};
        lhs.insert(lhs.end(), x.begin(), x.end());
        lhs.push_back(1);
        Word rhs{n, 1};
        rhs.insert(rhs.end(), witness.begin(), witness.end());
        if (normalize(lhs, n, budget) != normalize(rhs, n, budget)) {
          return fail(name, "witness wrong for x='" + word_to_string(x) + "'");
        }
      }
    }
    return pass(name);
  });
}

namespace {

Bicyclic reduce_pq_string(const std::string& letters) {
  // free reduction: delete "qp" until none remains, then read off p^a q^b
  std::string s = letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == 'q' && s[i + 1] == 'p') {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  Bicyclic out;
  for (char c : s) {
    if (c == 'p') {
      ++out.p;
    } else {
      ++out.q;
    }
  }
  return out;
}

std::string pq_string(const Bicyclic& x) {
  return std::string(x.p, 'p') + std::string(x.q, 'q');
}

}  // namespace

CheckResult bicyclic_laws() {
  const std::string name = "bicyclic-laws";
  return guarded(name, [&]() -> CheckResult {
    const Bicyclic one{};
    const Bicyclic p{1, 0};
    const Bicyclic q{0, 1};
    if (!(q * p == one) || !(p * q == Bicyclic{1, 1})) {
      return fail(name, "defining relation broken");
    }
    std::vector<Bicyclic> elems;
    for (long a = 0; a <= 6; ++a) {
      for (long b = 0; b <= 6; ++b) {
        elems.push_back({a, b});
      }
    }
    for (const Bicyclic& x : elems) {
      if (!(one * x == x) || !(x * one == x)) {
        return fail(name, "identity law broken");
      }
      for (const Bicyclic& y : elems) {
        const Bicyclic xy = x * y;
        if (xy.p < 0 || xy.q < 0) {
          return fail(name, "normal form left the monoid");
        }
        if (!(reduce_pq_string(pq_string(x) + pq_string(y)) == xy)) {
          return fail(name, "free-reduction oracle disagrees");
        }
        for (const Bicyclic& z : elems) {
          if (!((x * y) * z == x * (y * z))) {
            return fail(name, "associativity broken");
          }
        }
      }
    }
    return pass(name, "exponents <= 6, exhaustive");
  });
}

CheckResult kernel_generator_images(int n, std::size_t budget) {
  const std::string name = "kernel-generator-images";
  return guarded(name, [&]() -> CheckResult {
    for (const Diagram& d : first_level(n)) {
      const Branch branch(d);
      auto expect_equal = [&](const Word& x, const Word& y) -> bool {
        return congruent_mod(branch, x, y, budget);
      };
      if (d.arcs().empty()) {
        const int s = d.dots().front();
        for (Gen i = 1; i <= s; ++i) {
          for (Gen j = 1; j <= s; ++j) {
            if (!expect_equal({i, j}, {j, i})) {
              return fail(name, "dot " + std::to_string(s) + ": " +
                                    pair_text({i, j}, {j, i}));
            }
          }
        }
        for (Gen k = s; k <= n; ++k) {
          for (Gen l = s; l <= n; ++l) {
            if (!expect_equal({k, l}, {l, k})) {
              return fail(name, "dot " + std::to_string(s) + ": " +
                                    pair_text({k, l}, {l, k}));
            }
          }
        }
      } else {
        const int s = d.arcs().front().first;
        for (Gen i = 1; i <= s; ++i) {
          for (Gen j = 1; j <= s; ++j) {
            if (!expect_equal({i, j}, {j, i}) ||
                !expect_equal({i, s + 1, j}, {j, s + 1, i})) {
              return fail(name, "arc (" + std::to_string(s) + "," +
                                    std::to_string(s + 1) + ") low pairs");
            }
          }
        }
        for (Gen k = s + 1; k <= n; ++k) {
          for (Gen l = s + 1; l <= n; ++l) {
            if (!expect_equal({k, l}, {l, k}) ||
                !expect_equal({k, s, l}, {l, s, k})) {
              return fail(name, "arc (" + std::to_string(s) + "," +
                                    std::to_string(s + 1) + ") high pairs");
            }
          }
        }
      }
    }
    return pass(name);
  });
}

namespace {

/// The branch of t concentric arcs around (s, s+1), if it exists in the
/// tree (every prefix must avoid the boundary until the last step).
std::optional<Branch> arc_tower(int n, int s, int t) {
  if (s < 1 || s + 1 > n) {
    return std::nullopt;
  }
  Branch b(Diagram::level1_arc(n, s));
  for (int r = 2; r <= t; ++r) {
    if (is_leaf(b.tip())) {
      return std::nullopt;
    }
    const int low = s - r + 1;
    const int high = s + r;
    if (low < 1 || high > n) {
      return std::nullopt;
    }
    b = b.extended(b.tip().with_arc(low, high));
  }
  return b;
}

}  // namespace

CheckResult quotient_relation_families(int n, std::size_t budget) {
  const std::string name = "quotient-relation-families";
  return guarded(name, [&]() -> CheckResult {
    auto check_pairs =
        [&](const Branch& b, const std::string& where,
            const std::vector<std::pair<Word, Word>>& pairs)
        -> std::optional<CheckResult> {
      for (const auto& [x, y] : pairs) {
        if (!congruent_mod(b, x, y, budget)) {
          return fail(name, where + ": " + pair_text(x, y));
        }
      }
      return std::nullopt;
    };

    // single dot at s: both closed blocks commute
    for (int s = 2; s <= n - 1; ++s) {
      const Branch b(Diagram::level1_dot(n, s));
      std::vector<std::pair<Word, Word>> pairs;
      for (Gen i = 1; i <= s; ++i) {
        for (Gen j = i + 1; j <= s; ++j) {
          pairs.push_back({{i, j}, {j, i}});
        }
      }
      for (Gen k = s; k <= n; ++k) {
        for (Gen l = k + 1; l <= n; ++l) {
          pairs.push_back({{k, l}, {l, k}});
        }
      }
      if (auto bad = check_pairs(b, "dot " + std::to_string(s), pairs)) {
        return *bad;
      }
    }

    // towers of t arcs around (s, s+1), optionally with a trailing dot at
    // s-t: block commutations plus the sandwich exchanges across each arc
    for (int s = 1; s <= n - 1; ++s) {
      for (int t = 1; s - t + 1 >= 1 && s + t <= n; ++t) {
        const auto tower = arc_tower(n, s, t);
        if (!tower) {
          break;
        }
        std::vector<std::pair<Word, Word>> pairs;
        for (Gen i = 1; i <= s; ++i) {
          for (Gen j = i + 1; j <= s; ++j) {
            pairs.push_back({{i, j}, {j, i}});
          }
        }
        for (Gen k = s + 1; k <= n; ++k) {
          for (Gen l = k + 1; l <= n; ++l) {
            pairs.push_back({{k, l}, {l, k}});
          }
        }
        for (int r = 1; r <= t; ++r) {
          for (Gen i = 1; i <= s - r + 1; ++i) {
            for (Gen j = i; j <= s - r + 1; ++j) {
              pairs.push_back({{i, s + r, j}, {j, s + r, i}});
            }
          }
          for (Gen k = s + r; k <= n; ++k) {
            for (Gen l = k; l <= n; ++l) {
              pairs.push_back({{k, s - r + 1, l}, {l, s - r + 1, k}});
            }
          }
        }
        const std::string where =
            "tower s=" + std::to_string(s) + " t=" + std::to_string(t);
        if (auto bad = check_pairs(*tower, where, pairs)) {
          return *bad;
        }
        // same tower with the dot at s-t appended
        if (!is_leaf(tower->tip()) && s - t >= 1) {
          const Branch dotted =
              tower->extended(tower->tip().with_dot(s - t));
          auto dotted_pairs = pairs;
          for (Gen k = s + t; k <= n; ++k) {
            for (Gen l = k; l <= n; ++l) {
              dotted_pairs.push_back({{k, s - t, l}, {l, s - t, k}});
            }
          }
          if (auto bad = check_pairs(dotted, where + " + dot", dotted_pairs)) {
            return *bad;
          }
        }
      }
    }
    return pass(name);
  });
}

CheckResult branch_multiplicativity(int n, std::uint64_t seed,
                                    std::size_t budget) {
  const std::string name = "branch-multiplicativity";
  return guarded(name, [&]() -> CheckResult {
    std::mt19937_64 rng(seed);
    for (const Branch& leaf : enumerate_leaves(n)) {
      for (int trial = 0; trial < 20; ++trial) {
        const Word x = random_word(n, 4, rng);
        const Word y = random_word(n, 4, rng);
        const ProductElement sides =
            apply_branch(leaf, x) * apply_branch(leaf, y);
        const ProductElement whole = apply_branch(leaf, concat(x, y));
        if (!(whole.quotient == sides.quotient &&
              whole.factors == sides.factors)) {
          return fail(name, "image of a product differs at " + pair_text(x, y));
        }
        if (!product_equal(whole, sides, budget)) {
          return fail(name, "product images not equal at " + pair_text(x, y));
        }
      }
    }
    return pass(name);
  });
}

CheckResult congruence_growth(int n, std::uint64_t seed, std::size_t budget) {
  const std::string name = "congruence-growth";
  return guarded(name, [&]() -> CheckResult {
    std::mt19937_64 rng(seed);
    for (const Branch& leaf : enumerate_leaves(n)) {
      if (leaf.length() < 2) {
        continue;
      }
      std::vector<Branch> prefixes;
      Branch prefix(leaf.diagrams().front());
      prefixes.push_back(prefix);
      for (std::size_t i = 1; i + 1 < leaf.diagrams().size(); ++i) {
        prefix = prefix.extended(leaf.diagrams()[i]);
        prefixes.push_back(prefix);
      }
      for (int trial = 0; trial < 60; ++trial) {
        Word x = random_word(n, 4, rng);
        Word y;
        if (trial % 2 == 0) {
          // rewrite neighbors are congruent everywhere
          std::vector<Word> nb;
          chinese_rewrites(x, nb);
          y = nb.empty() ? x : nb[trial % nb.size()];
        } else {
          y = random_word(n, 4, rng);
        }
        for (const Branch& p : prefixes) {
          if (congruent_mod(p, x, y, budget) &&
              !congruent_mod(leaf, x, y, budget)) {
            return fail(name, "congruence shrank along a branch at " +
                                  pair_text(x, y));
          }
        }
      }
    }
    return pass(name);
  });
}

namespace {

/// A comparable key for a branch image: the factors plus the least member
/// of the quotient word's rewrite class.
std::string image_key(const ProductElement& image, std::size_t budget) {
  const int lo = image.quotient.lo;
  const int hi = image.quotient.hi;
  auto neighbors = [lo, hi](const Word& w, std::vector<Word>& out) {
    chinese_rewrites(w, out);
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      const Gen a = w[t], b = w[t + 1];
      if (a != b && ((a < lo && b < lo) || (a > hi && b > hi))) {
        Word nw = w;
        std::swap(nw[t], nw[t + 1]);
        out.push_back(std::move(nw));
      }
    }
  };
  auto cls = word_closure(image.quotient.word, neighbors, budget);
  const Word least = *std::min_element(cls.begin(), cls.end());
  std::string key = word_to_string(least);
  for (const Factor& f : image.factors) {
    key += "|";
    key += (f.kind == StepKind::Arc)
               ? "a" + std::to_string(f.b.p) + "." + std::to_string(f.b.q) +
                     "." + std::to_string(f.g.e)
               : "d" + std::to_string(f.g.e);
  }
  return key;
}

}  // namespace

CheckResult embedding_separation(int n, int maxlen, std::size_t budget) {
  const std::string name = "embedding-separation";
  return guarded(name, [&]() -> CheckResult {
    // one representative per congruence class
    std::set<Word> reps;
    for (int len = 0; len <= maxlen; ++len) {
      for (const Word& w : all_words(n, len)) {
        reps.insert(normalize(w, n, budget).expand());
      }
    }
    const auto leaves = enumerate_leaves(n);
    std::map<std::vector<std::string>, Word> keys;
    for (const Word& rep : reps) {
      std::vector<std::string> key;
      key.reserve(leaves.size());
      for (const Branch& leaf : leaves) {
        key.push_back(image_key(apply_branch(leaf, rep), budget));
      }
      auto [it, inserted] = keys.emplace(std::move(key), rep);
      if (!inserted) {
        return fail(name, "no leaf separates " + pair_text(it->second, rep));
      }
    }
    return pass(name, std::to_string(reps.size()) +
                          " classes separated across " +
                          std::to_string(leaves.size()) + " leaves");
  });
}

CheckResult first_level_counts() {
  const std::string name = "first-level-counts";
  return guarded(name, [&]() -> CheckResult {
    for (int n = 2; n <= 8; ++n) {
      const auto level = first_level(n);
      if (level.size() != static_cast<std::size_t>(2 * n - 3)) {
        return fail(name, "rank " + std::to_string(n) + " has " +
                              std::to_string(level.size()) + " diagrams");
      }
    }
    const auto level3 = first_level(3);
    if (!(level3[0] == Diagram::level1_dot(3, 2) &&
          level3[1] == Diagram::level1_arc(3, 1) &&
          level3[2] == Diagram::level1_arc(3, 2))) {
      return fail(name, "rank 3 first level out of order");
    }
    return pass(name, "2n-3 for n = 2..8");
  });
}

CheckResult leaf_counts() {
  const std::string name = "leaf-counts";
  return guarded(name, [&]() -> CheckResult {
    // 2..4 from the worked figures; 5..8 frozen from enumeration
    const std::map<int, std::size_t> expected{{2, 1},  {3, 3},  {4, 5},
                                              {5, 9},  {6, 17}, {7, 31},
                                              {8, 57}};
    for (const auto& [n, count] : expected) {
      const auto leaves = enumerate_leaves(n);
      if (leaves.size() != count) {
        return fail(name, "rank " + std::to_string(n) + " has " +
                              std::to_string(leaves.size()) + " leaves, " +
                              "expected " + std::to_string(count));
      }
      for (const Branch& b : leaves) {
        if (!is_leaf(b.tip())) {
          return fail(name, "enumerated branch does not end in a leaf");
        }
      }
    }
    return pass(name, "1/3/5/9/17/31/57 for n = 2..8");
  });
}

CheckResult tree_shape(int n) {
  const std::string name = "tree-shape";
  return guarded(name, [&]() -> CheckResult {
    for (const Branch& b : enumerate_tree(n)) {
      int lo = 0, hi = -1;
      for (const BranchStep& st : branch_steps(b)) {
        if (st.kind == StepKind::Arc) {
          const bool first = lo > hi;
          if (!first && (st.low != lo - 1 || st.high != hi + 1)) {
            return fail(name, "arc does not hug the used interval");
          }
          if (first && st.high - st.low > 2) {
            return fail(name, "oversized first arc");
          }
          lo = st.low;
          hi = st.high;
        } else {
          const bool first = lo > hi;
          if (!first && st.low != lo - 1 && st.low != hi + 1) {
            return fail(name, "dot away from the boundary");
          }
          lo = first ? st.low : std::min(lo, st.low);
          hi = first ? st.low : std::max(hi, st.low);
        }
      }
      const Diagram& tip = b.tip();
      // serialization re-validates the structural invariants
      if (Diagram::from_json(tip.to_json()) != tip) {
        return fail(name, "diagram does not survive a round trip");
      }
      if (tip.dots().empty()) {
        // a dot-free diagram is a symmetric tower (s-r+1, s+r)
        for (const auto& [low, high] : tip.arcs()) {
          if (low + high != tip.arcs().front().first +
                                tip.arcs().front().second) {
            return fail(name, "dot-free tower is not concentric");
          }
        }
      }
    }
    return pass(name);
  });
}

CheckResult prime_catalog_fidelity(int n, std::size_t budget) {
  const std::string name = "prime-catalog";
  return guarded(name, [&]() -> CheckResult {
    const CatalogReport report = prime_catalog_check(n, budget);
    return pass(name, std::to_string(report.lines.size()) +
                          " relations verified for rank " + std::to_string(n));
  });
}

CheckResult standard_relation_compliance(int n, long box) {
  const std::string name = "standard-relations";
  return guarded(name, [&]() -> CheckResult {
    std::vector<Scalar> lambdas;
    const std::vector<Scalar> pool{Scalar(3, 2), Scalar(2), Scalar(5, 3)};
    for (int i = 0; i < n / 2; ++i) {
      lambdas.push_back(pool[i % pool.size()]);
    }
    const MonomialRep rep = standard_module(n, lambdas);
    const RelationReport report = verify_relations(rep, box);
    if (!report.pass) {
      return fail(name, report.witness);
    }
    if (!guards_match_negative_shifts(rep)) {
      return fail(name, "guards do not match the lowered positions");
    }
    return pass(name, "rank " + std::to_string(n) + ", box " +
                          std::to_string(box));
  });
}

std::vector<std::vector<Scalar>> family_test_params(const Family& family) {
  const Scalar a(3, 2), b(2), c(5, 3), zero(0);
  if (family.param_count == 1) {
    return {{a}};
  }
  if (family.param_count == 2) {
    if (family.id == "V") {
      return {{a, b}};
    }
    if (family.id == "3") {
      return {{a, b}, {zero, b}};
    }
    return {{a, b}, {a, zero}};
  }
  if (family.id == "3.1") {
    return {{a, b, c}, {zero, b, zero}};
  }
  if (family.id == "3.2") {
    return {{a, zero, b}, {a, b, zero}, {a, zero, zero}};
  }
  if (family.id == "4") {
    return {{a, b, c}, {zero, b, zero}};
  }
  if (family.id == "5") {
    return {{a, b, c}, {zero, zero, b}};
  }
  return {{a, b, c}, {a, zero, zero}};  // families 1 and 2
}

CheckResult family_relation_compliance(int n, long box) {
  const std::string name = "family-relations";
  return guarded(name, [&]() -> CheckResult {
    int instances = 0;
    for (const Family& family : family_catalog(n)) {
      for (const auto& params : family_test_params(family)) {
        const MonomialRep rep = family.make(params);
        const RelationReport report = verify_relations(rep, box);
        if (!report.pass) {
          return fail(name, "family " + family.id + ": " + report.witness);
        }
        if (!guards_match_negative_shifts(rep)) {
          return fail(name, "family " + family.id +
                                ": guards do not match lowered positions");
        }
        ++instances;
      }
    }
    return pass(name, std::to_string(instances) + " instances, rank " +
                          std::to_string(n));
  });
}

namespace {

/// Closed formula for the two equal spellings checked in each of the six
/// mixed-letter cases, as a shift/guard table: returns the expected image
/// of the word on a basis vector, or nullopt for zero.
std::optional<std::pair<MultiIndex, Scalar>> six_case_expected(
    int caseno, int j, int k, int l, const MultiIndex& index,
    const MonomialRep& rep) {
  const int n = rep.rank();
  const int s = n / 2;
  std::vector<int> delta(s, 0);
  std::vector<long> floor(s, 0);  // index must exceed this before shifting
  auto span = [&](int from, int to, int d, long f) {
    for (int p = std::max(1, from); p <= std::min(s, to); ++p) {
      delta[p - 1] += d;
      floor[p - 1] = std::max(floor[p - 1], f);
    }
  };
  Scalar scalar = rep.action(j).scalar;
  switch (caseno) {
    case 1:
      span(j, n - l, 1, 0);
      span(n - k + 1, s, -1, 1);
      break;
    case 2:
      if (j + l > n + 1) {
        span(n - l + 1, j - 1, -1, 1);
      }
      span(n - k + 1, s, -1, 1);
      break;
    case 3:
      if (j + k > n + 1) {
        span(n - l + 1, n - k, -1, 1);
        span(n - k + 1, j - 1, -2, 2);
        span(j, s, -1, 1);
      } else {
        span(n - l + 1, s, -1, 1);
      }
      break;
    case 4:
      scalar *= rep.action(k).scalar;
      span(j, k - 1, 1, 0);
      span(k, n - l, 2, 0);
      span(n - l + 1, s, 1, 0);
      break;
    case 5:
      scalar *= rep.action(k).scalar;
      span(j, n - l, 1, 0);
      span(k, s, 1, 0);
      break;
    case 6:
      scalar *= rep.action(k).scalar;
      if (j + l > n + 1) {
        span(n - l + 1, j - 1, -1, 1);
      }
      span(k, s, 1, 0);
      break;
    default:
      throw std::logic_error("unknown case");
  }
  MultiIndex out = index;
  for (int p = 0; p < s; ++p) {
    if (index[p] < floor[p]) {
      return std::nullopt;
    }
    out[p] += delta[p];
  }
  return std::make_pair(std::move(out), std::move(scalar));
}

}  // namespace

CheckResult six_case_identities(int n, long box) {
  const std::string name = "six-case-identities";
  return guarded(name, [&]() -> CheckResult {
    std::vector<Scalar> lambdas;
    const std::vector<Scalar> pool{Scalar(3, 2), Scalar(2), Scalar(5, 3)};
    const int s = n / 2;
    for (int i = 0; i < s; ++i) {
      lambdas.push_back(pool[i % pool.size()]);
    }
    const MonomialRep rep = standard_module(n, lambdas);
    const auto basis = box_indices(s, box);
    long triples = 0;
    auto run_case = [&](int caseno, int j, int k, int l, const Word& w1,
                        const Word& w2) -> std::optional<CheckResult> {
      ++triples;
      for (const MultiIndex& index : basis) {
        const SparseVector e = SparseVector::basis(index);
        const SparseVector r1 = act(rep, w1, e);
        const SparseVector r2 = act(rep, w2, e);
        SparseVector expected(s);
        if (auto image = six_case_expected(caseno, j, k, l, index, rep)) {
          expected.add_term(image->first, image->second);
        }
        if (!(r1 == r2 && r1 == expected)) {
          return fail(name, "case " + std::to_string(caseno) + " (j,k,l)=(" +
                                std::to_string(j) + "," + std::to_string(k) +
                                "," + std::to_string(l) + ")");
        }
      }
      return std::nullopt;
    };
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        for (int l = k; l <= n; ++l) {
          if (j <= s && s < k) {
            // a_l a_k a_j = a_l a_j a_k
            const int caseno = (j + l <= n) ? 1 : (j + k <= n ? 2 : 3);
            if (auto bad = run_case(caseno, j, k, l, {l, k, j}, {l, j, k})) {
              return *bad;
            }
          }
          if (k <= s && s < l) {
            // a_l a_k a_j = a_k a_l a_j
            const int caseno = (k + l <= n) ? 4 : (j + l <= n ? 5 : 6);
            if (auto bad = run_case(caseno, j, k, l, {l, k, j}, {k, l, j})) {
              return *bad;
            }
          }
        }
      }
    }
    return pass(name, std::to_string(triples) + " triples, rank " +
                          std::to_string(n));
  });
}

CheckResult central_scalar_values(int n, long box) {
  const std::string name = "central-scalars";
  return guarded(name, [&]() -> CheckResult {
    std::vector<Scalar> lambdas;
    const std::vector<Scalar> pool{Scalar(3, 2), Scalar(2), Scalar(5, 3)};
    const int s = n / 2;
    for (int i = 0; i < s; ++i) {
      lambdas.push_back(pool[i % pool.size()]);
    }
    const MonomialRep rep = standard_module(n, lambdas);
    const auto scalars = central_scalars(rep, box);
    for (int i = 1; i <= s; ++i) {
      if (scalars[i - 1].first != i || scalars[i - 1].second != lambdas[i - 1]) {
        return fail(name, "pair " + std::to_string(i) + " returned " +
                              scalar_to_string(scalars[i - 1].second));
      }
    }
    // different parameters are told apart
    std::vector<Scalar> other = lambdas;
    other[0] += 1;
    if (central_scalars(standard_module(n, other), box) == scalars) {
      return fail(name, "distinct parameters share their scalars");
    }
    return pass(name);
  });
}

CheckResult cyclic_reach_sweep(int n, int samples, long box,
                               std::uint64_t seed) {
  const std::string name = "cyclic-reach";
  return guarded(name, [&]() -> CheckResult {
    std::vector<Scalar> lambdas;
    const std::vector<Scalar> pool{Scalar(3, 2), Scalar(2), Scalar(5, 3)};
    const int s = n / 2;
    for (int i = 0; i < s; ++i) {
      lambdas.push_back(pool[i % pool.size()]);
    }
    const MonomialRep rep = standard_module(n, lambdas);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < samples; ++trial) {
      const SparseVector v = random_vector(s, box, rng);
      const ReachResult reach = cyclic_reach(rep, v);  // self-checking
      if (reach.coeff == 0) {
        return fail(name, "vanishing coefficient on " + v.to_string());
      }
      const SparseVector reached = act(rep, reach.word, v);
      if (reached != SparseVector::basis(MultiIndex(s, 0)).scaled(reach.coeff)) {
        return fail(name, "lowering word misses e_(0..0) on " + v.to_string());
      }
    }
    return pass(name, std::to_string(samples) + " vectors, rank " +
                          std::to_string(n));
  });
}

CheckResult inductive_agreement(int n, long box) {
  const std::string name = "inductive-agreement";
  return guarded(name, [&]() -> CheckResult {
    if (n != 4 && n != 6) {
      return pass(name, "not applicable");
    }
    const std::vector<Scalar> pool{Scalar(3, 2), Scalar(2), Scalar(5, 3)};
    MonomialRep built = family_catalog(2)[0].make({pool[0]});
    std::vector<Scalar> lambdas{pool[0]};
    for (int rank = 4; rank <= n; rank += 2) {
      lambdas.push_back(pool[(rank - 2) / 2]);
      built = inductive_extend(built, lambdas.back(), box);
    }
    const MonomialRep direct = standard_module(n, lambdas);
    for (Gen j = 1; j <= n; ++j) {
      for (const MultiIndex& index : box_indices(n / 2, box)) {
        const SparseVector e = SparseVector::basis(index);
        if (act(built, {j}, e) != act(direct, {j}, e)) {
          return fail(name, "actions differ at a" + std::to_string(j));
        }
      }
    }
    if (!(built == direct)) {
      return fail(name, "action tables differ");
    }
    return pass(name, "rank " + std::to_string(n));
  });
}

CheckResult monomiality_sweep(int n, long box) {
  const std::string name = "monomiality";
  return guarded(name, [&]() -> CheckResult {
    int instances = 0;
    if (n == 2 || n == 3 || n == 4) {
      for (const Family& family : family_catalog(n)) {
        for (const auto& params : family_test_params(family)) {
          if (!monomial_on_box(family.make(params), box)) {
            return fail(name, "family " + family.id);
          }
          ++instances;
        }
      }
    }
    if (n % 2 == 0 && n <= 6) {
      std::vector<Scalar> lambdas(n / 2, Scalar(3, 2));
      if (!monomial_on_box(standard_module(n, lambdas), box)) {
        return fail(name, "standard module rank " + std::to_string(n));
      }
      ++instances;
    }
    return pass(name, std::to_string(instances) + " representations");
  });
}

CheckResult annihilator_catalog(int n, long box) {
  const std::string name = "annihilator-catalog";
  return guarded(name, [&]() -> CheckResult {
    if (n != 3 && n != 4) {
      return pass(name, "not applicable");
    }
    const auto leaves = enumerate_leaves(n);
    auto leaf_named = [&](const std::string& label) -> const Branch& {
      for (const Branch& b : leaves) {
        const CatalogEntry* entry = catalog_entry_for(b.tip());
        if (entry && entry->name == label) {
          return b;
        }
      }
      throw std::logic_error("missing leaf " + label);
    };
    const Scalar a(3, 2), b(2), c(5, 3), zero(0);
    struct Expect {
      std::string family;
      std::vector<Scalar> params;
      std::string leaf;
      bool member;
    };
    std::vector<Expect> table;
    if (n == 3) {
      table = {{"1", {a, b}, "P1", true},  {"2", {a, b}, "P2", true},
               {"3", {a, b}, "P3", true},  {"1", {a, b}, "P3", false},
               {"3", {a, b}, "P1", false}};
    } else {
      table = {{"1", {a, b, c}, "P1", true},   {"2", {a, b, c}, "P2", true},
               {"3.1", {a, b, c}, "P3", true}, {"3.2", {a, zero, b}, "P3", true},
               {"3.2", {a, b, zero}, "P3", true}, {"4", {a, b, c}, "P4", true},
               {"5", {a, b, c}, "P5", true},   {"V", {a, b}, "P3", true},
               {"1", {a, b, c}, "P5", false},  {"5", {a, b, c}, "P1", false}};
    }
    for (const Expect& row : table) {
      const Family* family = nullptr;
      for (const Family& f : family_catalog(n)) {
        if (f.id == row.family) {
          family = &f;
        }
      }
      const bool got = annihilator_membership(family->make(row.params),
                                              leaf_named(row.leaf), box);
      if (got != row.member) {
        return fail(name, "family " + row.family + " vs " + row.leaf +
                              ": expected " + (row.member ? "true" : "false"));
      }
    }
    return pass(name, std::to_string(table.size()) + " memberships");
  });
}

CheckResult zero_pair_consequence(int n, long box) {
  const std::string name = "zero-pair-consequence";
  return guarded(name, [&]() -> CheckResult {
    if (n != 2 && n != 3 && n != 4) {
      return pass(name, "not applicable");
    }
    auto zero_on_box = [&](const MonomialRep& rep, const Word& w) {
      for (const MultiIndex& index : box_indices(rep.arity(), box)) {
        if (!act(rep, w, SparseVector::basis(index)).is_zero()) {
          return false;
        }
      }
      return true;
    };
    int triggered = 0;
    for (const Family& family : family_catalog(n)) {
      for (const auto& params : family_test_params(family)) {
        const MonomialRep rep = family.make(params);
        if (zero_on_box(rep, {n, 1})) {
          ++triggered;
          if (!zero_on_box(rep, {n}) && !zero_on_box(rep, {1})) {
            return fail(name, "family " + family.id +
                                  ": a_n a_1 vanishes but neither factor does");
          }
        }
      }
    }
    return pass(name, std::to_string(triggered) + " vanishing instances");
  });
}

CheckResult mutation_sensitivity(long box) {
  const std::string name = "mutation-sensitivity";
  return guarded(name, [&]() -> CheckResult {
    const std::vector<Scalar> lambdas{Scalar(3, 2), Scalar(2)};
    const MonomialRep rep = standard_module(4, lambdas);
    const auto expected = central_scalars(rep, box);
    auto detected = [&](const MonomialRep& mutant) {
      if (!verify_relations(mutant, box).pass) {
        return true;
      }
      try {
        return central_scalars(mutant, box) != expected;
      } catch (const NotScalar&) {
        return true;
      }
    };
    int mutants = 0;
    for (Gen j = 1; j <= 4; ++j) {
      {
        GeneratorAction a = rep.action(j);
        a.scalar += 1;
        ++mutants;
        if (!detected(rep.with_action(j, a))) {
          return fail(name, "scalar bump on a" + std::to_string(j) +
                                " went unnoticed");
        }
      }
      for (int p = 0; p < 2; ++p) {
        for (int d : {-1, 1}) {
          GeneratorAction a = rep.action(j);
          a.shift[p] += d;
          ++mutants;
          if (!detected(rep.with_action(j, a))) {
            return fail(name, "shift change on a" + std::to_string(j) +
                                  " position " + std::to_string(p + 1) +
                                  " went unnoticed");
          }
        }
      }
    }
    return pass(name, std::to_string(mutants) + " mutants all detected");
  });
}

std::vector<CheckResult> run_all(int n, const Options& options) {
  if (n < 2) {
    throw RankTooSmall("verification needs rank >= 2");
  }
  const int sweep = options.sweep_len > 0 ? options.sweep_len
                                          : default_sweep_len(n);
  std::vector<CheckResult> out;
  out.push_back(canonical_uniqueness(n, sweep, options.budget));
  out.push_back(relation_triples_normalize(n, options.budget));
  out.push_back(multiply_properties(n, options.seed, options.budget));
  out.push_back(left_divisor_shift(n, options.budget));
  out.push_back(bicyclic_laws());
  out.push_back(first_level_counts());
  out.push_back(leaf_counts());
  out.push_back(tree_shape(n));
  out.push_back(kernel_generator_images(n, options.budget));
  if (n <= 6) {
    out.push_back(quotient_relation_families(n, options.budget));
  }
  out.push_back(branch_multiplicativity(n, options.seed, options.budget));
  out.push_back(congruence_growth(n, options.seed, options.budget));
  if (n <= 4) {
    out.push_back(embedding_separation(n, 5, options.budget));
  }
  if (n == 3 || n == 4) {
    out.push_back(prime_catalog_fidelity(n, options.budget));
  }
  if (n % 2 == 0 && n <= 6) {
    out.push_back(standard_relation_compliance(n, options.box));
    out.push_back(six_case_identities(n, options.box));
    out.push_back(central_scalar_values(n, options.box));
    out.push_back(cyclic_reach_sweep(n, options.samples, options.box,
                                     options.seed));
  }
  if (n == 4 || n == 6) {
    out.push_back(inductive_agreement(n, options.box));
  }
  if (n == 2 || n == 3 || n == 4) {
    out.push_back(family_relation_compliance(n, options.box));
    out.push_back(annihilator_catalog(n, options.box));
    out.push_back(zero_pair_consequence(n, options.box));
  }
  out.push_back(monomiality_sweep(n, options.box));
  if (n == 4) {
    out.push_back(mutation_sensitivity(options.box));
  }
  return out;
}

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results,
                                   const Options& options) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    checks.push_back({{"check", r.name},
                      {"pass", r.pass},
                      {"witness", r.pass ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(r.detail)},
                      {"detail", r.detail}});
  }
  std::ostringstream seed;
  seed << "0x" << std::hex << options.seed;
  return nlohmann::ordered_json{{"seed", seed.str()},
                                {"box", options.box},
                                {"checks", std::move(checks)}};
}

}  // namespace chinoid::verify
