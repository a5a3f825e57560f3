#include "chinoid/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chinoid {

namespace {

bool same_multiset(const Word& a, const Word& b) {
  Word sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

bool quotient_equal(const QuotientWord& x, const QuotientWord& y,
                    std::size_t budget) {
  if (x.n != y.n || x.lo != y.lo || x.hi != y.hi) {
    throw std::invalid_argument("quotient words live in different quotients");
  }
  if (x.word.size() != y.word.size() || !same_multiset(x.word, y.word)) {
    return false;
  }
  const int lo = x.lo;
  const int hi = x.hi;
  auto neighbors = [lo, hi](const Word& w, std::vector<Word>& out) {
    chinese_rewrites(w, out);
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      const Gen a = w[t], b = w[t + 1];
      if (a == b) {
        continue;
      }
      const bool both_low = a < lo && b < lo;
      const bool both_high = a > hi && b > hi;
      if (both_low || both_high) {
        Word nw = w;
        std::swap(nw[t], nw[t + 1]);
        out.push_back(std::move(nw));
      }
    }
  };
  return closure_reaches(x.word, y.word, neighbors, budget);
}

ProductElement operator*(const ProductElement& x, const ProductElement& y) {
  if (x.quotient.n != y.quotient.n || x.quotient.lo != y.quotient.lo ||
      x.quotient.hi != y.quotient.hi ||
      x.factors.size() != y.factors.size()) {
    throw std::invalid_argument("product elements have different shapes");
  }
  ProductElement out = x;
  out.quotient.word.insert(out.quotient.word.end(), y.quotient.word.begin(),
                           y.quotient.word.end());
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (out.factors[i].kind != y.factors[i].kind) {
      throw std::invalid_argument("product elements have different shapes");
    }
    out.factors[i].b *= y.factors[i].b;
    out.factors[i].g *= y.factors[i].g;
  }
  return out;
}

nlohmann::ordered_json ProductElement::to_json() const {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const Factor& f : this->factors) {
    if (f.kind == StepKind::Arc) {
      factors.push_back(
          {{"arc", {{"p", f.b.p}, {"q", f.b.q}, {"g", f.g.e}}}});
    } else {
      factors.push_back({{"dot", {{"g", f.g.e}}}});
    }
  }
  return nlohmann::ordered_json{{"quotient", word_to_string(quotient.word)},
                                {"factors", std::move(factors)},
                                {"n", quotient.n},
                                {"u", quotient.lo},
                                {"v", quotient.hi}};
}

ProductElement ProductElement::from_json(const nlohmann::json& j) {
  ProductElement out;
  out.quotient.n = j.at("n").get<int>();
  out.quotient.lo = j.at("u").get<int>();
  out.quotient.hi = j.at("v").get<int>();
  out.quotient.word = word_from_string(j.at("quotient").get<std::string>());
  for (const auto& f : j.at("factors")) {
    Factor factor;
    if (f.contains("arc")) {
      factor.kind = StepKind::Arc;
      factor.b.p = f.at("arc").at("p").get<long>();
      factor.b.q = f.at("arc").at("q").get<long>();
      factor.g.e = f.at("arc").at("g").get<long>();
    } else {
      factor.kind = StepKind::Dot;
      factor.g.e = f.at("dot").at("g").get<long>();
    }
    out.factors.push_back(factor);
  }
  return out;
}

ProductElement generator_image(const Branch& branch, Gen gen) {
  const Diagram& tip = branch.tip();
  const int n = branch.rank();
  if (gen < 1 || gen > n) {
    throw std::invalid_argument("generator outside 1..n");
  }
  ProductElement out;
  out.quotient.n = n;
  out.quotient.lo = tip.lo();
  out.quotient.hi = tip.hi();
  if (gen < out.quotient.lo || gen > out.quotient.hi) {
    out.quotient.word.push_back(gen);
  }
  // walk the construction steps; a generator contributes only while it is
  // still outside the interval used so far
  int used_lo = 0, used_hi = -1;
  for (const BranchStep& st : branch_steps(branch)) {
    const bool alive = used_lo > used_hi || gen < used_lo || gen > used_hi;
    Factor f;
    f.kind = st.kind;
    if (st.kind == StepKind::Arc) {
      if (alive) {
        assert(gen <= st.low || gen >= st.high);
        if (gen <= st.low) {
          f.b = {1, 0};
          if (gen == st.low) {
            f.g = {1};
          }
        } else {
          f.b = {0, 1};
        }
      }
      used_lo = st.low;
      used_hi = st.high;
    } else {
      if (alive && gen == st.low) {
        f.g = {1};
      }
      if (used_lo > used_hi) {
        used_lo = used_hi = st.low;
      } else {
        used_lo = std::min(used_lo, st.low);
        used_hi = std::max(used_hi, st.low);
      }
    }
    out.factors.push_back(f);
  }
  return out;
}

ProductElement identity_element(const Branch& branch) {
  const Diagram& tip = branch.tip();
  ProductElement out;
  out.quotient.n = branch.rank();
  out.quotient.lo = tip.lo();
  out.quotient.hi = tip.hi();
  for (const BranchStep& st : branch_steps(branch)) {
    Factor f;
    f.kind = st.kind;
    out.factors.push_back(f);
  }
  return out;
}

ProductElement apply_branch(const Branch& branch, const Word& w) {
  check_word(w, branch.rank());
  ProductElement out = identity_element(branch);
  for (Gen g : w) {
    out = out * generator_image(branch, g);
  }
  return out;
}

bool product_equal(const ProductElement& x, const ProductElement& y,
                   std::size_t budget) {
  if (x.factors.size() != y.factors.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.factors.size(); ++i) {
    if (x.factors[i] != y.factors[i]) {
      return false;
    }
  }
  return quotient_equal(x.quotient, y.quotient, budget);
}

bool congruent_mod(const Branch& branch, const Word& x, const Word& y,
                   std::size_t budget) {
  return product_equal(apply_branch(branch, x), apply_branch(branch, y),
                       budget);
}

}  // namespace chinoid
