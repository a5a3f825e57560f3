#include "chinoid/rep.hpp"

#include <algorithm>
#include <sstream>

#include "chinoid/catalog.hpp"

namespace chinoid {

namespace {

std::string index_to_string(const MultiIndex& index) {
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(index[i]);
  }
  out += ')';
  return out;
}

MultiIndex index_from_string(const std::string& text, int arity) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("malformed index key: '" + text + "'");
  }
  MultiIndex index;
  std::istringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    index.push_back(std::stol(item));
  }
  if (index.size() != static_cast<std::size_t>(arity)) {
    throw std::invalid_argument("index key '" + text + "' has wrong arity");
  }
  for (long v : index) {
    if (v < 0) {
      throw std::invalid_argument("negative index in key '" + text + "'");
    }
  }
  return index;
}

}  // namespace

SparseVector::SparseVector(int arity) : arity_(arity) {
  if (arity < 1) {
    throw std::invalid_argument("arity must be at least 1");
  }
}

SparseVector SparseVector::basis(const MultiIndex& index) {
  SparseVector v(static_cast<int>(index.size()));
  v.add_term(index, 1);
  return v;
}

void SparseVector::add_term(const MultiIndex& index, const Scalar& coeff) {
  if (index.size() != static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("index arity mismatch");
  }
  for (long v : index) {
    if (v < 0) {
      throw std::invalid_argument("negative basis index");
    }
  }
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector out(arity_);
  if (c == 0) {
    return out;
  }
  for (const auto& [index, coeff] : terms_) {
    out.terms_.emplace(index, coeff * c);
  }
  return out;
}

SparseVector operator+(const SparseVector& x, const SparseVector& y) {
  if (x.arity_ != y.arity_) {
    throw std::invalid_argument("vector arity mismatch");
  }
  SparseVector out = x;
  for (const auto& [index, coeff] : y.terms_) {
    out.add_term(index, coeff);
  }
  return out;
}

nlohmann::ordered_json SparseVector::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [index, coeff] : terms_) {
    out[index_to_string(index)] = scalar_to_string(coeff);
  }
  return out;
}

SparseVector SparseVector::from_json(const nlohmann::json& j, int arity) {
  SparseVector out(arity);
  for (auto it = j.begin(); it != j.end(); ++it) {
    out.add_term(index_from_string(it.key(), arity),
                 scalar_from_string(it.value().get<std::string>()));
  }
  return out;
}

std::string SparseVector::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [index, coeff] : terms_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += scalar_to_string(coeff) + "*e" + index_to_string(index);
  }
  return out;
}

MonomialRep::MonomialRep(int rank, int arity,
                         std::vector<GeneratorAction> actions)
    : rank_(rank), arity_(arity), actions_(std::move(actions)) {
  if (rank < 1 || arity < 1) {
    throw std::invalid_argument("rank and arity must be at least 1");
  }
  if (actions_.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("need one action per generator");
  }
  for (const GeneratorAction& a : actions_) {
    if (a.shift.size() != static_cast<std::size_t>(arity)) {
      throw std::invalid_argument("shift arity mismatch");
    }
    for (int p : a.guard) {
      if (p < 1 || p > arity) {
        throw std::invalid_argument("guard position outside 1..arity");
      }
    }
  }
}

const GeneratorAction& MonomialRep::action(Gen j) const {
  if (j < 1 || j > rank_) {
    throw std::invalid_argument("generator outside 1..n");
  }
  return actions_[j - 1];
}

MonomialRep MonomialRep::with_action(Gen j, GeneratorAction action) const {
  std::vector<GeneratorAction> actions = actions_;
  if (j < 1 || j > rank_) {
    throw std::invalid_argument("generator outside 1..n");
  }
  actions[j - 1] = std::move(action);
  return MonomialRep(rank_, arity_, std::move(actions));
}

std::optional<std::pair<MultiIndex, Scalar>> MonomialRep::apply(
    Gen j, const MultiIndex& index) const {
  const GeneratorAction& a = action(j);
  for (int p : a.guard) {
    if (index[p - 1] == 0) {
      return std::nullopt;
    }
  }
  MultiIndex out = index;
  for (int p = 0; p < arity_; ++p) {
    out[p] += a.shift[p];
    if (out[p] < 0) {
      return std::nullopt;  // e_index vanishes below zero
    }
  }
  return std::make_pair(std::move(out), a.scalar);
}

nlohmann::ordered_json MonomialRep::to_json() const {
  nlohmann::ordered_json actions = nlohmann::ordered_json::array();
  for (const GeneratorAction& a : actions_) {
    actions.push_back({{"scalar", scalar_to_string(a.scalar)},
                       {"shift", a.shift},
                       {"guard", a.guard}});
  }
  return nlohmann::ordered_json{
      {"n", rank_}, {"s", arity_}, {"actions", std::move(actions)}};
}

MonomialRep MonomialRep::from_json(const nlohmann::json& j) {
  const int rank = j.at("n").get<int>();
  const int arity = j.at("s").get<int>();
  std::vector<GeneratorAction> actions;
  for (const auto& a : j.at("actions")) {
    GeneratorAction action;
    action.scalar = scalar_from_string(a.at("scalar").get<std::string>());
    action.shift = a.at("shift").get<std::vector<int>>();
    action.guard = a.at("guard").get<std::vector<int>>();
    actions.push_back(std::move(action));
  }
  return MonomialRep(rank, arity, std::move(actions));
}

SparseVector act(const MonomialRep& rep, const Word& w,
                 const SparseVector& v) {
  check_word(w, rep.rank());
  if (v.arity() != rep.arity()) {
    throw std::invalid_argument("vector arity does not match the module");
  }
  SparseVector current = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    SparseVector next(rep.arity());
    for (const auto& [index, coeff] : current.terms()) {
      if (auto image = rep.apply(*it, index)) {
        next.add_term(image->first, coeff * image->second);
      }
    }
    current = std::move(next);
  }
  return current;
}

MonomialRep standard_module(int rank, const std::vector<Scalar>& lambdas) {
  if (rank % 2 != 0) {
    throw OddRank("the standard module needs an even rank");
  }
  const int s = rank / 2;
  if (lambdas.size() != static_cast<std::size_t>(s)) {
    throw std::invalid_argument("need exactly n/2 parameters");
  }
  for (const Scalar& l : lambdas) {
    if (l == 0) {
      throw ZeroParameter("standard-module parameters must be nonzero");
    }
  }
  std::vector<GeneratorAction> actions;
  for (int j = 1; j <= rank; ++j) {
    GeneratorAction a;
    a.shift.assign(s, 0);
    if (j <= s) {
      a.scalar = lambdas[j - 1];
      for (int p = j; p <= s; ++p) {
        a.shift[p - 1] = 1;
      }
    } else {
      a.scalar = 1;
      for (int p = rank - j + 1; p <= s; ++p) {
        a.shift[p - 1] = -1;
        a.guard.push_back(p);
      }
    }
    actions.push_back(std::move(a));
  }
  return MonomialRep(rank, s, std::move(actions));
}

std::vector<MultiIndex> box_indices(int arity, long box) {
  std::vector<MultiIndex> out;
  MultiIndex current(arity, 0);
  while (true) {
    out.push_back(current);
    int pos = arity - 1;
    while (pos >= 0 && current[pos] == box) {
      current[pos] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++current[pos];
  }
  return out;
}

RelationReport verify_relations(const MonomialRep& rep, long box) {
  const int n = rep.rank();
  const auto basis = box_indices(rep.arity(), box);
  for (Gen i = 1; i <= n; ++i) {
    for (Gen j = i; j <= n; ++j) {
      for (Gen k = j; k <= n; ++k) {
        const Word w1{j, k, i};
        const Word w2{k, j, i};
        const Word w3{k, i, j};
        for (const MultiIndex& index : basis) {
          const SparseVector e = SparseVector::basis(index);
          const SparseVector r1 = act(rep, w1, e);
          const SparseVector r2 = act(rep, w2, e);
          const SparseVector r3 = act(rep, w3, e);
          if (!(r1 == r2 && r2 == r3)) {
            RelationReport report;
            report.pass = false;
            report.witness = "(i,j,k)=(" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) +
                             ") on e" + index_to_string(index) + ": " +
                             r1.to_string() + " | " + r2.to_string() + " | " +
                             r3.to_string();
            return report;
          }
        }
      }
    }
  }
  return {};
}

std::vector<std::pair<int, Scalar>> central_scalars(const MonomialRep& rep,
                                                    long box) {
  const int n = rep.rank();
  if (n % 2 != 0 || rep.arity() != n / 2) {
    throw std::invalid_argument(
        "central scalars need a standard-module-shaped representation");
  }
  const int s = n / 2;
  const auto basis = box_indices(s, box);
  std::vector<std::pair<int, Scalar>> out;
  for (int i = 1; i <= s; ++i) {
    const Word w{n - i + 1, i};
    std::optional<Scalar> constant;
    for (const MultiIndex& index : basis) {
      const SparseVector r = act(rep, w, SparseVector::basis(index));
      Scalar here;
      if (r.is_zero()) {
        here = 0;
      } else if (r.term_count() == 1 && r.terms().begin()->first == index) {
        here = r.terms().begin()->second;
      } else {
        throw NotScalar("a" + std::to_string(n - i + 1) + " a" +
                        std::to_string(i) + " moves e" +
                        index_to_string(index) + " to " + r.to_string());
      }
      if (!constant) {
        constant = here;
      } else if (*constant != here) {
        throw NotScalar("a" + std::to_string(n - i + 1) + " a" +
                        std::to_string(i) + " acts by " +
                        scalar_to_string(here) + " on e" +
                        index_to_string(index) + " but by " +
                        scalar_to_string(*constant) + " elsewhere");
      }
    }
    out.emplace_back(i, *constant);
  }
  return out;
}

ReachResult cyclic_reach(const MonomialRep& rep, const SparseVector& v) {
  if (v.is_zero()) {
    throw ZeroVector("cyclic reach needs a nonzero vector");
  }
  const int n = rep.rank();
  if (n % 2 != 0 || rep.arity() != n / 2) {
    throw std::invalid_argument(
        "cyclic reach needs a standard-module-shaped representation");
  }
  const int s = n / 2;
  // terms are ordered lexicographically, so the last key realizes the
  // nested maxima m_1, ..., m_s
  const MultiIndex m = v.terms().rbegin()->first;
  const Scalar lead = v.terms().rbegin()->second;
  Word w;
  for (long c = 0; c < m[s - 1]; ++c) {
    w.push_back(s + 1);
  }
  for (int j = s - 1; j >= 1; --j) {
    for (long c = 0; c < m[j - 1]; ++c) {
      w.push_back(n - j + 1);
      w.push_back(j + 1);
    }
  }
  Scalar coeff = lead;
  for (int j = 1; j <= s - 1; ++j) {
    coeff *= scalar_pow(rep.action(j + 1).scalar, m[j - 1]);
  }
  const SparseVector reached = act(rep, w, v);
  const SparseVector expected =
      SparseVector::basis(MultiIndex(s, 0)).scaled(coeff);
  if (reached != expected || coeff == 0) {
    throw std::logic_error("lowering word failed to reach e_(0..0): got " +
                           reached.to_string());
  }
  return {std::move(w), std::move(coeff)};
}

MonomialRep inductive_extend(const MonomialRep& base, const Scalar& lambda_top,
                             long check_box) {
  if (lambda_top == 0) {
    throw ZeroParameter("the new parameter must be nonzero");
  }
  const int a = base.arity();
  if (base.rank() != 2 * a) {
    throw HypothesisViolated("base must have rank twice its arity");
  }
  const int s = a + 1;
  const int n = 2 * s;
  // blocks 1..s-1 and s..2a of the base must act commutatively
  const auto basis = box_indices(a, check_box);
  auto check_block = [&](int from, int to) {
    for (Gen x = from; x <= to; ++x) {
      for (Gen y = x + 1; y <= to; ++y) {
        for (const MultiIndex& index : basis) {
          const SparseVector e = SparseVector::basis(index);
          if (act(base, {x, y}, e) != act(base, {y, x}, e)) {
            throw HypothesisViolated(
                "base generators a" + std::to_string(x) + ", a" +
                std::to_string(y) + " do not commute on e" +
                index_to_string(index));
          }
        }
      }
    }
  };
  check_block(1, a);
  check_block(a + 1, 2 * a);

  std::vector<GeneratorAction> actions;
  for (int j = 1; j <= n; ++j) {
    GeneratorAction out;
    if (j < s) {
      out = base.action(j);
      out.shift.push_back(1);
    } else if (j == s) {
      out.scalar = lambda_top;
      out.shift.assign(s, 0);
      out.shift[s - 1] = 1;
    } else if (j == s + 1) {
      out.scalar = 1;
      out.shift.assign(s, 0);
      out.shift[s - 1] = -1;
      out.guard = {s};
    } else {
      out = base.action(j - 2);
      out.shift.push_back(-1);
      out.guard.push_back(s);
      std::sort(out.guard.begin(), out.guard.end());
    }
    actions.push_back(std::move(out));
  }
  return MonomialRep(n, s, std::move(actions));
}

namespace {

GeneratorAction raise_by(const Scalar& c) { return {c, {1}, {}}; }
GeneratorAction lower_by(const Scalar& c) { return {c, {-1}, {1}}; }
GeneratorAction fix_by(const Scalar& c) { return {c, {0}, {}}; }

void need(bool ok, const std::string& what) {
  if (!ok) {
    throw ConstraintViolation(what);
  }
}

void need_params(const std::vector<Scalar>& p, std::size_t count) {
  if (p.size() != count) {
    throw ConstraintViolation("expected " + std::to_string(count) +
                              " parameters, got " + std::to_string(p.size()));
  }
}

std::vector<Family> build_families(int n) {
  std::vector<Family> out;
  if (n == 2) {
    out.push_back({"Z", 2, 1, 1, "lambda != 0",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 1);
                     need(p[0] != 0, "lambda must be nonzero");
                     return MonomialRep(2, 1, {raise_by(p[0]), lower_by(1)});
                   }});
    return out;
  }
  if (n == 3) {
    out.push_back({"1", 3, 1, 2, "lambda != 0; mu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 2);
                     need(p[0] != 0, "lambda must be nonzero");
                     return MonomialRep(
                         3, 1, {raise_by(p[0]), lower_by(1), lower_by(p[1])});
                   }});
    out.push_back({"2", 3, 1, 2, "lambda != 0; mu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 2);
                     need(p[0] != 0, "lambda must be nonzero");
                     return MonomialRep(
                         3, 1, {raise_by(p[0]), fix_by(p[1]), lower_by(1)});
                   }});
    out.push_back({"3", 3, 1, 2, "mu != 0; lambda free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 2);
                     need(p[1] != 0, "mu must be nonzero");
                     return MonomialRep(
                         3, 1, {raise_by(p[0]), raise_by(p[1]), lower_by(1)});
                   }});
    return out;
  }
  if (n == 4) {
    out.push_back({"V", 4, 2, 2, "lambda != 0; mu != 0",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 2);
                     need(p[0] != 0 && p[1] != 0,
                          "both parameters must be nonzero");
                     return standard_module(4, p);
                   }});
    out.push_back({"1", 4, 1, 3, "lambda != 0; mu, nu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[0] != 0, "lambda must be nonzero");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), lower_by(1),
                                         lower_by(p[1]), lower_by(p[2])});
                   }});
    out.push_back({"2", 4, 1, 3, "lambda != 0; mu, nu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[0] != 0, "lambda must be nonzero");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), fix_by(p[1]),
                                         lower_by(1), lower_by(p[2])});
                   }});
    out.push_back({"3.1", 4, 1, 3, "mu != 0; lambda, nu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[1] != 0, "mu must be nonzero");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), raise_by(p[1]),
                                         lower_by(1), lower_by(p[2])});
                   }});
    out.push_back({"3.2", 4, 1, 3, "lambda != 0; mu*nu = 0",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[0] != 0, "lambda must be nonzero");
                     need(p[1] * p[2] == 0, "mu*nu must vanish");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), fix_by(p[1]),
                                         fix_by(p[2]), lower_by(1)});
                   }});
    out.push_back({"4", 4, 1, 3, "mu != 0; lambda, nu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[1] != 0, "mu must be nonzero");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), raise_by(p[1]),
                                         fix_by(p[2]), lower_by(1)});
                   }});
    out.push_back({"5", 4, 1, 3, "nu != 0; lambda, mu free",
                   [](const std::vector<Scalar>& p) {
                     need_params(p, 3);
                     need(p[2] != 0, "nu must be nonzero");
                     return MonomialRep(4, 1,
                                        {raise_by(p[0]), raise_by(p[1]),
                                         raise_by(p[2]), lower_by(1)});
                   }});
    return out;
  }
  throw std::invalid_argument("the family catalog covers ranks 2, 3 and 4");
}

}  // namespace

const std::vector<Family>& family_catalog(int n) {
  static const std::vector<Family> rank2 = build_families(2);
  static const std::vector<Family> rank3 = build_families(3);
  static const std::vector<Family> rank4 = build_families(4);
  switch (n) {
    case 2:
      return rank2;
    case 3:
      return rank3;
    case 4:
      return rank4;
    default:
      throw std::invalid_argument("the family catalog covers ranks 2, 3 and 4");
  }
}

bool annihilator_membership(const MonomialRep& rep, const Branch& leaf_branch,
                            long box) {
  const int n = leaf_branch.rank();
  if (rep.rank() != n) {
    throw std::invalid_argument("representation and leaf rank differ");
  }
  const CatalogEntry* entry = catalog_entry_for(leaf_branch.tip());
  if (entry == nullptr) {
    throw std::invalid_argument("branch tip is not a cataloged leaf");
  }
  const auto basis = box_indices(rep.arity(), box);
  for (const CatalogRelation& rel : entry->relations) {
    for (const auto& [left, right] : rel.word_pairs(n)) {
      for (const MultiIndex& index : basis) {
        const SparseVector e = SparseVector::basis(index);
        if (act(rep, left, e) != act(rep, right, e)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool monomial_on_box(const MonomialRep& rep, long box) {
  for (Gen j = 1; j <= rep.rank(); ++j) {
    for (const MultiIndex& index : box_indices(rep.arity(), box)) {
      if (act(rep, {j}, SparseVector::basis(index)).term_count() > 1) {
        return false;
      }
    }
  }
  return true;
}

bool guards_match_negative_shifts(const MonomialRep& rep) {
  for (Gen j = 1; j <= rep.rank(); ++j) {
    const GeneratorAction& a = rep.action(j);
    for (int p = 1; p <= rep.arity(); ++p) {
      const bool guarded =
          std::find(a.guard.begin(), a.guard.end(), p) != a.guard.end();
      if (guarded != (a.shift[p - 1] < 0)) {
        return false;
      }
    }
  }
  return true;
}

SparseVector random_vector(int arity, long max_index, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<long> index_dist(0, max_index);
  std::uniform_int_distribution<int> num_dist(1, 6);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while (true) {
    SparseVector v(arity);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      MultiIndex index(arity);
      for (int p = 0; p < arity; ++p) {
        index[p] = index_dist(rng);
      }
      Scalar coeff(num_dist(rng), den_dist(rng));
      coeff.canonicalize();
      if (sign_dist(rng)) {
        coeff = -coeff;
      }
      v.add_term(index, coeff);
    }
    if (!v.is_zero()) {
      return v;
    }
  }
}

}  // namespace chinoid
