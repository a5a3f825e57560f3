#include "chinoid/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace chinoid {

Diagram::Diagram(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be at least 1");
  }
}

Diagram Diagram::root(int n) { return Diagram(n); }

Diagram Diagram::level1_dot(int n, int s) {
  Diagram d(n);
  if (s < 2 || s > n - 1) {
    throw std::invalid_argument("first-level dot must sit at 2..n-1");
  }
  d.dots_.push_back(s);
  d.validate();
  return d;
}

Diagram Diagram::level1_arc(int n, int s) {
  Diagram d(n);
  if (s < 1 || s + 1 > n) {
    throw std::invalid_argument("first-level arc must be (s, s+1) within 1..n");
  }
  d.arcs_.emplace_back(s, s + 1);
  d.validate();
  return d;
}

int Diagram::lo() const {
  if (is_root()) {
    throw std::logic_error("the root has no used interval");
  }
  int lo = n_ + 1;
  for (const auto& [low, high] : arcs_) {
    lo = std::min(lo, low);
  }
  for (int dot : dots_) {
    lo = std::min(lo, dot);
  }
  return lo;
}

int Diagram::hi() const {
  if (is_root()) {
    throw std::logic_error("the root has no used interval");
  }
  int hi = 0;
  for (const auto& [low, high] : arcs_) {
    hi = std::max(hi, high);
  }
  for (int dot : dots_) {
    hi = std::max(hi, dot);
  }
  return hi;
}

void Diagram::validate() const {
  if (is_root()) {
    return;
  }
  std::vector<int> used;
  for (const auto& [low, high] : arcs_) {
    if (low < 1 || high > n_ || low >= high) {
      throw std::invalid_argument("arc endpoints outside 1..n or inverted");
    }
    used.push_back(low);
    used.push_back(high);
  }
  for (int dot : dots_) {
    if (dot < 1 || dot > n_) {
      throw std::invalid_argument("dot outside 1..n");
    }
    used.push_back(dot);
  }
  std::sort(used.begin(), used.end());
  // used positions are all distinct (one arc per position, dots off arcs)
  // and form a contiguous interval
  for (std::size_t i = 0; i + 1 < used.size(); ++i) {
    if (used[i] == used[i + 1]) {
      throw std::invalid_argument("position used twice");
    }
    if (used[i] + 1 != used[i + 1]) {
      throw std::invalid_argument("used positions are not contiguous");
    }
  }
  // arcs form a strictly nested chain; the innermost one encloses at most a
  // single position (its center dot)
  for (std::size_t i = 0; i + 1 < arcs_.size(); ++i) {
    if (!(arcs_[i].first < arcs_[i + 1].first &&
          arcs_[i + 1].second < arcs_[i].second)) {
      throw std::invalid_argument("arcs are not nested");
    }
  }
  if (!arcs_.empty()) {
    const auto& inner = arcs_.back();
    if (inner.second - inner.first > 2) {
      throw std::invalid_argument("innermost arc spans more than one position");
    }
  }
  if (arcs_.empty() && dots_.size() != 1) {
    throw std::invalid_argument("an arcless diagram must be a single dot");
  }
}

StepKind Diagram::last_step() const {
  if (is_root()) {
    return StepKind::Root;
  }
  if (arcs_.empty()) {
    return StepKind::Dot;  // first-level dot
  }
  const auto& outer = arcs_.front();
  if (hi() > outer.second || lo() < outer.first) {
    return StepKind::Dot;
  }
  return StepKind::Arc;
}

GrowthSide Diagram::growth_side() const {
  if (is_root() || arcs_.empty()) {
    return GrowthSide::None;
  }
  const auto& outer = arcs_.front();
  if (hi() > outer.second) {
    return GrowthSide::Right;
  }
  if (lo() < outer.first) {
    return GrowthSide::Left;
  }
  return GrowthSide::None;
}

Diagram Diagram::with_arc(int low, int high) const {
  Diagram d = *this;
  d.arcs_.emplace_back(low, high);
  std::sort(d.arcs_.begin(), d.arcs_.end());
  d.validate();
  return d;
}

Diagram Diagram::with_dot(int pos) const {
  Diagram d = *this;
  d.dots_.push_back(pos);
  std::sort(d.dots_.begin(), d.dots_.end());
  d.validate();
  return d;
}

std::vector<Diagram> Diagram::children() const {
  if (is_root()) {
    return first_level(n_);
  }
  if (is_leaf(*this)) {
    throw IsLeaf("a leaf diagram has no children");
  }
  const int clo = lo();
  const int chi = hi();
  bool want_left_dot = false;
  bool want_right_dot = false;
  switch (last_step()) {
    case StepKind::Arc:
      want_left_dot = want_right_dot = true;
      break;
    case StepKind::Dot:
      // after a first-level dot only the enclosing arc may follow; a later
      // dot keeps growth on its own side
      want_left_dot = growth_side() == GrowthSide::Left;
      want_right_dot = growth_side() == GrowthSide::Right;
      break;
    case StepKind::Root:
      break;
  }
  std::vector<Diagram> out;
  if (clo - 1 >= 1 && chi + 1 <= n_) {
    out.push_back(with_arc(clo - 1, chi + 1));
  }
  if (want_left_dot && clo - 1 >= 1) {
    out.push_back(with_dot(clo - 1));
  }
  if (want_right_dot && chi + 1 <= n_) {
    out.push_back(with_dot(chi + 1));
  }
  return out;
}

nlohmann::ordered_json Diagram::to_json() const {
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const auto& [low, high] : arcs_) {
    arcs.push_back({low, high});
  }
  return nlohmann::ordered_json{{"n", n_}, {"arcs", std::move(arcs)}, {"dots", dots_}};
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  Diagram d(j.at("n").get<int>());
  for (const auto& arc : j.at("arcs")) {
    d.arcs_.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
  }
  d.dots_ = j.at("dots").get<std::vector<int>>();
  std::sort(d.arcs_.begin(), d.arcs_.end());
  std::sort(d.dots_.begin(), d.dots_.end());
  d.validate();
  return d;
}

std::string Diagram::ascii() const {
  std::string out;
  for (int pos = 1; pos <= n_; ++pos) {
    const char* glyph = "○";  // unused
    for (const auto& [low, high] : arcs_) {
      if (pos == low) {
        glyph = "(";
      } else if (pos == high) {
        glyph = ")";
      }
    }
    if (std::binary_search(dots_.begin(), dots_.end(), pos)) {
      glyph = "●";
    }
    if (pos > 1) {
      out += ' ';
    }
    out += glyph;
  }
  return out;
}

bool is_leaf(const Diagram& d) {
  for (const auto& [low, high] : d.arcs()) {
    if (low == 1 || high == d.rank()) {
      return true;
    }
  }
  return false;
}

std::vector<Diagram> first_level(int n) {
  if (n < 2) {
    throw RankTooSmall("the diagram tree needs rank >= 2");
  }
  std::vector<Diagram> out;
  for (int s = 2; s <= n - 1; ++s) {
    out.push_back(Diagram::level1_dot(n, s));
  }
  for (int s = 1; s <= n - 1; ++s) {
    out.push_back(Diagram::level1_arc(n, s));
  }
  return out;
}

Branch::Branch(Diagram level1) {
  if (level1.is_root()) {
    throw std::invalid_argument("a branch starts at a first-level diagram");
  }
  const auto first = first_level(level1.rank());
  if (std::find(first.begin(), first.end(), level1) == first.end()) {
    throw std::invalid_argument("branch head is not a first-level diagram");
  }
  diagrams_.push_back(std::move(level1));
}

Branch Branch::extended(const Diagram& child) const {
  const auto kids = tip().children();
  if (std::find(kids.begin(), kids.end(), child) == kids.end()) {
    throw std::invalid_argument("diagram is not a child of the branch tip");
  }
  Branch out = *this;
  out.diagrams_.push_back(child);
  return out;
}

std::vector<BranchStep> branch_steps(const Branch& b) {
  std::vector<BranchStep> steps;
  const Diagram* prev = nullptr;
  for (const Diagram& d : b.diagrams()) {
    BranchStep st;
    const std::size_t prev_arcs = prev ? prev->arcs().size() : 0;
    if (d.arcs().size() > prev_arcs) {
      // the new arc is the outermost one
      st.kind = StepKind::Arc;
      st.low = d.arcs().front().first;
      st.high = d.arcs().front().second;
    } else {
      st.kind = StepKind::Dot;
      int pos = 0;
      for (int dot : d.dots()) {
        if (!prev || !std::binary_search(prev->dots().begin(),
                                         prev->dots().end(), dot)) {
          pos = dot;
          break;
        }
      }
      st.low = st.high = pos;
    }
    steps.push_back(st);
    prev = &d;
  }
  return steps;
}

namespace {

void walk(const Branch& b, std::vector<Branch>* leaves,
          std::vector<Branch>* all) {
  if (all) {
    all->push_back(b);
  }
  if (is_leaf(b.tip())) {
    if (leaves) {
      leaves->push_back(b);
    }
    return;
  }
  for (const Diagram& child : b.tip().children()) {
    walk(b.extended(child), leaves, all);
  }
}

}  // namespace

std::vector<Branch> enumerate_leaves(int n) {
  std::vector<Branch> out;
  for (const Diagram& d : first_level(n)) {
    walk(Branch(d), &out, nullptr);
  }
  return out;
}

std::vector<Branch> enumerate_tree(int n) {
  std::vector<Branch> out;
  for (const Diagram& d : first_level(n)) {
    walk(Branch(d), nullptr, &out);
  }
  return out;
}

}  // namespace chinoid
