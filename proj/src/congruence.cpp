#include "chinoid/congruence.hpp"

#include <optional>
#include <unordered_set>
#include <utility>

namespace chinoid {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= static_cast<std::size_t>(g);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

void chinese_rewrites(const Word& w, std::vector<Word>& out) {
  if (w.size() < 3) {
    return;
  }
  for (std::size_t t = 0; t + 2 < w.size(); ++t) {
    const Gen x = w[t], y = w[t + 1], z = w[t + 2];
    auto emit = [&](Gen a, Gen b, Gen c) {
      if (a == x && b == y && c == z) {
        return;
      }
      Word nw = w;
      nw[t] = a;
      nw[t + 1] = b;
      nw[t + 2] = c;
      out.push_back(std::move(nw));
    };
    // The factor matches a_j a_k a_i when z <= x <= y, a_k a_j a_i when
    // z <= y <= x, and a_k a_i a_j when y <= z <= x; each match may be
    // replaced by the other two spellings of the same (i, j, k).
    if (z <= x && x <= y) {
      emit(y, x, z);
      emit(y, z, x);
    }
    if (z <= y && y <= x) {
      emit(y, x, z);
      emit(x, z, y);
    }
    if (y <= z && z <= x) {
      emit(z, x, y);
      emit(x, z, y);
    }
  }
}

std::vector<Word> word_closure(const Word& seed, const NeighborFn& neighbors,
                               std::size_t budget) {
  std::unordered_set<Word, WordHash> seen{seed};
  std::vector<Word> queue{seed};
  std::vector<Word> buffer;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Word current = queue[qi];  // queue may reallocate below
    buffer.clear();
    neighbors(current, buffer);
    for (Word& nb : buffer) {
      if (seen.insert(nb).second) {
        if (seen.size() > budget) {
          throw ClassBudgetExceeded(budget);
        }
        queue.push_back(std::move(nb));
      }
    }
  }
  return queue;
}

bool closure_reaches(const Word& seed, const Word& target,
                     const NeighborFn& neighbors, std::size_t budget) {
  if (seed == target) {
    return true;
  }
  std::unordered_set<Word, WordHash> seen{seed};
  std::vector<Word> queue{seed};
  std::vector<Word> buffer;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Word current = queue[qi];
    buffer.clear();
    neighbors(current, buffer);
    for (Word& nb : buffer) {
      if (nb == target) {
        return true;
      }
      if (seen.insert(nb).second) {
        if (seen.size() > budget) {
          throw ClassBudgetExceeded(budget);
        }
        queue.push_back(std::move(nb));
      }
    }
  }
  return false;
}

std::vector<Word> congruence_class(const Word& w, int n, std::size_t budget) {
  check_word(w, n);
  return word_closure(w, chinese_rewrites, budget);
}

CanonicalForm normalize(const Word& w, int n, std::size_t budget) {
  const std::vector<Word> cls = congruence_class(w, n, budget);
  std::optional<CanonicalForm> found;
  for (const Word& member : cls) {
    if (auto cf = match_canonical_shape(member, n)) {
      if (found) {
        throw MultipleCanonicalMembers(
            "congruence class of '" + word_to_string(w) +
            "' contains more than one canonically shaped word");
      }
      found = std::move(cf);
    }
  }
  if (!found) {
    throw NoCanonicalMember("congruence class of '" + word_to_string(w) +
                            "' contains no canonically shaped word");
  }
  return *found;
}

CanonicalForm multiply(const CanonicalForm& x, const CanonicalForm& y,
                       std::size_t budget) {
  if (x.rank() != y.rank()) {
    throw std::invalid_argument("cannot multiply elements of different rank");
  }
  return normalize(concat(x.expand(), y.expand()), x.rank(), budget);
}

Word left_divisor_shift_witness(int n, const Word& x, std::size_t budget) {
  check_word(x, n);
  Word seed;
  seed.reserve(x.size() + 2);
  seed.push_back(n);
  seed.insert(seed.end(), x.begin(), x.end());
  seed.push_back(1);
  for (const Word& member : word_closure(seed, chinese_rewrites, budget)) {
    if (member.size() >= 2 && member[0] == n && member[1] == 1) {
      return Word(member.begin() + 2, member.end());
    }
  }
  // a_n C a_1 is contained in a_n a_1 C, so the search cannot fail
  throw std::logic_error("no member of the class of '" + word_to_string(seed) +
                         "' starts with a" + std::to_string(n) + " a1");
}

}  // namespace chinoid
