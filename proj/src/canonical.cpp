#include "chinoid/canonical.hpp"

#include <stdexcept>
#include <string>

namespace chinoid {

CanonicalForm::CanonicalForm(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be at least 1");
  }
  k_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0);
}

std::size_t CanonicalForm::cell(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > i) {
    throw std::out_of_range("triangle cell (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside rank " +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(i) * (i - 1) / 2 + (j - 1);
}

CanonicalForm CanonicalForm::from_triangle(
    int n, const std::vector<std::vector<long>>& rows) {
  CanonicalForm cf(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("triangle must have exactly n rows");
  }
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (row.size() != static_cast<std::size_t>(i)) {
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " must have " + std::to_string(i) +
                                  " entries");
    }
    for (int j = 1; j <= i; ++j) {
      if (row[j - 1] < 0) {
        throw std::invalid_argument("negative exponent in triangle");
      }
      cf.set_exponent(i, j, row[j - 1]);
    }
  }
  return cf;
}

long CanonicalForm::exponent(int i, int j) const { return k_[cell(i, j)]; }

void CanonicalForm::set_exponent(int i, int j, long value) {
  if (value < 0) {
    throw std::invalid_argument("negative exponent");
  }
  k_[cell(i, j)] = value;
}

Word CanonicalForm::expand() const {
  Word w;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j < i; ++j) {
      for (long c = 0; c < exponent(i, j); ++c) {
        w.push_back(i);
        w.push_back(j);
      }
    }
    for (long c = 0; c < exponent(i, i); ++c) {
      w.push_back(i);
    }
  }
  return w;
}

long CanonicalForm::degree(Gen i) const {
  if (i < 1 || i > n_) {
    throw std::invalid_argument("generator index outside 1..n");
  }
  long d = exponent(i, i);
  for (int j = 1; j < i; ++j) {
    d += exponent(i, j);
  }
  for (int l = i + 1; l <= n_; ++l) {
    d += exponent(l, i);
  }
  return d;
}

long CanonicalForm::total_degree() const {
  long d = 0;
  for (int i = 1; i <= n_; ++i) {
    d += degree(i);
  }
  return d;
}

nlohmann::ordered_json CanonicalForm::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= n_; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 1; j <= i; ++j) {
      row.push_back(exponent(i, j));
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"n", n_}, {"k", std::move(rows)}};
}

CanonicalForm CanonicalForm::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  auto rows = j.at("k").get<std::vector<std::vector<long>>>();
  return from_triangle(n, rows);
}

std::optional<CanonicalForm> match_canonical_shape(const Word& w, int n) {
  for (Gen g : w) {
    if (g < 1 || g > n) {
      return std::nullopt;
    }
  }
  CanonicalForm cf(n);
  int block = 0;    // current block index i
  int last_j = 0;   // partner of the previous pair within this block
  bool in_run = false;  // inside the trailing a_i^{k(i,i)} run
  std::size_t pos = 0;
  while (pos < w.size()) {
    Gen x = w[pos];
    if (x < block) {
      return std::nullopt;  // blocks must appear in increasing order
    }
    if (x > block) {
      block = x;
      last_j = 0;
      in_run = false;
    }
    if (pos + 1 < w.size() && w[pos + 1] < block) {
      // a pair (a_i a_j) with j < i; pairs precede the run and their
      // partners must be nondecreasing
      Gen j = w[pos + 1];
      if (in_run || j < last_j) {
        return std::nullopt;
      }
      last_j = j;
      cf.set_exponent(block, j, cf.exponent(block, j) + 1);
      pos += 2;
    } else {
      in_run = true;
      cf.set_exponent(block, block, cf.exponent(block, block) + 1);
      ++pos;
    }
  }
  return cf;
}

}  // namespace chinoid
