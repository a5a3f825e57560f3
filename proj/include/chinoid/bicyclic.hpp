#pragma once

#include <algorithm>

namespace chinoid {

/// Element p^a q^b of the bicyclic monoid <p, q : qp = 1>, in normal form
/// (a, b >= 0). The single relation forces the product law below.
struct Bicyclic {
  long p = 0;  // exponent of p
  long q = 0;  // exponent of q

  friend Bicyclic operator*(const Bicyclic& x, const Bicyclic& y) {
    const long m = std::max(x.q, y.p);
    return {x.p - x.q + m, y.q - y.p + m};
  }
  Bicyclic& operator*=(const Bicyclic& y) {
    *this = *this * y;
    return *this;
  }
  bool operator==(const Bicyclic&) const = default;
  bool is_identity() const { return p == 0 && q == 0; }
};

/// Element g^e of the (multiplicative) infinite cyclic group. Exponents are
/// kept as full integers even though branch images only produce nonnegative
/// ones.
struct Cyclic {
  long e = 0;

  friend Cyclic operator*(const Cyclic& x, const Cyclic& y) {
    return {x.e + y.e};
  }
  Cyclic& operator*=(const Cyclic& y) {
    e += y.e;
    return *this;
  }
  bool operator==(const Cyclic&) const = default;
};

}  // namespace chinoid
