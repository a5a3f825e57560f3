#include "chinoid/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace chinoid {

Scalar scalar_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string scalar_to_string(const Scalar& value) {
  return value.get_str();
}

std::vector<Scalar> scalar_list_from_string(const std::string& text) {
  std::vector<Scalar> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    out.push_back(scalar_from_string(item));
  }
  return out;
}

Scalar scalar_pow(const Scalar& value, long exp) {
  if (exp < 0) {
    throw std::invalid_argument("scalar_pow: negative exponent");
  }
  Scalar out = 1;
  for (long i = 0; i < exp; ++i) {
    out *= value;
  }
  return out;
}

}  // namespace chinoid
