#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chinoid {

/// Exact rational scalar. All coefficient arithmetic in this library is
/// exact; floating point is never used.
using Scalar = mpq_class;

/// Parses "3/2", "-1", "0". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar scalar_from_string(const std::string& text);

/// Canonical text form: "p/q" with q > 1, otherwise just "p".
std::string scalar_to_string(const Scalar& value);

/// Parses a comma-separated list, e.g. "3/2,1,-5".
std::vector<Scalar> scalar_list_from_string(const std::string& text);

/// value^exp for exp >= 0.
Scalar scalar_pow(const Scalar& value, long exp);

}  // namespace chinoid
