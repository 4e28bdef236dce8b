#pragma once

#include <gmpxx.h>

#include <string>

namespace pcvx {

/// Exact rational scalar. GMP keeps values canonical: positive denominator,
/// coprime numerator/denominator, zero stored as 0/1.
using Rat = mpq_class;

/// Parse a rational literal: "p" or "p/q" with an optional leading minus and
/// decimal digits only.
Rat rat_from_string(const std::string& text);

/// Canonical literal: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

}  // namespace pcvx
