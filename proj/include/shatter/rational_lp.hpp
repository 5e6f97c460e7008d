#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace shatter::lp {

using Rational = mpq_class;

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is a
/// feasible starting basis. Solved exactly with the dense tableau simplex and
/// Bland's rule.
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class Status { optimal, unbounded };

struct Solution {
  Status status = Status::optimal;
  Rational objective;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Throws std::invalid_argument on ragged input or a negative right-hand side.
Solution maximize(const Problem& problem);

}  // namespace shatter::lp
