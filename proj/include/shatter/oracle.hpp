#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shatter/logarithmetic.hpp"
#include "shatter/rational_lp.hpp"

namespace shatter {

using Rational = lp::Rational;
using Point = std::vector<Rational>;

/// True iff every min(dim+1, n)-subset of the lifted vectors (x, 1) has full rank.
bool in_general_position(std::size_t dim, const std::vector<Point>& points);

/// n distinct points in dimension h, in general position.
class PointSet {
public:
  /// Throws std::invalid_argument on a dimension mismatch or degenerate configuration.
  PointSet(std::size_t dim, std::vector<Point> points, std::uint64_t seed = 0, int resamples = 0);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::uint64_t seed() const { return seed_; }
  int resamples() const { return resamples_; }

private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::uint64_t seed_;
  int resamples_;
};

/// Labels in {-1, +1}; label i applies to point i.
struct Dichotomy {
  std::vector<int> labels;

  /// Bit i of mask set means point i is labeled +1.
  static Dichotomy from_mask(std::uint64_t mask, std::size_t n);
  Dichotomy negated() const;
};

/// labels[i] * (w . x_i + b) >= margin > 0 for every point.
struct SeparabilityCertificate {
  std::vector<Rational> w;
  Rational b;
  Rational margin;

  bool holds_for(const PointSet& ps, const Dichotomy& d) const;
};

/// Identifies the generator so verify reports can be reproduced.
inline constexpr const char* kPrngId = "mt19937_64; coordinate = -1000 + (draw mod 2001)";
inline constexpr int kMaxResamples = 100;
inline constexpr std::size_t kMaxEnumerationSize = 20;
inline constexpr int kCoordinateBound = 1000;

/// Integer coordinates uniform in [-1000, 1000], redrawn as a whole until the
/// set is in general position. Requires n >= 1, 1 <= h <= 4.
PointSet generate_general_position(std::size_t n, std::size_t h, std::uint64_t seed);

/// Exact LP: maximize t s.t. labels[i](w . x_i + b) >= t, |w_j| <= 1, |b| <= 1.
/// Returns a certificate iff the optimum t is positive.
std::optional<SeparabilityCertificate> is_separable(const PointSet& ps, const Dichotomy& d);

/// Serial reference: enumerates all 2^n labelings in mask order. n <= 20.
BigCount count_dichotomies_serial(const PointSet& ps);

/// OpenMP kernel over the same enumeration, split across `workers` threads.
BigCount count_dichotomies(const PointSet& ps, int workers = 1);

struct TrialResult {
  std::uint64_t seed;
  int resamples;
  BigCount count;
};

struct VerifyReport {
  std::size_t n;
  std::size_t h;
  std::uint64_t seed;
  int workers;
  std::string prng;
  BigCount formula;
  std::vector<TrialResult> trials;
  bool pass;
};

/// Trial t draws its point set with seed + t and compares the enumerated
/// count against shatter_single(n, h). Requires n <= 20, 1 <= h <= 4.
VerifyReport verify_formula(std::size_t n, std::size_t h, int trials, std::uint64_t seed, int workers = 1);

}  // namespace shatter
