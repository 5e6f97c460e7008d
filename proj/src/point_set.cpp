#include <algorithm>
#include <random>
#include <stdexcept>

#include "shatter/oracle.hpp"

namespace shatter {

namespace {

// Rank of the rows by fraction-exact Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(r), m.end(),
                              [c](const auto& row) { return sgn(row[c]) != 0; });
    if (pivot == m.end()) continue;
    std::swap(*pivot, m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Visits every k-subset of {0..n-1} in lexicographic order; stops when fn returns false.
template <class Fn>
bool all_subsets(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool in_general_position(std::size_t dim, const std::vector<Point>& points) {
  const std::size_t n = points.size();
  if (n == 0) return true;
  const std::size_t k = std::min(dim + 1, n);
  return all_subsets(n, k, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> lifted;
    lifted.reserve(k);
    for (auto i : idx) {
      auto row = points[i];
      row.emplace_back(1);
      lifted.push_back(std::move(row));
    }
    return rank(std::move(lifted)) == k;
  });
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points, std::uint64_t seed, int resamples)
    : dim_(dim), points_(std::move(points)), seed_(seed), resamples_(resamples) {
  if (dim_ == 0) throw std::invalid_argument("point set dimension must be >= 1");
  for (const auto& p : points_)
    if (p.size() != dim_) throw std::invalid_argument("point has wrong dimension");
  if (!in_general_position(dim_, points_)) throw std::invalid_argument("points are not in general position");
}

PointSet generate_general_position(std::size_t n, std::size_t h, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (h < 1 || h > 4) throw std::invalid_argument("generate: h must lie in [1, 4]");
  std::mt19937_64 rng(seed);
  constexpr std::uint64_t span = 2 * kCoordinateBound + 1;
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    std::vector<Point> pts(n, Point(h));
    for (auto& p : pts)
      for (auto& coord : p) coord = static_cast<long>(rng() % span) - kCoordinateBound;
    if (in_general_position(h, pts)) return PointSet(h, std::move(pts), seed, attempt);
  }
  throw std::runtime_error("generate: no general-position set after " + std::to_string(kMaxResamples) +
                           " resamples");
}

}  // namespace shatter
