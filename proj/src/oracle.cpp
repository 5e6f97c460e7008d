#include <stdexcept>
#include <string>

#include <omp.h>

#include "shatter/oracle.hpp"
#include "shatter/shattering.hpp"

namespace shatter {

namespace {

void require_enumerable(const PointSet& ps) {
  if (ps.size() > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration guard: n = " + std::to_string(ps.size()) + " exceeds " +
                                std::to_string(kMaxEnumerationSize));
}

// Variables: t, then a_0..a_h, then c_0..c_h with w_j = a_j - c_j and b = a_h - c_h.
lp::Problem separation_lp(const PointSet& ps, const Dichotomy& d) {
  const std::size_t h = ps.dim();
  const std::size_t affine = h + 1;
  const std::size_t vars = 1 + 2 * affine;
  lp::Problem prob;
  prob.c.assign(vars, Rational(0));
  prob.c[0] = 1;

  // t - y_i (w . x_i + b) <= 0
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<Rational> row(vars);
    row[0] = 1;
    const int y = d.labels[i];
    for (std::size_t j = 0; j < affine; ++j) {
      const Rational coord = j < h ? ps[i][j] : Rational(1);
      row[1 + j] = -y * coord;
      row[1 + affine + j] = y * coord;
    }
    prob.a.push_back(std::move(row));
    prob.b.emplace_back(0);
  }
  // a_j <= 1, c_j <= 1
  for (std::size_t j = 1; j < vars; ++j) {
    std::vector<Rational> row(vars);
    row[j] = 1;
    prob.a.push_back(std::move(row));
    prob.b.emplace_back(1);
  }
  return prob;
}

bool separable_mask(const PointSet& ps, std::uint64_t mask) {
  return is_separable(ps, Dichotomy::from_mask(mask, ps.size())).has_value();
}

}  // namespace

Dichotomy Dichotomy::from_mask(std::uint64_t mask, std::size_t n) {
  Dichotomy d;
  d.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.labels[i] = (mask >> i) & 1U ? 1 : -1;
  return d;
}

Dichotomy Dichotomy::negated() const {
  Dichotomy d = *this;
  for (auto& l : d.labels) l = -l;
  return d;
}

bool SeparabilityCertificate::holds_for(const PointSet& ps, const Dichotomy& d) const {
  if (sgn(margin) <= 0 || w.size() != ps.dim() || d.labels.size() != ps.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Rational activation = b;
    for (std::size_t j = 0; j < w.size(); ++j) activation += w[j] * ps[i][j];
    if (d.labels[i] * activation < margin) return false;
  }
  return true;
}

std::optional<SeparabilityCertificate> is_separable(const PointSet& ps, const Dichotomy& d) {
  if (d.labels.size() != ps.size()) throw std::invalid_argument("dichotomy length does not match point set");
  const auto sol = lp::maximize(separation_lp(ps, d));
  // Unbounded cannot occur: t is capped by every row through the box on (w, b).
  if (sol.status != lp::Status::optimal || sgn(sol.objective) <= 0) return std::nullopt;

  const std::size_t h = ps.dim();
  const std::size_t affine = h + 1;
  SeparabilityCertificate cert;
  cert.margin = sol.x[0];
  cert.w.resize(h);
  for (std::size_t j = 0; j < h; ++j) cert.w[j] = sol.x[1 + j] - sol.x[1 + affine + j];
  cert.b = sol.x[1 + h] - sol.x[1 + affine + h];
  return cert;
}

BigCount count_dichotomies_serial(const PointSet& ps) {
  require_enumerable(ps);
  const std::uint64_t total = std::uint64_t{1} << ps.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (separable_mask(ps, mask)) ++count;
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_dichotomies(const PointSet& ps, int workers) {
  require_enumerable(ps);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << ps.size());
  std::uint64_t count = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16) reduction(+ : count)
  for (std::int64_t mask = 0; mask < total; ++mask)
    if (separable_mask(ps, static_cast<std::uint64_t>(mask))) ++count;
  return BigCount(static_cast<unsigned long>(count));
}

VerifyReport verify_formula(std::size_t n, std::size_t h, int trials, std::uint64_t seed, int workers) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("verify: n must lie in [1, " + std::to_string(kMaxEnumerationSize) + "]");
  if (h < 1 || h > 4) throw std::invalid_argument("verify: h must lie in [1, 4]");
  if (trials < 1) throw std::invalid_argument("verify: trials must be >= 1");

  VerifyReport report{n, h, seed, workers, kPrngId, shatter_single(n, static_cast<std::uint32_t>(h)), {}, true};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const PointSet ps = generate_general_position(n, h, trial_seed);
    TrialResult r{trial_seed, ps.resamples(), count_dichotomies(ps, workers)};
    if (r.count != report.formula) report.pass = false;
    report.trials.push_back(std::move(r));
  }
  return report;
}

}  // namespace shatter
