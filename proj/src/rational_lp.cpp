#include "shatter/rational_lp.hpp"

#include <optional>
#include <stdexcept>

namespace shatter::lp {

namespace {

class Tableau {
public:
  explicit Tableau(const Problem& p)
      : rows_(p.b.size()), vars_(p.c.size()), cols_(vars_ + rows_ + 1),
        t_((rows_ + 1) * cols_), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (p.a[i].size() != vars_) throw std::invalid_argument("lp: ragged constraint matrix");
      if (sgn(p.b[i]) < 0) throw std::invalid_argument("lp: right-hand side must be nonnegative");
      for (std::size_t j = 0; j < vars_; ++j) at(i, j) = p.a[i][j];
      at(i, vars_ + i) = 1;
      at(i, cols_ - 1) = p.b[i];
      basis_[i] = vars_ + i;
    }
    // Objective row holds reduced costs -c; optimal when none is negative.
    for (std::size_t j = 0; j < vars_; ++j) at(rows_, j) = -p.c[j];
  }

  Solution run() {
    Solution s;
    while (true) {
      const auto enter = entering();
      if (!enter) break;
      const auto leave = leaving(*enter);
      if (!leave) {
        s.status = Status::unbounded;
        s.pivots = pivots_;
        return s;
      }
      pivot(*leave, *enter);
    }
    s.status = Status::optimal;
    s.objective = at(rows_, cols_ - 1);
    s.x.assign(vars_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < vars_) s.x[basis_[i]] = at(i, cols_ - 1);
    s.pivots = pivots_;
    return s;
  }

private:
  Rational& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }

  // Bland: lowest-index column with negative reduced cost.
  std::optional<std::size_t> entering() {
    for (std::size_t j = 0; j + 1 < cols_; ++j)
      if (sgn(at(rows_, j)) < 0) return j;
    return std::nullopt;
  }

  // Minimum ratio; ties broken by lowest basic variable index.
  std::optional<std::size_t> leaving(std::size_t col) {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(at(i, col)) <= 0) continue;
      Rational ratio = at(i, cols_ - 1) / at(i, col);
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / at(row, col);
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(at(row, j)) != 0) at(row, j) *= inv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row || sgn(at(i, col)) == 0) continue;
      const Rational factor = at(i, col);
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(at(row, j)) != 0) at(i, j) -= factor * at(row, j);
    }
    basis_[row] = col;
    ++pivots_;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

Solution maximize(const Problem& problem) {
  if (problem.a.size() != problem.b.size()) throw std::invalid_argument("lp: row count mismatch");
  return Tableau(problem).run();
}

}  // namespace shatter::lp
