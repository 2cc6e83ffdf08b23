#pragma once

#include <string>
#include <variant>
#include <vector>

#include "simplexeq/rational.hpp"

namespace simplexeq {

/// Dense rational matrix; plumbing for the supporting-price system.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) {
    return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
  }
  const Rational& at(int r, int c) const {
    return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
  }

 private:
  int rows_, cols_;
  std::vector<Rational> cells_;
};

struct UniqueSolution {
  std::vector<Rational> x;
};

/// Coefficients c over the original rows with c*A = 0 but c*b != 0.
struct Inconsistent {
  std::vector<Rational> row_combination;
};

struct Underdetermined {
  int rank = 0;
  std::vector<int> free_columns;  // 0-based pivotless columns
};

using SolveOutcome = std::variant<UniqueSolution, Inconsistent, Underdetermined>;

std::string outcome_name(const SolveOutcome& outcome);

/// Solves A*x = b by Gaussian elimination over exact rationals with
/// first-nonzero pivoting. Accepts rows >= cols; a UniqueSolution is
/// returned only when rank(A) equals the column count and the augmented
/// system is consistent, and it is re-checked to satisfy A*x = b exactly.
SolveOutcome solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace simplexeq
