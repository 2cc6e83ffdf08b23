#include "simplexeq/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "simplexeq/errors.hpp"

namespace simplexeq {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw Error(Errc::empty_matrix, "matrix dimensions must be at least 1x1");
  }
  cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(Errc::empty_matrix, "matrix needs at least one row and one column");
  }
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != m.cols()) {
      throw Error(Errc::shape_mismatch, "ragged rows in matrix literal");
    }
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

std::string outcome_name(const SolveOutcome& outcome) {
  if (std::holds_alternative<UniqueSolution>(outcome)) return "unique";
  if (std::holds_alternative<Inconsistent>(outcome)) return "inconsistent";
  return "underdetermined";
}

SolveOutcome solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  const int rows = a.rows();
  const int cols = a.cols();
  if (static_cast<int>(b.size()) != rows) {
    throw Error(Errc::shape_mismatch,
                "right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                    std::to_string(rows) + " rows");
  }

  // Working copy of [A | b] plus a combination tracker: comb[r] holds the
  // coefficients of the original rows that produced working row r, so an
  // inconsistent row carries its own witness.
  RationalMatrix work(rows, cols);
  std::vector<Rational> rhs = b;
  std::vector<std::vector<Rational>> comb(static_cast<std::size_t>(rows),
                                          std::vector<Rational>(static_cast<std::size_t>(rows), Rational(0)));
  for (int r = 0; r < rows; ++r) {
    comb[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
    for (int c = 0; c < cols; ++c) work.at(r, c) = a.at(r, c);
  }

  std::vector<int> pivot_col_of_row;  // row index in elimination order -> column
  std::vector<int> free_columns;
  int rank = 0;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!work.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      free_columns.push_back(c);
      continue;
    }
    if (pivot != rank) {
      for (int cc = 0; cc < cols; ++cc) std::swap(work.at(pivot, cc), work.at(rank, cc));
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(rank)]);
      std::swap(comb[static_cast<std::size_t>(pivot)], comb[static_cast<std::size_t>(rank)]);
    }
    for (int r = rank + 1; r < rows; ++r) {
      if (work.at(r, c).is_zero()) continue;
      Rational factor = work.at(r, c) / work.at(rank, c);
      work.at(r, c) = 0;
      for (int cc = c + 1; cc < cols; ++cc) {
        if (!work.at(rank, cc).is_zero()) work.at(r, cc) -= factor * work.at(rank, cc);
      }
      rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(rank)];
      auto& cr = comb[static_cast<std::size_t>(r)];
      const auto& cp = comb[static_cast<std::size_t>(rank)];
      for (int k = 0; k < rows; ++k) {
        if (!cp[static_cast<std::size_t>(k)].is_zero()) {
          cr[static_cast<std::size_t>(k)] -= factor * cp[static_cast<std::size_t>(k)];
        }
      }
    }
    pivot_col_of_row.push_back(c);
    ++rank;
  }

  // Rows beyond the rank are all-zero on the left; any nonzero right-hand
  // side there certifies inconsistency.
  for (int r = rank; r < rows; ++r) {
    if (!rhs[static_cast<std::size_t>(r)].is_zero()) {
      return Inconsistent{std::move(comb[static_cast<std::size_t>(r)])};
    }
  }
  if (rank < cols) {
    return Underdetermined{rank, std::move(free_columns)};
  }

  std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
  for (int r = rank - 1; r >= 0; --r) {
    int c = pivot_col_of_row[static_cast<std::size_t>(r)];
    Rational acc = rhs[static_cast<std::size_t>(r)];
    for (int cc = c + 1; cc < cols; ++cc) {
      if (!work.at(r, cc).is_zero()) acc -= work.at(r, cc) * x[static_cast<std::size_t>(cc)];
    }
    x[static_cast<std::size_t>(c)] = acc / work.at(r, c);
  }

  // Verification invariant: the returned solution satisfies the original
  // system exactly.
  for (int r = 0; r < rows; ++r) {
    Rational acc = 0;
    for (int c = 0; c < cols; ++c) {
      if (!a.at(r, c).is_zero()) acc += a.at(r, c) * x[static_cast<std::size_t>(c)];
    }
    if (acc != b[static_cast<std::size_t>(r)]) {
      throw std::logic_error("solve_exact: solution failed the exact re-check");
    }
  }
  return UniqueSolution{std::move(x)};
}

}  // namespace simplexeq
