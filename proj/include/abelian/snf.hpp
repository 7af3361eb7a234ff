#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

/// Entry sizes seen during elimination, in bits of the absolute value.
struct SnfStats {
  std::size_t input_bits = 0;
  std::size_t peak_bits = 0;
};

/// Diagonal s_1 | s_2 | ... of the Smith normal form, min(rows, cols)
/// entries, all non-negative (zeros last).
///
/// Classical elimination: each stage pivots on the smallest-magnitude nonzero
/// entry of the working submatrix and clears its row and column, re-pivoting
/// on remainders. The divisibility chain is repaired afterwards with pairwise
/// gcd/lcm exchanges. With `stats`, the matrix is rescanned after every
/// reduction pass to record the largest entry; leave it null when timing.
std::vector<BigInt> smith_normal_form(IntMatrix a, SnfStats* stats = nullptr);

/// The (k+1) x k relation matrix of g / <x>: first row the coordinates of x in
/// the invariant-factor presentation, then diag(m_1, ..., m_k).
IntMatrix quotient_relation_matrix(const AbelianGroup& g, const GroupElement& x);

/// Isomorphism class of g / <x> read off the Smith normal form.
CanonicalGroupKey quotient_by_snf(const AbelianGroup& g, const GroupElement& x, SnfStats* stats = nullptr);

}  // namespace abelian
