#include "abelian/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace abelian {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) {
      if (j < c) m(i, j) = v;
      ++j;
    }
    ++i;
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

std::optional<Cell> smallest_in_submatrix(const IntMatrix& a, std::size_t t) {
  std::optional<Cell> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = Cell{i, j};
    }
  }
  return best;
}

// Smallest nonzero entry on the pivot's row or column, pivot excluded.
std::optional<Cell> smallest_on_cross(const IntMatrix& a, std::size_t t) {
  std::optional<Cell> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (sgn(a(i, j)) == 0) return;
    if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = Cell{i, j};
  };
  for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

// Clears column t below and row t right of the pivot; true if any remainder
// is left behind.
bool reduce_cross(IntMatrix& a, std::size_t t) {
  BigInt q;
  bool dirty = false;
  const BigInt pivot = a(t, t);

  for (std::size_t i = t + 1; i < a.rows(); ++i) {
    if (sgn(a(i, t)) == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
    if (sgn(q) != 0) {
      for (std::size_t j = t; j < a.cols(); ++j)
        if (sgn(a(t, j)) != 0) a(i, j) -= q * a(t, j);
    }
    if (sgn(a(i, t)) != 0) dirty = true;
  }
  const bool column_clear = !dirty;

  for (std::size_t j = t + 1; j < a.cols(); ++j) {
    if (sgn(a(t, j)) == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
    if (sgn(q) != 0) {
      if (column_clear) {
        // column t is zero below the pivot, so only a(t, j) moves
        a(t, j) -= q * pivot;
      } else {
        for (std::size_t i = t; i < a.rows(); ++i)
          if (sgn(a(i, t)) != 0) a(i, j) -= q * a(i, t);
      }
    }
    if (sgn(a(t, j)) != 0) dirty = true;
  }
  return dirty;
}

std::size_t max_bits(const IntMatrix& a) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) out = std::max(out, mpz_sizeinbase(a(i, j).get_mpz_t(), 2));
  return out;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix a, SnfStats* stats) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::vector<BigInt> diag(limit, BigInt(0));
  if (stats) stats->input_bits = stats->peak_bits = max_bits(a);

  for (std::size_t t = 0; t < limit; ++t) {
    const auto start = smallest_in_submatrix(a, t);
    if (!start) break;
    a.swap_rows(t, start->first);
    a.swap_cols(t, start->second);
    for (;;) {
      const bool dirty = reduce_cross(a, t);
      if (stats) stats->peak_bits = std::max(stats->peak_bits, max_bits(a));
      if (!dirty) break;
      const auto next = smallest_on_cross(a, t);
      a.swap_rows(t, next->first);
      a.swap_cols(t, next->second);
    }
    diag[t] = abs(a(t, t));
  }

  // pairwise gcd/lcm exchange; zero behaves as the top of the divisibility order
  BigInt g, l;
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = i + 1; j < limit; ++j) {
      if (sgn(diag[i]) == 0 && sgn(diag[j]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

IntMatrix quotient_relation_matrix(const AbelianGroup& g, const GroupElement& x) {
  const auto coords = to_invariant_coordinates(g, x);
  const auto& factors = g.invariant_factors();
  const std::size_t k = factors.size();
  IntMatrix m(k + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    m(0, j) = coords[j];
    m(j + 1, j) = factors[j];
  }
  return m;
}

CanonicalGroupKey quotient_by_snf(const AbelianGroup& g, const GroupElement& x, SnfStats* stats) {
  auto diag = smith_normal_form(quotient_relation_matrix(g, x), stats);
  // the diagonal block makes the matrix full column rank, so no zeros appear
  std::erase_if(diag, [](const BigInt& s) { return s == 1 || sgn(s) == 0; });
  return key_of_cyclic_sum(diag);
}

}  // namespace abelian
