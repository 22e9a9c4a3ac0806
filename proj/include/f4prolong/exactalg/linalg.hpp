#ifndef F4PROLONG_EXACTALG_LINALG_HPP
#define F4PROLONG_EXACTALG_LINALG_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "f4prolong/exactalg/matrix.hpp"
#include "f4prolong/exactalg/poly.hpp"
#include "f4prolong/exactalg/rational.hpp"

namespace f4prolong {

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;
using RatVector = std::vector<Rational>;

inline bool is_zero_value(const Rational& q) { return q == 0; }
inline bool is_zero_value(const MultiPoly& p) { return p.is_zero(); }

RatMatrix rat_matrix(const std::vector<std::vector<Rational>>& rows);
RatMatrix rat_matrix(std::size_t rows, std::size_t cols);
RatMatrix rat_identity(std::size_t n);

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the right kernel in reduced row-echelon form (each vector is
  /// one row of the canonical basis matrix).
  std::vector<RatVector> kernel;
};

/// Rank and right kernel by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix. An empty matrix has rank 0.
RankKernel rank_kernel(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form over the rationals.
Echelon rref(const RatMatrix& m);

/// Reduced row-echelon form of a list of vectors with zero rows dropped.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim);

/// Bareiss determinant. Throws for a non-square matrix.
Rational determinant(const RatMatrix& m);

/// Some solution of a·x = b, nullopt if inconsistent. The solution is
/// unique when a has full column rank; free variables are set to zero.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

bool is_skew_symmetric(const RatMatrix& m);
bool is_skew_symmetric(const PolyMatrix& m);

/// Determinant by cofactor expansion, memoized over column subsets so it
/// stays cheap for the small sizes used here. Works over any ring.
template <typename T>
T determinant_expansion(const Matrix<T>& m, const T& one) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("determinant_expansion: matrix too large");
  if (n == 0) return one;
  const T zero = one - one;
  const std::uint32_t full = (1u << n) - 1u;
  // minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
  std::vector<std::optional<T>> minors(full + 1u);
  minors[0] = one;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    T acc = zero;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const T& a = m(k - 1, j);
      const auto& sub = minors[mask & ~(1u << j)];
      if (!is_zero_value(a) && sub && !is_zero_value(*sub)) {
        if (((k - 1) + pos) % 2 == 0) {
          acc += a * *sub;
        } else {
          acc -= a * *sub;
        }
      }
      ++pos;
    }
    minors[mask] = std::move(acc);
  }
  return *minors[full];
}

namespace detail {

template <typename T>
T pfaffian_rec(const Matrix<T>& m, std::uint32_t mask, const T& one,
               std::unordered_map<std::uint32_t, T>& memo) {
  if (mask == 0) return one;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
  const std::uint32_t rest = mask & ~(1u << i);
  T acc = one - one;
  std::size_t pos = 0;
  for (std::size_t j = i + 1; j < m.rows(); ++j) {
    if (!(rest & (1u << j))) continue;
    const T& a = m(i, j);
    if (!is_zero_value(a)) {
      T sub = pfaffian_rec(m, rest & ~(1u << j), one, memo);
      if (pos % 2 == 0) {
        acc += a * sub;
      } else {
        acc -= a * sub;
      }
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

/// Pfaffian by expansion along the first row; Pf([[0,1],[-1,0]]) = 1.
/// Throws if the matrix is not square, has odd size or is not skew.
template <typename T>
T pfaffian(const Matrix<T>& m, const T& one) {
  if (!m.square()) throw std::invalid_argument("pfaffian: matrix is not square");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (m.rows() > 16) throw std::invalid_argument("pfaffian: matrix too large");
  if (!is_skew_symmetric(m)) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  std::unordered_map<std::uint32_t, T> memo;
  const std::uint32_t full = m.rows() == 0 ? 0u : ((1u << m.rows()) - 1u);
  return detail::pfaffian_rec(m, full, one, memo);
}

inline Rational pfaffian(const RatMatrix& m) { return pfaffian(m, Rational(1)); }

/// Incrementally maintained row-echelon basis of a subspace of Q^dim.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns true when the span grew.
  bool add(const RatVector& v);
  bool contains(const RatVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  RatVector reduce(RatVector v) const;
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Evaluates a polynomial matrix at a point.
RatMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

}  // namespace f4prolong

#endif  // F4PROLONG_EXACTALG_LINALG_HPP
