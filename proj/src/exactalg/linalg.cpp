#include "f4prolong/exactalg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace f4prolong {

RatMatrix rat_matrix(const std::vector<std::vector<Rational>>& rows) {
  return RatMatrix::from_rows(rows, Rational(0));
}

RatMatrix rat_matrix(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rational(0)); }

RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rational(0), Rational(1)); }

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Multiplies each row by the lcm of its denominators; returns the integer
// rows together with the product of the scale factors.
IntRows integer_rows(const RatMatrix& m, Rational* scale_product) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  Rational product(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    product *= l;
  }
  if (scale_product) *scale_product = product;
  return out;
}

struct BareissResult {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int sign = 1;  // parity of row swaps
};

// Fraction-free forward elimination. Entries stay integral; each division
// by the previous pivot is exact (Sylvester's identity).
BareissResult bareiss(IntRows a, std::size_t cols) {
  BareissResult res;
  Integer prev(1);
  std::size_t r = 0;
  const std::size_t nrows = a.size();
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[i][j] - factor * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("bareiss: inexact division");
        }
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    res.pivots.push_back(c);
    ++r;
  }
  res.rows = std::move(a);
  return res;
}

}  // namespace

RankKernel rank_kernel(const RatMatrix& m) {
  RankKernel out;
  if (m.cols() == 0) return out;
  const BareissResult b = bareiss(integer_rows(m, nullptr), m.cols());
  out.rank = b.pivots.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : b.pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t k = b.pivots.size(); k-- > 0;) {
      const std::size_t pc = b.pivots[k];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j] != 0) acc += Rational(b.rows[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(b.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  out.kernel = canonical_basis(basis, m.cols());
  return out;
}

std::size_t rank(const RatMatrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  return bareiss(integer_rows(m, nullptr), m.cols()).pivots.size();
}

Echelon rref(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RatMatrix m = rat_matrix(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw std::invalid_argument("canonical_basis: dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  const Echelon e = rref(m);
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Rational scale;
  const BareissResult b = bareiss(integer_rows(m, &scale), n);
  if (b.pivots.size() < n) return Rational(0);
  Rational det(b.rows[n - 1][n - 1]);
  det /= scale;
  return b.sign < 0 ? Rational(-det) : det;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  RatMatrix aug = rat_matrix(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, a.cols());
  return x;
}

bool is_skew_symmetric(const RatMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const PolyMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

RatVector IncrementalSpan::reduce(RatVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalSpan: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool IncrementalSpan::add(const RatVector& v) {
  RatVector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return q != 0; });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const Rational inv = 1 / r[p];
  for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
  // keep earlier rows reduced against the new pivot so reduce() stays a single pass
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = p; j < dim_; ++j) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool IncrementalSpan::contains(const RatVector& v) const {
  const RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RatMatrix out = rat_matrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(point);
  return out;
}

}  // namespace f4prolong
