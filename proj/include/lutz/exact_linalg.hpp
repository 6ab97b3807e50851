// Exact integer and rational matrix algebra.
//
// Everything in this header is exact: entries are arbitrary-precision
// integers, intermediate fractions are reduced rationals, and no routine
// ever touches floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lutz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Column of reduced fractions. `cpp_rational` keeps every entry in lowest
/// terms with a positive denominator.
using RationalVector = std::vector<Rational>;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged row list");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged row list");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * m.cols_);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Integer& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const Integer& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      out << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j);
      out << ']';
    }
    out << ']';
    return out.str();
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Square integer matrix with a(i,j) == a(j,i). Construction validates.
class SymmetricIntMatrix {
 public:
  SymmetricIntMatrix() = default;

  explicit SymmetricIntMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw std::invalid_argument("SymmetricIntMatrix: matrix is not square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i + 1; j < m_.cols(); ++j)
        if (m_(i, j) != m_(j, i)) throw std::invalid_argument("SymmetricIntMatrix: matrix is not symmetric");
  }

  SymmetricIntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
      : SymmetricIntMatrix(IntMatrix(rows)) {}

  std::size_t size() const noexcept { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

 private:
  IntMatrix m_;
};

/// Integer polynomial with ascending coefficients, trimmed so that the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }
  IntPolynomial(std::initializer_list<Integer> ascending) : coeffs_(ascending) { trim(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) out << mag;
      if (k >= 1) out << var;
      if (k >= 2) out << '^' << k;
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// U * A * V == D with U, V unimodular and D diagonal with d1 | d2 | ... , di >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) d.push_back(D(k, k));
    return d;
  }
};

/// Finitely generated abelian group Z^free_rank (+) Z/t1 (+) ... (+) Z/tk,
/// together with the images of the distinguished generators of the presenting
/// lattice. An element is a coordinate vector: the torsion coordinates come
/// first (each reduced into [0, ti)), then the free coordinates.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, in divisibility order
  std::vector<std::vector<Integer>> generator_images;

  std::size_t element_size() const noexcept { return torsion.size() + free_rank; }

  std::vector<Integer> reduce(std::vector<Integer> element) const {
    for (std::size_t k = 0; k < torsion.size(); ++k) {
      element[k] %= torsion[k];
      if (element[k] < 0) element[k] += torsion[k];
    }
    return element;
  }

  /// Class of sum_i coeffs[i] * generator_i.
  std::vector<Integer> combination(std::span<const Integer> coeffs) const {
    if (coeffs.size() != generator_images.size())
      throw std::invalid_argument("AbelianGroupPresentation: coefficient count mismatch");
    std::vector<Integer> acc(element_size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += coeffs[i] * generator_images[i][k];
    return reduce(std::move(acc));
  }

  static bool is_zero(std::span<const Integer> element) {
    return std::all_of(element.begin(), element.end(), [](const Integer& x) { return x == 0; });
  }

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }

  bool has_two_torsion() const {
    return std::any_of(torsion.begin(), torsion.end(), [](const Integer& d) { return d % 2 == 0; });
  }

  bool isomorphic_to(const AbelianGroupPresentation& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }

  /// e.g. "Z^2 + Z/2 + Z/6", "0" for the trivial group.
  std::string to_string() const {
    std::string s;
    auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) add("Z/" + t.str());
    return s.empty() ? "0" : s;
  }
};

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Smith normal form with tracked unimodular transforms. The pivot is always
/// the entry of smallest nonzero absolute value in the active block.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& D = f.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 &&
              (!pivot || abs_value(D(i, j)) < abs_value(D(pivot->first, pivot->second))))
            pivot = {i, j};
      if (!pivot) return f;  // active block is zero; nothing left to normalize

      D.swap_rows(t, pivot->first);
      f.U.swap_rows(t, pivot->first);
      D.swap_cols(t, pivot->second);
      f.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise pull an offending
      // row into row t and reduce again with a strictly smaller pivot.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      D.add_row_multiple(t, *offender, 1);
      f.U.add_row_multiple(t, *offender, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

/// Cokernel Z^rows / (column span of a). The generator images are the classes
/// of the standard basis vectors of the target lattice.
inline AbelianGroupPresentation cokernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  const std::size_t m = a.rows();
  const std::size_t k = std::min(a.rows(), a.cols());

  AbelianGroupPresentation g;
  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;
  for (std::size_t r = 0; r < m; ++r) {
    const Integer d = r < k ? f.D(r, r) : Integer(0);
    if (d == 0) {
      free_rows.push_back(r);
    } else if (d != 1) {
      torsion_rows.push_back(r);
      g.torsion.push_back(d);
    }
  }
  g.free_rank = free_rows.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> image;
    for (std::size_t r : torsion_rows) image.push_back(f.U(r, i));
    for (std::size_t r : free_rows) image.push_back(f.U(r, i));
    g.generator_images.push_back(g.reduce(std::move(image)));
  }
  return g;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// det(x*I - a) by the Samuelson-Berkowitz recurrence: division-free, so every
/// intermediate stays an integer.
inline IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  // Coefficients of the leading principal minor's polynomial, highest degree first.
  std::vector<Integer> p{1};
  for (std::size_t k = 0; k < n; ++k) {
    // A_{k+1} = [[A_k, c], [r, a_kk]] with c = a(0..k-1, k), r = a(k, 0..k-1).
    // Toeplitz column: 1, -a_kk, -r c, -r A_k c, ..., -r A_k^{k-1} c.
    std::vector<Integer> col{1, -a(k, k)};
    std::vector<Integer> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      Integer rv = 0;
      for (std::size_t i = 0; i < k; ++i) rv += a(k, i) * v[i];
      col.push_back(-rv);
      std::vector<Integer> next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<Integer> q(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

enum class SolveStatus { unique, no_solution, non_unique };

struct SolveResult {
  SolveStatus status = SolveStatus::no_solution;
  RationalVector solution;  // populated only when status == unique
};

/// Solves a * x == b over the rationals by exact Gauss-Jordan elimination.
inline SolveResult solve_rational(const IntMatrix& a, const RationalVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_rational: right-hand side has wrong length");

  std::vector<RationalVector> aug(m, RationalVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n] = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && aug[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[row], aug[p]);
    const Rational inv = 1 / aug[row][col];
    for (auto& x : aug[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  for (std::size_t i = row; i < m; ++i)
    if (aug[i][n] != 0) return {SolveStatus::no_solution, {}};
  if (pivot_cols.size() < n) return {SolveStatus::non_unique, {}};

  RationalVector x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][n];
  return {SolveStatus::unique, std::move(x)};
}

inline RationalVector to_rational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

/// Signature (#positive - #negative eigenvalues) by congruence
/// diagonalization over the rationals. A zero diagonal with a nonzero
/// off-diagonal entry is split off as a hyperbolic 2x2 block, which
/// contributes one positive and one negative eigenvalue.
inline long signature_symmetric(const SymmetricIntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<RationalVector> m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));

  auto swap_sym = [&m, n](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(m[x], m[y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][x], m[i][y]);
  };

  long sig = 0;
  std::size_t p = 0;
  while (p < n) {
    std::size_t d = p;
    while (d < n && m[d][d] == 0) ++d;
    if (d < n) {
      swap_sym(p, d);
      const Rational piv = m[p][p];
      sig += piv > 0 ? 1 : -1;
      for (std::size_t i = p + 1; i < n; ++i) {
        if (m[i][p] == 0) continue;
        const Rational f = m[i][p] / piv;
        for (std::size_t j = p + 1; j < n; ++j) m[i][j] -= f * m[p][j];
      }
      for (std::size_t i = p + 1; i < n; ++i) m[i][p] = m[p][i] = 0;
      p += 1;
      continue;
    }

    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = p; i < n && !off; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m[i][j] != 0) {
          off = {i, j};
          break;
        }
    if (!off) break;  // remaining block is zero

    swap_sym(p, off->first);
    swap_sym(p + 1, off->second);
    // Block [[0, b], [b, 0]] at (p, p+1); Schur complement with inverse [[0, 1/b], [1/b, 0]].
    const Rational b = m[p][p + 1];
    for (std::size_t i = p + 2; i < n; ++i)
      for (std::size_t j = p + 2; j < n; ++j)
        m[i][j] -= (m[i][p] * m[p + 1][j] + m[i][p + 1] * m[p][j]) / b;
    p += 2;
  }
  return sig;
}

/// Congruence by the elementary matrix that adds sign * column j to column i
/// (i.e. handle i slides over handle j). Returns E^T * a * E.
inline SymmetricIntMatrix congruence_slide(const SymmetricIntMatrix& a, std::size_t i, std::size_t j,
                                           int sign) {
  if (i >= a.size() || j >= a.size()) throw std::out_of_range("congruence_slide: index out of range");
  if (i == j) throw std::invalid_argument("congruence_slide: cannot slide a handle over itself");
  if (sign != 1 && sign != -1) throw std::invalid_argument("congruence_slide: sign must be +1 or -1");
  IntMatrix m = a.matrix();
  m.add_col_multiple(i, j, sign);
  m.add_row_multiple(i, j, sign);
  return SymmetricIntMatrix(std::move(m));
}

/// Coefficients (ascending) of the unique polynomial of degree < xs.size()
/// through the points (xs[k], ys[k]). Newton divided differences.
inline RationalVector interpolate(std::span<const Integer> xs, std::span<const Rational> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: point count mismatch");
  RationalVector dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      if (xs[k] == xs[k - level]) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[k] = (dd[k] - dd[k - 1]) / Rational(xs[k] - xs[k - level]);
      if (k == level) break;
    }
  // Horner expansion of the Newton form.
  RationalVector poly;
  for (std::size_t k = n; k-- > 0;) {
    RationalVector next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * Rational(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace lutz
