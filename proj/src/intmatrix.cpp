#include "orbikit/intmatrix.hpp"

#include <algorithm>
#include <utility>

#include "orbikit/errors.hpp"

namespace orbikit {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Integer det_bareiss(IntMatrix a) {
  if (a.rows() != a.cols()) throw input_error("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

// Row operation row_a -= q * row_b applied to m and mirrored into u.
void row_axpy(IntMatrix& m, IntMatrix& u, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) -= q * u(b, j);
}

void col_axpy(IntMatrix& m, IntMatrix& v, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) -= q * v(i, b);
}

void negate_row(IntMatrix& m, IntMatrix& u, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  const std::size_t r = input.rows(), c = input.cols();
  SmithResult res{IntMatrix::identity(r), input, IntMatrix::identity(c)};
  IntMatrix& m = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const std::size_t lim = std::min(r, c);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (m(i, j) == 0) continue;
          if (!found || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return res;  // trailing submatrix is zero

      if (pi != t) {
        m.swap_rows(t, pi);
        u.swap_rows(t, pi);
      }
      if (pj != t) {
        m.swap_cols(t, pj);
        v.swap_cols(t, pj);
      }
      if (m(t, t) < 0) negate_row(m, u, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        row_axpy(m, u, i, t, q);
        if (m(i, t) != 0) dirty = true;  // remainder smaller than pivot
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        col_axpy(m, v, j, t, q);
        if (m(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide every remaining entry for the chain d_i | d_{i+1}
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (m(i, j) % m(t, t) != 0) {
            row_axpy(m, u, t, i, Integer(-1));  // pulls row i into the pivot row
            divides = false;
          }
      if (divides) break;
    }
  }
  return res;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m,
                                                  const std::vector<Integer>& f) {
  if (f.size() != m.rows()) throw input_error("solve dimension mismatch");
  SmithResult snf = smith_normal_form(m);
  const std::size_t r = m.rows(), c = m.cols();

  std::vector<Integer> y(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) y[i] += snf.u(i, j) * f[j];

  std::vector<Integer> z(c, Integer(0));
  const std::size_t lim = std::min(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Integer d = i < lim ? snf.d(i, i) : Integer(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % d != 0) return std::nullopt;
      if (i < c) z[i] = y[i] / d;
    }
  }

  std::vector<Integer> x(c, Integer(0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) x[i] += snf.v(i, j) * z[j];
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw input_error("inverse of non-square matrix");
  SmithResult snf = smith_normal_form(a);
  if (snf.d != IntMatrix::identity(a.rows()))
    throw domain_error("matrix is not unimodular");
  return snf.v * snf.u;  // u a v = 1  =>  a^{-1} = v u
}

}  // namespace orbikit
