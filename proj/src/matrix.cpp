#include "detmom/matrix.hpp"

#include <stdexcept>

namespace detmom {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("RationalMatrix: negative dimension");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Rational& RationalMatrix::at(int i, int j) {
  return data_[static_cast<size_t>(i) * cols_ + j];
}

const Rational& RationalMatrix::at(int i, int j) const {
  return data_[static_cast<size_t>(i) * cols_ + j];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("RationalMatrix: dimension mismatch in *");
  }
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("RationalMatrix: dimension mismatch in +");
  }
  RationalMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  }
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
  }
  return r;
}

RationalMatrix RationalMatrix::minor_matrix(int i, int j) const {
  RationalMatrix r(rows_ - 1, cols_ - 1);
  for (int a = 0, ra = 0; a < rows_; ++a) {
    if (a == i) continue;
    for (int b = 0, rb = 0; b < cols_; ++b) {
      if (b == j) continue;
      r.at(ra, rb) = at(a, b);
      ++rb;
    }
    ++ra;
  }
  return r;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& rows) const {
  RationalMatrix r(static_cast<int>(rows.size()), cols_);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols_; ++j) {
      r.at(static_cast<int>(i), j) = at(rows[i], j);
    }
  }
  return r;
}

Rational det_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det_exact: matrix not square");
  }
  const int n = m.rows();
  if (n == 0) return Rational(1);

  RationalMatrix w = m;
  int sign = 1;
  Rational prev_pivot(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!w.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Rational(0);
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(swap_row, j));
      }
      sign = -sign;
    }
    const Rational pivot = w.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * pivot - w.at(i, k) * w.at(k, j)) / prev_pivot;
      }
      w.at(i, k) = Rational(0);
    }
    prev_pivot = pivot;
  }
  // After full Bareiss elimination the last pivot is the determinant.
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Rational det_cofactor(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det_cofactor: matrix not square");
  }
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational d;
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!m.at(0, j).is_zero()) {
      const Rational sub = det_cofactor(m.minor_matrix(0, j));
      d += (sign > 0 ? m.at(0, j) : -m.at(0, j)) * sub;
    }
    sign = -sign;
  }
  return d;
}

RationalMatrix adjugate_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("adjugate_exact: matrix not square");
  }
  const int n = m.rows();
  if (n == 0) throw std::invalid_argument("adjugate_exact: empty matrix");
  RationalMatrix adj(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational minor = det_exact(m.minor_matrix(j, i));
      adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return adj;
}

bool check_matrix_det_lemma(const RationalMatrix& c,
                            const std::vector<Rational>& u,
                            const std::vector<Rational>& v,
                            const Rational& lambda) {
  const int n = c.rows();
  if (c.cols() != n || static_cast<int>(u.size()) != n ||
      static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("check_matrix_det_lemma: dimension mismatch");
  }
  RationalMatrix shifted = c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      shifted.at(i, j) += lambda * u[static_cast<size_t>(i)] *
                          v[static_cast<size_t>(j)];
    }
  }
  const RationalMatrix adj = adjugate_exact(c);
  Rational bilinear;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bilinear += v[static_cast<size_t>(i)] * adj.at(i, j) *
                  u[static_cast<size_t>(j)];
    }
  }
  return det_exact(shifted) == det_exact(c) + lambda * bilinear;
}

namespace {

// Calls fn with every sorted k-subset of {0..n-1}.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace

bool check_cauchy_binet(const RationalMatrix& c, const RationalMatrix& d) {
  if (c.rows() != d.rows() || c.cols() != d.cols()) {
    throw std::invalid_argument("check_cauchy_binet: dimension mismatch");
  }
  const int n = c.rows();
  const int p = c.cols();
  const Rational lhs = det_exact(c.transpose() * d);

  if (p > n) return lhs.is_zero();

  Rational selecting;
  for_each_subset(n, p, [&](const std::vector<int>& rows) {
    selecting += det_exact(c.select_rows(rows)) * det_exact(d.select_rows(rows));
  });

  Rational deleting;
  for_each_subset(n, n - p, [&](const std::vector<int>& removed) {
    std::vector<int> kept;
    kept.reserve(static_cast<size_t>(p));
    size_t r = 0;
    for (int i = 0; i < n; ++i) {
      if (r < removed.size() && removed[r] == i) {
        ++r;
        continue;
      }
      kept.push_back(i);
    }
    deleting += det_exact(c.select_rows(kept)) * det_exact(d.select_rows(kept));
  });

  return lhs == selecting && lhs == deleting;
}

bool check_rank_one_shift(const RationalMatrix& b, const Rational& m1) {
  if (b.rows() != b.cols()) {
    throw std::invalid_argument("check_rank_one_shift: matrix not square");
  }
  const int n = b.rows();
  RationalMatrix shifted = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) shifted.at(i, j) += m1;
  }
  Rational cofactor_sum;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational minor = det_exact(b.minor_matrix(i, j));
      cofactor_sum += ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return det_exact(shifted) == det_exact(b) + m1 * cofactor_sum;
}

}  // namespace detmom
