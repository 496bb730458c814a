#pragma once

#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

/// Dense matrix of exact rationals. The empty 0x0 matrix has determinant 1.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;

  /// Minor matrix with row i and column j removed.
  RationalMatrix minor_matrix(int i, int j) const;

  /// Square submatrix from the given subset of row indices (all columns).
  RationalMatrix select_rows(const std::vector<int>& rows) const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det_exact(const RationalMatrix& m);

/// Exact determinant by cofactor expansion; independent of det_exact and
/// intended for cross-checks on small matrices.
Rational det_cofactor(const RationalMatrix& m);

/// adj(M)_{ij} = (-1)^{i+j} |M_{ji}|; satisfies M adj(M) = det(M) I.
/// The 1x1 adjugate is [1] (empty minor).
RationalMatrix adjugate_exact(const RationalMatrix& m);

/// |C + lambda u v^T| == |C| + lambda v^T adj(C) u, exactly (holds for
/// singular C as well).
bool check_matrix_det_lemma(const RationalMatrix& c,
                            const std::vector<Rational>& u,
                            const std::vector<Rational>& v,
                            const Rational& lambda);

/// |C^T D| equals the sum over p-row selections of products of maximal
/// minors, in both the selecting and the deleting formulation.
bool check_cauchy_binet(const RationalMatrix& c, const RationalMatrix& d);

/// |B + m1 * ones| == |B| + m1 * sum_{ij} (-1)^{i+j} |B_{ij}|.
bool check_rank_one_shift(const RationalMatrix& b, const Rational& m1);

}  // namespace detmom
