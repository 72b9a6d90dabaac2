#pragma once

// Dense exact-rational matrices and the lattice of constructions everything
// else reduces to: reduced row echelon form, kernels (= equalizers in module
// categories), cokernels (= tensor-product quotients), Kronecker products
// (= functors of the form f ⊗ g), solving, inverses.
//
// Conventions:
//   - A matrix is a linear map acting on column vectors; column j is the image
//     of the j-th basis vector, so rows() is the codomain dimension and cols()
//     the domain dimension.
//   - Quotient bases are always the RREF non-pivot coordinates, which makes
//     every basis choice (and hence every emitted report) reproducible.

#include "coring/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coring {

class Mat {
 public:
  Mat() = default;
  Mat(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {
    assert(rows >= 0 && cols >= 0);
  }
  Mat(long rows, long cols, std::initializer_list<Rat> entries) : Mat(rows, cols) {
    assert(static_cast<long>(entries.size()) == rows * cols);
    std::copy(entries.begin(), entries.end(), e_.begin());
  }

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat zero(long rows, long cols) { return Mat(rows, cols); }
  static Mat column(const std::vector<Rat>& v) {
    Mat m(static_cast<long>(v.size()), 1);
    for (long i = 0; i < m.rows(); ++i) m(i, 0) = v[static_cast<size_t>(i)];
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Rat& operator()(long i, long j) {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return e_[static_cast<size_t>(i * cols_ + j)];
  }
  const Rat& operator()(long i, long j) const {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return e_[static_cast<size_t>(i * cols_ + j)];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Rat& x : e_)
      if (x != 0) return false;
    return true;
  }

  Mat col(long j) const {
    Mat c(rows_, 1);
    for (long i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c = a;
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c = a;
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
    return c;
  }
  friend Mat operator*(const Rat& s, const Mat& a) {
    Mat c = a;
    for (Rat& x : c.e_) x *= s;
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (aik == 0) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const Rat& bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

 private:
  long rows_ = 0;
  long cols_ = 0;
  std::vector<Rat> e_;
};

// A subspace of k^ambient_dim, presented by a column basis.
struct Subspace {
  long ambient_dim = 0;
  Mat basis;  // ambient_dim x dim, columns linearly independent

  long dim() const { return basis.cols(); }
};

// A quotient of k^ambient_dim by the column span of `relations`, presented by
// a projection and a section with proj * sect = id.  The quotient basis is the
// set of RREF non-pivot coordinates, so the presentation is deterministic.
struct Quotient {
  long ambient_dim = 0;
  Mat proj;       // dim x ambient_dim
  Mat sect;       // ambient_dim x dim
  Mat relations;  // ambient_dim x (number of spanning relations), ker(proj) = span

  long dim() const { return proj.rows(); }
};

struct Rref {
  Mat mat;
  std::vector<long> pivots;  // strictly increasing pivot column indices
};

inline Rref rref(Mat m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long p = -1;
    for (long i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (long j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = Rat(1) / m(row, col);
    for (long j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (long j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline long rank(const Mat& m) { return static_cast<long>(rref(m).pivots.size()); }

inline bool is_isomorphism(const Mat& f) {
  return f.rows() == f.cols() && rank(f) == f.rows();
}

// Basis of { v : f v = 0 }.  One column per RREF non-pivot coordinate: the
// free coordinate is set to 1 and each pivot coordinate to minus the RREF
// entry in the free column (so f * basis = 0 by construction).
inline Subspace kernel_basis(const Mat& f) {
  const Rref r = rref(f);
  std::vector<bool> is_pivot(static_cast<size_t>(f.cols()), false);
  for (long p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;

  Mat basis(f.cols(), f.cols() - static_cast<long>(r.pivots.size()));
  long out = 0;
  for (long j = 0; j < f.cols(); ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    basis(j, out) = 1;
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
      basis(r.pivots[pi], out) = -r.mat(static_cast<long>(pi), j);
    ++out;
  }
  return {f.cols(), std::move(basis)};
}

// Quotient of k^ambient_dim by the column span of `relations`.  Row-reducing
// the transpose exhibits the span as a row space; the surviving coordinates
// are the non-pivots and each pivot coordinate e_{q} is rewritten as
// -sum (row tail) in the quotient.
inline Quotient cokernel(const Mat& relations, long ambient_dim) {
  assert(relations.rows() == ambient_dim || relations.cols() == 0);
  const Rref r = rref(relations.transposed());
  const long nrel = static_cast<long>(r.pivots.size());
  std::vector<bool> is_pivot(static_cast<size_t>(ambient_dim), false);
  for (long p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;

  const long qdim = ambient_dim - nrel;
  Mat proj(qdim, ambient_dim);
  Mat sect(ambient_dim, qdim);
  long out = 0;
  for (long j = 0; j < ambient_dim; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    proj(out, j) = 1;
    sect(j, out) = 1;
    ++out;
  }
  // e_{pivot q_a} = (row a) restricted to non-pivots, negated, in the quotient.
  for (long a = 0; a < nrel; ++a) {
    long t = 0;
    for (long j = 0; j < ambient_dim; ++j) {
      if (is_pivot[static_cast<size_t>(j)]) continue;
      proj(t, r.pivots[static_cast<size_t>(a)]) = -r.mat(a, j);
      ++t;
    }
  }
  Quotient q{ambient_dim, std::move(proj), std::move(sect), relations};
  assert(q.proj * q.sect == Mat::identity(qdim));
  assert((q.proj * q.relations).is_zero());
  return q;
}

// Kronecker product on the lexicographic tensor basis:
// (f ⊗ g)(u_i ⊗ v_j) with u_i ⊗ v_j at index i * dim(v) + j.
inline Mat kron(const Mat& f, const Mat& g) {
  Mat k(f.rows() * g.rows(), f.cols() * g.cols());
  for (long fi = 0; fi < f.rows(); ++fi)
    for (long fj = 0; fj < f.cols(); ++fj) {
      const Rat& x = f(fi, fj);
      if (x == 0) continue;
      for (long gi = 0; gi < g.rows(); ++gi)
        for (long gj = 0; gj < g.cols(); ++gj)
          if (g(gi, gj) != 0) k(fi * g.rows() + gi, fj * g.cols() + gj) = x * g(gi, gj);
    }
  return k;
}

inline Mat hstack(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  Mat c(a.rows(), a.cols() + b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (long j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

// Solve a X = b for X (matrix right-hand side), or nullopt when inconsistent.
// Free variables are set to 0, so solutions are deterministic.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  const Rref r = rref(hstack(a, b));
  for (long p : r.pivots)
    if (p >= a.cols()) return std::nullopt;  // a pivot in the RHS block: no solution
  Mat x(a.cols(), b.cols());
  for (size_t pi = 0; pi < r.pivots.size(); ++pi)
    for (long j = 0; j < b.cols(); ++j)
      x(r.pivots[pi], j) = r.mat(static_cast<long>(pi), a.cols() + j);
  return x;
}

inline Mat inverse(const Mat& m) {
  assert(m.rows() == m.cols());
  const auto x = solve(m, Mat::identity(m.rows()));
  assert(x && "inverse() requires an invertible matrix");
  assert(m * *x == Mat::identity(m.rows()) && *x * m == Mat::identity(m.rows()));
  return *x;
}

// True iff every column of `vectors` lies in the column span of `basis`.
inline bool contained_in_span(const Mat& basis, const Mat& vectors) {
  return solve(basis, vectors).has_value();
}

}  // namespace coring
