#pragma once

// Finite-dimensional algebras over the rationals, given by structure
// constants e_i e_j = sum_k c(i,j,k) e_k.  A unit is optional data: non-unital
// algebras are first-class citizens here and their "firmness" (multiplication
// inducing an isomorphism A ⊗_A A → A) is a checkable predicate, not an
// assumption.

#include "coring/matrix.hpp"
#include "coring/report.hpp"

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coring {

struct Algebra {
  long dim = 0;
  std::vector<Rat> sc;      // dim^3 structure constants, layout (i * dim + j) * dim + k
  std::optional<Mat> unit;  // dim x 1 coordinates of a declared two-sided unit

  const Rat& c(long i, long j, long k) const {
    return sc[static_cast<size_t>((i * dim + j) * dim + k)];
  }
  Rat& c(long i, long j, long k) { return sc[static_cast<size_t>((i * dim + j) * dim + k)]; }

  bool unital() const { return unit.has_value(); }

  // Matrix of x -> e_i x (column j holds the coordinates of e_i e_j).
  Mat left_mult(long i) const {
    Mat m(dim, dim);
    for (long j = 0; j < dim; ++j)
      for (long k = 0; k < dim; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  // Matrix of x -> x e_j (column i holds the coordinates of e_i e_j).
  Mat right_mult(long j) const {
    Mat m(dim, dim);
    for (long i = 0; i < dim; ++i)
      for (long k = 0; k < dim; ++k) m(k, i) = c(i, j, k);
    return m;
  }

  // Multiplication as one linear map A ⊗ A -> A on the lexicographic basis.
  Mat mult_map() const {
    Mat m(dim, dim * dim);
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j)
        for (long k = 0; k < dim; ++k) m(k, i * dim + j) = c(i, j, k);
    return m;
  }

  // Product of two coordinate column vectors.
  Mat mul(const Mat& x, const Mat& y) const {
    assert(x.rows() == dim && y.rows() == dim && x.cols() == 1 && y.cols() == 1);
    return mult_map() * kron(x, y);
  }
};

inline Algebra algebra_from_constants(long dim, std::vector<Rat> sc,
                                      std::optional<Mat> unit = std::nullopt) {
  assert(static_cast<long>(sc.size()) == dim * dim * dim);
  return Algebra{dim, std::move(sc), std::move(unit)};
}

// The rationals themselves as a one-dimensional unital algebra; the ground
// case every "tensor over the scalars" reduces to.
inline Algebra scalar_algebra() {
  return algebra_from_constants(1, {Rat(1)}, Mat(1, 1, {1}));
}

// Associativity as a single matrix identity mult ∘ (mult ⊗ id) = mult ∘ (id ⊗ mult),
// plus the two-sided unit laws when a unit is declared.  Witnesses name the
// first failing basis triple.
inline AxiomReport check_algebra(const Algebra& a) {
  AxiomReport report;
  const Mat m = a.mult_map();
  const Mat id = Mat::identity(a.dim);

  const Mat lhs = m * kron(m, id);
  const Mat rhs = m * kron(id, m);
  std::string witness;
  if (lhs != rhs) {
    // column index encodes the basis triple (i, j, k)
    for (long col = 0; col < lhs.cols() && witness.empty(); ++col)
      for (long row = 0; row < lhs.rows(); ++row)
        if (lhs(row, col) != rhs(row, col)) {
          const long i = col / (a.dim * a.dim);
          const long j = (col / a.dim) % a.dim;
          const long k = col % a.dim;
          witness = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                    std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                    std::to_string(j) + " e" + std::to_string(k) + ")";
          break;
        }
  }
  report.add("associativity", lhs == rhs, witness);

  if (a.unital()) {
    const Mat& u = *a.unit;
    report.add("left unit law", m * kron(u, id) == id, "1 e_j != e_j for some j");
    report.add("right unit law", m * kron(id, u) == id, "e_i 1 != e_i for some i");
  }
  return report;
}

// f : src -> dst as a dst.dim x src.dim matrix; multiplicative on every basis
// pair, and unit-preserving when both algebras declare units.
inline AxiomReport check_algebra_morphism(const Mat& f, const Algebra& src, const Algebra& dst) {
  AxiomReport report;
  assert(f.rows() == dst.dim && f.cols() == src.dim);
  bool multiplicative = true;
  std::string witness;
  for (long i = 0; i < src.dim && multiplicative; ++i)
    for (long j = 0; j < src.dim && multiplicative; ++j) {
      Mat product(src.dim, 1);  // e_i e_j in src coordinates
      for (long k = 0; k < src.dim; ++k) product(k, 0) = src.c(i, j, k);
      if (f * product != dst.mul(f.col(i), f.col(j))) {
        multiplicative = false;
        witness = "f(e" + std::to_string(i) + " e" + std::to_string(j) + ") != f(e" +
                  std::to_string(i) + ") f(e" + std::to_string(j) + ")";
      }
    }
  report.add("morphism is multiplicative", multiplicative, witness);
  if (src.unital() && dst.unital())
    report.add("morphism preserves the unit", f * *src.unit == *dst.unit, "f(1) != 1");
  return report;
}

}  // namespace coring
