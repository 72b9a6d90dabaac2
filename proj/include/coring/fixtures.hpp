#pragma once

// Deterministic builders for the shipped catalog of concrete inputs.  Random
// structure constants almost never satisfy associativity, so the catalog is a
// curated family: quadratic quotient algebras (field extension / group algebra
// / dual numbers, depending on one constant), matrix algebras, and two
// deliberately non-unital algebras for the firmness checks.

#include "coring/algebra.hpp"
#include "coring/coring.hpp"
#include "coring/hom.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"

#include <vector>

namespace coring::fixtures {

// Q[t]/(t² − c) on the basis {1, t}:
//   c = 2 → the quadratic field extension Q(√2)
//   c = 1 → the group algebra of the order-2 group
//   c = 0 → the dual numbers Q[t]/(t²)
inline Algebra quadratic_algebra(const Rat& t_squared) {
  Algebra a;
  a.dim = 2;
  a.sc.assign(8, Rat(0));
  a.c(0, 0, 0) = 1;          // 1·1 = 1
  a.c(0, 1, 1) = 1;          // 1·t = t
  a.c(1, 0, 1) = 1;          // t·1 = t
  a.c(1, 1, 0) = t_squared;  // t·t = c·1
  a.unit = Mat(2, 1, {1, 0});
  return a;
}

// n×n matrices over Q on the basis E_ij (lexicographic in (i, j)):
// E_ij E_kl = δ_jk E_il.
inline Algebra matrix_algebra(long n) {
  Algebra a;
  a.dim = n * n;
  a.sc.assign(static_cast<size_t>(a.dim * a.dim * a.dim), Rat(0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long l = 0; l < n; ++l) a.c(i * n + j, j * n + l, i * n + l) = 1;
  Mat unit(a.dim, 1);
  for (long i = 0; i < n; ++i) unit(i * n + i, 0) = 1;
  a.unit = unit;
  return a;
}

// Non-unital control: every product is zero, so the multiplication map
// M ⊗_A A → M is the zero map and nothing is firm.
inline Algebra zero_mult_algebra(long dim) {
  Algebra a;
  a.dim = dim;
  a.sc.assign(static_cast<size_t>(dim * dim * dim), Rat(0));
  return a;
}

// A genuinely non-unital yet firm algebra: span{a, b} with
//   aa = a, ab = b, ba = 0, bb = 0.
// a is a left unit but nothing is a right unit (x·a kills b), so no two-sided
// unit exists; still A ⊗_A A → A is bijective.
inline Algebra left_unit_only_algebra() {
  Algebra f;
  f.dim = 2;
  f.sc.assign(8, Rat(0));
  f.c(0, 0, 0) = 1;  // aa = a
  f.c(0, 1, 1) = 1;  // ab = b
  return f;
}

// The inclusion of the scalars Q → A, 1 ↦ 1_A (A unital).
inline Mat unit_inclusion(const Algebra& a) {
  assert(a.unital());
  return *a.unit;
}

// The standard column module Q^n with an n×n matrix algebra acting from the
// left and the scalars from the right.
inline Module column_module(const Algebra& mat_n, const Algebra& scalars, long n) {
  assert(mat_n.dim == n * n);
  std::vector<Mat> left;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Mat e(n, n);
      e(i, j) = 1;
      left.push_back(std::move(e));
    }
  std::vector<Mat> right{Mat::identity(n)};
  return bimodule(mat_n, scalars, n, std::move(left), std::move(right));
}

// Q^n with the scalars acting on both sides.
inline Module scalar_bimodule(const Algebra& scalars, long n) {
  assert(scalars.dim == 1);
  return bimodule(scalars, scalars, n, {Mat::identity(n)}, {Mat::identity(n)});
}

// (B/rad) ⊕ B over the dual numbers B = Q[t]/(t²), scalars on the right.
// Basis (s, 1, t) with t.s = 0: a left B-module that is not flat, so tensoring
// with it can destroy equalizers.
inline Module residue_plus_regular(const Algebra& b, const Algebra& scalars) {
  assert(b.dim == 2 && scalars.dim == 1);
  const Module line = bimodule(b, scalars, 1, {Mat::identity(1), Mat(1, 1)}, {Mat::identity(1)});
  const Module breg = bimodule(b, scalars, 2, {b.left_mult(0), b.left_mult(1)},
                               {Mat::identity(2)});
  return direct_sum(line, breg);
}

// ---------------------------------------------------------------------------
// Coring-level fixtures.

// The trivial coring: C = A itself, comultiplication the canonical
// identification A ≅ A ⊗_A A, counit the identity.
inline Coring trivial_coring(const Algebra& a) {
  assert(a.unital());
  Module carrier = regular_bimodule(a);
  const MultiplicationData w = multiplication_map(carrier);
  assert(is_isomorphism(w.map));
  return make_coring(a, std::move(carrier), inverse(w.map), Mat::identity(a.dim));
}

// A two-dimensional coalgebra over Q spanned by two grouplike elements:
// Δ(e) = e⊗e, Δ(σ) = σ⊗σ, ε = 1 on both.  (The dual of the order-2 group
// algebra; the canonical negative control for the Galois condition.)
inline Coring grouplike_coalgebra(const Algebra& scalars) {
  assert(scalars.dim == 1);
  Module carrier;
  carrier.dim = 2;
  carrier.left_alg = &scalars;
  carrier.right_alg = &scalars;
  carrier.left_act = {Mat::identity(2)};
  carrier.right_act = {Mat::identity(2)};
  // C ⊗_Q C is the full 4-dim space with basis (e⊗e, e⊗σ, σ⊗e, σ⊗σ)
  Mat delta(4, 2);
  delta(0, 0) = 1;  // e ↦ e⊗e
  delta(3, 1) = 1;  // σ ↦ σ⊗σ
  Mat epsilon(1, 2, {1, 1});
  return make_coring(scalars, std::move(carrier), std::move(delta), std::move(epsilon));
}

// The n×n matrix coalgebra over Q on the basis E_ij (lexicographic):
// Δ(E_ij) = Σ_k E_ik ⊗ E_kj, ε(E_ij) = δ_ij.  Written out directly; serves as
// the independent oracle the comatrix construction must reproduce.
inline Coring matrix_coalgebra(const Algebra& scalars, long n) {
  assert(scalars.dim == 1);
  const long d = n * n;
  Module carrier;
  carrier.dim = d;
  carrier.left_alg = &scalars;
  carrier.right_alg = &scalars;
  carrier.left_act = {Mat::identity(d)};
  carrier.right_act = {Mat::identity(d)};
  Mat delta(d * d, d);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        delta((i * n + k) * d + (k * n + j), i * n + j) = 1;
  Mat epsilon(1, d);
  for (long i = 0; i < n; ++i) epsilon(0, i * n + i) = 1;
  return make_coring(scalars, std::move(carrier), std::move(delta), std::move(epsilon));
}

// The column comodule Q^n over the matrix coalgebra: ρ(u_j) = Σ_i u_i ⊗ E_ij.
inline Comodule column_comodule(const Coring& matrix_coal, const Algebra& scalars, long n) {
  assert(matrix_coal.c.dim == n * n);
  Module carrier;
  carrier.dim = n;
  carrier.left_alg = &scalars;
  carrier.right_alg = &scalars;
  carrier.left_act = {Mat::identity(n)};
  carrier.right_act = {Mat::identity(n)};
  Mat rho(n * n * n, n);  // X ⊗ C is the full space over the scalars
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < n; ++i) rho(i * (n * n) + (i * n + j), j) = 1;
  return make_comodule(matrix_coal, std::move(carrier), std::move(rho));
}

}  // namespace coring::fixtures
