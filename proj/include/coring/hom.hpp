#pragma once

// Module-theoretic constructions on top of the tensor machinery:
//   - the multiplication map M ⊗_A A → M and firmness (is it bijective?)
//   - hom-spaces of right-linear maps, and the dual Σ* = Hom_A(Σ, A) as an
//     (A, B)-bimodule
//   - dual-basis certificates (finite generation + projectivity, witnessed by
//     an element of Σ ⊗_A Σ* acting as the identity)
//   - the ring structure μ on Σ ⊗_A Σ* and multiplicativity checks for maps
//     ι : B → Σ ⊗_A Σ*.

#include "coring/algebra.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"
#include "coring/report.hpp"
#include "coring/tensor.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace coring {

// Flatten an n.rows x n.cols matrix row-major into a column vector; the
// coordinate convention for all hom-space computations below.
inline Mat vec_rowmajor(const Mat& m) {
  Mat v(m.rows() * m.cols(), 1);
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

inline Mat unvec_rowmajor(const Mat& v, long rows, long cols) {
  assert(v.rows() == rows * cols && v.cols() == 1);
  Mat m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = v(i * cols + j, 0);
  return m;
}

// ---------------------------------------------------------------------------
// Multiplication map and firmness.

struct MultiplicationData {
  TensorSpace space;  // M ⊗_A A (right modules) or A ⊗_A M (left modules)
  Mat map;            // the induced action map, M-dim x space.dim
};

// ϖ⁺ : M ⊗_A A → M, m ⊗ a ↦ m.a, for a right A-module M.
inline MultiplicationData multiplication_map(const Module& m) {
  assert(m.has_right());
  const Algebra& a = *m.right_alg;
  const Module a_reg = regular_bimodule(a);
  TensorSpace space = tensor_over({&m, &a_reg}, {&a});

  Mat full(m.dim, m.dim * a.dim);  // e_i ⊗ e_x ↦ e_i . e_x
  for (long i = 0; i < m.dim; ++i)
    for (long x = 0; x < a.dim; ++x)
      for (long k = 0; k < m.dim; ++k)
        full(k, i * a.dim + x) = m.right_act[static_cast<size_t>(x)](k, i);
  assert((full * space.q.relations).is_zero());
  Mat map = full * space.q.sect;
  return {std::move(space), std::move(map)};
}

// ϖ⁻ : A ⊗_A M → M, a ⊗ m ↦ a.m, for a left A-module M.
inline MultiplicationData multiplication_map_left(const Module& m) {
  assert(m.has_left());
  const Algebra& a = *m.left_alg;
  const Module a_reg = regular_bimodule(a);
  TensorSpace space = tensor_over({&a_reg, &m}, {&a});

  Mat full(m.dim, a.dim * m.dim);  // e_x ⊗ e_i ↦ e_x . e_i
  for (long x = 0; x < a.dim; ++x)
    for (long i = 0; i < m.dim; ++i)
      for (long k = 0; k < m.dim; ++k)
        full(k, x * m.dim + i) = m.left_act[static_cast<size_t>(x)](k, i);
  assert((full * space.q.relations).is_zero());
  Mat map = full * space.q.sect;
  return {std::move(space), std::move(map)};
}

struct Firmness {
  bool firm = false;
  std::optional<Mat> inverse;  // d⁺ : M → M ⊗_A A when firm
};

// A module is firm when its multiplication map is bijective; the inverse d⁺
// is returned so callers can transport along the identification M ≅ M ⊗_A A.
inline Firmness firmness(const Module& m) {
  const MultiplicationData w = multiplication_map(m);
  if (!is_isomorphism(w.map)) return {false, std::nullopt};
  return {true, inverse(w.map)};
}

// ---------------------------------------------------------------------------
// Hom-spaces.

struct HomSpace {
  long dom_dim = 0;
  long cod_dim = 0;
  std::vector<Mat> basis;  // basis homomorphisms, cod_dim x dom_dim each
  Mat basis_flat;          // (cod*dom) x size, columns = vec_rowmajor(basis[p])

  long dim() const { return static_cast<long>(basis.size()); }

  // Coordinates of a hom matrix in this basis (must lie in the span).
  Mat coords_of(const Mat& f) const {
    const auto x = solve(basis_flat, vec_rowmajor(f));
    assert(x && "map does not lie in the hom-space");
    return *x;
  }
};

// Basis of { f : M → N, k-linear, f(m.a) = f(m).a for all a }: the kernel of
// F ↦ F R_a − R'_a F taken over all algebra basis elements a.
inline HomSpace hom_right_modules(const Module& m, const Module& n) {
  assert(m.has_right() && n.has_right() && m.right_alg == n.right_alg);
  const Algebra& alg = *m.right_alg;
  const long unknowns = n.dim * m.dim;

  Mat constraints(alg.dim * unknowns, unknowns);
  for (long p = 0; p < n.dim; ++p)
    for (long q = 0; q < m.dim; ++q) {
      // image of the matrix unit E_pq under every commutator, stacked
      Mat e(n.dim, m.dim);
      e(p, q) = 1;
      for (long a = 0; a < alg.dim; ++a) {
        const Mat r = e * m.right_act[static_cast<size_t>(a)] -
                      n.right_act[static_cast<size_t>(a)] * e;
        for (long i = 0; i < n.dim; ++i)
          for (long j = 0; j < m.dim; ++j)
            constraints(a * unknowns + i * m.dim + j, p * m.dim + q) = r(i, j);
      }
    }

  const Subspace k = kernel_basis(constraints);
  HomSpace h;
  h.dom_dim = m.dim;
  h.cod_dim = n.dim;
  h.basis_flat = k.basis;
  for (long c = 0; c < k.basis.cols(); ++c)
    h.basis.push_back(unvec_rowmajor(k.basis.col(c), n.dim, m.dim));
  return h;
}

// ---------------------------------------------------------------------------
// The dual Σ* of a (B, A)-bimodule Σ, as an (A, B)-bimodule.

struct DualModule {
  Module mod;              // Σ*: left A-action (a.φ)(x) = a.φ(x), right B-action (φ.b)(x) = φ(b.x)
  std::vector<Mat> homs;   // underlying basis homomorphisms Σ → A
  HomSpace hom_space;      // for coordinate lookups
};

inline DualModule dual_of(const Module& sigma, const Algebra& a, const Algebra& b) {
  assert(sigma.has_right() && sigma.right_alg == &a);
  assert(sigma.has_left() && sigma.left_alg == &b);
  const Module a_reg = regular_bimodule(a);
  HomSpace h = hom_right_modules(sigma, a_reg);

  DualModule d;
  d.mod.dim = h.dim();
  d.mod.left_alg = &a;
  d.mod.right_alg = &b;
  for (long x = 0; x < a.dim; ++x) {
    Mat act(h.dim(), h.dim());
    for (long p = 0; p < h.dim(); ++p) {
      const Mat image = a.left_mult(x) * h.basis[static_cast<size_t>(p)];
      const Mat coords = h.coords_of(image);
      for (long q = 0; q < h.dim(); ++q) act(q, p) = coords(q, 0);
    }
    d.mod.left_act.push_back(std::move(act));
  }
  for (long y = 0; y < b.dim; ++y) {
    Mat act(h.dim(), h.dim());
    for (long p = 0; p < h.dim(); ++p) {
      const Mat image = h.basis[static_cast<size_t>(p)] * sigma.left_act[static_cast<size_t>(y)];
      const Mat coords = h.coords_of(image);
      for (long q = 0; q < h.dim(); ++q) act(q, p) = coords(q, 0);
    }
    d.mod.right_act.push_back(std::move(act));
  }
  d.homs = h.basis;
  d.hom_space = std::move(h);
  return d;
}

// ---------------------------------------------------------------------------
// Dual-basis certificates and the ring Σ ⊗_A Σ*.

// The evaluation-style map Σ ⊗_A Σ* → End_k(Σ), u ⊗ φ ↦ (x ↦ u.φ(x)),
// returned on the quotient presentation `t` (columns = endomorphisms,
// flattened row-major).
inline Mat endo_map(const Module& sigma, const DualModule& dual, const TensorSpace& t) {
  const long s = sigma.dim, ds = dual.mod.dim;
  Mat full(s * s, s * ds);
  for (long i = 0; i < s; ++i)
    for (long p = 0; p < ds; ++p) {
      // endomorphism x ↦ s_i . φ_p(x)
      Mat endo(s, s);
      for (long j = 0; j < s; ++j) {
        const Mat& f = dual.homs[static_cast<size_t>(p)];
        for (long x = 0; x < f.rows(); ++x)
          if (f(x, j) != 0) {
            const Mat col = sigma.right_act[static_cast<size_t>(x)].col(i);
            for (long k = 0; k < s; ++k) endo(k, j) += f(x, j) * col(k, 0);
          }
      }
      const Mat v = vec_rowmajor(endo);
      for (long r = 0; r < s * s; ++r) full(r, i * ds + p) = v(r, 0);
    }
  assert((full * t.q.relations).is_zero());
  return full * t.q.sect;
}

struct DualBasis {
  Mat element;                            // coordinates in Σ ⊗_A Σ*
  std::vector<std::pair<Mat, Mat>> pairs; // (basis vector e_i of Σ, hom e*_i : Σ → A)
};

// Solve  Σ_i e_i . e*_i(x) = x  for an element of Σ ⊗_A Σ*.  A solution is a
// finite dual basis: it certifies Σ is finitely generated projective.  The
// pairs view resolves the element as Σ_i s_i ⊗ e*_i over the Σ-basis.
inline std::optional<DualBasis> dual_basis(const Module& sigma, const DualModule& dual,
                                           const TensorSpace& t) {
  const Mat theta = endo_map(sigma, dual, t);
  const auto e = solve(theta, vec_rowmajor(Mat::identity(sigma.dim)));
  if (!e) return std::nullopt;

  DualBasis d;
  d.element = *e;
  const Mat amb = t.q.sect * *e;  // coefficients over s_i ⊗ φ_p
  const long ds = dual.mod.dim;
  for (long i = 0; i < sigma.dim; ++i) {
    Mat basis_vec(sigma.dim, 1);
    basis_vec(i, 0) = 1;
    Mat hom(dual.homs.empty() ? 0 : dual.homs[0].rows(), sigma.dim);
    for (long p = 0; p < ds; ++p) {
      const Rat& coeff = amb(i * ds + p, 0);
      if (coeff != 0) hom = hom + coeff * dual.homs[static_cast<size_t>(p)];
    }
    d.pairs.emplace_back(std::move(basis_vec), std::move(hom));
  }
  return d;
}

// The ring structure on T = Σ ⊗_A Σ*:  μ(x⊗φ , y⊗ψ) = x.φ(y) ⊗ ψ.
// Returned as an Algebra on the quotient coordinates of T, with the dual-basis
// element as unit when a certificate exists (it acts as the identity
// endomorphism, hence as the unit of the represented endomorphism ring).
struct EndoRing {
  TensorSpace space;  // Σ ⊗_A Σ*, a B-bimodule via the outer actions
  Algebra ring;       // μ as structure constants on space coordinates
};

inline EndoRing b_ring_mu(const Module& sigma, const DualModule& dual, const Algebra& a) {
  assert(sigma.has_right() && sigma.right_alg == &a);
  TensorSpace t = tensor_over({&sigma, &dual.mod}, {&a});
  const long s = sigma.dim, ds = dual.mod.dim;
  const long full = s * ds;

  // μ on the full tensor square: (i,p,j,q) ↦ (s_i . φ_p(s_j)) ⊗ φ_q.
  Mat mu_full(full, full * full);
  for (long i = 0; i < s; ++i)
    for (long p = 0; p < ds; ++p)
      for (long j = 0; j < s; ++j) {
        Mat moved(s, 1);  // s_i . φ_p(s_j)
        const Mat& f = dual.homs[static_cast<size_t>(p)];
        for (long x = 0; x < f.rows(); ++x)
          if (f(x, j) != 0) moved = moved + f(x, j) * sigma.right_act[static_cast<size_t>(x)].col(i);
        for (long q = 0; q < ds; ++q) {
          const long col = ((i * ds + p) * s + j) * ds + q;
          for (long k = 0; k < s; ++k) mu_full(k * ds + q, col) = moved(k, 0);
        }
      }

  // Descend both slots of the quotient: T ⊗ T → T.  μ must kill relations fed
  // into either slot.
  assert((t.q.proj * (mu_full * kron(t.q.relations, Mat::identity(full)))).is_zero());
  assert((t.q.proj * (mu_full * kron(Mat::identity(full), t.q.relations))).is_zero());
  const Mat mu = t.q.proj * (mu_full * kron(t.q.sect, t.q.sect));

  Algebra ring;
  ring.dim = t.dim();
  ring.sc.assign(static_cast<size_t>(ring.dim * ring.dim * ring.dim), Rat(0));
  for (long u = 0; u < ring.dim; ++u)
    for (long v = 0; v < ring.dim; ++v)
      for (long w = 0; w < ring.dim; ++w) ring.c(u, v, w) = mu(w, u * ring.dim + v);

  const auto db = dual_basis(sigma, dual, t);
  if (db) {
    // verify the certificate element is a two-sided unit before declaring it
    Algebra candidate = ring;
    candidate.unit = db->element;
    if (check_algebra(candidate).ok()) ring.unit = db->element;
  }
  return {std::move(t), std::move(ring)};
}

// Is ι : B → Σ ⊗_A Σ* a multiplicative, B-bilinear map?  (Unit preservation is
// deliberately not demanded; the zero map is multiplicative.)
inline bool iota_check(const Algebra& b, const Mat& iota, const EndoRing& endo) {
  assert(iota.cols() == b.dim && iota.rows() == endo.ring.dim);
  if (endo.ring.mult_map() * kron(iota, iota) != iota * b.mult_map()) return false;
  // B-bimodule compatibility against the outer actions on Σ ⊗_A Σ*.
  for (long x = 0; x < b.dim; ++x) {
    if (endo.space.mod.has_left() &&
        iota * b.left_mult(x) != endo.space.mod.left_act[static_cast<size_t>(x)] * iota)
      return false;
    if (endo.space.mod.has_right() &&
        iota * b.right_mult(x) != endo.space.mod.right_act[static_cast<size_t>(x)] * iota)
      return false;
  }
  return true;
}

// The canonical ι for B acting on Σ from the left: ι(b) = b.e where e is the
// dual-basis element (b moves through the Σ slot).
inline Mat canonical_iota(const Algebra& b, const EndoRing& endo, const DualBasis& db) {
  assert(endo.space.mod.has_left() && endo.space.mod.left_alg == &b);
  Mat iota(endo.ring.dim, b.dim);
  for (long x = 0; x < b.dim; ++x) {
    const Mat col = endo.space.mod.left_act[static_cast<size_t>(x)] * db.element;
    for (long r = 0; r < iota.rows(); ++r) iota(r, x) = col(r, 0);
  }
  return iota;
}

}  // namespace coring
