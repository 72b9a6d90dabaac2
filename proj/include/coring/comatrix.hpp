#pragma once

// The comatrix coring of a bimodule that is finitely generated projective on
// its outer side, and the canonical-map correspondence: a right coaction on
// the bimodule induces a coring morphism out of the comatrix coring, every
// such morphism induces a right coaction back (and a left coaction on the
// dual), and the two assignments are mutually inverse.

#include "coring/algebra.hpp"
#include "coring/coring.hpp"
#include "coring/hom.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"
#include "coring/tensor.hpp"

#include <cassert>
#include <utility>

namespace coring {

// The coring on Σ* ⊗_B Σ for a (B, A)-bimodule Σ with dual basis {(e_i, e*_i)}:
//   Δ(φ ⊗ u) = Σ_i (φ ⊗ e_i) ⊗_A (e*_i ⊗ u),   ε(φ ⊗ u) = φ(u).
struct ComatrixData {
  const Algebra* base = nullptr;   // B, the inner algebra
  const Algebra* outer = nullptr;  // A
  const Module* sigma = nullptr;   // Σ, a (B, A)-bimodule
  DualModule dual;                 // Σ* = Hom_A(Σ, A), an (A, B)-bimodule
  TensorSpace sigma_dual;          // Σ ⊗_A Σ* (hosts the dual-basis element)
  DualBasis db;
  TensorSpace carrier_space;       // Σ* ⊗_B Σ with its quotient presentation
  Coring coring;
};

inline ComatrixData comatrix_coring(const Algebra& b, const Algebra& a, const Module& sigma) {
  assert(sigma.left_alg == &b && sigma.right_alg == &a);
  ComatrixData out;
  out.base = &b;
  out.outer = &a;
  out.sigma = &sigma;
  out.dual = dual_of(sigma, a, b);
  out.sigma_dual = tensor_over({&sigma, &out.dual.mod}, {&a});
  const auto db = dual_basis(sigma, out.dual, out.sigma_dual);
  assert(db && "the bimodule must be finitely generated projective on the A side");
  out.db = *db;

  const long sd = sigma.dim, ds = out.dual.mod.dim;
  const long full = ds * sd;  // flat index p * sd + j for φ_p ⊗ u_j
  TensorSpace carrier = tensor_over({&out.dual.mod, &sigma}, {&b});

  // ε(φ_p ⊗ u_j) = φ_p(u_j).
  Mat eval_full(a.dim, full);
  for (long p = 0; p < ds; ++p) {
    const Mat& f = out.dual.homs[static_cast<size_t>(p)];
    for (long j = 0; j < sd; ++j)
      for (long x = 0; x < a.dim; ++x) eval_full(x, p * sd + j) = f(x, j);
  }
  assert((eval_full * carrier.q.relations).is_zero());

  // Δ(φ_p ⊗ u_j) = Σ_{i,q} amb(i·ds+q) (φ_p ⊗ e_i) ⊗ (φ_q ⊗ u_j), where amb
  // writes the dual-basis element over the e_i ⊗ φ_q coordinates.
  const Mat amb = out.sigma_dual.q.sect * out.db.element;
  Mat delta_full(full * full, full);
  for (long p = 0; p < ds; ++p)
    for (long j = 0; j < sd; ++j)
      for (long i = 0; i < sd; ++i)
        for (long q = 0; q < ds; ++q) {
          const Rat& coeff = amb(i * ds + q, 0);
          if (coeff != 0)
            delta_full((p * sd + i) * full + (q * sd + j), p * sd + j) = coeff;
        }

  Coring cor;
  cor.alg = &a;
  cor.c = carrier.mod;
  cor.cc = tensor_over({&cor.c, &cor.c}, {&a});
  const Mat fold = kron(carrier.q.proj, carrier.q.proj);
  assert((cor.cc.q.proj * (fold * (delta_full * carrier.q.relations))).is_zero());
  cor.delta = cor.cc.q.proj * (fold * (delta_full * carrier.q.sect));
  cor.epsilon = eval_full * carrier.q.sect;

  out.carrier_space = std::move(carrier);
  out.coring = std::move(cor);
  return out;
}

// can : Σ* ⊗_B Σ → D,  φ ⊗ u ↦ φ(u_[0]) . u_[1],  for a right D-coaction ρ on
// Σ (required to be left B-linear, i.e. B acts by comodule endomorphisms).
inline Mat canonical_map(const ComatrixData& cm, const Comodule& com) {
  const Coring& d = *com.cor;
  assert(d.alg == cm.outer);
  assert(com.x.dim == cm.sigma->dim && com.x.right_alg == cm.sigma->right_alg);
  const long sd = cm.sigma->dim, ds = cm.dual.mod.dim, cd = d.c.dim;
  const Mat ramb = com.rho_ambient();  // coefficients over u_m ⊗ c_t

  Mat full(cd, ds * sd);
  for (long p = 0; p < ds; ++p) {
    const Mat& f = cm.dual.homs[static_cast<size_t>(p)];  // φ_p(u_m) = Σ_x f(x, m) e_x
    for (long j = 0; j < sd; ++j) {
      Mat acc(cd, 1);
      for (long m = 0; m < sd; ++m)
        for (long x = 0; x < f.rows(); ++x) {
          if (f(x, m) == 0) continue;
          for (long t = 0; t < cd; ++t) {
            const Rat& r = ramb(m * cd + t, j);
            if (r != 0) acc = acc + (f(x, m) * r) * d.c.left_act[static_cast<size_t>(x)].col(t);
          }
        }
      for (long k = 0; k < cd; ++k) full(k, p * sd + j) = acc(k, 0);
    }
  }
  assert((full * cm.carrier_space.q.relations).is_zero() &&
         "the coaction must be left-linear over the inner algebra");
  return full * cm.carrier_space.q.sect;
}

// The coaction induced by a map g : Σ* ⊗_B Σ → D:  ρ(u) = Σ_i e_i ⊗ g(e*_i ⊗ u).
inline Comodule coaction_from_can(const ComatrixData& cm, const Coring& d, const Mat& g) {
  assert(d.alg == cm.outer);
  assert(g.rows() == d.c.dim && g.cols() == cm.coring.c.dim);
  const long sd = cm.sigma->dim, ds = cm.dual.mod.dim, cd = d.c.dim;
  const Mat amb = cm.sigma_dual.q.sect * cm.db.element;
  const Mat g_full = g * cm.carrier_space.q.proj;

  Mat rho_full(sd * cd, sd);
  for (long j = 0; j < sd; ++j)
    for (long i = 0; i < sd; ++i) {
      Mat v(ds * sd, 1);  // e*_i ⊗ u_j at ambient coordinates
      for (long q = 0; q < ds; ++q) v(q * sd + j, 0) = amb(i * ds + q, 0);
      const Mat img = g_full * v;
      for (long t = 0; t < cd; ++t) rho_full(i * cd + t, j) += img(t, 0);
    }

  Comodule com;
  com.cor = &d;
  com.x = *cm.sigma;
  com.xc = tensor_over({&com.x, &d.c}, {cm.outer});
  com.rho = com.xc.q.proj * rho_full;
  return com;
}

// The left coaction on the dual induced by g:  α(φ) = Σ_i g(φ ⊗ e_i) ⊗ e*_i.
inline LeftComodule left_coaction_on_dual(const ComatrixData& cm, const Coring& d, const Mat& g) {
  assert(d.alg == cm.outer);
  assert(g.rows() == d.c.dim && g.cols() == cm.coring.c.dim);
  const long sd = cm.sigma->dim, ds = cm.dual.mod.dim, cd = d.c.dim;
  const Mat amb = cm.sigma_dual.q.sect * cm.db.element;
  const Mat g_full = g * cm.carrier_space.q.proj;

  Mat alpha_full(cd * ds, ds);
  for (long p = 0; p < ds; ++p)
    for (long i = 0; i < sd; ++i) {
      Mat v(ds * sd, 1);  // φ_p ⊗ e_i at ambient coordinates
      v(p * sd + i, 0) = 1;
      const Mat img = g_full * v;
      for (long t = 0; t < cd; ++t) {
        if (img(t, 0) == 0) continue;
        for (long q = 0; q < ds; ++q)
          alpha_full(t * ds + q, p) += img(t, 0) * amb(i * ds + q, 0);
      }
    }

  LeftComodule lc;
  lc.cor = &d;
  lc.y = cm.dual.mod;
  lc.cy = tensor_over({&d.c, &lc.y}, {cm.outer});
  lc.alpha = lc.cy.q.proj * alpha_full;
  return lc;
}

}  // namespace coring
