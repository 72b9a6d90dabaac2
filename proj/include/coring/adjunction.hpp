#pragma once

// The induction / cotensor adjunction attached to a comodule Σ over a coring:
//   - a Galois context bundles Σ, its comatrix coring, the canonical map, and
//     the induced left coaction on the dual Σ†;
//   - N ↦ N ⊗_B Σ sends right B-modules to right C-comodules;
//   - X ↦ X □_C Σ† (the equalizer of ρ ⊗ Σ† and X ⊗ α inside X ⊗_A Σ†) sends
//     comodules back to right B-modules;
//   - the unit η_N(y) = Σ_i (y ⊗ e_i) ⊗ e*_i and counit ε_X(d ⊗ u) = "evaluate
//     d against u" realize the adjunction;
//   - the counit factors as ε_X = ν_X ∘ Ψ_X through the kernel EX of the
//     tensored-down equalizer pair; Ψ_X is bijective exactly when − ⊗_B Σ
//     preserves the defining equalizer of X □_C Σ†.

#include "coring/algebra.hpp"
#include "coring/comatrix.hpp"
#include "coring/coring.hpp"
#include "coring/hom.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"
#include "coring/tensor.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace coring {

// Everything the adjunction needs, derived from Σ (a C-comodule and left
// B-module whose coaction is left B-linear and which is finitely generated
// projective over A).
struct GaloisContext {
  const Algebra* inner = nullptr;   // B
  const Algebra* outer = nullptr;   // A
  const Coring* cor = nullptr;      // C
  const Comodule* sigma = nullptr;  // Σ with its C-coaction
  ComatrixData cm;                  // comatrix coring on Σ† ⊗_B Σ
  Mat can;                          // canonical map Σ† ⊗_B Σ → C
  LeftComodule dual_left;           // Σ† with α(φ) = Σ_i can(φ ⊗ e_i) ⊗ e*_i
};

inline GaloisContext galois_context(const Algebra& b, const Comodule& sigma_com) {
  GaloisContext ctx;
  ctx.inner = &b;
  ctx.cor = sigma_com.cor;
  ctx.outer = ctx.cor->alg;
  ctx.sigma = &sigma_com;
  ctx.cm = comatrix_coring(b, *ctx.outer, sigma_com.x);
  ctx.can = canonical_map(ctx.cm, sigma_com);
  ctx.dual_left = left_coaction_on_dual(ctx.cm, *ctx.cor, ctx.can);
  return ctx;
}

// ---------------------------------------------------------------------------
// Cotensor product X □_C Y of a right comodule and a left comodule.

struct Cotensor {
  TensorSpace xy;   // X ⊗_A Y
  TensorSpace xcy;  // X ⊗_A C ⊗_A Y
  Mat lhs;          // ρ ⊗ Y on the quotient presentations
  Mat rhs;          // X ⊗ α
  Subspace window;  // the equalizer ker(lhs − rhs) inside X ⊗_A Y
  Module mod;       // the cotensor as a right module over Y's inner algebra
};

inline Cotensor cotensor(const Comodule& x, const LeftComodule& y) {
  assert(x.cor == y.cor);
  const Coring& cor = *x.cor;
  const Algebra& a = *cor.alg;
  Cotensor ct;
  ct.xy = tensor_over({&x.x, &y.y}, {&a});
  ct.xcy = tensor_over({&x.x, &cor.c, &y.y}, {&a, &a});
  ct.lhs = ct.xcy.q.proj * (kron(x.rho_ambient(), Mat::identity(y.y.dim)) * ct.xy.q.sect);
  ct.rhs = ct.xcy.q.proj * (kron(Mat::identity(x.x.dim), y.alpha_ambient()) * ct.xy.q.sect);
  ct.window = kernel_basis(ct.lhs - ct.rhs);

  ct.mod.dim = ct.window.dim();
  if (y.y.has_right()) {
    // the equalizer maps are right-linear over Y's inner algebra, so the
    // kernel is stable and inherits the action
    ct.mod.right_alg = y.y.right_alg;
    for (long t = 0; t < y.y.right_alg->dim; ++t) {
      const Mat moved = ct.xy.mod.right_act[static_cast<size_t>(t)] * ct.window.basis;
      const auto coords = solve(ct.window.basis, moved);
      assert(coords && "the cotensor must be stable under the inner action");
      ct.mod.right_act.push_back(*coords);
    }
  }
  return ct;
}

// The cotensored map □(h) : W □_C Y → X □_C Y of a comodule map h : W → X,
// in window coordinates; nullopt if the image escapes the target window
// (possible only for maps that are not comodule maps).
inline std::optional<Mat> cotensor_map(const Cotensor& from, const Cotensor& to, const Mat& h) {
  const long yd = from.xy.factor_dims.back();
  assert(to.xy.factor_dims.back() == yd);
  const Mat transported = to.xy.q.proj * (kron(h, Mat::identity(yd)) * from.xy.q.sect);
  return solve(to.window.basis, transported * from.window.basis);
}

// ---------------------------------------------------------------------------
// Induction N ↦ N ⊗_B Σ.

struct InducedComodule {
  TensorSpace ns;  // N ⊗_B Σ
  Comodule com;    // with the coaction inherited from Σ
};

inline InducedComodule induce_comodule(const Module& n, const Comodule& sigma_com,
                                       const Algebra& b) {
  assert(n.has_right() && n.right_alg == &b);
  assert(sigma_com.x.has_left() && sigma_com.x.left_alg == &b);
  const Coring& cor = *sigma_com.cor;
  InducedComodule out;
  out.ns = tensor_over({&n, &sigma_com.x}, {&b});
  out.com.cor = &cor;
  out.com.x = out.ns.mod;
  out.com.xc = tensor_over({&out.com.x, &cor.c}, {cor.alg});

  // N ⊗ ρ, reassociated: lift through N ⊗ Σ, apply ρ on the Σ slot, fold the
  // N ⊗ Σ part back through its quotient, then project into (N ⊗_B Σ) ⊗_A C.
  const long cd = cor.c.dim;
  const Mat full = kron(out.ns.q.proj, Mat::identity(cd)) *
                   (kron(Mat::identity(n.dim), sigma_com.rho_ambient()));
  assert((out.com.xc.q.proj * (full * out.ns.q.relations)).is_zero() &&
         "the coaction must be left-linear over the inner algebra");
  out.com.rho = out.com.xc.q.proj * (full * out.ns.q.sect);
  return out;
}

// The free module B itself induces Σ back: N ⊗_B Σ for N = B.

// ---------------------------------------------------------------------------
// Unit and counit.

struct AdjunctionUnit {
  InducedComodule induced;  // N ⊗_B Σ
  Cotensor target;          // (N ⊗_B Σ) □_C Σ†
  bool lands_in_window = false;
  Mat map;                  // η : N → window coordinates (when it lands)
};

// η_N(y) = Σ_i class(y ⊗ e_i) ⊗ e*_i, solved against the cotensor basis.
inline AdjunctionUnit adjunction_unit(const GaloisContext& ctx, const Module& n) {
  const long sd = ctx.sigma->x.dim, ds = ctx.cm.dual.mod.dim;
  AdjunctionUnit out;
  out.induced = induce_comodule(n, *ctx.sigma, *ctx.inner);
  out.target = cotensor(out.induced.com, ctx.dual_left);

  const Mat amb = ctx.cm.sigma_dual.q.sect * ctx.cm.db.element;
  Mat eta_full(out.induced.ns.dim() * ds, n.dim);
  for (long l = 0; l < n.dim; ++l)
    for (long i = 0; i < sd; ++i) {
      Mat v(n.dim * sd, 1);  // y_l ⊗ e_i in the full space
      v(l * sd + i, 0) = 1;
      const Mat cls = out.induced.ns.q.proj * v;
      for (long r = 0; r < out.induced.ns.dim(); ++r) {
        if (cls(r, 0) == 0) continue;
        for (long q = 0; q < ds; ++q)
          eta_full(r * ds + q, l) += cls(r, 0) * amb(i * ds + q, 0);
      }
    }
  const Mat eta = out.target.xy.q.proj * eta_full;
  const auto coords = solve(out.target.window.basis, eta);
  out.lands_in_window = coords.has_value();
  if (coords) out.map = *coords;
  return out;
}

// The counit ε_X : (X □_C Σ†) ⊗_B Σ → X and its factorization ε_X = ν_X ∘ Ψ_X
// through EX, the kernel of the tensored-down equalizer pair.
struct CounitFactorization {
  Cotensor cot;    // X □_C Σ†
  TensorSpace ds;  // (X □_C Σ†) ⊗_B Σ
  Mat counit;      // ε_X, built by direct evaluation
  TensorSpace us;  // (X ⊗_A Σ†) ⊗_B Σ
  TensorSpace vs;  // (X ⊗_A C ⊗_A Σ†) ⊗_B Σ
  Subspace ex;     // EX = ker(L(ρ ⊗ Σ†) − L(X ⊗ α)) inside us
  Mat psi;         // Ψ_X : (X □_C Σ†) ⊗_B Σ → EX, corestriction of L(incl)
  Mat nu;          // ν_X : EX → X, restriction of the evaluation
};

inline CounitFactorization counit_factorization(const GaloisContext& ctx, const Comodule& x) {
  assert(x.cor == ctx.cor);
  const Algebra& b = *ctx.inner;
  const Module& sigma = ctx.sigma->x;
  const long sd = sigma.dim, ds_dim = ctx.cm.dual.mod.dim, xd = x.x.dim;

  CounitFactorization out;
  out.cot = cotensor(x, ctx.dual_left);
  out.ds = tensor_over({&out.cot.mod, &sigma}, {&b});
  out.us = tensor_over({&out.cot.xy.mod, &sigma}, {&b});
  out.vs = tensor_over({&out.cot.xcy.mod, &sigma}, {&b});

  // evaluation X ⊗ Σ† ⊗ Σ → X on the full space: x ⊗ φ ⊗ u ↦ x . φ(u)
  Mat eval3(xd, xd * ds_dim * sd);
  for (long m = 0; m < xd; ++m)
    for (long p = 0; p < ds_dim; ++p) {
      const Mat& f = ctx.cm.dual.homs[static_cast<size_t>(p)];
      for (long j = 0; j < sd; ++j) {
        Mat acc(xd, 1);
        for (long t = 0; t < f.rows(); ++t)
          if (f(t, j) != 0) acc = acc + f(t, j) * x.x.right_act[static_cast<size_t>(t)].col(m);
        for (long k = 0; k < xd; ++k) eval3(k, (m * ds_dim + p) * sd + j) = acc(k, 0);
      }
    }

  // ε_X by direct evaluation of window representatives against Σ
  const long wd = out.cot.window.dim();
  const Mat reps = out.cot.xy.q.sect * out.cot.window.basis;  // window in full X ⊗ Σ† coords
  Mat counit_full(xd, wd * sd);
  for (long k = 0; k < wd; ++k)
    for (long j = 0; j < sd; ++j) {
      Mat acc(xd, 1);
      for (long r = 0; r < reps.rows(); ++r)
        if (reps(r, k) != 0) acc = acc + reps(r, k) * eval3.col(r * sd + j);
      for (long i = 0; i < xd; ++i) counit_full(i, k * sd + j) = acc(i, 0);
    }
  assert((counit_full * out.ds.q.relations).is_zero());
  out.counit = counit_full * out.ds.q.sect;

  // the tensored-down equalizer pair and its kernel
  const Mat lf = out.vs.q.proj * (kron(out.cot.lhs, Mat::identity(sd)) * out.us.q.sect);
  const Mat lg = out.vs.q.proj * (kron(out.cot.rhs, Mat::identity(sd)) * out.us.q.sect);
  out.ex = kernel_basis(lf - lg);

  // Ψ: the tensored-down inclusion lands in EX by functoriality
  const Mat l_incl =
      out.us.q.proj * (kron(out.cot.window.basis, Mat::identity(sd)) * out.ds.q.sect);
  const auto psi = solve(out.ex.basis, l_incl);
  assert(psi && "the tensored-down window must land in the tensored-down equalizer");
  out.psi = *psi;

  // ν: evaluation restricted to EX
  const Mat eval_us = eval3 * (kron(out.cot.xy.q.sect, Mat::identity(sd)) * out.us.q.sect);
  out.nu = eval_us * out.ex.basis;

  // the factorization is exact: ε_X = ν_X ∘ Ψ_X
  assert(out.counit == out.nu * out.psi);
  return out;
}

// Does − ⊗_B Σ preserve the defining equalizer of X □_C Σ†?  Exactly when the
// corestriction Ψ_X is bijective.
inline bool preserves_equalizer(const CounitFactorization& cf) { return is_isomorphism(cf.psi); }

// ---------------------------------------------------------------------------
// The split fork over a comodule: X → X ⊗_A C ⇉ X ⊗_A C ⊗_A C is a
// contractible equalizer — the counit provides the contracting homotopies.

inline AxiomReport contractible_equalizer_report(const Comodule& com) {
  AxiomReport report;
  const Coring& cor = *com.cor;
  const Algebra& a = *cor.alg;
  const long xd = com.x.dim, cd = cor.c.dim;

  // h0 = X ⊗ ε : X ⊗_A C → X   and   h1 = X ⊗ C ⊗ ε : X ⊗_A C ⊗_A C → X ⊗_A C
  Mat contract(xd, xd * cd);  // e_m ⊗ e_j ↦ e_m . ε(e_j) on the full space
  for (long j = 0; j < cd; ++j)
    for (long t = 0; t < a.dim; ++t) {
      if (cor.epsilon(t, j) == 0) continue;
      const Mat& act = com.x.right_act[static_cast<size_t>(t)];
      for (long m = 0; m < xd; ++m)
        for (long k = 0; k < xd; ++k)
          if (act(k, m) != 0) contract(k, m * cd + j) += cor.epsilon(t, j) * act(k, m);
    }
  const TensorSpace xcc = tensor_over({&com.x, &cor.c, &cor.c}, {&a, &a});
  const Mat h0 = contract * com.xc.q.sect;
  // on X ⊗ C ⊗ C, contract the outer C with ε and act on the X ⊗ C part
  Mat contract2_full(xd * cd, xd * cd * cd);
  for (long m = 0; m < xd; ++m)
    for (long i = 0; i < cd; ++i)
      for (long j = 0; j < cd; ++j)
        for (long t = 0; t < a.dim; ++t) {
          if (cor.epsilon(t, j) == 0) continue;
          // (e_m ⊗ e_i) . e_t in X ⊗_A C: the right action lives on the C slot
          const Mat& act = cor.c.right_act[static_cast<size_t>(t)];
          for (long k = 0; k < cd; ++k)
            if (act(k, i) != 0)
              contract2_full(m * cd + k, (m * cd + i) * cd + j) +=
                  cor.epsilon(t, j) * act(k, i);
        }
  const Mat h1 = com.xc.q.proj * (contract2_full * xcc.q.sect);

  const Mat rho = com.rho;
  const Mat ramb = com.rho_ambient();
  const Mat f1 = xcc.q.proj * (kron(ramb, Mat::identity(cd)) * com.xc.q.sect);  // ρ ⊗ C
  const Mat f2 =
      xcc.q.proj * (kron(Mat::identity(xd), cor.delta_ambient()) * com.xc.q.sect);  // X ⊗ Δ

  report.add("contraction splits the coaction", h0 * rho == Mat::identity(xd),
             "(X ⊗ ε) ∘ ρ != id");
  report.add("contraction intertwines the fork maps", h1 * f1 == rho * h0,
             "(X ⊗ C ⊗ ε) ∘ (ρ ⊗ C) != ρ ∘ (X ⊗ ε)");
  report.add("contraction splits the comultiplication leg",
             h1 * f2 == Mat::identity(com.xc.dim()), "(X ⊗ C ⊗ ε) ∘ (X ⊗ Δ) != id");
  return report;
}

}  // namespace coring
