#pragma once

// Corings and comodules over a structure-constant algebra A:
//   - a coring is an A-bimodule C with a comultiplication Δ : C → C ⊗_A C and
//     a counit ε : C → A, subject to coassociativity and counit laws;
//   - a comodule is a right A-module X with a coaction ρ : X → X ⊗_A C;
//   - grouplike elements g (Δg = g⊗g, ε g = 1) induce coactions on A and carry
//     a coinvariant subalgebra { a : a.g = g.a };
//   - the canonical coring of a unital subalgebra inclusion B ⊆ A lives on
//     A ⊗_B A; its comultiplication splits the middle by 1 ⊗ 1;
//   - comodule hom-spaces and endomorphism rings close the loop back to
//     algebras (End of the induced comodule on A recovers the coinvariants).
//
// Every law is decided as an exact matrix identity after transporting through
// the stored quotient presentations.  Check functions never assert on bad
// data: sabotaged inputs produce failing report items, not aborts.

#include "coring/algebra.hpp"
#include "coring/hom.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"
#include "coring/report.hpp"
#include "coring/tensor.hpp"

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coring {

struct Coring {
  const Algebra* alg = nullptr;  // the base algebra A
  Module c;                      // carrier, an A-A bimodule
  TensorSpace cc;                // C ⊗_A C
  Mat delta;                     // C → C ⊗_A C, quotient coordinates
  Mat epsilon;                   // C → A

  // Lift of Δ to the full tensor square (a fixed representative).
  Mat delta_ambient() const { return cc.q.sect * delta; }
};

inline Coring make_coring(const Algebra& alg, Module carrier, Mat delta, Mat epsilon) {
  Coring cor;
  cor.alg = &alg;
  cor.c = std::move(carrier);
  cor.cc = tensor_over({&cor.c, &cor.c}, {&alg});
  assert(delta.rows() == cor.cc.dim() && delta.cols() == cor.c.dim);
  assert(epsilon.rows() == alg.dim && epsilon.cols() == cor.c.dim);
  cor.delta = std::move(delta);
  cor.epsilon = std::move(epsilon);
  return cor;
}

namespace detail {

// Contraction C ⊗ C → C applying ε to the left slot and acting on the left:
// e_i ⊗ e_j ↦ ε(e_i) . e_j.  Composed with a lifted Δ this realizes the
// left counit law (the multiplication-map identification is built in).
inline Mat counit_contract_left(const Module& c, const Mat& epsilon) {
  const long cd = c.dim, ad = epsilon.rows();
  Mat e(cd, cd * cd);
  for (long i = 0; i < cd; ++i)
    for (long a = 0; a < ad; ++a) {
      if (epsilon(a, i) == 0) continue;
      const Mat& act = c.left_act[static_cast<size_t>(a)];
      for (long j = 0; j < cd; ++j)
        for (long k = 0; k < cd; ++k)
          if (act(k, j) != 0) e(k, i * cd + j) += epsilon(a, i) * act(k, j);
    }
  return e;
}

// Mirror contraction: e_i ⊗ e_j ↦ e_i . ε(e_j).
inline Mat counit_contract_right(const Module& c, const Mat& epsilon) {
  const long cd = c.dim, ad = epsilon.rows();
  Mat e(cd, cd * cd);
  for (long j = 0; j < cd; ++j)
    for (long a = 0; a < ad; ++a) {
      if (epsilon(a, j) == 0) continue;
      const Mat& act = c.right_act[static_cast<size_t>(a)];
      for (long i = 0; i < cd; ++i)
        for (long k = 0; k < cd; ++k)
          if (act(k, i) != 0) e(k, i * cd + j) += epsilon(a, j) * act(k, i);
    }
  return e;
}

}  // namespace detail

inline AxiomReport check_coring(const Coring& cor) {
  AxiomReport report = check_bimodule(cor.c);
  const Algebra& a = *cor.alg;
  const long cd = cor.c.dim;

  // Δ and ε are A-bimodule maps.
  bool delta_linear = true, epsilon_linear = true;
  std::string delta_witness, epsilon_witness;
  for (long x = 0; x < a.dim; ++x) {
    if (cor.delta * cor.c.left_act[static_cast<size_t>(x)] !=
            cor.cc.mod.left_act[static_cast<size_t>(x)] * cor.delta ||
        cor.delta * cor.c.right_act[static_cast<size_t>(x)] !=
            cor.cc.mod.right_act[static_cast<size_t>(x)] * cor.delta) {
      if (delta_linear) delta_witness = "fails against e" + std::to_string(x);
      delta_linear = false;
    }
    if (cor.epsilon * cor.c.left_act[static_cast<size_t>(x)] != a.left_mult(x) * cor.epsilon ||
        cor.epsilon * cor.c.right_act[static_cast<size_t>(x)] != a.right_mult(x) * cor.epsilon) {
      if (epsilon_linear) epsilon_witness = "fails against e" + std::to_string(x);
      epsilon_linear = false;
    }
  }
  report.add("comultiplication is an A-bimodule map", delta_linear, delta_witness);
  report.add("counit is an A-bimodule map", epsilon_linear, epsilon_witness);

  // Coassociativity: (Δ ⊗ C) ∘ Δ = (C ⊗ Δ) ∘ Δ inside the flat triple product.
  const TensorSpace ccc = tensor_over({&cor.c, &cor.c, &cor.c}, {&a, &a});
  const Mat damb = cor.delta_ambient();
  const Mat left_ext =
      ccc.q.proj * (kron(damb, Mat::identity(cd)) * cor.cc.q.sect);  // Δ ⊗ C on C⊗C
  const Mat right_ext =
      ccc.q.proj * (kron(Mat::identity(cd), damb) * cor.cc.q.sect);  // C ⊗ Δ on C⊗C
  const Mat lhs = left_ext * cor.delta;
  const Mat rhs = right_ext * cor.delta;
  std::string coassoc_witness;
  if (lhs != rhs)
    for (long j = 0; j < cd && coassoc_witness.empty(); ++j)
      if (lhs.col(j) != rhs.col(j)) coassoc_witness = "basis vector e" + std::to_string(j);
  report.add("comultiplication is coassociative", lhs == rhs, coassoc_witness);

  // Counit laws: contracting either slot of Δ(x) gives back x.
  const Mat left_law = detail::counit_contract_left(cor.c, cor.epsilon) * damb;
  const Mat right_law = detail::counit_contract_right(cor.c, cor.epsilon) * damb;
  const Mat id = Mat::identity(cd);
  std::string lw, rw;
  if (left_law != id)
    for (long j = 0; j < cd && lw.empty(); ++j)
      if (left_law.col(j) != id.col(j)) lw = "basis vector e" + std::to_string(j);
  if (right_law != id)
    for (long j = 0; j < cd && rw.empty(); ++j)
      if (right_law.col(j) != id.col(j)) rw = "basis vector e" + std::to_string(j);
  report.add("left counit law", left_law == id, lw);
  report.add("right counit law", right_law == id, rw);

  // With a non-unital base the counit laws above implicitly identify
  // A ⊗_A C ≅ C ≅ C ⊗_A A; record that those identifications are bijective.
  if (!a.unital()) {
    report.add("carrier is firm on the left", is_isomorphism(multiplication_map_left(cor.c).map),
               "A ⊗_A C → C not bijective");
    report.add("carrier is firm on the right", is_isomorphism(multiplication_map(cor.c).map),
               "C ⊗_A A → C not bijective");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Comodules.

struct Comodule {
  const Coring* cor = nullptr;
  Module x;        // right A-module; a left action makes it a bicomodule candidate
  TensorSpace xc;  // X ⊗_A C
  Mat rho;         // X → X ⊗_A C

  Mat rho_ambient() const { return xc.q.sect * rho; }
};

inline Comodule make_comodule(const Coring& cor, Module carrier, Mat rho) {
  Comodule com;
  com.cor = &cor;
  com.x = std::move(carrier);
  com.xc = tensor_over({&com.x, &cor.c}, {cor.alg});
  assert(rho.rows() == com.xc.dim() && rho.cols() == com.x.dim);
  com.rho = std::move(rho);
  return com;
}

// C over itself, with the comultiplication as coaction.
inline Comodule cofree_comodule(const Coring& cor) {
  Comodule com;
  com.cor = &cor;
  com.x = cor.c;
  com.xc = tensor_over({&com.x, &cor.c}, {cor.alg});
  // The carrier copy has the same coordinates, so Δ transports verbatim; the
  // two tensor presentations are built the same way and agree on the nose.
  assert(com.xc.dim() == cor.cc.dim());
  com.rho = cor.delta;
  return com;
}

inline AxiomReport check_comodule(const Comodule& com) {
  AxiomReport report;
  const Coring& cor = *com.cor;
  const Algebra& a = *cor.alg;
  const long xd = com.x.dim, cd = cor.c.dim;

  bool linear = true;
  std::string linear_witness;
  for (long t = 0; t < a.dim; ++t)
    if (com.rho * com.x.right_act[static_cast<size_t>(t)] !=
        com.xc.mod.right_act[static_cast<size_t>(t)] * com.rho) {
      linear = false;
      linear_witness = "fails against e" + std::to_string(t);
      break;
    }
  report.add("coaction is right A-linear", linear, linear_witness);

  // Coassociativity: (ρ ⊗ C) ∘ ρ = (X ⊗ Δ) ∘ ρ inside X ⊗_A C ⊗_A C.
  const TensorSpace xcc = tensor_over({&com.x, &cor.c, &cor.c}, {&a, &a});
  const Mat ramb = com.rho_ambient();
  const Mat extend_rho = xcc.q.proj * (kron(ramb, Mat::identity(cd)) * com.xc.q.sect);
  const Mat extend_delta =
      xcc.q.proj * (kron(Mat::identity(xd), cor.delta_ambient()) * com.xc.q.sect);
  const Mat co_lhs = extend_rho * com.rho;
  const Mat co_rhs = extend_delta * com.rho;
  std::string co_witness;
  if (co_lhs != co_rhs)
    for (long j = 0; j < xd && co_witness.empty(); ++j)
      if (co_lhs.col(j) != co_rhs.col(j)) co_witness = "basis vector e" + std::to_string(j);
  report.add("coaction is coassociative", co_lhs == co_rhs, co_witness);

  // Counit law: contracting the C slot of ρ(x) returns x.
  Mat contract(xd, xd * cd);  // e_m ⊗ e_j ↦ e_m . ε(e_j)
  for (long j = 0; j < cd; ++j)
    for (long t = 0; t < a.dim; ++t) {
      if (cor.epsilon(t, j) == 0) continue;
      const Mat& act = com.x.right_act[static_cast<size_t>(t)];
      for (long m = 0; m < xd; ++m)
        for (long k = 0; k < xd; ++k)
          if (act(k, m) != 0) contract(k, m * cd + j) += cor.epsilon(t, j) * act(k, m);
    }
  const Mat counit_law = contract * ramb;
  const Mat id = Mat::identity(xd);
  std::string cu_witness;
  if (counit_law != id)
    for (long j = 0; j < xd && cu_witness.empty(); ++j)
      if (counit_law.col(j) != id.col(j)) cu_witness = "basis vector e" + std::to_string(j);
  report.add("coaction counit law", counit_law == id, cu_witness);

  // For bicomodule candidates: the coaction must be left-linear too.
  if (com.x.has_left()) {
    bool bilinear = true;
    std::string bw;
    for (long b = 0; b < com.x.left_alg->dim; ++b)
      if (com.rho * com.x.left_act[static_cast<size_t>(b)] !=
          com.xc.mod.left_act[static_cast<size_t>(b)] * com.rho) {
        bilinear = false;
        bw = "fails against e" + std::to_string(b);
        break;
      }
    report.add("coaction is left-linear over the outer algebra", bilinear, bw);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Left comodules: α : Y → C ⊗_A Y for a left A-module Y.

struct LeftComodule {
  const Coring* cor = nullptr;
  Module y;        // left A-module; a right action makes it a bicomodule candidate
  TensorSpace cy;  // C ⊗_A Y
  Mat alpha;       // Y → C ⊗_A Y

  Mat alpha_ambient() const { return cy.q.sect * alpha; }
};

inline LeftComodule make_left_comodule(const Coring& cor, Module carrier, Mat alpha) {
  LeftComodule com;
  com.cor = &cor;
  com.y = std::move(carrier);
  com.cy = tensor_over({&cor.c, &com.y}, {cor.alg});
  assert(alpha.rows() == com.cy.dim() && alpha.cols() == com.y.dim);
  com.alpha = std::move(alpha);
  return com;
}

inline AxiomReport check_left_comodule(const LeftComodule& com) {
  AxiomReport report;
  const Coring& cor = *com.cor;
  const Algebra& a = *cor.alg;
  const long yd = com.y.dim, cd = cor.c.dim;

  bool linear = true;
  std::string linear_witness;
  for (long t = 0; t < a.dim; ++t)
    if (com.alpha * com.y.left_act[static_cast<size_t>(t)] !=
        com.cy.mod.left_act[static_cast<size_t>(t)] * com.alpha) {
      linear = false;
      linear_witness = "fails against e" + std::to_string(t);
      break;
    }
  report.add("coaction is left A-linear", linear, linear_witness);

  // Coassociativity: (Δ ⊗ Y) ∘ α = (C ⊗ α) ∘ α inside C ⊗_A C ⊗_A Y.
  const TensorSpace ccy = tensor_over({&cor.c, &cor.c, &com.y}, {&a, &a});
  const Mat aamb = com.alpha_ambient();
  const Mat extend_delta =
      ccy.q.proj * (kron(cor.delta_ambient(), Mat::identity(yd)) * com.cy.q.sect);
  const Mat extend_alpha = ccy.q.proj * (kron(Mat::identity(cd), aamb) * com.cy.q.sect);
  const Mat co_lhs = extend_delta * com.alpha;
  const Mat co_rhs = extend_alpha * com.alpha;
  std::string co_witness;
  if (co_lhs != co_rhs)
    for (long j = 0; j < yd && co_witness.empty(); ++j)
      if (co_lhs.col(j) != co_rhs.col(j)) co_witness = "basis vector e" + std::to_string(j);
  report.add("coaction is coassociative", co_lhs == co_rhs, co_witness);

  // Counit law: contracting the C slot of α(y) returns y.
  Mat contract(yd, cd * yd);  // e_j ⊗ e_m ↦ ε(e_j) . e_m
  for (long j = 0; j < cd; ++j)
    for (long t = 0; t < a.dim; ++t) {
      if (cor.epsilon(t, j) == 0) continue;
      const Mat& act = com.y.left_act[static_cast<size_t>(t)];
      for (long m = 0; m < yd; ++m)
        for (long k = 0; k < yd; ++k)
          if (act(k, m) != 0) contract(k, j * yd + m) += cor.epsilon(t, j) * act(k, m);
    }
  const Mat counit_law = contract * aamb;
  const Mat id = Mat::identity(yd);
  std::string cu_witness;
  if (counit_law != id)
    for (long j = 0; j < yd && cu_witness.empty(); ++j)
      if (counit_law.col(j) != id.col(j)) cu_witness = "basis vector e" + std::to_string(j);
  report.add("coaction counit law", counit_law == id, cu_witness);

  // For bicomodule candidates: the coaction must be right-linear too.
  if (com.y.has_right()) {
    bool bilinear = true;
    std::string bw;
    for (long b = 0; b < com.y.right_alg->dim; ++b)
      if (com.alpha * com.y.right_act[static_cast<size_t>(b)] !=
          com.cy.mod.right_act[static_cast<size_t>(b)] * com.alpha) {
        bilinear = false;
        bw = "fails against e" + std::to_string(b);
        break;
      }
    report.add("coaction is right-linear over the inner algebra", bilinear, bw);
  }
  return report;
}

// f : C → D between corings over the same A is a coring morphism iff it is an
// A-bimodule map with (f ⊗ f) ∘ Δ_C = Δ_D ∘ f and ε_D ∘ f = ε_C.
inline AxiomReport check_coring_morphism(const Mat& f, const Coring& src, const Coring& dst) {
  assert(src.alg == dst.alg);
  assert(f.rows() == dst.c.dim && f.cols() == src.c.dim);
  AxiomReport report;
  const Algebra& a = *src.alg;

  bool bimod = true;
  std::string bw;
  for (long x = 0; x < a.dim; ++x)
    if (f * src.c.left_act[static_cast<size_t>(x)] !=
            dst.c.left_act[static_cast<size_t>(x)] * f ||
        f * src.c.right_act[static_cast<size_t>(x)] !=
            dst.c.right_act[static_cast<size_t>(x)] * f) {
      bimod = false;
      bw = "fails against e" + std::to_string(x);
      break;
    }
  report.add("morphism is an A-bimodule map", bimod, bw);

  const Mat ff = dst.cc.q.proj * (kron(f, f) * src.cc.q.sect);
  const Mat lhs = ff * src.delta;
  const Mat rhs = dst.delta * f;
  std::string dw;
  if (lhs != rhs)
    for (long j = 0; j < src.c.dim && dw.empty(); ++j)
      if (lhs.col(j) != rhs.col(j)) dw = "basis vector e" + std::to_string(j);
  report.add("morphism respects the comultiplication", lhs == rhs, dw);

  const Mat e_lhs = dst.epsilon * f;
  std::string ew;
  if (e_lhs != src.epsilon)
    for (long j = 0; j < src.c.dim && ew.empty(); ++j)
      if (e_lhs.col(j) != src.epsilon.col(j)) ew = "basis vector e" + std::to_string(j);
  report.add("morphism respects the counit", e_lhs == src.epsilon, ew);
  return report;
}

// f : X → X′ is a comodule map iff it is right A-linear and intertwines the
// coactions: ρ′ ∘ f = (f ⊗ C) ∘ ρ.
inline bool check_comodule_map(const Mat& f, const Comodule& x, const Comodule& xp) {
  assert(x.cor == xp.cor);
  assert(f.rows() == xp.x.dim && f.cols() == x.x.dim);
  for (long t = 0; t < x.cor->alg->dim; ++t)
    if (f * x.x.right_act[static_cast<size_t>(t)] != xp.x.right_act[static_cast<size_t>(t)] * f)
      return false;
  const Mat f_tensor_c =
      xp.xc.q.proj * (kron(f, Mat::identity(x.cor->c.dim)) * x.xc.q.sect);
  return xp.rho * f == f_tensor_c * x.rho;
}

// ---------------------------------------------------------------------------
// Grouplikes, induced coactions, coinvariants.

struct Grouplike {
  Mat g;  // coordinates in C
};

inline bool is_grouplike(const Coring& cor, const Mat& g) {
  assert(cor.alg->unital());
  if (cor.delta * g != cor.cc.q.proj * kron(g, g)) return false;
  return cor.epsilon * g == *cor.alg->unit;
}

// Verify a family of candidate vectors; the library deliberately does not
// solve the quadratic condition variety.
inline std::vector<Grouplike> grouplikes(const Coring& cor, const std::vector<Mat>& candidates) {
  std::vector<Grouplike> found;
  for (const Mat& g : candidates)
    if (is_grouplike(cor, g)) found.push_back({g});
  return found;
}

// The comodule (A, ρ_g) with ρ_g(a) = g.a transported through A ⊗_A C ≅ C.
inline Comodule coaction_from_grouplike(const Coring& cor, const Grouplike& gl) {
  const Algebra& a = *cor.alg;
  assert(a.unital());
  // right multiplication sends a ↦ g.a
  Mat g_right(cor.c.dim, a.dim);
  for (long j = 0; j < a.dim; ++j) {
    const Mat col = cor.c.right_act[static_cast<size_t>(j)] * gl.g;
    for (long k = 0; k < cor.c.dim; ++k) g_right(k, j) = col(k, 0);
  }
  // identify C ≅ A ⊗_A C via the (bijective) left multiplication map.  The
  // carrier is A as a plain right module: the full left A-action is not
  // coaction-compatible (only the coinvariants act on the left; fixtures
  // attach that action separately when they need the bicomodule).
  const MultiplicationData w = multiplication_map_left(cor.c);
  assert(is_isomorphism(w.map));
  return make_comodule(cor, regular_right(a), inverse(w.map) * g_right);
}

struct Coinvariants {
  Subspace inclusion;  // basis of { a : a.g = g.a } inside A
  Algebra algebra;     // induced multiplication on that basis
};

inline Coinvariants coinvariants(const Coring& cor, const Grouplike& gl) {
  const Algebra& a = *cor.alg;
  Mat commutator(cor.c.dim, a.dim);  // a ↦ a.g − g.a
  for (long j = 0; j < a.dim; ++j) {
    const Mat col = cor.c.left_act[static_cast<size_t>(j)] * gl.g -
                    cor.c.right_act[static_cast<size_t>(j)] * gl.g;
    for (long k = 0; k < cor.c.dim; ++k) commutator(k, j) = col(k, 0);
  }
  Coinvariants d;
  d.inclusion = kernel_basis(commutator);
  const long n = d.inclusion.dim();
  d.algebra.dim = n;
  d.algebra.sc.assign(static_cast<size_t>(n * n * n), Rat(0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Mat product = a.mul(d.inclusion.basis.col(i), d.inclusion.basis.col(j));
      const auto coords = solve(d.inclusion.basis, product);
      assert(coords && "coinvariants are not closed under multiplication");
      for (long k = 0; k < n; ++k) d.algebra.c(i, j, k) = (*coords)(k, 0);
    }
  if (a.unital()) {
    const auto unit_coords = solve(d.inclusion.basis, *a.unit);
    assert(unit_coords && "the unit must be a coinvariant");
    d.algebra.unit = *unit_coords;
  }
  return d;
}

// ---------------------------------------------------------------------------
// The canonical coring of a unital subalgebra inclusion B ⊆ A on A ⊗_B A.

struct CanonicalCoringData {
  TensorSpace aba;  // A ⊗_B A with outer A-actions
  Coring coring;
  Grouplike unit_class;  // class of 1 ⊗ 1
};

inline CanonicalCoringData sweedler_coring(const Algebra& a, const Algebra& b, const Mat& incl) {
  assert(a.unital() && b.unital());
  assert(a.mult_map() * kron(incl, incl) == incl * b.mult_map() &&
         "inclusion must be an algebra map");
  assert(incl * *b.unit == *a.unit && "inclusion must preserve the unit");

  CanonicalCoringData out;
  const Module left_factor = restrict_right(regular_bimodule(a), b, incl);
  const Module right_factor = restrict_left(regular_bimodule(a), b, incl);
  out.aba = tensor_over({&left_factor, &right_factor}, {&b});

  const long ad = a.dim;
  const long cd = out.aba.dim();

  // ε(x ⊗ y) = x y.
  const Mat epsilon = a.mult_map() * out.aba.q.sect;

  // Δ(x ⊗ y) = (x ⊗ 1) ⊗_A (1 ⊗ y): split the middle with 1 ⊗ 1 in the full
  // four-fold space, then project twice.
  Mat split(ad * ad * ad * ad, ad * ad);
  const Mat& unit = *a.unit;
  for (long i = 0; i < ad; ++i)
    for (long j = 0; j < ad; ++j)
      for (long u = 0; u < ad; ++u)
        for (long v = 0; v < ad; ++v) {
          const Rat coeff = unit(u, 0) * unit(v, 0);
          if (coeff != 0) split(((i * ad + u) * ad + v) * ad + j, i * ad + j) = coeff;
        }

  Coring cor;
  cor.alg = &a;
  cor.c = out.aba.mod;
  cor.cc = tensor_over({&cor.c, &cor.c}, {&a});
  const Mat fold = kron(out.aba.q.proj, out.aba.q.proj);  // A⊗A⊗A⊗A → C ⊗ C (full)
  const Mat delta_full = fold * split;                    // A ⊗ A → C ⊗ C (full)
  assert((cor.cc.q.proj * (delta_full * out.aba.q.relations)).is_zero());
  cor.delta = cor.cc.q.proj * (delta_full * out.aba.q.sect);
  cor.epsilon = epsilon;

  out.unit_class = Grouplike{out.aba.q.proj * kron(unit, unit)};
  out.coring = std::move(cor);
  return out;
}

// ---------------------------------------------------------------------------
// Comodule hom-spaces and endomorphism rings.

// Basis of { f : X → Y right A-linear with ρ_Y ∘ f = (f ⊗ C) ∘ ρ_X }.
inline HomSpace comodule_hom_space(const Comodule& x, const Comodule& y) {
  assert(x.cor == y.cor);
  const Coring& cor = *x.cor;
  const long xd = x.x.dim, yd = y.x.dim, cd = cor.c.dim;
  const long unknowns = yd * xd;
  const long alg_rows = cor.alg->dim * unknowns;
  const long tw_rows = y.xc.dim() * xd;

  Mat constraints(alg_rows + tw_rows, unknowns);
  const Mat ramb = x.rho_ambient();
  for (long p = 0; p < yd; ++p)
    for (long q = 0; q < xd; ++q) {
      Mat e(yd, xd);
      e(p, q) = 1;
      for (long t = 0; t < cor.alg->dim; ++t) {
        const Mat r = e * x.x.right_act[static_cast<size_t>(t)] -
                      y.x.right_act[static_cast<size_t>(t)] * e;
        for (long i = 0; i < yd; ++i)
          for (long j = 0; j < xd; ++j)
            constraints(t * unknowns + i * xd + j, p * xd + q) = r(i, j);
      }
      const Mat tw = y.rho * e - y.xc.q.proj * (kron(e, Mat::identity(cd)) * ramb);
      for (long i = 0; i < tw.rows(); ++i)
        for (long j = 0; j < xd; ++j)
          constraints(alg_rows + i * xd + j, p * xd + q) = tw(i, j);
    }

  const Subspace k = kernel_basis(constraints);
  HomSpace h;
  h.dom_dim = xd;
  h.cod_dim = yd;
  h.basis_flat = k.basis;
  for (long c = 0; c < k.basis.cols(); ++c)
    h.basis.push_back(unvec_rowmajor(k.basis.col(c), yd, xd));
  return h;
}

struct EndomorphismRing {
  HomSpace homs;   // basis of End(X) as comodule maps
  Algebra ring;    // composition as multiplication
};

// End(X) with composition: (f.g)(x) = f(g(x)).  Acting by evaluation makes X
// a left module over this ring, and the coaction is automatically left-linear
// for it (that is what being a comodule map says).
inline EndomorphismRing endomorphism_ring(const Comodule& x) {
  EndomorphismRing out;
  out.homs = comodule_hom_space(x, x);
  const long n = out.homs.dim();
  out.ring.dim = n;
  out.ring.sc.assign(static_cast<size_t>(n * n * n), Rat(0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Mat coords = out.homs.coords_of(out.homs.basis[static_cast<size_t>(i)] *
                                            out.homs.basis[static_cast<size_t>(j)]);
      for (long k = 0; k < n; ++k) out.ring.c(i, j, k) = coords(k, 0);
    }
  out.ring.unit = out.homs.coords_of(Mat::identity(x.x.dim));
  return out;
}

// X upgraded to a left module over End(X) (evaluation action), preserving its
// right A-structure.  `ring` must outlive the returned module.
inline Module with_endomorphism_action(const Comodule& x, const EndomorphismRing& endo,
                                       const Algebra& ring) {
  assert(&ring == &endo.ring || ring.dim == endo.ring.dim);
  Module m = x.x;
  m.left_alg = &ring;
  m.left_act = endo.homs.basis;
  return m;
}

}  // namespace coring
