#pragma once

// Diagnostic reports over a Galois context: the bijectivity verdicts for the
// canonical map, the per-object unit/counit verdicts, equalizer-preservation
// and reflects-isomorphisms samples, and the cross-check entries that must
// come out consistent on every valid input.
//
// The faithful-fullness cross-check is the biconditional
//     (can bijective  and  every sampled equalizer preserved)
//         <=>  every sampled counit bijective,
// which is a theorem whenever the cofree comodule is part of the sample — so
// the report always evaluates the cofree comodule alongside the supplied set.

#include "coring/adjunction.hpp"
#include "coring/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coring {

struct Verdict {
  std::string label;
  bool value = false;
  std::string detail;
};

struct DiagnosticsReport {
  Verdict galois;  // is the canonical map bijective?
  std::vector<Verdict> counit_iso;
  std::vector<Verdict> unit_iso;
  std::vector<Verdict> preserves_equalizers;
  std::vector<Verdict> reflects_iso_samples;
  std::vector<Verdict> theorem_consistency;
  std::optional<Verdict> equivalence;  // combined verdict, equivalence reports only
  bool vacuous = false;                // no comodules supplied: verdicts degenerate

  bool consistent() const {
    for (const auto& v : theorem_consistency)
      if (!v.value) return false;
    return true;
  }
  bool all_ok() const {
    if (!galois.value || !consistent()) return false;
    for (const auto* list :
         {&counit_iso, &unit_iso, &preserves_equalizers, &reflects_iso_samples})
      for (const auto& v : *list)
        if (!v.value) return false;
    return !equivalence || equivalence->value;
  }
};

struct LabeledComodule {
  std::string label;
  const Comodule* com = nullptr;
};

struct LabeledModule {
  std::string label;
  const Module* mod = nullptr;
};

// a sample morphism of right B-modules, for the reflects-isomorphisms check
struct MorphismSample {
  std::string label;
  const Module* from = nullptr;
  const Module* to = nullptr;
  Mat map;
};

namespace detail {

inline std::string map_detail(const Mat& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", rank " +
         std::to_string(rank(m));
}

}  // namespace detail

// At the cofree comodule the cotensor window is a copy of Σ† (the left
// coaction is the comparison isomorphism), and under that identification the
// counit becomes the canonical map.
struct CofreeCounit {
  CounitFactorization cf;
  bool window_is_dual = false;
  bool counit_is_can = false;
};

inline CofreeCounit cofree_counit(const GaloisContext& ctx) {
  CofreeCounit out{counit_factorization(ctx, cofree_comodule(*ctx.cor)), false, false};
  const auto transport = solve(out.cf.cot.window.basis, ctx.dual_left.alpha);
  if (transport && is_isomorphism(*transport)) {
    out.window_is_dual = true;
    const long sd = ctx.sigma->x.dim;
    const Mat lift = out.cf.ds.q.proj *
                     (kron(*transport, Mat::identity(sd)) * ctx.cm.carrier_space.q.sect);
    out.counit_is_can = out.cf.counit * lift == ctx.can;
  }
  return out;
}

inline Verdict galois_verdict(const GaloisContext& ctx) {
  const long n = ctx.can.rows(), r = rank(ctx.can);
  if (is_isomorphism(ctx.can))
    return {"canonical map bijective", true,
            "can is " + std::to_string(n) + "x" + std::to_string(n) + " invertible"};
  return {"canonical map bijective", false,
          "rank " + std::to_string(r) + " of " + std::to_string(n)};
}

inline DiagnosticsReport faithful_full_report(const GaloisContext& ctx,
                                              const std::vector<LabeledComodule>& comodules) {
  DiagnosticsReport rep;
  rep.galois = galois_verdict(ctx);
  if (comodules.empty()) {
    rep.vacuous = true;
    return rep;
  }

  const bool can_injective = rank(ctx.can) == ctx.can.cols();
  const CofreeCounit cofree = cofree_counit(ctx);
  bool all_counit = true, all_preserved = true;

  const auto record = [&](const std::string& label, const CounitFactorization& cf) {
    const bool counit_ok = is_isomorphism(cf.counit);
    const bool preserved = preserves_equalizer(cf);
    all_counit = all_counit && counit_ok;
    all_preserved = all_preserved && preserved;
    rep.counit_iso.push_back({label, counit_ok, detail::map_detail(cf.counit)});
    rep.preserves_equalizers.push_back(
        {label, preserved,
         "window dim " + std::to_string(cf.cot.window.dim()) + " vs equalizer dim " +
             std::to_string(cf.ex.dim())});
    if (can_injective)
      rep.theorem_consistency.push_back(
          {"counit factorization at " + label,
           counit_ok == (is_isomorphism(cf.psi) && is_isomorphism(cf.nu)),
           "counit bijective must match both factors bijective"});
  };

  record("cofree", cofree.cf);
  for (const auto& entry : comodules) record(entry.label, counit_factorization(ctx, *entry.com));

  rep.theorem_consistency.push_back({"cofree cotensor is the dual bimodule",
                                     cofree.window_is_dual,
                                     "the left coaction must span the cotensor window"});
  rep.theorem_consistency.push_back({"cofree counit transports to the canonical map",
                                     cofree.counit_is_can,
                                     "counit at the cofree comodule must equal can"});
  rep.theorem_consistency.push_back(
      {"faithful-fullness criterion", (rep.galois.value && all_preserved) == all_counit,
       "bijective canonical map plus preservation must match bijective counits"});
  return rep;
}

inline DiagnosticsReport equivalence_report(const GaloisContext& ctx,
                                            const std::vector<LabeledComodule>& comodules,
                                            const std::vector<LabeledModule>& bmodules,
                                            const std::vector<MorphismSample>& samples) {
  DiagnosticsReport rep = faithful_full_report(ctx, comodules);

  const long sd = ctx.sigma->x.dim;
  for (const auto& entry : bmodules) {
    const AdjunctionUnit unit = adjunction_unit(ctx, *entry.mod);
    rep.theorem_consistency.push_back({"unit lands in the cotensor window at " + entry.label,
                                       unit.lands_in_window,
                                       "the unit must factor through the equalizer"});
    rep.unit_iso.push_back({entry.label, unit.lands_in_window && is_isomorphism(unit.map),
                            unit.lands_in_window ? detail::map_detail(unit.map)
                                                 : "image escapes the window"});
  }

  for (const auto& sample : samples) {
    const TensorSpace from_s = tensor_over({sample.from, &ctx.sigma->x}, {ctx.inner});
    const TensorSpace to_s = tensor_over({sample.to, &ctx.sigma->x}, {ctx.inner});
    const Mat lf = to_s.q.proj * (kron(sample.map, Mat::identity(sd)) * from_s.q.sect);
    const bool reflected = !is_isomorphism(lf) || is_isomorphism(sample.map);
    rep.reflects_iso_samples.push_back(
        {sample.label, reflected,
         "induced map " + detail::map_detail(lf) + "; original " + detail::map_detail(sample.map)});
  }

  bool combined = rep.galois.value && !rep.vacuous;
  for (const auto* list :
       {&rep.counit_iso, &rep.unit_iso, &rep.preserves_equalizers, &rep.reflects_iso_samples})
    for (const auto& v : *list) combined = combined && v.value;
  rep.equivalence = Verdict{"category equivalence on the sampled objects", combined,
                            combined ? "all sampled verdicts positive"
                                     : "a sampled verdict is negative"};
  return rep;
}

}  // namespace coring
