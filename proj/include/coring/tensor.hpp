#pragma once

// Tensor products over an algebra, realized as explicit quotients of the full
// scalar tensor space by the balancing relations  (m.a) ⊗ n − m ⊗ (a.n),
// one junction per adjacent pair of factors.  A multi-factor product such as
// C ⊗_A C ⊗_A C is a single flat quotient — associativity of ⊗ is an equality
// of presentations here, not an isomorphism to track.
//
// Maps between quotients are induced from maps on the full spaces by
// lift-then-project (sect on the domain, proj on the codomain); `induce`
// asserts well-definedness by checking the full map carries domain relations
// into the kernel of the codomain projection.

#include "coring/algebra.hpp"
#include "coring/matrix.hpp"
#include "coring/module.hpp"

#include <cassert>
#include <vector>

namespace coring {

// Identity on every tensor slot except `slot`, where f acts:
// id ⊗ ... ⊗ f ⊗ ... ⊗ id on the lexicographic basis of the full space.
// f may change the slot's dimension (dims gives the domain dimensions).
inline Mat slot_map(const std::vector<long>& dims, size_t slot, const Mat& f) {
  assert(slot < dims.size() && f.cols() == dims[slot]);
  long before = 1, after = 1;
  for (size_t t = 0; t < slot; ++t) before *= dims[t];
  for (size_t t = slot + 1; t < dims.size(); ++t) after *= dims[t];
  return kron(Mat::identity(before), kron(f, Mat::identity(after)));
}

// The induced map on quotient presentations, with an exact well-definedness
// check: the full-space map must send domain relations into relations of the
// codomain (equivalently, the projected image of the relations must vanish).
inline Mat induce(const Quotient& cod, const Mat& full_map, const Quotient& dom) {
  assert(full_map.rows() == cod.ambient_dim && full_map.cols() == dom.ambient_dim);
  assert((cod.proj * (full_map * dom.relations)).is_zero() &&
         "map does not descend to the quotient");
  return cod.proj * (full_map * dom.sect);
}

struct TensorSpace {
  std::vector<long> factor_dims;
  Quotient q;
  Module mod;  // the quotient carrier, with the outer actions that survive

  long dim() const { return q.dim(); }
};

// M_0 ⊗_{J_0} M_1 ⊗_{J_1} ... ⊗ M_n.  Factor t must be a right J_t-module and
// factor t+1 a left J_t-module.  The outer left action of M_0 and outer right
// action of M_n descend to the quotient (checked) and are stored on `mod`.
inline TensorSpace tensor_over(const std::vector<const Module*>& factors,
                               const std::vector<const Algebra*>& junctions) {
  assert(!factors.empty() && junctions.size() + 1 == factors.size());
  std::vector<long> dims;
  long full = 1;
  for (const Module* f : factors) {
    dims.push_back(f->dim);
    full *= f->dim;
  }

  std::vector<Mat> blocks;
  long rel_cols = 0;
  for (size_t t = 0; t < junctions.size(); ++t) {
    const Algebra* j = junctions[t];
    assert(factors[t]->has_right() && factors[t]->right_alg == j &&
           "left factor is not a right module over the junction algebra");
    assert(factors[t + 1]->has_left() && factors[t + 1]->left_alg == j &&
           "right factor is not a left module over the junction algebra");
    for (long a = 0; a < j->dim; ++a) {
      Mat diff = slot_map(dims, t, factors[t]->right_act[static_cast<size_t>(a)]) -
                 slot_map(dims, t + 1, factors[t + 1]->left_act[static_cast<size_t>(a)]);
      if (!diff.is_zero()) {
        rel_cols += diff.cols();
        blocks.push_back(std::move(diff));
      }
    }
  }
  Mat relations(full, rel_cols);
  {
    long at = 0;
    for (const Mat& b : blocks) {
      for (long i = 0; i < full; ++i)
        for (long j = 0; j < b.cols(); ++j) relations(i, at + j) = b(i, j);
      at += b.cols();
    }
  }

  TensorSpace t;
  t.factor_dims = dims;
  t.q = cokernel(relations, full);
  t.mod.dim = t.q.dim();
  if (factors.front()->has_left()) {
    t.mod.left_alg = factors.front()->left_alg;
    for (const Mat& act : factors.front()->left_act)
      t.mod.left_act.push_back(induce(t.q, slot_map(dims, 0, act), t.q));
  }
  if (factors.back()->has_right()) {
    t.mod.right_alg = factors.back()->right_alg;
    for (const Mat& act : factors.back()->right_act)
      t.mod.right_act.push_back(induce(t.q, slot_map(dims, factors.size() - 1, act), t.q));
  }
  return t;
}

}  // namespace coring
