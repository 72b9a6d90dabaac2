#pragma once

// One- and two-sided modules over structure-constant algebras.  A single
// carrier type holds an optional left action and an optional right action;
// "right module", "left module" and "bimodule" are the three usage patterns.
// Actions are stored one matrix per algebra basis element:
//   coords(e_a . m) = left_act[a]  * coords(m)
//   coords(m . e_a) = right_act[a] * coords(m)

#include "coring/algebra.hpp"
#include "coring/matrix.hpp"
#include "coring/report.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace coring {

struct Module {
  long dim = 0;
  const Algebra* left_alg = nullptr;
  const Algebra* right_alg = nullptr;
  std::vector<Mat> left_act;
  std::vector<Mat> right_act;

  bool has_left() const { return left_alg != nullptr; }
  bool has_right() const { return right_alg != nullptr; }

  // coords(x . v) for an algebra element x (coordinate column vector).
  Mat right_apply(const Mat& x, const Mat& v) const {
    assert(has_right() && x.rows() == right_alg->dim && v.rows() == dim);
    Mat out(dim, v.cols());
    for (long a = 0; a < right_alg->dim; ++a)
      if (x(a, 0) != 0) out = out + x(a, 0) * (right_act[static_cast<size_t>(a)] * v);
    return out;
  }
  Mat left_apply(const Mat& x, const Mat& v) const {
    assert(has_left() && x.rows() == left_alg->dim && v.rows() == dim);
    Mat out(dim, v.cols());
    for (long a = 0; a < left_alg->dim; ++a)
      if (x(a, 0) != 0) out = out + x(a, 0) * (left_act[static_cast<size_t>(a)] * v);
    return out;
  }
};

inline Module right_module(const Algebra& alg, long dim, std::vector<Mat> action) {
  assert(static_cast<long>(action.size()) == alg.dim);
  Module m;
  m.dim = dim;
  m.right_alg = &alg;
  m.right_act = std::move(action);
  return m;
}

inline Module left_module(const Algebra& alg, long dim, std::vector<Mat> action) {
  assert(static_cast<long>(action.size()) == alg.dim);
  Module m;
  m.dim = dim;
  m.left_alg = &alg;
  m.left_act = std::move(action);
  return m;
}

inline Module bimodule(const Algebra& left, const Algebra& right, long dim,
                       std::vector<Mat> left_action, std::vector<Mat> right_action) {
  Module m;
  m.dim = dim;
  m.left_alg = &left;
  m.right_alg = &right;
  m.left_act = std::move(left_action);
  m.right_act = std::move(right_action);
  return m;
}

// A as a module over itself: right action by right multiplication, left action
// by left multiplication.
inline Module regular_right(const Algebra& a) {
  std::vector<Mat> act;
  for (long j = 0; j < a.dim; ++j) act.push_back(a.right_mult(j));
  return right_module(a, a.dim, std::move(act));
}

inline Module regular_left(const Algebra& a) {
  std::vector<Mat> act;
  for (long i = 0; i < a.dim; ++i) act.push_back(a.left_mult(i));
  return left_module(a, a.dim, std::move(act));
}

inline Module regular_bimodule(const Algebra& a) {
  std::vector<Mat> left, right;
  for (long i = 0; i < a.dim; ++i) {
    left.push_back(a.left_mult(i));
    right.push_back(a.right_mult(i));
  }
  return bimodule(a, a, a.dim, std::move(left), std::move(right));
}

// Free right module A^n with the componentwise action.
inline Module free_right_module(const Algebra& a, long n) {
  std::vector<Mat> act;
  for (long j = 0; j < a.dim; ++j) act.push_back(kron(Mat::identity(n), a.right_mult(j)));
  return right_module(a, a.dim * n, std::move(act));
}

// Restrict the right action along an algebra map B -> A given by the columns
// of `incl` (image of each B-basis vector).  Leaves any left action in place.
inline Module restrict_right(const Module& m, const Algebra& b, const Mat& incl) {
  assert(m.has_right() && incl.rows() == m.right_alg->dim && incl.cols() == b.dim);
  Module out = m;
  out.right_alg = &b;
  out.right_act.clear();
  for (long j = 0; j < b.dim; ++j) {
    Mat act(m.dim, m.dim);
    for (long a = 0; a < incl.rows(); ++a)
      if (incl(a, j) != 0) act = act + incl(a, j) * m.right_act[static_cast<size_t>(a)];
    out.right_act.push_back(std::move(act));
  }
  return out;
}

inline Module restrict_left(const Module& m, const Algebra& b, const Mat& incl) {
  assert(m.has_left() && incl.rows() == m.left_alg->dim && incl.cols() == b.dim);
  Module out = m;
  out.left_alg = &b;
  out.left_act.clear();
  for (long j = 0; j < b.dim; ++j) {
    Mat act(m.dim, m.dim);
    for (long a = 0; a < incl.rows(); ++a)
      if (incl(a, j) != 0) act = act + incl(a, j) * m.left_act[static_cast<size_t>(a)];
    out.left_act.push_back(std::move(act));
  }
  return out;
}

inline Module direct_sum(const Module& x, const Module& y) {
  assert(x.left_alg == y.left_alg && x.right_alg == y.right_alg);
  Module s;
  s.dim = x.dim + y.dim;
  s.left_alg = x.left_alg;
  s.right_alg = x.right_alg;
  const auto block_diag = [&](const Mat& a, const Mat& b) {
    Mat m(s.dim, s.dim);
    for (long i = 0; i < a.rows(); ++i)
      for (long j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (long i = 0; i < b.rows(); ++i)
      for (long j = 0; j < b.cols(); ++j) m(x.dim + i, x.dim + j) = b(i, j);
    return m;
  };
  for (size_t a = 0; a < x.left_act.size(); ++a)
    s.left_act.push_back(block_diag(x.left_act[a], y.left_act[a]));
  for (size_t a = 0; a < x.right_act.size(); ++a)
    s.right_act.push_back(block_diag(x.right_act[a], y.right_act[a]));
  return s;
}

namespace detail {

inline std::string pair_witness(const char* what, long a, long b) {
  return std::string(what) + " fails on basis pair (e" + std::to_string(a) + ", e" +
         std::to_string(b) + ")";
}

}  // namespace detail

// Right axiom: acting by e_a then e_b equals acting by e_a e_b, i.e.
// M_b M_a = sum_k c(a,b,k) M_k.  Unit law added when the algebra is unital.
inline AxiomReport check_right_module(const Module& m) {
  AxiomReport report;
  assert(m.has_right());
  const Algebra& alg = *m.right_alg;
  bool assoc = true;
  std::string witness;
  for (long a = 0; a < alg.dim && assoc; ++a)
    for (long b = 0; b < alg.dim && assoc; ++b) {
      Mat expected(m.dim, m.dim);
      for (long k = 0; k < alg.dim; ++k)
        if (alg.c(a, b, k) != 0)
          expected = expected + alg.c(a, b, k) * m.right_act[static_cast<size_t>(k)];
      if (m.right_act[static_cast<size_t>(b)] * m.right_act[static_cast<size_t>(a)] != expected) {
        assoc = false;
        witness = detail::pair_witness("(m.e_a).e_b = m.(e_a e_b)", a, b);
      }
    }
  report.add("right action compatible with multiplication", assoc, witness);
  if (alg.unital()) {
    Mat unit_act(m.dim, m.dim);
    for (long a = 0; a < alg.dim; ++a)
      if ((*alg.unit)(a, 0) != 0)
        unit_act = unit_act + (*alg.unit)(a, 0) * m.right_act[static_cast<size_t>(a)];
    report.add("right unit acts as identity", unit_act == Mat::identity(m.dim),
               "m.1 != m for some basis m");
  }
  return report;
}

// Left axiom: L_a L_b = sum_k c(a,b,k) L_k.
inline AxiomReport check_left_module(const Module& m) {
  AxiomReport report;
  assert(m.has_left());
  const Algebra& alg = *m.left_alg;
  bool assoc = true;
  std::string witness;
  for (long a = 0; a < alg.dim && assoc; ++a)
    for (long b = 0; b < alg.dim && assoc; ++b) {
      Mat expected(m.dim, m.dim);
      for (long k = 0; k < alg.dim; ++k)
        if (alg.c(a, b, k) != 0)
          expected = expected + alg.c(a, b, k) * m.left_act[static_cast<size_t>(k)];
      if (m.left_act[static_cast<size_t>(a)] * m.left_act[static_cast<size_t>(b)] != expected) {
        assoc = false;
        witness = detail::pair_witness("e_a.(e_b.m) = (e_a e_b).m", a, b);
      }
    }
  report.add("left action compatible with multiplication", assoc, witness);
  if (alg.unital()) {
    Mat unit_act(m.dim, m.dim);
    for (long a = 0; a < alg.dim; ++a)
      if ((*alg.unit)(a, 0) != 0)
        unit_act = unit_act + (*alg.unit)(a, 0) * m.left_act[static_cast<size_t>(a)];
    report.add("left unit acts as identity", unit_act == Mat::identity(m.dim),
               "1.m != m for some basis m");
  }
  return report;
}

inline AxiomReport check_bimodule(const Module& m) {
  AxiomReport report = check_left_module(m);
  for (auto& item : check_right_module(m).items) report.items.push_back(std::move(item));
  bool commute = true;
  std::string witness;
  for (long a = 0; a < m.left_alg->dim && commute; ++a)
    for (long b = 0; b < m.right_alg->dim && commute; ++b)
      if (m.left_act[static_cast<size_t>(a)] * m.right_act[static_cast<size_t>(b)] !=
          m.right_act[static_cast<size_t>(b)] * m.left_act[static_cast<size_t>(a)]) {
        commute = false;
        witness = detail::pair_witness("(e_a.m).e_b = e_a.(m.e_b)", a, b);
      }
  report.add("left and right actions commute", commute, witness);
  return report;
}

// f : src -> dst as a dst.dim x src.dim matrix; intertwines every action the
// two modules share (same algebra on the same side).
inline AxiomReport check_module_morphism(const Mat& f, const Module& src, const Module& dst) {
  AxiomReport report;
  assert(f.rows() == dst.dim && f.cols() == src.dim);
  if (src.has_right() && dst.has_right()) {
    report.add("modules share the right algebra", src.right_alg == dst.right_alg, "");
    if (src.right_alg == dst.right_alg) {
      bool linear = true;
      std::string witness;
      for (long t = 0; t < src.right_alg->dim && linear; ++t)
        if (f * src.right_act[static_cast<size_t>(t)] !=
            dst.right_act[static_cast<size_t>(t)] * f) {
          linear = false;
          witness = "f(m e" + std::to_string(t) + ") != f(m) e" + std::to_string(t);
        }
      report.add("morphism is right-linear", linear, witness);
    }
  }
  if (src.has_left() && dst.has_left()) {
    report.add("modules share the left algebra", src.left_alg == dst.left_alg, "");
    if (src.left_alg == dst.left_alg) {
      bool linear = true;
      std::string witness;
      for (long t = 0; t < src.left_alg->dim && linear; ++t)
        if (f * src.left_act[static_cast<size_t>(t)] != dst.left_act[static_cast<size_t>(t)] * f) {
          linear = false;
          witness = "f(e" + std::to_string(t) + " m) != e" + std::to_string(t) + " f(m)";
        }
      report.add("morphism is left-linear", linear, witness);
    }
  }
  return report;
}

}  // namespace coring
