#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hopf/check.hpp"
#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"
#include "hopf/rational.hpp"

namespace hopf {

// Branching of Irr(H) over a normal Hopf subalgebra K: the integer matrix
// B[chi][alpha] of multiplicities of alpha in the restriction of chi.
// Convention: index 0 of irr_H is the trivial character of H and index 0
// of irr_K is the trivial character of K.  star_k optionally carries the
// duality permutation on Irr(K); empty means unknown.
struct BranchingData {
  std::vector<std::string> labels_h;
  std::vector<i64> dims_h;  // chi(1)
  std::vector<std::string> labels_k;
  std::vector<i64> dims_k;  // alpha(1)
  Mat64 b;                  // rows over Irr(H), columns over Irr(K)
  i64 dim_h = 0;            // |H|
  i64 dim_k = 0;            // |K|
  std::vector<std::size_t> star_k;

  std::size_t h_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_h.size(); ++i)
      if (labels_h[i] == label) return i;
    throw InputError("unknown Irr(H) label: " + label);
  }
  std::size_t k_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_k.size(); ++i)
      if (labels_k[i] == label) return i;
    throw InputError("unknown Irr(K) label: " + label);
  }
};

// The restriction-equivalence structure: classes C_i on Irr(H), blocks A_i
// on Irr(K), class sums a_i = sum_{chi in C_i} chi(1) chi and block weights
// |A_i| = sum_{alpha in A_i} alpha(1)^2.
struct RestrictionPartition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<CharVec> class_sums;  // over Irr(H)
  std::vector<i64> block_weights;

  std::size_t class_of(std::size_t chi) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t m : classes[i])
        if (m == chi) return i;
    throw InputError("character not in any class");
  }
  std::size_t block_of(std::size_t alpha) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t m : blocks[i])
        if (m == alpha) return i;
    throw InputError("character not in any block");
  }
};

inline std::vector<Violation> validate_branching(const BranchingData& bd) {
  std::vector<Violation> out;
  const std::size_t nh = bd.labels_h.size(), nk = bd.labels_k.size();
  if (bd.dims_h.size() != nh || bd.dims_k.size() != nk || bd.b.size() != nh) {
    out.push_back({"shape", "label/dimension/matrix sizes disagree"});
    return out;
  }
  for (const auto& row : bd.b)
    if (row.size() != nk) {
      out.push_back({"shape", "ragged multiplicity matrix"});
      return out;
    }
  for (std::size_t i = 0; i < nh; ++i)
    if (bd.dims_h[i] <= 0)
      out.push_back({"positivity", "dim " + bd.labels_h[i]});
  for (std::size_t a = 0; a < nk; ++a)
    if (bd.dims_k[a] <= 0)
      out.push_back({"positivity", "dim " + bd.labels_k[a]});
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t a = 0; a < nk; ++a)
      if (bd.b[i][a] < 0)
        out.push_back({"nonnegativity",
                       "B[" + bd.labels_h[i] + "," + bd.labels_k[a] + "]"});
  if (!out.empty()) return out;

  if (bd.dim_h <= 0 || bd.dim_k <= 0 || bd.dim_h % bd.dim_k != 0)
    out.push_back({"divisibility", "|K| does not divide |H|"});

  // chi(1) = sum_alpha B[chi,alpha] alpha(1)
  for (std::size_t i = 0; i < nh; ++i) {
    i64 s = 0;
    for (std::size_t a = 0; a < nk; ++a)
      s = checked_add(s, checked_mul(bd.b[i][a], bd.dims_k[a]));
    if (s != bd.dims_h[i])
      out.push_back({"dimension-consistency", bd.labels_h[i]});
  }

  // restriction of the regular character: sum_chi chi(1) B[chi,alpha]
  // equals (|H|/|K|) alpha(1)
  if (bd.dim_k > 0 && bd.dim_h % bd.dim_k == 0) {
    const i64 index = bd.dim_h / bd.dim_k;
    for (std::size_t a = 0; a < nk; ++a) {
      i64 s = 0;
      for (std::size_t i = 0; i < nh; ++i)
        s = checked_add(s, checked_mul(bd.dims_h[i], bd.b[i][a]));
      if (s != checked_mul(index, bd.dims_k[a]))
        out.push_back({"regular-character", bd.labels_k[a]});
    }
  }
  return out;
}

/// Common-constituent equivalence: connected components of the bipartite
/// support graph of B, projected to both sides.
inline RestrictionPartition equiv_classes(const BranchingData& bd) {
  const std::size_t nh = bd.labels_h.size(), nk = bd.labels_k.size();
  std::vector<std::size_t> root(nh + nk);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t a = 0; a < nk; ++a)
      if (bd.b[i][a] > 0) root[find(i)] = find(nh + a);

  std::vector<std::vector<std::size_t>> h_side(nh + nk), k_side(nh + nk);
  for (std::size_t i = 0; i < nh; ++i) h_side[find(i)].push_back(i);
  for (std::size_t a = 0; a < nk; ++a) k_side[find(nh + a)].push_back(a);

  std::vector<std::size_t> order;
  for (std::size_t r = 0; r < nh + nk; ++r)
    if (!h_side[r].empty()) order.push_back(r);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h_side[a].front() < h_side[b].front();
  });

  RestrictionPartition part;
  for (std::size_t r : order) {
    part.classes.push_back(h_side[r]);
    part.blocks.push_back(k_side[r]);
    CharVec a(nh, 0);
    for (std::size_t chi : h_side[r]) a[chi] = bd.dims_h[chi];
    part.class_sums.push_back(std::move(a));
    i64 w = 0;
    for (std::size_t alpha : k_side[r])
      w = checked_add(w, checked_mul(bd.dims_k[alpha], bd.dims_k[alpha]));
    part.block_weights.push_back(w);
  }
  return part;
}

/// a_i(1) = (|H|/|K|) |A_i| as exact integers, for every class.
inline CheckResult check_class_dimensions(const BranchingData& bd,
                                          const RestrictionPartition& part) {
  const i64 index = bd.dim_h / bd.dim_k;
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    i64 a1 = 0;
    for (std::size_t chi : part.classes[i])
      a1 = checked_add(a1, checked_mul(bd.dims_h[chi], bd.dims_h[chi]));
    if (a1 != checked_mul(index, part.block_weights[i]))
      return check_fail("a_" + std::to_string(i) + "(1) != (|H|/|K|)|A_" +
                        std::to_string(i) + "|");
  }
  return {};
}

/// Within a class restrictions are proportional (cleared form); across
/// classes they are not.
inline CheckResult check_proportionality(const BranchingData& bd,
                                         const RestrictionPartition& part) {
  const std::size_t nh = bd.labels_h.size();
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t y = 0; y < nh; ++y) {
      const bool same = part.class_of(x) == part.class_of(y);
      const CharVec lhs = scaled(bd.b[x], bd.dims_h[y]);
      const CharVec rhs = scaled(bd.b[y], bd.dims_h[x]);
      if (same && lhs != rhs)
        return check_fail("restrictions of " + bd.labels_h[x] + " and " +
                          bd.labels_h[y] + " not proportional");
      if (!same && lhs == rhs)
        return check_fail("restrictions of " + bd.labels_h[x] + " and " +
                          bd.labels_h[y] + " proportional across classes");
    }
  return {};
}

inline i64 class_sum_dim(const BranchingData& bd,
                         const RestrictionPartition& part, std::size_t i) {
  i64 a1 = 0;
  for (std::size_t chi : part.classes[i])
    a1 = checked_add(a1, checked_mul(bd.dims_h[chi], bd.dims_h[chi]));
  return a1;
}

/// Evaluates the closed restriction formula
///   chi|_K = (chi(1)/a_i(1)) (|H|/|K|) sum_{alpha in A_i} alpha(1) alpha
/// with exact rationals and asserts it equals row B[chi].  Returns the row.
inline CharVec restrict_formula(const BranchingData& bd,
                                const RestrictionPartition& part,
                                std::size_t chi) {
  const std::size_t i = part.class_of(chi);
  const Rat coef = Rat(bd.dims_h[chi], class_sum_dim(bd, part, i)) *
                   Rat(bd.dim_h, bd.dim_k);
  const std::size_t nk = bd.labels_k.size();
  std::vector<bool> in_block(nk, false);
  for (std::size_t alpha : part.blocks[i]) in_block[alpha] = true;
  for (std::size_t alpha = 0; alpha < nk; ++alpha) {
    const Rat want =
        in_block[alpha] ? coef * Rat(bd.dims_k[alpha]) : Rat(0);
    if (!(want == Rat(bd.b[chi][alpha])))
      throw TheoremViolation("restriction formula fails at chi = " +
                             bd.labels_h[chi] + ", alpha = " +
                             bd.labels_k[alpha] + " (formula gives " +
                             want.str() + ", matrix has " +
                             std::to_string(bd.b[chi][alpha]) + ")");
  }
  return bd.b[chi];
}

/// Frobenius reciprocity: alpha induced to H is sum_chi B[chi,alpha] chi.
inline CharVec induce(const BranchingData& bd, std::size_t alpha) {
  CharVec v(bd.labels_h.size(), 0);
  for (std::size_t chi = 0; chi < v.size(); ++chi) v[chi] = bd.b[chi][alpha];
  return v;
}

/// Linear extension of induce to coefficient vectors over Irr(K).
inline CharVec induce_vec(const BranchingData& bd, const CharVec& v) {
  if (v.size() != bd.labels_k.size())
    throw InputError("vector does not match Irr(K)");
  CharVec r(bd.labels_h.size(), 0);
  for (std::size_t chi = 0; chi < r.size(); ++chi)
    for (std::size_t alpha = 0; alpha < v.size(); ++alpha)
      r[chi] =
          checked_add(r[chi], checked_mul(v[alpha], bd.b[chi][alpha]));
  return r;
}

/// Restriction extended linearly to coefficient vectors over Irr(H).
inline CharVec restrict_vec(const BranchingData& bd, const CharVec& v) {
  if (v.size() != bd.labels_h.size())
    throw InputError("vector does not match Irr(H)");
  CharVec r(bd.labels_k.size(), 0);
  for (std::size_t chi = 0; chi < v.size(); ++chi)
    for (std::size_t alpha = 0; alpha < r.size(); ++alpha)
      r[alpha] = checked_add(r[alpha], checked_mul(v[chi], bd.b[chi][alpha]));
  return r;
}

/// Asserts the closed induction formula
///   alpha induced = (alpha(1)/a_i(1)) (|H|/|K|) a_i
/// against the reciprocity sum, exactly.
inline void check_induction_formula(const BranchingData& bd,
                                    const RestrictionPartition& part,
                                    std::size_t alpha) {
  const std::size_t i = part.block_of(alpha);
  const Rat coef = Rat(bd.dims_k[alpha], class_sum_dim(bd, part, i)) *
                   Rat(bd.dim_h, bd.dim_k);
  const CharVec up = induce(bd, alpha);
  for (std::size_t chi = 0; chi < up.size(); ++chi) {
    const Rat want = coef * Rat(part.class_sums[i][chi]);
    if (!(want == Rat(up[chi])))
      throw TheoremViolation("induction formula fails at alpha = " +
                             bd.labels_k[alpha] + ", chi = " +
                             bd.labels_h[chi] + " (formula gives " +
                             want.str() + ", reciprocity gives " +
                             std::to_string(up[chi]) + ")");
  }
}

/// The trivial character of K induces to the regular character of H//K,
/// which restricts back to (|H|/|K|) times the trivial character of K.
inline CheckResult check_trivial_induction(const BranchingData& bd) {
  const std::size_t nh = bd.labels_h.size(), nk = bd.labels_k.size();
  const CharVec up = induce(bd, 0);
  for (std::size_t chi = 0; chi < nh; ++chi) {
    CharVec trivial_row(nk, 0);
    trivial_row[0] = bd.dims_h[chi];
    const bool restricts_trivially = bd.b[chi] == trivial_row;
    const i64 want = restricts_trivially ? bd.dims_h[chi] : 0;
    if (up[chi] != want)
      return check_fail("induced trivial character disagrees with t_{H//K} at " +
                        bd.labels_h[chi]);
  }
  CharVec back = restrict_vec(bd, up);
  CharVec want(nk, 0);
  want[0] = bd.dim_h / bd.dim_k;
  if (back != want)
    return check_fail("t_{H//K} does not restrict to (|H|/|K|) eps_K");
  return {};
}

}  // namespace hopf
