#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf/check.hpp"
#include "hopf/clifford.hpp"
#include "hopf/cosets.hpp"
#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"

namespace hopf {

// Conjugation of Irr(K) by the dual irreducible characters of H: one
// nonnegative integer matrix per basis element d of parent, with
// mats[d][alpha][beta] the multiplicity of beta in the conjugate
// character alpha_d.  Rows index the source character, so the operator
// composition law for products reads M_{dd'} = M_{d'} * M_d.
struct ConjugationAction {
  const FusionData* parent = nullptr;  // Irr(H*)
  std::vector<std::string> labels_k;
  std::vector<i64> dims_k;
  std::vector<Mat64> mats;  // one per parent basis index
};

inline std::vector<Violation> validate_action(const ConjugationAction& act) {
  std::vector<Violation> out;
  const FusionData& f = *act.parent;
  const std::size_t nk = act.labels_k.size();
  if (act.mats.size() != f.size()) {
    out.push_back({"shape", "one matrix per dual character required"});
    return out;
  }
  for (std::size_t d = 0; d < f.size(); ++d) {
    if (act.mats[d].size() != nk) {
      out.push_back({"shape", "matrix for " + f.label(d) + " has bad rows"});
      return out;
    }
    for (const auto& row : act.mats[d])
      if (row.size() != nk) {
        out.push_back({"shape", "matrix for " + f.label(d) + " has bad columns"});
        return out;
      }
  }
  for (std::size_t d = 0; d < f.size(); ++d)
    for (std::size_t a = 0; a < nk; ++a)
      for (std::size_t b = 0; b < nk; ++b)
        if (act.mats[d][a][b] < 0)
          out.push_back({"nonnegativity",
                         f.label(d) + ": entry (" + act.labels_k[a] + "," +
                             act.labels_k[b] + ")"});
  if (!out.empty()) return out;

  // c_unit is the identity
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nk; ++b)
      if (act.mats[f.unit()][a][b] != (a == b ? 1 : 0)) {
        out.push_back({"unit-action", "c_1 is not the identity"});
        a = nk;
        break;
      }

  // alpha_d(1) = eps(d) alpha(1)
  for (std::size_t d = 0; d < f.size(); ++d)
    for (std::size_t a = 0; a < nk; ++a) {
      i64 s = 0;
      for (std::size_t b = 0; b < nk; ++b)
        s = checked_add(s, checked_mul(act.mats[d][a][b], act.dims_k[b]));
      if (s != checked_mul(f.dim(d), act.dims_k[a]))
        out.push_back({"dimension-scaling",
                       "(" + f.label(d) + ", " + act.labels_k[a] + ")"});
    }
  return out;
}

/// Row of the conjugate character alpha_d in the Irr(K) basis.
inline CharVec conjugate(const ConjugationAction& act, std::size_t d,
                         std::size_t alpha) {
  if (d >= act.mats.size()) throw InputError("dual character out of range");
  if (alpha >= act.labels_k.size())
    throw InputError("Irr(K) character out of range");
  return act.mats[d][alpha];
}

/// Linear extension of c_d to coefficient vectors over Irr(K).
inline CharVec conjugate_vec(const ConjugationAction& act, std::size_t d,
                             const CharVec& v) {
  const std::size_t nk = act.labels_k.size();
  if (v.size() != nk) throw InputError("vector does not match Irr(K)");
  CharVec r(nk, 0);
  for (std::size_t a = 0; a < nk; ++a) {
    if (v[a] == 0) continue;
    for (std::size_t b = 0; b < nk; ++b)
      r[b] = checked_add(r[b], checked_mul(v[a], act.mats[d][a][b]));
  }
  return r;
}

namespace detail {

/// mats-convention product: (a * b)[x][z] = sum_y a[x][y] b[y][z].
inline Mat64 row_product(const Mat64& a, const Mat64& b) {
  const std::size_t n = a.size();
  Mat64 r(n, CharVec(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (a[x][y] == 0) continue;
      for (std::size_t z = 0; z < n; ++z)
        r[x][z] = checked_add(r[x][z], checked_mul(a[x][y], b[y][z]));
    }
  return r;
}

}  // namespace detail

/// Composition law for conjugation by a product: extending c linearly over
/// the fusion expansion of dd' must match applying c_{d'} then c_d.
inline CheckResult check_composition(const ConjugationAction& act) {
  const FusionData& f = *act.parent;
  const std::size_t nk = act.labels_k.size();
  for (std::size_t d = 0; d < f.size(); ++d)
    for (std::size_t dp = 0; dp < f.size(); ++dp) {
      Mat64 lhs(nk, CharVec(nk, 0));
      for (const auto& [k, m] : f.row(d, dp))
        for (std::size_t a = 0; a < nk; ++a)
          for (std::size_t b = 0; b < nk; ++b)
            lhs[a][b] =
                checked_add(lhs[a][b], checked_mul(m, act.mats[k][a][b]));
      const Mat64 rhs = detail::row_product(act.mats[dp], act.mats[d]);
      if (lhs != rhs)
        return check_fail("composition fails for (" + f.label(d) + ", " +
                          f.label(dp) + ")");
    }
  return {};
}

/// Conjugation commutes with duality: the matrix of c_d commutes with the
/// star permutation of Irr(K).
inline CheckResult check_star(const ConjugationAction& act,
                              const std::vector<std::size_t>& star_k) {
  const FusionData& f = *act.parent;
  const std::size_t nk = act.labels_k.size();
  if (star_k.size() != nk) throw InputError("star permutation size mismatch");
  for (std::size_t d = 0; d < f.size(); ++d)
    for (std::size_t a = 0; a < nk; ++a)
      for (std::size_t b = 0; b < nk; ++b)
        if (act.mats[d][star_k[a]][b] != act.mats[d][a][star_k[b]])
          return check_fail("star compatibility fails for (" + f.label(d) +
                            ", " + act.labels_k[a] + ")");
  return {};
}

/// Characters in one class of r_{k,K} conjugate proportionally:
/// eps(d') alpha_d = eps(d) alpha_{d'} for d, d' in the same class.
inline CheckResult check_coset_invariance(const ConjugationAction& act,
                                          const CosetDecomposition& dec) {
  const FusionData& f = *act.parent;
  const std::size_t nk = act.labels_k.size();
  for (const auto& cls : dec.classes)
    for (std::size_t d : cls)
      for (std::size_t dp : cls)
        for (std::size_t a = 0; a < nk; ++a) {
          const CharVec lhs = scaled(act.mats[d][a], f.dim(dp));
          const CharVec rhs = scaled(act.mats[dp][a], f.dim(d));
          if (lhs != rhs)
            return check_fail("coset invariance fails for " + f.label(d) +
                              ", " + f.label(dp) + " at " + act.labels_k[a]);
        }
  return {};
}

/// Induction collapses conjugation: the induced character of alpha_d is
/// eps(d) times the induced character of alpha.
inline CheckResult check_induced_equality(const ConjugationAction& act,
                                          const BranchingData& bd) {
  const FusionData& f = *act.parent;
  if (bd.labels_k.size() != act.labels_k.size())
    throw InputError("branching and action disagree on Irr(K)");
  for (std::size_t d = 0; d < f.size(); ++d)
    for (std::size_t a = 0; a < act.labels_k.size(); ++a) {
      const CharVec lhs = induce_vec(bd, act.mats[d][a]);
      const CharVec rhs = scaled(induce(bd, a), f.dim(d));
      if (lhs != rhs)
        return check_fail("induced characters disagree for (" + f.label(d) +
                          ", " + act.labels_k[a] + ")");
    }
  return {};
}

/// Inducing then restricting alpha has the same irreducible constituents
/// as the direct sum of all conjugates of alpha.
inline CheckResult check_constituents(const ConjugationAction& act,
                                      const BranchingData& bd) {
  const FusionData& f = *act.parent;
  const std::size_t nk = act.labels_k.size();
  if (bd.labels_k.size() != nk)
    throw InputError("branching and action disagree on Irr(K)");
  for (std::size_t a = 0; a < nk; ++a) {
    const CharVec down = restrict_vec(bd, induce(bd, a));
    std::vector<bool> lhs(nk), rhs(nk);
    for (std::size_t b = 0; b < nk; ++b) lhs[b] = down[b] > 0;
    for (std::size_t d = 0; d < f.size(); ++d)
      for (std::size_t b = 0; b < nk; ++b)
        if (act.mats[d][a][b] > 0) rhs[b] = true;
    if (lhs != rhs)
      return check_fail("constituent sets differ for " + act.labels_k[a]);
  }
  return {};
}

}  // namespace hopf
