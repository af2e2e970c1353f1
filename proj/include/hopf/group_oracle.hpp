#pragma once

#include <complex>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hopf/character_table.hpp"
#include "hopf/check.hpp"
#include "hopf/clifford.hpp"
#include "hopf/conjugation.hpp"
#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"
#include "hopf/perm.hpp"
#include "hopf/subalgebra.hpp"

namespace hopf {

inline constexpr double kResidueTol = 1e-6;
inline constexpr double kMatchTol = 1e-8;

/// Element indices (in g) of the subgroup generated by the given perms.
inline PermGroup subgroup_from_indices(const PermGroup& g,
                                       const std::vector<std::size_t>& idx) {
  std::vector<Perm> perms;
  perms.reserve(idx.size());
  for (std::size_t i : idx) perms.push_back(g.elements.at(i));
  PermGroup h = generate(g.degree, perms, g.size());
  if (h.size() != idx.size())
    throw InputError("element set is not closed into a subgroup");
  return h;
}

inline bool is_subgroup_indices(const PermGroup& g,
                                const std::vector<std::size_t>& idx) {
  std::set<std::size_t> s(idx.begin(), idx.end());
  if (!s.count(g.identity_index())) return false;
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (!s.count(g.compose(a, b))) return false;
  return true;
}

/// Orbits of the two-sided action (k, l): g -> k g l; the group-theoretic
/// ground truth for the fusion-level double-coset classes.  Classes are
/// sorted internally and by least member, and the least member is the
/// deterministic representative.
inline std::vector<std::vector<std::size_t>> double_cosets(
    const PermGroup& g, const std::vector<std::size_t>& k,
    const std::vector<std::size_t>& l) {
  if (!is_subgroup_indices(g, k) || !is_subgroup_indices(g, l))
    throw InputError("double_cosets requires subgroup element sets");
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t a : k)
      for (std::size_t b : l)
        orbit.insert(g.compose(a, g.compose(start, b)));
    std::vector<std::size_t> cls(orbit.begin(), orbit.end());
    for (std::size_t e : cls) seen[e] = true;
    cosets.push_back(std::move(cls));
  }
  return cosets;
}

/// |{k l : k in K, l in L}| counted directly.
inline i64 product_set_size(const PermGroup& g,
                            const std::vector<std::size_t>& k,
                            const std::vector<std::size_t>& l) {
  std::set<std::size_t> prod;
  for (std::size_t a : k)
    for (std::size_t b : l) prod.insert(g.compose(a, b));
  return static_cast<i64>(prod.size());
}

/// Character values of one irreducible at every group element.
inline std::vector<std::complex<double>> values_per_element(
    const PermGroup& g, const CharacterTable& t, std::size_t irrep) {
  std::vector<std::complex<double>> f(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) f[e] = t.at_element(irrep, e);
  return f;
}

/// Restriction of a class function on big (values per big element) to sub.
inline std::vector<std::complex<double>> restrict_values(
    const PermGroup& big, const std::vector<std::complex<double>>& f,
    const PermGroup& sub) {
  std::vector<std::complex<double>> r(sub.size());
  for (std::size_t e = 0; e < sub.size(); ++e)
    r[e] = f[big.index_of(sub.elements[e])];
  return r;
}

/// Induction of a class function on sub to big:
/// (f induced)(g) = (1/|sub|) sum_{x in big} f(x g x^-1), zero off sub.
inline std::vector<std::complex<double>> induce_values(
    const PermGroup& big, const PermGroup& sub,
    const std::vector<std::complex<double>>& f) {
  std::vector<std::complex<double>> r(big.size(), 0.0);
  for (std::size_t e = 0; e < big.size(); ++e) {
    std::complex<double> s = 0.0;
    for (std::size_t x = 0; x < big.size(); ++x) {
      const Perm conj =
          perm_compose(big.elements[x],
                       perm_compose(big.elements[e],
                                    perm_inverse(big.elements[x])));
      if (sub.contains(conj)) s += f[sub.index_of(conj)];
    }
    r[e] = s / static_cast<double>(sub.size());
  }
  return r;
}

/// Multiplicity vector of a class function in the irreducible basis,
/// rounded to integers with a hard residue gate.
inline std::vector<i64> decompose(const PermGroup& g, const CharacterTable& t,
                                  const std::vector<std::complex<double>>& f,
                                  double residue_tol = kResidueTol) {
  std::vector<i64> mult(t.irr_count());
  for (std::size_t irrep = 0; irrep < t.irr_count(); ++irrep) {
    std::complex<double> s = 0.0;
    for (std::size_t e = 0; e < g.size(); ++e)
      s += f[e] * std::conj(t.at_element(irrep, e));
    s /= static_cast<double>(g.size());
    const double rounded = std::round(s.real());
    if (std::abs(s.real() - rounded) > residue_tol ||
        std::abs(s.imag()) > residue_tol)
      throw NumericError("multiplicity rounding residue exceeds tolerance");
    if (rounded < 0.0)
      throw NumericError("negative multiplicity in decomposition");
    mult[irrep] = static_cast<i64>(rounded);
  }
  return mult;
}

/// Duality permutation on the irreducibles: matches each complex-conjugated
/// row back into the table.
inline std::vector<std::size_t> star_permutation(const CharacterTable& t) {
  const std::size_t r = t.irr_count();
  std::vector<std::size_t> star(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    std::size_t found = r;
    for (std::size_t b = 0; b < r; ++b) {
      double worst = 0.0;
      for (std::size_t k = 0; k < t.values[a].size(); ++k)
        worst = std::max(worst,
                         std::abs(std::conj(t.values[a][k]) - t.values[b][k]));
      if (worst <= kMatchTol) {
        if (found != r)
          throw NumericError("conjugate character matches two rows");
        found = b;
      }
    }
    if (found == r)
      throw NumericError("conjugate character matches no row");
    star[a] = found;
  }
  return star;
}

namespace detail {

inline std::vector<std::string> irr_labels(const std::string& prefix,
                                           std::size_t count) {
  std::vector<std::string> labels(count);
  for (std::size_t i = 0; i < count; ++i)
    labels[i] = prefix + std::to_string(i + 1);
  return labels;
}

}  // namespace detail

/// Branching data for a normal subgroup: B[chi][alpha] by the classical
/// inner product over N, rounded under the residue gate.
inline BranchingData restrict_induce(const PermGroup& g, const PermGroup& n,
                                     const CharacterTable& tg,
                                     const CharacterTable& tn) {
  std::vector<std::size_t> n_idx;
  n_idx.reserve(n.size());
  for (const auto& p : n.elements) n_idx.push_back(g.index_of(p));
  if (!is_normal(g, n_idx))
    throw NormalityError("subgroup is not normal in the parent group");

  BranchingData bd;
  bd.labels_h = detail::irr_labels("chi", tg.irr_count());
  bd.labels_k = detail::irr_labels("alpha", tn.irr_count());
  bd.dims_h = tg.degrees;
  bd.dims_k = tn.degrees;
  bd.dim_h = static_cast<i64>(g.size());
  bd.dim_k = static_cast<i64>(n.size());
  bd.b.assign(tg.irr_count(), CharVec(tn.irr_count(), 0));
  for (std::size_t chi = 0; chi < tg.irr_count(); ++chi) {
    const auto f = restrict_values(g, values_per_element(g, tg, chi), n);
    const auto row = decompose(n, tn, f);
    bd.b[chi] = row;
  }
  bd.star_k = star_permutation(tn);
  return bd;
}

/// The dual fusion data of a group algebra: basis = group elements with
/// eps = 1, product = group multiplication, star = inversion.
inline FusionData build_dual_fusion(const PermGroup& g,
                                    const std::string& name) {
  const std::size_t n = g.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = cycle_string(g.elements[i]);
  std::vector<i64> dims(n, 1);
  std::vector<std::size_t> star(n);
  for (std::size_t i = 0; i < n; ++i) star[i] = g.inverse(i);
  std::vector<FusionTriple> triples;
  triples.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      triples.push_back({i, j, g.compose(i, j), 1});
  return FusionData(name, std::move(labels), std::move(dims),
                    g.identity_index(), std::move(star), triples);
}

/// Conjugation action of group elements on Irr(N): permutation matrices
/// found by matching conjugated value rows into the character table.
inline ConjugationAction build_conjugation(const FusionData& dual,
                                           const PermGroup& g,
                                           const PermGroup& n,
                                           const CharacterTable& tn) {
  if (dual.size() != g.size())
    throw InputError("dual fusion data does not match the group");
  const std::size_t nk = tn.irr_count();
  ConjugationAction act;
  act.parent = &dual;
  act.labels_k = detail::irr_labels("alpha", nk);
  act.dims_k = tn.degrees;
  act.mats.assign(g.size(), Mat64(nk, CharVec(nk, 0)));
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Perm& p = g.elements[e];
    const Perm p_inv = perm_inverse(p);
    // class map of x -> p^-1 x p on N
    std::vector<std::size_t> conj_class(tn.cls.reps.size());
    for (std::size_t c = 0; c < tn.cls.reps.size(); ++c) {
      const Perm conj = perm_compose(
          p_inv, perm_compose(n.elements[tn.cls.reps[c]], p));
      if (!n.contains(conj))
        throw NormalityError("conjugation leaves the subgroup");
      conj_class[c] = tn.cls.class_of[n.index_of(conj)];
    }
    for (std::size_t a = 0; a < nk; ++a) {
      std::size_t found = nk;
      for (std::size_t b = 0; b < nk; ++b) {
        double worst = 0.0;
        for (std::size_t c = 0; c < tn.cls.reps.size(); ++c)
          worst = std::max(worst, std::abs(tn.values[a][conj_class[c]] -
                                           tn.values[b][c]));
        if (worst <= kMatchTol) {
          if (found != nk)
            throw NumericError("conjugated character matches two rows");
          found = b;
        }
      }
      if (found == nk)
        throw NumericError("conjugated character matches no row");
      act.mats[e][a][found] = 1;
    }
  }
  return act;
}

enum class MackeyStatus { pass, fail, skip };

struct MackeyResult {
  MackeyStatus status = MackeyStatus::pass;
  std::string detail;
};

/// When the element-set product LK is a subgroup (LK = KL), inducing any
/// irreducible of K up to LK and restricting to L must match restricting
/// to the intersection and inducing up to L.  Skips when LK != KL.
inline MackeyResult check_mackey_unique_coset(const PermGroup& g,
                                              const PermGroup& l,
                                              const PermGroup& k) {
  std::set<Perm> lk, kl;
  for (const auto& a : l.elements)
    for (const auto& b : k.elements) {
      lk.insert(perm_compose(a, b));
      kl.insert(perm_compose(b, a));
    }
  if (lk != kl)
    return {MackeyStatus::skip, "LK and KL differ as element sets"};

  std::vector<Perm> lk_gens(lk.begin(), lk.end());
  const PermGroup p = generate(g.degree, lk_gens, g.size());
  std::vector<Perm> inter;
  for (const auto& q : l.elements)
    if (k.contains(q)) inter.push_back(q);
  const PermGroup i = generate(g.degree, inter, g.size());

  const CharacterTable tp = character_table(p);
  const CharacterTable tk = character_table(k);
  const CharacterTable tl = character_table(l);
  const CharacterTable ti = character_table(i);

  for (std::size_t alpha = 0; alpha < tk.irr_count(); ++alpha) {
    const auto a_vals = values_per_element(k, tk, alpha);
    const auto up = induce_values(p, k, a_vals);
    const auto down = restrict_values(p, up, l);
    const auto lhs = decompose(l, tl, down);

    const auto mid = restrict_values(k, a_vals, i);
    const auto up2 = induce_values(l, i, mid);
    const auto rhs = decompose(l, tl, up2);

    if (lhs != rhs)
      return {MackeyStatus::fail,
              "multiplicities differ for alpha" + std::to_string(alpha + 1)};
  }
  return {MackeyStatus::pass, ""};
}

}  // namespace hopf
