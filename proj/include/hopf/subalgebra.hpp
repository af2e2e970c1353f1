#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"

namespace hopf {

// A Hopf subalgebra presented by its set of dual irreducible characters:
// a subset of the basis containing the unit, closed under * and under
// products.  Always constructed through make_subalgebra, which validates.
struct Subalgebra {
  const FusionData* parent = nullptr;
  std::vector<std::size_t> members;  // sorted basis indices

  bool contains(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }
};

/// Throws ClosureError naming the witness if the member set is not a
/// valid subalgebra of f.
inline void check_subalgebra(const FusionData& f,
                             const std::vector<std::size_t>& members) {
  std::set<std::size_t> s(members.begin(), members.end());
  for (std::size_t i : members)
    if (i >= f.size()) throw InputError("subalgebra member out of range");
  if (!s.count(f.unit()))
    throw ClosureError("subalgebra does not contain the unit");
  for (std::size_t i : s)
    if (!s.count(f.star_of(i)))
      throw ClosureError("subalgebra not star-closed: " + f.label(i) +
                         "* = " + f.label(f.star_of(i)) + " missing");
  for (std::size_t i : s)
    for (std::size_t j : s)
      for (const auto& [k, m] : f.row(i, j))
        if (m > 0 && !s.count(k))
          throw ClosureError("subalgebra not product-closed: " + f.label(i) +
                             "*" + f.label(j) + " contains " + f.label(k));
}

inline Subalgebra make_subalgebra(const FusionData& f,
                                  std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  check_subalgebra(f, members);
  return Subalgebra{&f, std::move(members)};
}

inline Subalgebra trivial_subalgebra(const FusionData& f) {
  return Subalgebra{&f, {f.unit()}};
}

inline Subalgebra full_subalgebra(const FusionData& f) {
  std::vector<std::size_t> all(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) all[i] = i;
  return Subalgebra{&f, std::move(all)};
}

/// Subalgebra generated by a seed set: saturate under unit, star and
/// products until a fixpoint.
inline Subalgebra close(const FusionData& f, std::vector<std::size_t> seed) {
  std::set<std::size_t> s(seed.begin(), seed.end());
  s.insert(f.unit());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::size_t> next = s;
    for (std::size_t i : s) next.insert(f.star_of(i));
    for (std::size_t i : s)
      for (std::size_t j : s)
        for (const auto& [k, m] : f.row(i, j))
          if (m > 0) next.insert(k);
    if (next.size() != s.size()) {
      s.swap(next);
      grew = true;
    }
  }
  return Subalgebra{&f, std::vector<std::size_t>(s.begin(), s.end())};
}

inline void require_same_parent(const Subalgebra& k, const Subalgebra& l) {
  if (k.parent == nullptr || k.parent != l.parent)
    throw InputError("subalgebras live over different fusion data");
}

/// Integral: Lambda_K = sum_{d in K} eps(d) d.
inline CharVec integral(const Subalgebra& k) {
  const FusionData& f = *k.parent;
  CharVec v(f.size(), 0);
  for (std::size_t i : k.members) v[i] = f.dim(i);
  return v;
}

/// |K| = sum_{d in K} eps(d)^2.
inline i64 order(const Subalgebra& k) {
  const FusionData& f = *k.parent;
  i64 s = 0;
  for (std::size_t i : k.members)
    s = checked_add(s, checked_mul(f.dim(i), f.dim(i)));
  return s;
}

/// Member-set intersection; always a valid subalgebra.
inline Subalgebra intersect(const Subalgebra& k, const Subalgebra& l) {
  require_same_parent(k, l);
  std::vector<std::size_t> common;
  std::set_intersection(k.members.begin(), k.members.end(), l.members.begin(),
                        l.members.end(), std::back_inserter(common));
  return Subalgebra{k.parent, std::move(common)};
}

}  // namespace hopf
