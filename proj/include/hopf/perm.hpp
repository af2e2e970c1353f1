#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

/// Permutation as a 0-based image array over {0, ..., degree-1}.
using Perm = std::vector<std::size_t>;

inline Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline bool is_perm(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

/// (a * b)(x) = a(b(x)): apply b first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

/// Cycle notation on 1-based points; "e" for the identity.
inline std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

// Finite permutation group enumerated by breadth-first closure over its
// generators.  Elements are stored sorted by lexicographic image array,
// which puts the identity first and fixes a deterministic indexing.
struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::map<Perm, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::size_t identity_index() const { return 0; }

  std::size_t index_of(const Perm& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw InputError("permutation not in group");
    return it->second;
  }
  bool contains(const Perm& p) const { return index.count(p) != 0; }

  std::size_t compose(std::size_t a, std::size_t b) const {
    return index_of(perm_compose(elements[a], elements[b]));
  }
  std::size_t inverse(std::size_t a) const {
    return index_of(perm_inverse(elements[a]));
  }
};

inline constexpr std::size_t kDefaultGroupOrderCap = 2000;

inline PermGroup generate(std::size_t degree, std::vector<Perm> generators,
                          std::size_t order_cap = kDefaultGroupOrderCap) {
  for (const auto& g : generators) {
    if (g.size() != degree)
      throw InputError("generator degree mismatch");
    if (!is_perm(g)) throw InputError("generator is not a permutation");
  }
  std::vector<Perm> frontier{perm_identity(degree)};
  std::map<Perm, bool> seen;
  seen[frontier[0]] = true;
  std::vector<Perm> all{frontier[0]};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Perm q = perm_compose(g, p);
        if (!seen.count(q)) {
          seen[q] = true;
          if (all.size() >= order_cap)
            throw InputError("group order exceeds cap of " +
                             std::to_string(order_cap));
          all.push_back(q);
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());

  PermGroup g;
  g.degree = degree;
  g.generators = std::move(generators);
  g.elements = std::move(all);
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    g.index[g.elements[i]] = i;
  return g;
}

/// Subgroup generated inside g; returns sorted element indices of g.
inline std::vector<std::size_t> subgroup_indices(
    const PermGroup& g, const std::vector<Perm>& sub_generators) {
  PermGroup h = generate(g.degree, sub_generators, g.size());
  std::vector<std::size_t> idx;
  idx.reserve(h.size());
  for (const auto& p : h.elements) idx.push_back(g.index_of(p));
  std::sort(idx.begin(), idx.end());
  return idx;
}

inline bool is_normal(const PermGroup& g,
                      const std::vector<std::size_t>& sub) {
  std::vector<bool> in(g.size(), false);
  for (std::size_t i : sub) in[i] = true;
  for (const auto& gen : g.generators) {
    const Perm inv = perm_inverse(gen);
    for (std::size_t i : sub) {
      const Perm conj = perm_compose(gen, perm_compose(g.elements[i], inv));
      if (!in[g.index_of(conj)]) return false;
    }
  }
  return true;
}

}  // namespace hopf
