#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopf/check.hpp"
#include "hopf/errors.hpp"

namespace hopf {

/// Integer coefficient vector over a fixed basis.  Coefficients may be
/// negative (virtual characters); operations that need honest characters
/// reject negative entries at their own level.
using CharVec = std::vector<i64>;

using Mat64 = std::vector<std::vector<i64>>;

struct FusionTriple {
  std::size_t i, j, k;
  i64 mult;
};

// A based ring: ordered basis with dimensions eps(d_i), a unit, a duality
// involution * and nonnegative integer structure constants N_{ij}^k.
// Construction checks structure only (shapes, ranges, no duplicates);
// the ring axioms are checked by validate(), which reports and never throws.
// Immutable after construction, safe to share read-only across threads.
class FusionData {
 public:
  FusionData(std::string name, std::vector<std::string> labels,
             std::vector<i64> dims, std::size_t unit,
             std::vector<std::size_t> star,
             const std::vector<FusionTriple>& triples)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        dims_(std::move(dims)),
        unit_(unit),
        star_(std::move(star)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InputError("fusion basis is empty");
    if (dims_.size() != n) throw InputError("dims/labels size mismatch");
    if (star_.size() != n) throw InputError("star/labels size mismatch");
    if (unit_ >= n) throw InputError("unit index out of range");
    for (std::size_t i = 0; i < n; ++i) {
      if (labels_[i].empty()) throw InputError("empty basis label");
      if (dims_[i] <= 0)
        throw InputError("nonpositive dimension for label " + labels_[i]);
      if (star_[i] >= n) throw InputError("star image out of range");
    }
    {
      std::vector<std::string> sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate basis label");
      std::vector<bool> hit(n, false);
      for (std::size_t s : star_) {
        if (hit[s]) throw InputError("star is not a permutation");
        hit[s] = true;
      }
    }
    rows_.assign(n * n, {});
    for (const auto& t : triples) {
      if (t.i >= n || t.j >= n || t.k >= n)
        throw InputError("fusion triple index out of range");
      if (t.mult < 0) throw InputError("negative structure constant");
      if (t.mult == 0) continue;
      auto& row = rows_[t.i * n + t.j];
      for (const auto& [k, m] : row)
        if (k == t.k) throw InputError("duplicate fusion triple");
      row.emplace_back(t.k, t.mult);
    }
    for (auto& row : rows_)
      std::sort(row.begin(), row.end());
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  i64 dim(std::size_t i) const { return dims_[i]; }
  std::size_t unit() const { return unit_; }
  std::size_t star_of(std::size_t i) const { return star_[i]; }
  const std::vector<std::size_t>& star_perm() const { return star_; }

  /// Nonzero terms of d_i d_j as sorted (k, N_{ij}^k) pairs.
  const std::vector<std::pair<std::size_t, i64>>& row(std::size_t i,
                                                      std::size_t j) const {
    return rows_[i * size() + j];
  }

  i64 structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [kk, m] : row(i, j))
      if (kk == k) return m;
    return 0;
  }

  /// Index of a label, or throws.
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw InputError("unknown basis label: " + label);
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<i64> dims_;
  std::size_t unit_;
  std::vector<std::size_t> star_;
  std::vector<std::vector<std::pair<std::size_t, i64>>> rows_;
};

inline CharVec basis_vec(const FusionData& f, std::size_t i) {
  CharVec v(f.size(), 0);
  v.at(i) = 1;
  return v;
}

inline void require_over(const FusionData& f, const CharVec& x) {
  if (x.size() != f.size())
    throw InputError("coefficient vector does not match basis size");
}

/// Bilinear extension of the basis products; exact, throws OverflowError.
inline CharVec multiply(const FusionData& f, const CharVec& x,
                        const CharVec& y) {
  require_over(f, x);
  require_over(f, y);
  CharVec r(f.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const i64 c = checked_mul(x[i], y[j]);
      for (const auto& [k, m] : f.row(i, j))
        r[k] = checked_add(r[k], checked_mul(c, m));
    }
  }
  return r;
}

/// m(x, y) = sum_i x_i y_i: the bilinear form in the orthonormal
/// irreducible-character basis.
inline i64 m_form(const FusionData& f, const CharVec& x, const CharVec& y) {
  require_over(f, x);
  require_over(f, y);
  i64 s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

/// The duality involution, coefficient permutation by *.
inline CharVec star(const FusionData& f, const CharVec& x) {
  require_over(f, x);
  CharVec r(f.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    r[f.star_of(i)] = x[i];
  return r;
}

/// eps(x) = sum_i x_i eps(d_i), the dimension count.
inline i64 eps(const FusionData& f, const CharVec& x) {
  require_over(f, x);
  i64 s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s = checked_add(s, checked_mul(x[i], f.dim(i)));
  return s;
}

inline CharVec scaled(const CharVec& x, i64 c) {
  CharVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_mul(x[i], c);
  return r;
}

inline CharVec add(const CharVec& x, const CharVec& y) {
  CharVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], y[i]);
  return r;
}

namespace detail {

inline std::string pair_witness(const FusionData& f, std::size_t i,
                                std::size_t j) {
  return "(" + f.label(i) + ", " + f.label(j) + ")";
}

}  // namespace detail

/// Checks every based-ring axiom and reports violations; never throws.
inline std::vector<Violation> validate(const FusionData& f) {
  std::vector<Violation> out;
  const std::size_t n = f.size();
  const std::size_t e = f.unit();

  // unit is a two-sided identity
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const i64 want = (j == k) ? 1 : 0;
      if (f.structure_constant(e, j, k) != want)
        out.push_back({"unit-identity",
                       "N(1," + f.label(j) + ")^" + f.label(k) + " != " +
                           std::to_string(want)});
      if (f.structure_constant(j, e, k) != want)
        out.push_back({"unit-identity",
                       "N(" + f.label(j) + ",1)^" + f.label(k) + " != " +
                           std::to_string(want)});
    }
  }

  // star is an involution fixing the unit
  if (f.star_of(e) != e)
    out.push_back({"star-involution", "star does not fix the unit"});
  for (std::size_t i = 0; i < n; ++i)
    if (f.star_of(f.star_of(i)) != i) {
      out.push_back({"star-involution", "star^2 moves " + f.label(i)});
      break;
    }

  // dimension homomorphism
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        i64 s = 0;
        for (const auto& [k, m] : f.row(i, j))
          s = checked_add(s, checked_mul(m, f.dim(k)));
        if (s != checked_mul(f.dim(i), f.dim(j)))
          out.push_back(
              {"dimension-homomorphism", detail::pair_witness(f, i, j)});
      } catch (const OverflowError&) {
        out.push_back({"overflow", detail::pair_witness(f, i, j)});
      }
    }

  // duality: N_{ij}^unit = delta_{j,i*}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const i64 want = (j == f.star_of(i)) ? 1 : 0;
      if (f.structure_constant(i, j, e) != want)
        out.push_back({"duality", detail::pair_witness(f, i, j)});
    }

  // associativity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        try {
          CharVec lhs(n, 0), rhs(n, 0);
          for (const auto& [p, m] : f.row(i, j))
            for (const auto& [q, m2] : f.row(p, k))
              lhs[q] = checked_add(lhs[q], checked_mul(m, m2));
          for (const auto& [p, m] : f.row(j, k))
            for (const auto& [q, m2] : f.row(i, p))
              rhs[q] = checked_add(rhs[q], checked_mul(m, m2));
          if (lhs != rhs)
            out.push_back({"associativity",
                           "(" + f.label(i) + ", " + f.label(j) + ", " +
                               f.label(k) + ")"});
        } catch (const OverflowError&) {
          out.push_back({"overflow",
                         "(" + f.label(i) + ", " + f.label(j) + ", " +
                             f.label(k) + ")"});
        }
      }

  return out;
}

}  // namespace hopf
