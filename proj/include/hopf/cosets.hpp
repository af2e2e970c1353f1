#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hopf/check.hpp"
#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"
#include "hopf/subalgebra.hpp"

namespace hopf {

// The double-coset structure of Irr(H*) relative to (K, L): the partition
// into equivalence classes of c ~ d iff m(c, Lambda_K d Lambda_L) > 0,
// the class sums a_i = sum_{d in C_i} eps(d) d and the shared eigenvalue
// |K||L| of T = left mult by Lambda_K composed with right mult by Lambda_L.
// The class of the unit comes first; the rest are ordered by smallest
// member index.
struct CosetDecomposition {
  Subalgebra left, right;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<CharVec> class_sums;
  i64 eigenvalue = 0;

  std::size_t class_of(std::size_t d) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t m : classes[i])
        if (m == d) return i;
    throw InputError("basis index not in any class");
  }
};

/// Matrix of T in the irreducible basis: t_ij = m(d_j, Lambda_K d_i Lambda_L).
inline Mat64 build_T(const Subalgebra& k, const Subalgebra& l) {
  require_same_parent(k, l);
  const FusionData& f = *k.parent;
  const CharVec lk = integral(k), ll = integral(l);
  Mat64 t(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    t[i] = multiply(f, lk, multiply(f, basis_vec(f, i), ll));
  return t;
}

/// Equivalence classes of r_{K,L} as connected components of the support
/// graph of [T]; symmetry of [T] plus transitivity of the relation make
/// components and classes coincide.
inline CosetDecomposition classes(const Subalgebra& k, const Subalgebra& l) {
  require_same_parent(k, l);
  const FusionData& f = *k.parent;
  const std::size_t n = f.size();
  const Mat64 t = build_T(k, l);

  // union-find over nonzero entries
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] != 0) root[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  CosetDecomposition dec;
  dec.left = k;
  dec.right = l;
  const std::size_t unit_root = find(f.unit());
  dec.classes.push_back(groups[unit_root]);
  for (std::size_t r = 0; r < n; ++r)
    if (!groups[r].empty() && r != unit_root) dec.classes.push_back(groups[r]);
  std::sort(dec.classes.begin() + 1, dec.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (const auto& cls : dec.classes) {
    CharVec a(n, 0);
    for (std::size_t d : cls) a[d] = f.dim(d);
    dec.class_sums.push_back(std::move(a));
  }
  dec.eigenvalue = checked_mul(order(k), order(l));
  return dec;
}

/// |KL| = eps of the unit's class sum under r_{K,L}.
inline i64 product_order(const Subalgebra& k, const Subalgebra& l) {
  const CosetDecomposition dec = classes(k, l);
  return eps(*k.parent, dec.class_sums.front());
}

/// Exact check: Lambda_K a_i Lambda_L = |K||L| a_i for every class sum.
inline CheckResult verify_eigen(const CosetDecomposition& dec) {
  const FusionData& f = *dec.left.parent;
  const CharVec lk = integral(dec.left), ll = integral(dec.right);
  for (std::size_t i = 0; i < dec.class_sums.size(); ++i) {
    const CharVec lhs = multiply(f, lk, multiply(f, dec.class_sums[i], ll));
    if (lhs != scaled(dec.class_sums[i], dec.eigenvalue))
      return check_fail("class " + std::to_string(i) +
                        " is not an eigenvector of T");
  }
  return {};
}

/// Exact check of the scalar coset formula in cleared-denominator form:
/// eps(a_i) Lambda_K d Lambda_L = |K||L| eps(d) a_i, where d lies in class i.
inline CheckResult coset_scalar_identity(const CosetDecomposition& dec,
                                         std::size_t d) {
  const FusionData& f = *dec.left.parent;
  const std::size_t i = dec.class_of(d);
  const CharVec& a = dec.class_sums[i];
  const CharVec lhs = scaled(
      multiply(f, integral(dec.left), multiply(f, basis_vec(f, d), integral(dec.right))),
      eps(f, a));
  const CharVec rhs = scaled(a, checked_mul(dec.eigenvalue, f.dim(d)));
  if (lhs != rhs)
    return check_fail("scalar identity fails for d = " + f.label(d) +
                      " in class " + std::to_string(i));
  return {};
}

struct PowerIterationResult {
  double value = 0.0;
  std::vector<double> vec;
  bool converged = false;
  std::size_t iterations = 0;
};

/// Frobenius-Perron cross-check: plain power iteration on the nonnegative
/// matrix [T].  Advisory only; exact verification is verify_eigen.
/// Converges because every [T] built here has positive diagonal
/// (the unit lies in both K and L), so each block is primitive.
inline PowerIterationResult principal_eigen_numeric(const Mat64& t) {
  const std::size_t n = t.size();
  PowerIterationResult res;
  res.vec.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double prev = 0.0;
  for (std::size_t it = 0; it < 100000; ++it) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        next[i] += static_cast<double>(t[i][j]) * res.vec[j];
    double dot = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += next[i] * res.vec[i];  // Rayleigh quotient, |vec| = 1
      norm2 += next[i] * next[i];
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) res.vec[i] = next[i] / norm;
    res.value = dot;
    res.iterations = it + 1;
    if (it > 0 && std::abs(res.value - prev) < 1e-9) {
      res.converged = true;
      break;
    }
    prev = res.value;
  }
  return res;
}

}  // namespace hopf
