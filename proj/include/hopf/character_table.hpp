#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/perm.hpp"

namespace hopf {

struct ConjClasses {
  std::vector<std::vector<std::size_t>> classes;  // element indices
  std::vector<std::size_t> class_of;              // element -> class
  std::vector<std::size_t> reps;                  // least element per class
};

inline ConjClasses conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.size();
  ConjClasses cc;
  cc.class_of.assign(n, n);
  std::vector<Perm> gen_invs;
  for (const auto& gen : g.generators) gen_invs.push_back(perm_inverse(gen));
  for (std::size_t start = 0; start < n; ++start) {
    if (cc.class_of[start] != n) continue;
    const std::size_t id = cc.classes.size();
    std::vector<std::size_t> orbit{start}, frontier{start};
    cc.class_of[start] = id;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t e : frontier)
        for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
          const Perm conj = perm_compose(
              g.generators[gi], perm_compose(g.elements[e], gen_invs[gi]));
          const std::size_t ce = g.index_of(conj);
          if (cc.class_of[ce] == n) {
            cc.class_of[ce] = id;
            orbit.push_back(ce);
            next.push_back(ce);
          }
        }
      frontier = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    cc.reps.push_back(orbit.front());
    cc.classes.push_back(std::move(orbit));
  }
  return cc;
}

// Complex character values per (irreducible, class).  Values are
// double-precision; everything exported downstream is integer
// multiplicities, gated by the hard checks in character_table().
struct CharacterTable {
  ConjClasses cls;
  std::vector<i64> degrees;
  std::vector<std::vector<std::complex<double>>> values;  // [irrep][class]

  std::size_t irr_count() const { return degrees.size(); }
  std::complex<double> at_element(std::size_t irrep, std::size_t elem) const {
    return values[irrep][cls.class_of[elem]];
  }
};

namespace detail {

/// M[j][k] = sum_i u_i a_{ij}^k, a random combination of the class-sum
/// left-multiplication matrices; its right eigenvectors are the class
/// multiplier vectors of the irreducible characters.
inline Eigen::MatrixXd class_algebra_combination(const PermGroup& g,
                                                 const ConjClasses& cc,
                                                 const std::vector<double>& u) {
  const std::size_t r = cc.classes.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const double ux = u[cc.class_of[x]];
    for (std::size_t y = 0; y < g.size(); ++y) {
      const std::size_t k = cc.class_of[g.compose(x, y)];
      m(cc.class_of[y], k) += ux / static_cast<double>(cc.classes[k].size());
    }
  }
  return m;
}

inline double snap6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace detail

inline constexpr double kOrthogonalityTol = 1e-8;
inline constexpr double kIntegralityTol = 1e-6;

/// Burnside/Dixon: simultaneous eigenvectors of the class-sum
/// multiplication matrices, recovered from a random real combination and
/// cross-checked against a second independent combination.  Hard-gated by
/// orthogonality and degree integrality; throws NumericError if the gates
/// cannot be met.
inline CharacterTable character_table(const PermGroup& g) {
  const ConjClasses cc = conjugacy_classes(g);
  const std::size_t r = cc.classes.size();
  const double n = static_cast<double>(g.size());

  for (unsigned attempt = 0; attempt < 8; ++attempt) {
    std::mt19937 rng(0x5eed + attempt);
    std::uniform_real_distribution<double> dist(0.25, 1.0);
    std::vector<double> u(r), u2(r);
    for (double& v : u) v = dist(rng);
    for (double& v : u2) v = dist(rng);

    const Eigen::MatrixXd m = detail::class_algebra_combination(g, cc, u);
    const Eigen::MatrixXd m2 = detail::class_algebra_combination(g, cc, u2);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) continue;

    bool ok = true;
    std::vector<std::vector<std::complex<double>>> omegas;
    for (std::size_t c = 0; c < r && ok; ++c) {
      Eigen::VectorXcd v = es.eigenvectors().col(c);
      if (std::abs(v(0)) < 1e-9 * v.norm()) {
        ok = false;
        break;
      }
      v /= v(0);
      // must be a simultaneous eigenvector: test against the second combination
      const Eigen::VectorXcd mv = m2 * v;
      std::complex<double> lambda2 = 0.0;
      for (std::size_t k = 0; k < r; ++k) lambda2 += u2[k] * v(k);

      // lambda2 = sum_i u2_i omega_i
      if ((mv - lambda2 * v).cwiseAbs().maxCoeff() > 1e-7 * (1.0 + v.cwiseAbs().maxCoeff()) * n) {
        ok = false;
        break;
      }
      omegas.emplace_back(v.data(), v.data() + r);
    }
    if (!ok) continue;

    CharacterTable table;
    table.cls = cc;
    std::vector<std::pair<i64, std::vector<std::complex<double>>>> rows;
    for (const auto& omega : omegas) {
      double denom = 0.0;
      for (std::size_t k = 0; k < r; ++k)
        denom += std::norm(omega[k]) / static_cast<double>(cc.classes[k].size());
      const double deg = std::sqrt(n / denom);
      if (std::abs(deg - std::round(deg)) > kIntegralityTol) {
        ok = false;
        break;
      }
      const i64 d = static_cast<i64>(std::llround(deg));
      std::vector<std::complex<double>> vals(r);
      for (std::size_t k = 0; k < r; ++k)
        vals[k] = deg * omega[k] / static_cast<double>(cc.classes[k].size());
      rows.emplace_back(d, std::move(vals));
    }
    if (!ok) continue;

    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      for (std::size_t k = 0; k < r; ++k) {
        const double ra = detail::snap6(a.second[k].real()),
                     rb = detail::snap6(b.second[k].real());
        if (ra != rb) return ra > rb;
        const double ia = detail::snap6(a.second[k].imag()),
                     ib = detail::snap6(b.second[k].imag());
        if (ia != ib) return ia > ib;
      }
      return false;
    });

    i64 degree_square_sum = 0;
    for (const auto& [d, vals] : rows) degree_square_sum += d * d;
    if (degree_square_sum != static_cast<i64>(g.size())) continue;

    // row orthogonality
    for (std::size_t a = 0; a < r && ok; ++a)
      for (std::size_t b = 0; b < r && ok; ++b) {
        std::complex<double> s = 0.0;
        for (std::size_t k = 0; k < r; ++k)
          s += static_cast<double>(cc.classes[k].size()) * rows[a].second[k] *
               std::conj(rows[b].second[k]);
        const double want = (a == b) ? n : 0.0;
        if (std::abs(s - want) > kOrthogonalityTol) ok = false;
      }
    if (!ok) continue;

    // the trivial character must be present and sorted first
    for (std::size_t k = 0; k < r && ok; ++k)
      if (std::abs(rows[0].second[k] - 1.0) > kOrthogonalityTol) ok = false;
    if (!ok) continue;

    for (auto& [d, vals] : rows) {
      table.degrees.push_back(d);
      table.values.push_back(std::move(vals));
    }
    return table;
  }
  throw NumericError(
      "character table construction failed its orthogonality/integrality "
      "gates");
}

}  // namespace hopf
