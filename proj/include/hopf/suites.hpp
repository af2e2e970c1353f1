#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/cosets.hpp"
#include "hopf/io.hpp"
#include "hopf/report.hpp"

namespace hopf {

namespace detail {

inline std::string violations_witness(const std::vector<Violation>& v) {
  if (v.empty()) return "";
  std::string w = v.front().axiom + " at " + v.front().witness;
  if (v.size() > 1)
    w += " (+" + std::to_string(v.size() - 1) + " more)";
  return w;
}

inline std::string set_string(const FusionData& f,
                              const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += f.label(idx[i]);
  }
  return s + "}";
}

}  // namespace detail

/// Fusion axioms, subalgebra closure and the bilinear-form identities.
inline Report suite_validate(const Instance& inst) {
  Report rep;
  rep.command = "validate";
  rep.instance = inst.fusion.name();
  const FusionData& f = inst.fusion;

  const auto violations = validate(f);
  rep.add_status("fusion-axioms",
                 violations.empty() ? Status::pass : Status::fail,
                 detail::violations_witness(violations));

  if (inst.subalgebras.empty()) {
    rep.add_status("subalgebra-closure", Status::skip,
                   "no subalgebras declared");
  } else {
    CheckResult res;
    for (const auto& [name, labs] : inst.subalgebras) {
      try {
        subalgebra_by_name(inst, name);
      } catch (const ClosureError& e) {
        res = check_fail(name + ": " + e.what());
        break;
      }
    }
    rep.add("subalgebra-closure", res);
  }

  {
    CheckResult res;
    const std::size_t n = f.size();
    for (std::size_t x = 0; x < n && res.pass; ++x)
      for (std::size_t y = 0; y < n && res.pass; ++y) {
        const CharVec ex = basis_vec(f, x), ey = basis_vec(f, y);
        if (m_form(f, ex, ey) != m_form(f, ey, ex) ||
            m_form(f, ex, ey) != m_form(f, star(f, ey), star(f, ex))) {
          res = check_fail("symmetry fails at (" + f.label(x) + ", " +
                           f.label(y) + ")");
          break;
        }
        for (std::size_t z = 0; z < n; ++z) {
          const CharVec ez = basis_vec(f, z);
          const CharVec xy = multiply(f, ex, ey);
          const CharVec yz = multiply(f, ey, ez);
          const bool a = m_form(f, xy, ez) ==
                         m_form(f, ey, multiply(f, star(f, ex), ez));
          const bool b = m_form(f, ex, yz) ==
                         m_form(f, star(f, ey),
                                multiply(f, ez, star(f, ex)));
          if (!a || !b) {
            res = check_fail("adjunction fails at (" + f.label(x) + ", " +
                             f.label(y) + ", " + f.label(z) + ")");
            break;
          }
        }
      }
    rep.add("m-form-identities", res);
  }

  {
    CheckResult res;
    for (std::size_t x = 0; x < f.size() && res.pass; ++x)
      for (std::size_t y = 0; y < f.size(); ++y) {
        const CharVec prod = multiply(f, basis_vec(f, x), basis_vec(f, y));
        if (eps(f, prod) != checked_mul(f.dim(x), f.dim(y))) {
          res = check_fail("eps not multiplicative at (" + f.label(x) + ", " +
                           f.label(y) + ")");
          break;
        }
      }
    rep.add("eps-homomorphism", res);
  }
  return rep;
}

/// The full double-coset battery for one (left, right) pair.
inline Report suite_cosets(const Instance& inst, const std::string& left_name,
                           const std::string& right_name) {
  Report rep;
  rep.command = "cosets";
  rep.instance = inst.fusion.name();
  const FusionData& f = inst.fusion;
  const Subalgebra k = subalgebra_by_name(inst, left_name);
  const Subalgebra l = subalgebra_by_name(inst, right_name);

  const Mat64 t = build_T(k, l);
  const CosetDecomposition dec = classes(k, l);

  rep.extra["left"] = left_name;
  rep.extra["right"] = right_name;
  rep.extra["eigenvalue"] = dec.eigenvalue;
  rep.extra["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < dec.classes.size(); ++i) {
    std::ostringstream line;
    line << "a_" << (i + 1) << " = " << detail::set_string(f, dec.classes[i])
         << "  eps=" << eps(f, dec.class_sums[i]);
    rep.extra["classes"].push_back(line.str());
  }

  {
    CheckResult res;
    for (std::size_t i = 0; i < t.size() && res.pass; ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t[i][j] != t[j][i]) {
          res = check_fail("[T] not symmetric at (" + f.label(i) + ", " +
                           f.label(j) + ")");
          break;
        }
    rep.add("t-symmetric", res);
  }

  rep.add("eigen-exact", verify_eigen(dec));

  {
    CheckResult res;
    for (std::size_t d = 0; d < f.size(); ++d) {
      const CheckResult r = coset_scalar_identity(dec, d);
      if (!r.pass) {
        res = r;
        break;
      }
    }
    rep.add("scalar-identity", res);
  }

  {
    const i64 order_h = order(full_subalgebra(f));
    const i64 lcount = static_cast<i64>(dec.classes.size());
    const bool ok = checked_mul(lcount, order(k)) <= order_h &&
                    checked_mul(lcount, order(l)) <= order_h;
    rep.add_status("class-count-bound", ok ? Status::pass : Status::fail,
                   std::to_string(lcount) + " classes, |H| = " +
                       std::to_string(order_h));
  }

  {
    const PowerIterationResult pi = principal_eigen_numeric(t);
    const double want = static_cast<double>(dec.eigenvalue);
    if (!pi.converged) {
      rep.add_status("fp-numeric", Status::skip,
                     "power iteration did not converge");
    } else if (std::abs(pi.value - want) > 1e-6 * want) {
      rep.add_status("fp-numeric", Status::fail,
                     "principal value " + std::to_string(pi.value) +
                         " vs " + std::to_string(dec.eigenvalue));
    } else {
      rep.add_status("fp-numeric", Status::pass);
    }
  }
  return rep;
}

namespace detail {

inline const std::vector<std::string>& clifford_check_names() {
  static const std::vector<std::string> names = {
      "branching-valid",     "proportionality",   "restriction-formula",
      "induction-formula",   "trivial-induction", "class-dimensions"};
  return names;
}

inline const std::vector<std::string>& conjugation_check_names() {
  static const std::vector<std::string> names = {
      "action-valid",     "composition",      "star",
      "coset-invariance", "induced-equality", "constituents"};
  return names;
}

}  // namespace detail

/// Restriction/induction battery over the instance's clifford block.
inline Report suite_clifford(const Instance& inst) {
  Report rep;
  rep.command = "clifford";
  rep.instance = inst.fusion.name();
  if (!inst.clifford) {
    for (const auto& name : detail::clifford_check_names())
      rep.add_status(name, Status::skip, "no clifford block");
    return rep;
  }
  const BranchingData& bd = *inst.clifford;

  const auto violations = validate_branching(bd);
  rep.add_status("branching-valid",
                 violations.empty() ? Status::pass : Status::fail,
                 detail::violations_witness(violations));
  if (!violations.empty()) {
    for (std::size_t i = 1; i < detail::clifford_check_names().size(); ++i)
      rep.add_status(detail::clifford_check_names()[i], Status::skip,
                     "branching data invalid");
    return rep;
  }

  const RestrictionPartition part = equiv_classes(bd);
  rep.extra["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    std::ostringstream line;
    line << "C_" << (i + 1) << " = {";
    for (std::size_t m = 0; m < part.classes[i].size(); ++m)
      line << (m ? ", " : "") << bd.labels_h[part.classes[i][m]];
    line << "}  A_" << (i + 1) << " = {";
    for (std::size_t m = 0; m < part.blocks[i].size(); ++m)
      line << (m ? ", " : "") << bd.labels_k[part.blocks[i][m]];
    line << "}";
    rep.extra["classes"].push_back(line.str());
  }

  rep.add("proportionality", check_proportionality(bd, part));

  {
    CheckResult res;
    try {
      for (std::size_t chi = 0; chi < bd.labels_h.size(); ++chi)
        restrict_formula(bd, part, chi);
    } catch (const TheoremViolation& e) {
      res = check_fail(e.what());
    }
    rep.add("restriction-formula", res);
  }
  {
    CheckResult res;
    try {
      for (std::size_t alpha = 0; alpha < bd.labels_k.size(); ++alpha)
        check_induction_formula(bd, part, alpha);
    } catch (const TheoremViolation& e) {
      res = check_fail(e.what());
    }
    rep.add("induction-formula", res);
  }
  rep.add("trivial-induction", check_trivial_induction(bd));
  rep.add("class-dimensions", check_class_dimensions(bd, part));
  return rep;
}

/// Conjugation battery over the instance's conjugation block.
inline Report suite_conjugation(const Instance& inst) {
  Report rep;
  rep.command = "conjugate";
  rep.instance = inst.fusion.name();
  if (!inst.conjugation) {
    for (const auto& name : detail::conjugation_check_names())
      rep.add_status(name, Status::skip, "no conjugation block");
    return rep;
  }
  const ConjugationAction act = bind_conjugation(inst);
  const BranchingData& bd = *inst.clifford;

  const auto violations = validate_action(act);
  rep.add_status("action-valid",
                 violations.empty() ? Status::pass : Status::fail,
                 detail::violations_witness(violations));
  if (!violations.empty()) {
    for (std::size_t i = 1; i < detail::conjugation_check_names().size(); ++i)
      rep.add_status(detail::conjugation_check_names()[i], Status::skip,
                     "action invalid");
    return rep;
  }

  rep.add("composition", check_composition(act));

  if (bd.star_k.empty())
    rep.add_status("star", Status::skip, "no star_K data");
  else
    rep.add("star", check_star(act, bd.star_k));

  if (inst.clifford_subalgebra.empty()) {
    rep.add_status("coset-invariance", Status::skip,
                   "no subalgebra linked to the clifford block");
  } else {
    const Subalgebra k_dual =
        subalgebra_by_name(inst, inst.clifford_subalgebra);
    const CosetDecomposition dec =
        classes(trivial_subalgebra(inst.fusion), k_dual);
    rep.add("coset-invariance", check_coset_invariance(act, dec));
  }

  rep.add("induced-equality", check_induced_equality(act, bd));
  rep.add("constituents", check_constituents(act, bd));
  return rep;
}

/// Everything applicable to the blocks present in the instance.
inline Report suite_check_all(const Instance& inst) {
  Report rep;
  rep.command = "check-all";
  rep.instance = inst.fusion.name();

  const Report val = suite_validate(inst);
  for (const auto& c : val.checks)
    rep.add_status("validate:" + c.name, c.status, c.witness);

  std::set<std::string> names{"trivial", "full"};
  for (const auto& [name, labs] : inst.subalgebras) names.insert(name);
  const bool fusion_ok = val.checks.front().status == Status::pass;
  for (const auto& a : names)
    for (const auto& b : names) {
      const std::string check_name = "cosets[" + a + "," + b + "]";
      if (!fusion_ok) {
        rep.add_status(check_name, Status::skip, "fusion data invalid");
        continue;
      }
      Report sub = suite_cosets(inst, a, b);
      Status worst = Status::pass;
      std::string witness;
      for (const auto& c : sub.checks)
        if (c.status == Status::fail) {
          worst = Status::fail;
          witness = c.name + ": " + c.witness;
          break;
        }
      rep.add_status(check_name, worst, witness);
    }

  const Report cl = suite_clifford(inst);
  for (const auto& c : cl.checks)
    rep.add_status("clifford:" + c.name, c.status, c.witness);
  const Report cj = suite_conjugation(inst);
  for (const auto& c : cj.checks)
    rep.add_status("conjugate:" + c.name, c.status, c.witness);
  return rep;
}

/// Builds and emits a full instance from a group spec; reports each
/// construction gate.
inline Report suite_group(const GroupSpec& spec, const std::string& out_path,
                          const std::string& normal_name) {
  Report rep;
  rep.command = "group";
  rep.instance = spec.name;
  PermGroup g = generate(spec.degree, spec.generators);
  rep.add_status("group-order", Status::pass,
                 "order " + std::to_string(g.size()));

  {
    CheckResult res;
    try {
      character_table(g);
      for (const auto& [name, gens] : spec.subgroups)
        subgroup_indices(g, gens);
    } catch (const NumericError& e) {
      res = check_fail(e.what());
    }
    rep.add("character-tables", res);
  }

  if (normal_name.empty()) {
    rep.add_status("normality", Status::skip, "no --normal requested");
  } else {
    auto it = spec.subgroups.find(normal_name);
    if (it == spec.subgroups.end())
      throw InputError("unknown subgroup: " + normal_name);
    const auto idx = subgroup_indices(g, it->second);
    if (!is_normal(g, idx)) {
      rep.add_status("normality", Status::fail,
                     normal_name + " is not normal in " + spec.name);
      rep.add_status("emitted-validates", Status::skip,
                     "nothing emitted");
      return rep;
    }
    rep.add_status("normality", Status::pass);
  }

  const Instance inst = build_group_instance(spec, normal_name);
  {
    CheckResult res;
    const auto violations = validate(inst.fusion);
    if (!violations.empty())
      res = check_fail(detail::violations_witness(violations));
    if (res.pass && inst.clifford) {
      const auto bv = validate_branching(*inst.clifford);
      if (!bv.empty()) res = check_fail(detail::violations_witness(bv));
    }
    rep.add("emitted-validates", res);
  }
  if (rep.all_pass() && !out_path.empty()) {
    save_instance(inst, out_path);
    rep.extra["emitted"] = out_path;
  }
  return rep;
}

}  // namespace hopf
