#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopf/clifford.hpp"
#include "hopf/conjugation.hpp"
#include "hopf/errors.hpp"
#include "hopf/fusion.hpp"
#include "hopf/group_oracle.hpp"
#include "hopf/subalgebra.hpp"

namespace hopf {

using nlohmann::json;

// One instance file: fusion data plus named subalgebras and the optional
// clifford / conjugation blocks.  Conjugation matrices are stored aligned
// to the fusion basis order; bind_conjugation() turns them into an action
// tied to this instance's fusion data.
struct Instance {
  FusionData fusion;
  std::string comment;
  std::map<std::string, std::vector<std::string>> subalgebras;
  std::optional<BranchingData> clifford;
  std::string clifford_subalgebra;    // named subalgebra the blocks refer to
  std::optional<std::vector<Mat64>> conjugation;
};

namespace detail {

inline i64 get_int(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return j.get<i64>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX))
      throw ParseError(ctx + ": value does not fit in 64-bit signed integer");
    return static_cast<i64>(u);
  }
  throw ParseError(ctx + ": expected a 64-bit integer");
}

inline std::string get_str(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a string");
  return j.get<std::string>();
}

inline const json& need(const json& j, const std::string& key,
                        const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

}  // namespace detail

inline Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  const std::string name =
      j.contains("name") ? detail::get_str(j["name"], "name") : "";

  const json& jbasis = detail::need(j, "basis", "instance");
  if (!jbasis.is_array() || jbasis.empty())
    throw ParseError("basis: expected a nonempty array");
  std::vector<std::string> labels;
  std::vector<i64> dims;
  for (const auto& e : jbasis) {
    labels.push_back(detail::get_str(detail::need(e, "label", "basis"), "basis label"));
    dims.push_back(detail::get_int(detail::need(e, "dim", "basis"), "basis dim"));
  }
  auto index_of = [&](const std::string& lab, const std::string& ctx) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lab) return i;
    throw ParseError(ctx + ": unknown label '" + lab + "'");
  };

  const std::size_t unit =
      index_of(detail::get_str(detail::need(j, "unit", "instance"), "unit"), "unit");

  std::vector<std::size_t> star_perm(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) star_perm[i] = i;
  if (j.contains("star")) {
    if (!j["star"].is_object()) throw ParseError("star: expected an object");
    for (const auto& [from, to] : j["star"].items())
      star_perm[index_of(from, "star")] =
          index_of(detail::get_str(to, "star"), "star");
  }

  std::vector<FusionTriple> triples;
  if (j.contains("fusion")) {
    if (!j["fusion"].is_array()) throw ParseError("fusion: expected an array");
    for (const auto& t : j["fusion"]) {
      if (!t.is_array() || t.size() != 4)
        throw ParseError("fusion: each entry is [labelA, labelB, labelC, mult]");
      triples.push_back({index_of(detail::get_str(t[0], "fusion"), "fusion"),
                         index_of(detail::get_str(t[1], "fusion"), "fusion"),
                         index_of(detail::get_str(t[2], "fusion"), "fusion"),
                         detail::get_int(t[3], "fusion mult")});
      if (triples.back().mult < 0)
        throw ParseError("fusion: negative multiplicity");
    }
  }

  Instance inst{FusionData(name, labels, dims, unit, star_perm, triples),
                {}, {}, {}, "", {}};
  if (j.contains("comment"))
    inst.comment = detail::get_str(j["comment"], "comment");

  if (j.contains("subalgebras")) {
    if (!j["subalgebras"].is_object())
      throw ParseError("subalgebras: expected an object");
    for (const auto& [sname, members] : j["subalgebras"].items()) {
      if (!members.is_array())
        throw ParseError("subalgebras." + sname + ": expected an array");
      std::vector<std::string> labs;
      for (const auto& m : members) {
        labs.push_back(detail::get_str(m, "subalgebras." + sname));
        index_of(labs.back(), "subalgebras." + sname);
      }
      inst.subalgebras[sname] = std::move(labs);
    }
  }

  if (j.contains("clifford")) {
    const json& c = j["clifford"];
    BranchingData bd;
    bd.dim_h = detail::get_int(detail::need(c, "dimH", "clifford"), "dimH");
    bd.dim_k = detail::get_int(detail::need(c, "dimK", "clifford"), "dimK");
    for (const auto& e : detail::need(c, "irr_H", "clifford")) {
      bd.labels_h.push_back(
          detail::get_str(detail::need(e, "label", "irr_H"), "irr_H label"));
      bd.dims_h.push_back(
          detail::get_int(detail::need(e, "dim", "irr_H"), "irr_H dim"));
    }
    for (const auto& e : detail::need(c, "irr_K", "clifford")) {
      bd.labels_k.push_back(
          detail::get_str(detail::need(e, "label", "irr_K"), "irr_K label"));
      bd.dims_k.push_back(
          detail::get_int(detail::need(e, "dim", "irr_K"), "irr_K dim"));
    }
    bd.b.assign(bd.labels_h.size(), CharVec(bd.labels_k.size(), 0));
    for (const auto& t : detail::need(c, "branching", "clifford")) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("branching: each entry is [chi, alpha, mult]");
      const std::size_t chi = bd.h_index(detail::get_str(t[0], "branching"));
      const std::size_t alpha = bd.k_index(detail::get_str(t[1], "branching"));
      bd.b[chi][alpha] = detail::get_int(t[2], "branching mult");
    }
    if (c.contains("star_K")) {
      bd.star_k.assign(bd.labels_k.size(), 0);
      for (std::size_t i = 0; i < bd.star_k.size(); ++i) bd.star_k[i] = i;
      for (const auto& [from, to] : c["star_K"].items())
        bd.star_k[bd.k_index(from)] =
            bd.k_index(detail::get_str(to, "star_K"));
    }
    if (c.contains("subalgebra")) {
      inst.clifford_subalgebra =
          detail::get_str(c["subalgebra"], "clifford.subalgebra");
      if (!inst.subalgebras.count(inst.clifford_subalgebra))
        throw ParseError("clifford.subalgebra: unknown subalgebra '" +
                         inst.clifford_subalgebra + "'");
    }
    inst.clifford = std::move(bd);
  }

  if (j.contains("conjugation")) {
    if (!inst.clifford)
      throw ParseError("conjugation block requires a clifford block");
    if (!j["conjugation"].is_object())
      throw ParseError("conjugation: expected an object");
    const std::size_t nk = inst.clifford->labels_k.size();
    std::vector<Mat64> mats(inst.fusion.size(), Mat64(nk, CharVec(nk, 0)));
    std::vector<bool> present(inst.fusion.size(), false);
    for (const auto& [dlabel, rows] : j["conjugation"].items()) {
      const std::size_t d = inst.fusion.index_of(dlabel);
      present[d] = true;
      for (const auto& t : rows) {
        if (!t.is_array() || t.size() != 3)
          throw ParseError("conjugation: each entry is [alpha, beta, mult]");
        const std::size_t a =
            inst.clifford->k_index(detail::get_str(t[0], "conjugation"));
        const std::size_t b =
            inst.clifford->k_index(detail::get_str(t[1], "conjugation"));
        mats[d][a][b] = detail::get_int(t[2], "conjugation mult");
      }
    }
    for (std::size_t d = 0; d < present.size(); ++d)
      if (!present[d])
        throw ParseError("conjugation: missing matrix for dual character '" +
                         inst.fusion.label(d) + "'");
    inst.conjugation = std::move(mats);
  }
  return inst;
}

inline json serialize_instance(const Instance& inst) {
  const FusionData& f = inst.fusion;
  json j;
  j["name"] = f.name();
  if (!inst.comment.empty()) j["comment"] = inst.comment;
  j["basis"] = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    j["basis"].push_back({{"label", f.label(i)}, {"dim", f.dim(i)}});
  j["unit"] = f.label(f.unit());
  j["star"] = json::object();
  for (std::size_t i = 0; i < f.size(); ++i)
    j["star"][f.label(i)] = f.label(f.star_of(i));
  j["fusion"] = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < f.size(); ++k)
      for (const auto& [kk, m] : f.row(i, k))
        j["fusion"].push_back(
            json::array({f.label(i), f.label(k), f.label(kk), m}));
  if (!inst.subalgebras.empty()) {
    j["subalgebras"] = json::object();
    for (const auto& [name, labs] : inst.subalgebras) {
      std::vector<std::string> sorted = labs;
      std::sort(sorted.begin(), sorted.end(),
                [&](const std::string& a, const std::string& b) {
                  return f.index_of(a) < f.index_of(b);
                });
      j["subalgebras"][name] = sorted;
    }
  }
  if (inst.clifford) {
    const BranchingData& bd = *inst.clifford;
    json c;
    c["dimH"] = bd.dim_h;
    c["dimK"] = bd.dim_k;
    c["irr_H"] = json::array();
    for (std::size_t i = 0; i < bd.labels_h.size(); ++i)
      c["irr_H"].push_back({{"label", bd.labels_h[i]}, {"dim", bd.dims_h[i]}});
    c["irr_K"] = json::array();
    for (std::size_t i = 0; i < bd.labels_k.size(); ++i)
      c["irr_K"].push_back({{"label", bd.labels_k[i]}, {"dim", bd.dims_k[i]}});
    c["branching"] = json::array();
    for (std::size_t chi = 0; chi < bd.labels_h.size(); ++chi)
      for (std::size_t alpha = 0; alpha < bd.labels_k.size(); ++alpha)
        if (bd.b[chi][alpha] != 0)
          c["branching"].push_back(json::array(
              {bd.labels_h[chi], bd.labels_k[alpha], bd.b[chi][alpha]}));
    if (!bd.star_k.empty()) {
      c["star_K"] = json::object();
      for (std::size_t i = 0; i < bd.star_k.size(); ++i)
        c["star_K"][bd.labels_k[i]] = bd.labels_k[bd.star_k[i]];
    }
    if (!inst.clifford_subalgebra.empty())
      c["subalgebra"] = inst.clifford_subalgebra;
    j["clifford"] = std::move(c);
  }
  if (inst.conjugation) {
    const BranchingData& bd = *inst.clifford;
    json c = json::object();
    for (std::size_t d = 0; d < f.size(); ++d) {
      json rows = json::array();
      for (std::size_t a = 0; a < bd.labels_k.size(); ++a)
        for (std::size_t b = 0; b < bd.labels_k.size(); ++b)
          if ((*inst.conjugation)[d][a][b] != 0)
            rows.push_back(json::array({bd.labels_k[a], bd.labels_k[b],
                                        (*inst.conjugation)[d][a][b]}));
      c[f.label(d)] = std::move(rows);
    }
    j["conjugation"] = std::move(c);
  }
  return j;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error in ") + path + ": " +
                     e.what());
  }
  return parse_instance(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << serialize_instance(inst).dump(2) << "\n";
}

/// Resolves a named subalgebra; "trivial" is reserved for {unit} unless the
/// file defines its own.
inline Subalgebra subalgebra_by_name(const Instance& inst,
                                     const std::string& name) {
  auto it = inst.subalgebras.find(name);
  if (it == inst.subalgebras.end()) {
    if (name == "trivial") return trivial_subalgebra(inst.fusion);
    if (name == "full") return full_subalgebra(inst.fusion);
    throw InputError("unknown subalgebra: " + name);
  }
  std::vector<std::size_t> idx;
  for (const auto& lab : it->second) idx.push_back(inst.fusion.index_of(lab));
  return make_subalgebra(inst.fusion, std::move(idx));
}

inline ConjugationAction bind_conjugation(const Instance& inst) {
  if (!inst.conjugation || !inst.clifford)
    throw InputError("instance has no conjugation block");
  ConjugationAction act;
  act.parent = &inst.fusion;
  act.labels_k = inst.clifford->labels_k;
  act.dims_k = inst.clifford->dims_k;
  act.mats = *inst.conjugation;
  return act;
}

// ---------------------------------------------------------------------------
// group-spec files

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::map<std::string, std::vector<Perm>> subgroups;
};

namespace detail {

inline Perm parse_images(const json& j, std::size_t degree,
                         const std::string& ctx) {
  if (!j.is_array() || j.size() != degree)
    throw ParseError(ctx + ": expected an image array of length " +
                     std::to_string(degree));
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const i64 v = get_int(j[i], ctx);
    if (v < 1 || static_cast<std::size_t>(v) > degree)
      throw ParseError(ctx + ": image out of range");
    p[i] = static_cast<std::size_t>(v - 1);
  }
  if (!is_perm(p)) throw ParseError(ctx + ": not a permutation");
  return p;
}

}  // namespace detail

inline GroupSpec parse_group_spec(const json& j) {
  GroupSpec spec;
  if (!j.is_object()) throw ParseError("group spec: expected a JSON object");
  spec.name = j.contains("name") ? detail::get_str(j["name"], "name") : "group";
  spec.degree = static_cast<std::size_t>(
      detail::get_int(detail::need(j, "degree", "group spec"), "degree"));
  if (spec.degree == 0) throw ParseError("degree must be positive");
  for (const auto& g : detail::need(j, "generators", "group spec"))
    spec.generators.push_back(
        detail::parse_images(g, spec.degree, "generators"));
  if (j.contains("subgroups")) {
    for (const auto& [name, gens] : j["subgroups"].items()) {
      std::vector<Perm> perms;
      for (const auto& g : gens)
        perms.push_back(
            detail::parse_images(g, spec.degree, "subgroups." + name));
      spec.subgroups[name] = std::move(perms);
    }
  }
  return spec;
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error in ") + path + ": " +
                     e.what());
  }
  return parse_group_spec(j);
}

/// Builds the full fusion instance of a group spec: dual fusion data, one
/// subalgebra per named subgroup, and clifford/conjugation blocks for the
/// named normal subgroup when requested.
inline Instance build_group_instance(const GroupSpec& spec,
                                     const std::string& normal_name = "") {
  const PermGroup g = generate(spec.degree, spec.generators);
  FusionData dual = build_dual_fusion(g, spec.name);

  Instance inst{std::move(dual), {}, {}, {}, "", {}};
  for (const auto& [name, gens] : spec.subgroups) {
    const auto idx = subgroup_indices(g, gens);
    std::vector<std::string> labs;
    for (std::size_t i : idx) labs.push_back(inst.fusion.label(i));
    inst.subalgebras[name] = std::move(labs);
  }

  if (!normal_name.empty()) {
    auto it = spec.subgroups.find(normal_name);
    if (it == spec.subgroups.end())
      throw InputError("unknown subgroup: " + normal_name);
    const PermGroup n = generate(spec.degree, it->second);
    const CharacterTable tg = character_table(g);
    const CharacterTable tn = character_table(n);
    BranchingData bd = restrict_induce(g, n, tg, tn);  // checks normality
    ConjugationAction act = build_conjugation(inst.fusion, g, n, tn);
    inst.clifford = std::move(bd);
    inst.clifford_subalgebra = normal_name;
    inst.conjugation = std::move(act.mats);
  }
  return inst;
}

}  // namespace hopf
