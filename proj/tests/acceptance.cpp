// Acceptance suite: exercises the full battery over the bundled instances
// and the CLI binary.  Prints one line per criterion; exits nonzero if any
// criterion fails.
//
// usage: acceptance <path-to-hopfcosets-binary> <data-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "hopf/group_oracle.hpp"
#include "hopf/io.hpp"
#include "hopf/suites.hpp"

using namespace hopf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_data;

void report(int num, const std::string& name, bool pass,
            const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << num << " (" << name
            << ")";
  if (!note.empty()) std::cout << ": " << note;
  std::cout << "\n";
  if (!pass) ++g_failures;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      "\"" + g_cli + "\" --data-dir \"" + g_data + "\" " + args +
      " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string run_cli_capture(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "hopf_acc_capture.txt";
  const std::string cmd = "\"" + g_cli + "\" --data-dir \"" + g_data + "\" " +
                          args + " >\"" + out.string() + "\" 2>/dev/null";
  if (std::system(cmd.c_str()) == -1) return "";
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  fs::remove(out);
  return text;
}

const std::vector<std::string> kGroupStems = {"s3", "s4", "a4",
                                              "d8", "q8", "c2c2"};
const std::vector<std::pair<std::string, std::string>> kNormalPairs = {
    {"s3", "A3"}, {"s4", "V4"}, {"a4", "V4"}, {"q8", "Z"}, {"d8", "C4"}};

GroupSpec load_spec(const std::string& stem) {
  return load_group_spec(g_data + "/groups/" + stem + ".json");
}

std::vector<std::pair<std::string, Instance>> bundled_instances() {
  std::vector<std::pair<std::string, Instance>> all;
  all.emplace_back("kashina", load_instance(g_data + "/kashina.json"));
  all.emplace_back("s3_a3", load_instance(g_data + "/s3_a3.json"));
  all.emplace_back("s4_v4", load_instance(g_data + "/s4_v4.json"));
  for (const auto& stem : kGroupStems)
    all.emplace_back(stem, build_group_instance(load_spec(stem)));
  return all;
}

std::vector<std::string> subalgebra_names(const Instance& inst) {
  std::vector<std::string> names{"trivial", "full"};
  for (const auto& [name, labs] : inst.subalgebras) names.push_back(name);
  return names;
}

struct OraclePair {
  PermGroup g, n;
  CharacterTable tg, tn;
  FusionData dual;
  BranchingData bd;
  ConjugationAction act;
  std::vector<std::size_t> n_indices;

  OraclePair(const GroupSpec& spec, const std::string& sub)
      : g(generate(spec.degree, spec.generators)),
        n(generate(spec.degree, spec.subgroups.at(sub))),
        tg(character_table(g)),
        tn(character_table(n)),
        dual(build_dual_fusion(g, spec.name)) {
    bd = restrict_induce(g, n, tg, tn);
    act = build_conjugation(dual, g, n, tn);
    for (const auto& p : n.elements) n_indices.push_back(g.index_of(p));
    std::sort(n_indices.begin(), n_indices.end());
  }
};

void criterion_1_kashina() {
  const Instance inst = load_instance(g_data + "/kashina.json");
  const auto start = Clock::now();
  const CosetDecomposition dec =
      classes(trivial_subalgebra(inst.fusion), subalgebra_by_name(inst, "K"));
  const bool eigen_ok = verify_eigen(dec).pass;
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();

  auto labels_of = [&](const std::vector<std::size_t>& idx) {
    std::set<std::string> s;
    for (std::size_t i : idx) s.insert(inst.fusion.label(i));
    return s;
  };
  std::set<std::set<std::string>> got;
  for (const auto& cls : dec.classes) got.insert(labels_of(cls));
  const std::set<std::set<std::string>> want = {
      {"1", "x"}, {"y", "xy"}, {"d2"}, {"d1", "d3"}};

  const int cli_rc = run_cli("cosets kashina.json --left trivial --right K");
  const int val_rc = run_cli("validate kashina.json");
  const std::string out1 =
      run_cli_capture("cosets kashina.json --left trivial --right K --json");
  const std::string out2 =
      run_cli_capture("cosets kashina.json --left trivial --right K --json");
  const bool deterministic = !out1.empty() && out1 == out2;
  const bool pass = got == want && dec.classes.size() == 4 &&
                    dec.classes.size() < 8 && eigen_ok && secs < 0.1 &&
                    cli_rc == 0 && val_rc == 0 && deterministic;
  report(1, "kashina reproduction", pass,
         std::to_string(dec.classes.size()) + " classes in " +
             std::to_string(secs) + "s, cli exit " + std::to_string(cli_rc) +
             (deterministic ? ", deterministic output" : ", OUTPUT DIFFERS"));
}

void criterion_2_eigen_exact() {
  for (const auto& [name, inst] : bundled_instances()) {
    const auto names = subalgebra_names(inst);
    for (const auto& a : names)
      for (const auto& b : names) {
        const CosetDecomposition dec = classes(subalgebra_by_name(inst, a),
                                               subalgebra_by_name(inst, b));
        const CheckResult r = verify_eigen(dec);
        if (!r.pass) {
          report(2, "eigen exactness", false,
                 name + " (" + a + ", " + b + "): " + r.detail);
          return;
        }
      }
  }
  report(2, "eigen exactness", true);
}

void criterion_3_oracle_equivalence() {
  const auto start = Clock::now();
  for (const auto& stem : kGroupStems) {
    const GroupSpec spec = load_spec(stem);
    const PermGroup g = generate(spec.degree, spec.generators);
    const FusionData dual = build_dual_fusion(g, spec.name);
    std::map<std::string, std::vector<std::size_t>> subs;
    subs["trivial"] = {g.identity_index()};
    std::vector<std::size_t> everything(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) everything[i] = i;
    subs["full"] = everything;
    for (const auto& [sname, gens] : spec.subgroups)
      subs[sname] = subgroup_indices(g, gens);

    for (const auto& [ka, k_idx] : subs)
      for (const auto& [la, l_idx] : subs) {
        const CosetDecomposition dec = classes(make_subalgebra(dual, k_idx),
                                               make_subalgebra(dual, l_idx));
        const auto combinatorial = double_cosets(g, k_idx, l_idx);
        const std::set<std::vector<std::size_t>> got(dec.classes.begin(),
                                                     dec.classes.end());
        const std::set<std::vector<std::size_t>> want(combinatorial.begin(),
                                                      combinatorial.end());
        if (got != want) {
          report(3, "oracle equivalence", false,
                 stem + " (" + ka + ", " + la + "): partitions differ");
          return;
        }
        for (std::size_t i = 0; i < dec.classes.size(); ++i)
          if (eps(dual, dec.class_sums[i]) !=
              static_cast<i64>(dec.classes[i].size())) {
            report(3, "oracle equivalence", false,
                   stem + ": eps(a_i) != |K g L|");
            return;
          }
      }
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  report(3, "oracle equivalence", secs < 5.0,
         "all 6 groups in " + std::to_string(secs) + "s");
}

void criterion_4_dimension_identity() {
  for (const auto& [name, inst] : bundled_instances()) {
    const auto names = subalgebra_names(inst);
    for (const auto& a : names)
      for (const auto& b : names) {
        const Subalgebra k = subalgebra_by_name(inst, a);
        const Subalgebra l = subalgebra_by_name(inst, b);
        const CosetDecomposition dec = classes(k, l);
        const i64 lk = eps(inst.fusion, dec.class_sums.front());
        if (order(l) * order(k) != order(intersect(l, k)) * lk) {
          report(4, "dimension identity", false,
                 name + " (" + a + ", " + b + ")");
          return;
        }
      }
  }
  report(4, "dimension identity", true);
}

void criterion_5_clifford() {
  for (const auto& [stem, sub] : kNormalPairs) {
    const OraclePair p(load_spec(stem), sub);
    std::string fail;
    if (!validate_branching(p.bd).empty()) fail = "branching invalid";
    const RestrictionPartition part = equiv_classes(p.bd);
    if (fail.empty() && !check_proportionality(p.bd, part).pass)
      fail = "proportionality";
    if (fail.empty() && !check_class_dimensions(p.bd, part).pass)
      fail = "class dimensions";
    try {
      for (std::size_t chi = 0; chi < p.bd.labels_h.size(); ++chi)
        restrict_formula(p.bd, part, chi);
      for (std::size_t alpha = 0; alpha < p.bd.labels_k.size(); ++alpha)
        check_induction_formula(p.bd, part, alpha);
    } catch (const TheoremViolation& e) {
      fail = e.what();
    }
    if (fail.empty() && !check_trivial_induction(p.bd).pass)
      fail = "trivial induction";
    if (!fail.empty()) {
      report(5, "clifford suite", false, stem + "/" + sub + ": " + fail);
      return;
    }
  }
  report(5, "clifford suite", true);
}

void criterion_6_conjugation() {
  for (const auto& [stem, sub] : kNormalPairs) {
    const OraclePair p(load_spec(stem), sub);
    std::string fail;
    if (!validate_action(p.act).empty())
      fail = "action axioms (unit/scaling)";
    if (fail.empty() && !check_composition(p.act).pass) fail = "composition";
    if (fail.empty() && !check_star(p.act, p.bd.star_k).pass) fail = "star";
    if (fail.empty()) {
      const CosetDecomposition dec =
          classes(trivial_subalgebra(p.dual),
                  make_subalgebra(p.dual, p.n_indices));
      if (!check_coset_invariance(p.act, dec).pass) fail = "coset invariance";
    }
    if (fail.empty() && !check_induced_equality(p.act, p.bd).pass)
      fail = "induced equality";
    if (fail.empty() && !check_constituents(p.act, p.bd).pass)
      fail = "constituents";
    if (!fail.empty()) {
      report(6, "conjugation suite", false, stem + "/" + sub + ": " + fail);
      return;
    }
  }
  report(6, "conjugation suite", true);
}

void criterion_7_mackey() {
  int passed = 0;
  std::string note;
  {
    const GroupSpec spec = load_spec("s3");
    const PermGroup g = generate(spec.degree, spec.generators);
    const PermGroup k = generate(spec.degree, spec.subgroups.at("A3"));
    const PermGroup l = generate(spec.degree, spec.subgroups.at("C2"));
    const MackeyResult r = check_mackey_unique_coset(g, l, k);
    if (r.status == MackeyStatus::pass) ++passed;
    else note += "s3(C2,A3): " + r.detail + "; ";
  }
  {
    const GroupSpec spec = load_spec("s4");
    const PermGroup g = generate(spec.degree, spec.generators);
    const PermGroup k = generate(spec.degree, spec.subgroups.at("A4"));
    const PermGroup l = generate(spec.degree, spec.subgroups.at("C2"));
    const MackeyResult r = check_mackey_unique_coset(g, l, k);
    if (r.status == MackeyStatus::pass) ++passed;
    else note += "s4(C2,A4): " + r.detail + "; ";
  }
  {
    const GroupSpec spec = load_spec("s4");
    const PermGroup g = generate(spec.degree, spec.generators);
    const PermGroup k = generate(spec.degree, spec.subgroups.at("V4"));
    const PermGroup l = generate(spec.degree, spec.subgroups.at("S3"));
    const MackeyResult r = check_mackey_unique_coset(g, l, k);
    if (r.status == MackeyStatus::pass) ++passed;
    else note += "s4(S3,V4): " + r.detail + "; ";
  }
  report(7, "mackey unique coset", passed >= 2,
         std::to_string(passed) + " triples passed" +
             (note.empty() ? "" : " — " + note));
}

void criterion_8_numeric() {
  // power iteration on every bundled pair
  for (const auto& [name, inst] : bundled_instances()) {
    const auto names = subalgebra_names(inst);
    for (const auto& a : names)
      for (const auto& b : names) {
        const Subalgebra k = subalgebra_by_name(inst, a);
        const Subalgebra l = subalgebra_by_name(inst, b);
        const PowerIterationResult r = principal_eigen_numeric(build_T(k, l));
        const double want = static_cast<double>(order(k)) * order(l);
        if (!r.converged || std::abs(r.value - want) > 1e-6 * want) {
          report(8, "numeric cross-check", false,
                 name + " (" + a + ", " + b + "): power iteration " +
                     std::to_string(r.value) + " vs " + std::to_string(want));
          return;
        }
      }
  }
  // orthogonality for every bundled group table
  for (const auto& stem : kGroupStems) {
    const GroupSpec spec = load_spec(stem);
    const PermGroup g = generate(spec.degree, spec.generators);
    const CharacterTable t = character_table(g);
    const double n = static_cast<double>(g.size());
    for (std::size_t a = 0; a < t.irr_count(); ++a)
      for (std::size_t b = 0; b < t.irr_count(); ++b) {
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < t.cls.classes.size(); ++c)
          s += static_cast<double>(t.cls.classes[c].size()) * t.values[a][c] *
               std::conj(t.values[b][c]);
        if (std::abs(s - (a == b ? n : 0.0)) > 1e-8) {
          report(8, "numeric cross-check", false,
                 stem + ": orthogonality residual above 1e-8");
          return;
        }
      }
  }
  // branching residues before rounding
  for (const auto& [stem, sub] : kNormalPairs) {
    const OraclePair p(load_spec(stem), sub);
    for (std::size_t chi = 0; chi < p.tg.irr_count(); ++chi) {
      const auto f = restrict_values(p.g, values_per_element(p.g, p.tg, chi),
                                     p.n);
      for (std::size_t alpha = 0; alpha < p.tn.irr_count(); ++alpha) {
        std::complex<double> s = 0.0;
        for (std::size_t e = 0; e < p.n.size(); ++e)
          s += f[e] * std::conj(p.tn.at_element(alpha, e));
        s /= static_cast<double>(p.n.size());
        const double residue = std::max(std::abs(s.real() - std::round(s.real())),
                                        std::abs(s.imag()));
        if (residue >= 1e-6) {
          report(8, "numeric cross-check", false,
                 stem + "/" + sub + ": branching residue " +
                     std::to_string(residue));
          return;
        }
      }
    }
  }
  report(8, "numeric cross-check", true);
}

void criterion_9_negative_controls() {
  std::string note;
  bool pass = true;

  // associativity corruption: replace d1.d2 = d1 + d3 by 2 d1, which keeps
  // dimensions and duality intact but breaks associativity
  {
    std::ifstream in(g_data + "/kashina.json");
    json j = json::parse(in);
    json fixed = json::array();
    for (const auto& t : j["fusion"]) {
      if (t[0] == "d1" && t[1] == "d2" && t[2] == "d3") continue;
      if (t[0] == "d1" && t[1] == "d2" && t[2] == "d1")
        fixed.push_back(json::array({"d1", "d2", "d1", 2}));
      else
        fixed.push_back(t);
    }
    j["fusion"] = fixed;

    const Instance corrupted = parse_instance(j);
    bool assoc_reported = false;
    for (const auto& v : validate(corrupted.fusion))
      if (v.axiom == "associativity") assoc_reported = true;
    if (!assoc_reported) {
      pass = false;
      note += "associativity violation not reported; ";
    }

    const fs::path path = fs::temp_directory_path() / "hopf_acc_corrupt.json";
    std::ofstream(path) << j.dump(2);
    const int rc = run_cli("validate \"" + path.string() + "\"");
    fs::remove(path);
    if (rc != 1) {
      pass = false;
      note += "corrupted validate exited " + std::to_string(rc) + " not 1; ";
    }
  }

  // non-normal subgroup into restrict_induce
  {
    const GroupSpec spec = load_spec("s3");
    const PermGroup g = generate(spec.degree, spec.generators);
    const PermGroup c2 = generate(spec.degree, spec.subgroups.at("C2"));
    bool threw = false;
    try {
      restrict_induce(g, c2, character_table(g), character_table(c2));
    } catch (const NormalityError&) {
      threw = true;
    }
    if (!threw) {
      pass = false;
      note += "restrict_induce accepted a non-normal subgroup; ";
    }

    const fs::path out = fs::temp_directory_path() / "hopf_acc_emit.json";
    const int rc = run_cli("group groups/s3.json --emit \"" + out.string() +
                           "\" --normal C2");
    fs::remove(out);
    if (rc != 1) {
      pass = false;
      note += "group --normal C2 exited " + std::to_string(rc) + " not 1; ";
    }
  }

  // malformed file
  {
    const fs::path path = fs::temp_directory_path() / "hopf_acc_bad.json";
    std::ofstream(path) << "{ definitely not json";
    const int rc = run_cli("validate \"" + path.string() + "\"");
    fs::remove(path);
    if (rc != 2) {
      pass = false;
      note += "malformed file exited " + std::to_string(rc) + " not 2; ";
    }
  }

  report(9, "negative controls", pass, note);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <hopfcosets-binary> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  struct Entry {
    int num;
    const char* name;
    void (*fn)();
  };
  const Entry entries[] = {
      {1, "kashina reproduction", criterion_1_kashina},
      {2, "eigen exactness", criterion_2_eigen_exact},
      {3, "oracle equivalence", criterion_3_oracle_equivalence},
      {4, "dimension identity", criterion_4_dimension_identity},
      {5, "clifford suite", criterion_5_clifford},
      {6, "conjugation suite", criterion_6_conjugation},
      {7, "mackey unique coset", criterion_7_mackey},
      {8, "numeric cross-check", criterion_8_numeric},
      {9, "negative controls", criterion_9_negative_controls},
  };
  for (const auto& e : entries) {
    try {
      e.fn();
    } catch (const std::exception& ex) {
      report(e.num, e.name, false, std::string("exception: ") + ex.what());
    }
  }
  std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES") << "\n";
  return g_failures == 0 ? 0 : 1;
}
