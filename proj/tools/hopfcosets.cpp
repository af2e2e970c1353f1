// Command-line front door: instance validation, double-coset reports,
// clifford/conjugation suites and group-instance generation.
//
// Exit codes: 0 all checks pass, 1 a check failed or a construction gate
// fired, 2 usage or parse error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hopf/suites.hpp"

namespace fs = std::filesystem;

namespace {

std::string resolve(const std::string& file, const std::string& data_dir) {
  if (fs::exists(file)) return file;
  const fs::path fallback = fs::path(data_dir) / file;
  if (fs::exists(fallback)) return fallback.string();
  throw hopf::ParseError("cannot find file '" + file + "' (also tried " +
                         fallback.string() + ")");
}

int emit_report(const hopf::Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    rep.print_text(std::cout);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hopfcosets: double-coset decompositions of character rings of "
      "semisimple Hopf algebras, with a finite-group brute-force oracle"};
  app.require_subcommand(1);

  std::string data_dir = "data";
  app.add_option("--data-dir", data_dir,
                 "directory searched for bundled instance files")
      ->capture_default_str();

  std::string file, left, right, emit_path, normal;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance file")->required();
    cmd->add_flag("--json", as_json, "emit the report as JSON");
  };

  CLI::App* c_validate =
      app.add_subcommand("validate", "check the fusion-ring axioms");
  add_common(c_validate);

  CLI::App* c_cosets = app.add_subcommand(
      "cosets", "double-coset classes and eigen checks for one (K, L) pair");
  add_common(c_cosets);
  c_cosets->add_option("--left", left, "left subalgebra name ('trivial' = unit)")
      ->required();
  c_cosets->add_option("--right", right,
                       "right subalgebra name ('trivial' = unit)")
      ->required();

  CLI::App* c_clifford = app.add_subcommand(
      "clifford", "restriction/induction checks over the clifford block");
  add_common(c_clifford);

  CLI::App* c_conjugate = app.add_subcommand(
      "conjugate", "conjugate-character checks over the conjugation block");
  add_common(c_conjugate);

  CLI::App* c_group = app.add_subcommand(
      "group", "build a fusion instance from a permutation-group spec");
  c_group->add_option("file", file, "group spec file")->required();
  c_group->add_flag("--json", as_json, "emit the report as JSON");
  c_group->add_option("--emit", emit_path, "output instance file")->required();
  c_group->add_option("--normal", normal,
                      "named normal subgroup; adds clifford and conjugation "
                      "blocks to the emitted instance");

  CLI::App* c_all = app.add_subcommand(
      "check-all", "run every suite applicable to the instance");
  add_common(c_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    hopf::Report rep;
    if (c_validate->parsed())
      rep = hopf::suite_validate(hopf::load_instance(resolve(file, data_dir)));
    else if (c_cosets->parsed())
      rep = hopf::suite_cosets(hopf::load_instance(resolve(file, data_dir)),
                               left, right);
    else if (c_clifford->parsed())
      rep = hopf::suite_clifford(hopf::load_instance(resolve(file, data_dir)));
    else if (c_conjugate->parsed())
      rep = hopf::suite_conjugation(
          hopf::load_instance(resolve(file, data_dir)));
    else if (c_group->parsed())
      rep = hopf::suite_group(hopf::load_group_spec(resolve(file, data_dir)),
                              emit_path, normal);
    else
      rep = hopf::suite_check_all(hopf::load_instance(resolve(file, data_dir)));
    return emit_report(rep, as_json);
  } catch (const hopf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hopf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
