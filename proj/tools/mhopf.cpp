#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mhopf/instances.hpp"
#include "mhopf/suites.hpp"

using namespace mhopf;

namespace {

int usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact law checker for multiplier Hopf algebras and their Yetter-Drinfeld structures"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string out;
  bool serial = false, timings = false;
  auto* check = app.add_subcommand("check", "run a law suite and emit a JSON report");
  check->add_option("suite", cfg.suite, "suite name (see: list suites)")->required();
  check->add_option("--instance", cfg.instance, "instance name (see: list instances)")->required();
  check->add_option("--field", cfg.field, "rational or fp:<p>");
  check->add_option("--seed", cfg.seed, "64-bit seed");
  check->add_option("--samples", cfg.samples, "samples per law")->check(CLI::PositiveNumber);
  check->add_option("--out", out, "report path (default: stdout)");
  check->add_flag("--controls", cfg.controls, "run the negative controls");
  check->add_flag("--serial", serial, "use the serial law kernel");
  check->add_flag("--timings", timings, "include elapsed times in the report");

  std::string what;
  auto* list = app.add_subcommand("list", "list suites or instances");
  list->add_option("what", what, "suites | instances")->required()->check(CLI::IsMember({"suites", "instances"}));

  std::string dump_what, instance, field = "rational", pair = "id,id", dump_out;
  auto* dump = app.add_subcommand("dump", "dump a crossed-product multiplication table");
  dump->add_option("what", dump_what, "dcp")->required()->check(CLI::IsMember({"dcp"}));
  dump->add_option("--instance", instance)->required();
  dump->add_option("--field", field);
  dump->add_option("--pair", pair, "alpha,beta (automorphism specs)");
  dump->add_option("--out", dump_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      if (what == "suites") {
        for (const auto& s : suites())
          std::cout << s.name << "\t" << (s.has_controls ? "controls\t" : "\t") << s.summary << "\n";
      } else {
        for (const auto& n : instance_names()) std::cout << n << "\n";
      }
      return 0;
    }
    if (*dump) {
      write_atomic(dump_out, dcp_table_json(instance, field, pair));
      return 0;
    }
    cfg.exec = serial ? Exec::serial : Exec::parallel;
    const Report report = run_suite(cfg);
    const std::string json = report.to_json(timings);
    if (out.empty())
      std::cout << json;
    else
      write_atomic(out, json);
    for (const auto& l : report.laws)
      if (!l.as_expected()) std::cerr << (l.pass ? "UNEXPECTED PASS " : "FAIL ") << l.id << "\n";
    return report.as_expected() ? 0 : 1;
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
