// Command line front end: worked example, certificates, Kunneth scan,
// planner synthesis, and the corruption self-test.
//
// Exit codes: 0 verified, 1 not verified or inconclusive, 2 usage or
// internal error.

#include <CLI11.hpp>
#include <iostream>

#include "tc/certificate.hpp"
#include "tc/parallel.hpp"
#include "tc/planner.hpp"

namespace {

struct GlobalOptions {
  std::string format = "text";
  int jobs = 1;
};

void print_report(const tc::CertificateReport& rep, const GlobalOptions& g) {
  if (g.format == "json")
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-2 certificates for the topological complexity of "
               "connected sums of real projective spaces"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "worker cap for partitioned stages")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* cmd_example3 = app.add_subcommand(
      "example3", "reproduce the worked degree-4 example over the dihedral group");
  bool example3_corrupt = false;
  cmd_example3->add_flag("--corrupt", example3_corrupt,
                         "drop one shuffle term (negative control)");

  auto* cmd_certify =
      app.add_subcommand("certify", "run the full certificate for n >= 3, g >= 2");
  int certify_n = 0, certify_g = 2;
  tc::CertifyOptions certify_opts;
  cmd_certify->add_option("--n", certify_n, "dimension")->required();
  cmd_certify->add_option("--g", certify_g, "genus")->capture_default_str();
  cmd_certify->add_option("--mmax", certify_opts.quotient_cap, "largest dihedral quotient")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_certify
      ->add_option("--dimension-cap", certify_opts.dimension_cap,
                   "coinvariant dimension guard")
      ->capture_default_str();

  auto* cmd_scan =
      app.add_subcommand("scan", "Kunneth survivor scan in bidegree (4, 2n-4)");
  int scan_n = 0;
  cmd_scan->add_option("--n", scan_n, "dimension")->required();

  auto* cmd_planner = app.add_subcommand("planner", "synthesize a motion planner table");
  std::string planner_input;
  std::vector<int> planner_preset;
  int planner_g = 0;
  cmd_planner->add_option("--input", planner_input, "cell complex description file");
  cmd_planner
      ->add_option("--preset", planner_preset,
                   "standard connected sum description: <n> <g>")
      ->expected(2);
  cmd_planner->add_option("--g", planner_g,
                          "genus for the tc bracket of a custom description");

  auto* cmd_selftest =
      app.add_subcommand("selftest", "verify that corrupted runs are detected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // help to stdout, errors to stderr
    return code == 0 ? 0 : 2;
  }

  try {
    tc::set_worker_cap(global.jobs);

    if (*cmd_example3) {
      tc::Example3Options opts;
      if (example3_corrupt) opts.corrupt = tc::Example3Options::Corrupt::drop_term;
      const auto rep = tc::reproduce_example3(opts);
      print_report(rep, global);
      return tc::exit_code_for(rep.verdict);
    }

    if (*cmd_certify) {
      if (certify_n == 2) {
        std::cerr << "certify: n = 2 (surface case) is prior work; this tool "
                     "certifies n >= 3\n";
        return 2;
      }
      if (certify_n < 3 || certify_g < 2) {
        std::cerr << "certify: need n >= 3 and g >= 2\n";
        return 2;
      }
      const auto rep = tc::certify(certify_n, certify_g, certify_opts);
      print_report(rep, global);
      return tc::exit_code_for(rep.verdict);
    }

    if (*cmd_scan) {
      if (scan_n < 3) {
        std::cerr << "scan: need n >= 3\n";
        return 2;
      }
      const auto rep = tc::kunneth_scan(scan_n);
      print_report(rep, global);
      return tc::exit_code_for(rep.verdict);
    }

    if (*cmd_planner) {
      if (planner_input.empty() == planner_preset.empty()) {
        std::cerr << "planner: give exactly one of --input FILE or --preset N G\n";
        return 2;
      }
      tc::CellComplexDescription desc;
      int bracket_g = 0;
      if (!planner_preset.empty()) {
        desc = tc::standard_connected_sum_description(planner_preset[0],
                                                      planner_preset[1]);
        bracket_g = planner_preset[1];
      } else {
        desc = tc::load_description(planner_input);
        bracket_g = planner_g;
      }
      const auto table = tc::synthesize(desc);
      if (global.format == "json")
        std::cout << table.to_json() << "\n";
      else
        std::cout << table.to_text();
      if (bracket_g >= 2) {
        const auto bracket = tc::tc_bracket(desc.dimension, bracket_g);
        if (global.format == "json")
          std::cout << "{\"lower\": " << bracket.lower << ", \"upper\": " << bracket.upper
                    << ", \"optimal\": " << (bracket.optimal ? "true" : "false")
                    << ", \"verdict\": \"" << tc::to_string(bracket.verdict) << "\"}\n";
        else
          std::cout << "tc bracket: lower " << bracket.lower << ", upper "
                    << bracket.upper << (bracket.optimal ? " (optimal)" : "")
                    << ", " << tc::to_string(bracket.verdict) << "\n";
        return tc::exit_code_for(bracket.verdict);
      }
      return 0;
    }

    if (*cmd_selftest) {
      return tc::selftest(std::cout) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
