#include "negaring/cli.hpp"

#include "CLI11.hpp"
#include "negaring/catalog.hpp"
#include "negaring/errors.hpp"
#include "negaring/parse.hpp"
#include "negaring/report.hpp"
#include "negaring/verify.hpp"

namespace negaring {

namespace {

struct Options {
  int64_t p = 3;
  size_t n = 3;
  std::vector<std::string> gens;
  std::string format = "json";
  uint64_t support_budget = 1'000'000;
  uint64_t enum_budget = 10'000'000;
  uint64_t seed = 0;
  std::string family = "all";
  uint64_t coeff_budget = 64;
  size_t samples = 5;
  size_t trials = 200;
};

void add_common(CLI::App* cmd, Options& o, bool with_gens) {
  cmd->add_option("--p", o.p, "odd prime field characteristic");
  cmd->add_option("--n", o.n, "odd code length");
  if (with_gens) cmd->add_option("--gen", o.gens, "generator \"f0;f1;f2;f3\" (repeatable)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--support-budget", o.support_budget, "kernel-test cap for the support oracle");
  cmd->add_option("--enum-budget", o.enum_budget, "codeword cap for the enumeration oracle");
  cmd->add_option("--seed", o.seed, "seed for sampled draws");
}

NegacyclicCode build_code(const Options& o) {
  PrimeField F(o.p);
  Modulus mod(Sign::Negacyclic, o.n);
  std::vector<RPoly> gens;
  for (const std::string& s : o.gens) gens.push_back(parse_rpoly(s, F, mod));
  return NegacyclicCode::from_generators(F, mod, gens);
}

void emit_code_report(const Options& o, std::ostream& out, bool full) {
  NegacyclicCode code = build_code(o);
  DistanceReport dist = analyze_distance(code, {o.support_budget, o.enum_budget});
  if (o.format == "json") {
    out << (full ? analyze_json(code, dist) : distance_json(dist)).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << catalog_csv({{code, dist, full ? "analyze" : "distance"}}, o.seed);
  } else {
    out << (full ? analyze_text(code, dist) : distance_text(dist));
  }
}

int exit_code_for(const error& e) {
  switch (e.kind()) {
    case errc::budget_exceeded:
      return 3;
    case errc::internal_invariant:
      return 4;
    default:
      return 2;
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"negacyclic codes over F_p + uF_p + vF_p + uvF_p"};
  app.require_subcommand(1);
  Options o;

  CLI::App* analyze = app.add_subcommand("analyze", "canonical form, rank, spanning set, distance");
  add_common(analyze, o, true);
  CLI::App* distance = app.add_subcommand("distance", "distance oracles and closed formula");
  add_common(distance, o, true);
  CLI::App* catalog = app.add_subcommand("catalog", "enumerate canonical forms with distances");
  add_common(catalog, o, false);
  catalog->add_option("--family", o.family, "all | free | single-nonfree | uv-only")
      ->check(CLI::IsMember({"all", "free", "single-nonfree", "uv-only"}));
  catalog->add_option("--coeff-budget", o.coeff_budget, "exhaustive tail cap per scheme point");
  catalog->add_option("--samples", o.samples, "random draws when not exhaustive");
  CLI::App* tables = app.add_subcommand("tables", "check the published p=5, n=5 tables");
  add_common(tables, o, false);
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify, o, false);
  verify->add_option("--trials", o.trials, "draws per suite");

  std::vector<const char*> argv;
  argv.push_back("negaring");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      emit_code_report(o, out, true);
    } else if (distance->parsed()) {
      emit_code_report(o, out, false);
    } else if (catalog->parsed()) {
      PrimeField F(o.p);
      Modulus mod(Sign::Negacyclic, o.n);
      CatalogOptions copt;
      copt.family = o.family;
      copt.coeff_budget = o.coeff_budget;
      copt.samples = o.samples;
      copt.seed = o.seed;
      copt.budgets = {o.support_budget, o.enum_budget};
      auto entries = catalog_codes(F, mod, copt);
      if (o.format == "json") {
        out << catalog_json(entries, o.seed).dump(2) << "\n";
      } else if (o.format == "csv") {
        out << catalog_csv(entries, o.seed);
      } else {
        out << catalog_text(entries, o.seed);
      }
    } else if (tables->parsed()) {
      if (o.p != 5) fail(errc::invalid_argument, "tables are fixed at p=5, n=5");
      TablesReport rep = reproduce_tables(o.seed, {o.support_budget, o.enum_budget});
      if (o.format == "json") {
        out << verdicts_json(rep).dump(2) << "\n";
      } else if (o.format == "csv") {
        out << catalog_csv(rep.entries, o.seed);
      } else {
        out << tables_text(rep);
      }
      // mismatches are findings, not failures
    } else if (verify->parsed()) {
      auto suites = run_verify(o.p, o.n, o.trials, o.seed, {o.support_budget, o.enum_budget});
      bool all_ok = true;
      if (o.format == "json") {
        ordered_json j = ordered_json::array();
        for (const SuiteResult& s : suites) {
          ordered_json e;
          e["suite"] = s.name;
          e["checked"] = s.checked;
          e["failed"] = s.failed;
          e["ok"] = s.ok();
          e["failures"] = s.failures;
          j.push_back(e);
          all_ok = all_ok && s.ok();
        }
        out << j.dump(2) << "\n";
      } else {
        for (const SuiteResult& s : suites) {
          out << s.name << ": " << (s.checked - s.failed) << "/" << s.checked << " ok\n";
          for (const std::string& f : s.failures) out << "  " << f << "\n";
          all_ok = all_ok && s.ok();
        }
      }
      if (!all_ok) return 4;
    }
  } catch (const error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 4;
  }
  return 0;
}

} // namespace negaring
