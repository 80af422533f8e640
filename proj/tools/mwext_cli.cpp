// mwext: command-line front end over the libmwext C interface.
//
// Exit codes: 0 the report was produced and the checked property holds,
// 1 the input could not be processed (parse error, schema violation, guard
// exceeded), 2 the property was checked and is false.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwext/mwext.h"

namespace {

struct Options {
  std::uint64_t max_enum = 0;
  std::uint64_t max_ring = 0;
  std::uint64_t max_search = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool diagnostic = false;
  bool normalize = false;
  std::string output;

  std::string code, map, c1, c2, decomposition;
  std::vector<unsigned> coeffs, u, v;
};

int write_out(const Options& opt, const char* text) {
  if (opt.output.empty() || opt.output == "-") {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(opt.output, std::ios::binary);
  out << text;
  if (!out) {
    std::fprintf(stderr, "mwext: cannot write '%s'\n", opt.output.c_str());
    return 1;
  }
  return 0;
}

// Prints a report (or an error report) and maps the outcome to an exit code.
int finish(const Options& opt, mwext_status st, char* json, int verdict) {
  int rc = st == MWEXT_OK ? verdict : 1;
  if (json) {
    if (st != MWEXT_OK) {
      std::fputs(json, stderr);
      if (!opt.output.empty() && opt.output != "-") write_out(opt, json);
    } else if (write_out(opt, json) != 0) {
      rc = 1;
    }
    mwext_string_free(json);
  } else if (st != MWEXT_OK) {
    std::fprintf(stderr, "mwext: %s\n", mwext_last_error_message());
  }
  return rc;
}

int fail(const char* kind, const char* field, const std::string& message) {
  char* json = mwext_error_report(kind, field, message.c_str());
  std::fputs(json, stderr);
  mwext_string_free(json);
  return 1;
}

int load_status_exit(mwext_status st, const std::string& what) {
  if (char* json = mwext_last_error_report()) {
    std::fputs(json, stderr);
    mwext_string_free(json);
    return 1;
  }
  const char* kind = st == MWEXT_PARSE_ERROR ? "ParseError" : st == MWEXT_GUARD_EXCEEDED ? "GuardExceeded"
                                                                                        : "SchemaViolation";
  return fail(kind, what.c_str(), mwext_last_error_message());
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  mwext_config defaults;
  mwext_config_default(&defaults);
  opt.max_enum = defaults.max_enum;
  opt.max_ring = defaults.max_ring;
  opt.max_search = defaults.max_search;

  CLI::App app{"Hamming isometries and weighted composition operators over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--max-enum", opt.max_enum, "Bound on enumerated codewords q^k")->check(CLI::PositiveNumber);
  app.add_option("--max-ring", opt.max_ring, "Bound on the size of the cozero ring")->check(CLI::PositiveNumber);
  app.add_option("--max-search", opt.max_search, "Bound on brute-force search sizes")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", opt.seed, "Seed for sampling and selftest");
  app.add_option("--output,-o", opt.output, "Write the report here instead of stdout");
  app.add_flag("--normalize", opt.normalize, "Drop points where every code row vanishes");
  app.add_flag("--diagnostic", opt.diagnostic, "Cross-check fast paths against slow oracles");

  auto* weight = app.add_subcommand("weight", "Weight of a codeword");
  weight->add_option("--code", opt.code, "Code file")->required();
  weight->add_option("--coeffs", opt.coeffs, "Coefficients per code row, comma separated")->required()->delimiter(',');

  auto* distance = app.add_subcommand("distance", "Distance between two codewords");
  distance->add_option("--code", opt.code, "Code file")->required();
  distance->add_option("--u", opt.u, "Coefficients of the first codeword")->required()->delimiter(',');
  distance->add_option("--v", opt.v, "Coefficients of the second codeword")->required()->delimiter(',');

  auto* quotient = app.add_subcommand("quotient", "Classes of indistinguishable points");
  quotient->add_option("--code", opt.code, "Code file")->required();

  auto* ring = app.add_subcommand("ring", "Ring generated by the cozero sets");
  ring->add_option("--code", opt.code, "Code file")->required();

  auto* controllable = app.add_subcommand("controllable", "Decide controllability");
  controllable->add_option("--code", opt.code, "Code file")->required();

  auto* isometry = app.add_subcommand("isometry", "Decide whether a map is a Hamming isometry");
  auto* separating = app.add_subcommand("separating", "Decide whether a map preserves disjointness");
  for (auto* sub : {isometry, separating}) {
    sub->add_option("--map", opt.map, "Map file")->required();
    sub->add_option("--samples", opt.samples, "Check this many random codewords instead of all (needs --seed)");
  }

  auto* decompose = app.add_subcommand("decompose", "Weighted composition form of a map");
  decompose->add_option("--map", opt.map, "Map file")->required();

  auto* verify = app.add_subcommand("verify", "Check a stored decomposition against a map");
  verify->add_option("--map", opt.map, "Map file")->required();
  verify->add_option("--decomposition", opt.decomposition, "Decomposition file (h and omega)")->required();

  auto* monomial = app.add_subcommand("monomial-form", "Monomial form of a map, if it has one");
  monomial->add_option("--map", opt.map, "Map file")->required();

  auto* macwilliams = app.add_subcommand("macwilliams", "Decide monomial equivalence of two codes");
  macwilliams->add_option("--c1", opt.c1, "First code file")->required();
  macwilliams->add_option("--c2", opt.c2, "Second code file")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", nullptr, e.what());
  }

  mwext_config cfg{opt.max_enum, opt.max_ring, opt.max_search, seed_opt->count() > 0 ? 1 : 0, opt.seed, opt.samples,
                   opt.diagnostic ? 1 : 0};
  const int normalize = opt.normalize ? 1 : 0;
  char* json = nullptr;
  int verdict = 0;
  mwext_status st = MWEXT_OK;

  auto with_code = [&](const std::string& path, const char* what, auto&& fn) -> int {
    mwext_code* code = nullptr;
    const mwext_status ls = mwext_code_load(path.c_str(), normalize, &code);
    if (ls != MWEXT_OK) return load_status_exit(ls, what);
    st = fn(code);
    mwext_code_free(code);
    return finish(opt, st, json, verdict);
  };
  auto with_map = [&](auto&& fn) -> int {
    mwext_map* map = nullptr;
    const mwext_status ls = mwext_map_load(opt.map.c_str(), normalize, &map);
    if (ls != MWEXT_OK) return load_status_exit(ls, "map");
    st = fn(map);
    mwext_map_free(map);
    return finish(opt, st, json, verdict);
  };

  if (weight->parsed())
    return with_code(opt.code, "code", [&](mwext_code* c) {
      return mwext_report_weight(&cfg, c, opt.coeffs.data(), opt.coeffs.size(), &json, &verdict);
    });
  if (distance->parsed())
    return with_code(opt.code, "code", [&](mwext_code* c) {
      return mwext_report_distance(&cfg, c, opt.u.data(), opt.u.size(), opt.v.data(), opt.v.size(), &json, &verdict);
    });
  if (quotient->parsed())
    return with_code(opt.code, "code", [&](mwext_code* c) { return mwext_report_quotient(&cfg, c, &json, &verdict); });
  if (ring->parsed())
    return with_code(opt.code, "code", [&](mwext_code* c) { return mwext_report_ring(&cfg, c, &json, &verdict); });
  if (controllable->parsed())
    return with_code(opt.code, "code",
                     [&](mwext_code* c) { return mwext_report_controllable(&cfg, c, &json, &verdict); });
  if (isometry->parsed())
    return with_map([&](mwext_map* m) { return mwext_report_isometry(&cfg, m, &json, &verdict); });
  if (separating->parsed())
    return with_map([&](mwext_map* m) { return mwext_report_separating(&cfg, m, &json, &verdict); });
  if (decompose->parsed())
    return with_map([&](mwext_map* m) { return mwext_report_decompose(&cfg, m, &json, &verdict); });
  if (monomial->parsed())
    return with_map([&](mwext_map* m) { return mwext_report_monomial_form(&cfg, m, &json, &verdict); });
  if (verify->parsed()) {
    std::ifstream in(opt.decomposition, std::ios::binary);
    if (!in) return fail("ParseError", "decomposition", "cannot open '" + opt.decomposition + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return with_map(
        [&](mwext_map* m) { return mwext_report_verify(&cfg, m, text.c_str(), &json, &verdict); });
  }
  if (macwilliams->parsed()) {
    mwext_code* c1 = nullptr;
    mwext_code* c2 = nullptr;
    mwext_status ls = mwext_code_load(opt.c1.c_str(), normalize, &c1);
    if (ls != MWEXT_OK) return load_status_exit(ls, "c1");
    ls = mwext_code_load(opt.c2.c_str(), normalize, &c2);
    if (ls != MWEXT_OK) {
      mwext_code_free(c1);
      return load_status_exit(ls, "c2");
    }
    st = mwext_report_macwilliams(&cfg, c1, c2, &json, &verdict);
    mwext_code_free(c1);
    mwext_code_free(c2);
    return finish(opt, st, json, verdict);
  }
  if (selftest->parsed()) {
    st = mwext_report_selftest(&cfg, &json, &verdict);
    return finish(opt, st, json, verdict);
  }
  return fail("ParseError", nullptr, "no command given");
}
