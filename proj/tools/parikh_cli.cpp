// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the parikh_kit C API: load JSON models, decide
// membership, run the determinization pipeline, cross-check two models, and
// export DOT. Exit codes: 0 success (ACCEPT / EQUAL), 1 negative verdict
// (REJECT / counterexample), 2 error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parikh_kit.h"

namespace {

struct Cli {
  parikh_config config{};
  bool json = false;
};

int fail(const std::string& what) {
  std::cerr << "error[" << what << "]: " << parikh_last_error() << "\n";
  return 2;
}

const char* status_name(parikh_status s) {
  switch (s) {
    case PARIKH_OK:
      return "ok";
    case PARIKH_ERR_PARSE:
      return "parse";
    case PARIKH_ERR_DIMENSION:
      return "dimension";
    case PARIKH_ERR_SOLVER_CAP:
      return "solver-cap";
    case PARIKH_ERR_MONOID_CAP:
      return "monoid-cap";
    case PARIKH_ERR_SUPPORT_CAP:
      return "support-cap";
    case PARIKH_ERR_NOT_BOUNDED:
      return "not-bounded";
    case PARIKH_ERR_SOCLE:
      return "socle";
    case PARIKH_ERR_CONSTRAINT_DETERMINISM:
      return "constraint-determinism";
    case PARIKH_ERR_OVERFLOW:
      return "overflow";
    case PARIKH_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case PARIKH_ERR_IO:
      return "io";
    case PARIKH_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

struct ModelHandle {
  parikh_model* model = nullptr;
  ~ModelHandle() { parikh_model_free(model); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { parikh_string_free(s); }
};

int load(const std::string& path, ModelHandle& out) {
  parikh_status st = parikh_model_from_file(path.c_str(), &out.model);
  if (st != PARIKH_OK) return fail(status_name(st));
  return 0;
}

int cmd_member(const Cli& cli, const std::string& file, const std::string& word) {
  ModelHandle m;
  if (int rc = load(file, m)) return rc;
  int accepted = 0;
  parikh_status st = parikh_model_member(m.model, word.c_str(), &cli.config, &accepted);
  if (st != PARIKH_OK) return fail(status_name(st));
  if (cli.json)
    std::cout << "{\"verdict\": \"" << (accepted ? "ACCEPT" : "REJECT") << "\"}\n";
  else
    std::cout << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return accepted ? 0 : 1;
}

int cmd_pipeline(const Cli& cli, const std::string& file, const std::string& socle,
                 const std::string& out_path) {
  ModelHandle m;
  if (int rc = load(file, m)) return rc;
  ModelHandle cqdd;
  StringHandle report;
  parikh_status st = parikh_model_pipeline(m.model, socle.empty() ? nullptr : socle.c_str(),
                                           &cli.config, &cqdd.model, &report.s);
  if (st != PARIKH_OK) return fail(status_name(st));
  StringHandle json;
  st = parikh_model_to_json(cqdd.model, &json.s);
  if (st != PARIKH_OK) return fail(status_name(st));
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error[io]: cannot write " << out_path << "\n";
    return 2;
  }
  out << json.s;
  if (cli.json) {
    std::cout << report.s;
  } else {
    std::cout << "wrote " << out_path << "\n" << "stage report:\n" << report.s;
  }
  return 0;
}

int cmd_crosscheck(const Cli& cli, const std::string& file_a, const std::string& file_b,
                   int max_len) {
  ModelHandle a, b;
  if (int rc = load(file_a, a)) return rc;
  if (int rc = load(file_b, b)) return rc;
  int equal = 0;
  StringHandle counterexample;
  parikh_status st =
      parikh_model_crosscheck(a.model, b.model, max_len, &cli.config, &equal, &counterexample.s);
  if (st != PARIKH_OK) return fail(status_name(st));
  if (equal) {
    if (cli.json)
      std::cout << "{\"equal\": true, \"max_len\": " << max_len << "}\n";
    else
      std::cout << "EQUAL-UP-TO(" << max_len << ")\n";
    return 0;
  }
  std::string word = counterexample.s ? counterexample.s : "";
  int in_a = 0, in_b = 0;
  parikh_model_member(a.model, word.c_str(), &cli.config, &in_a);
  parikh_model_member(b.model, word.c_str(), &cli.config, &in_b);
  if (cli.json)
    std::cout << "{\"equal\": false, \"counterexample\": \"" << word << "\", \"left\": " << in_a
              << ", \"right\": " << in_b << "}\n";
  else
    std::cout << "DIFFER \"" << word << "\": left=" << (in_a ? "ACCEPT" : "REJECT")
              << " right=" << (in_b ? "ACCEPT" : "REJECT") << "\n";
  return 1;
}

int cmd_dot(const Cli& cli, const std::string& file, const std::string& out_path) {
  (void)cli;
  ModelHandle m;
  if (int rc = load(file, m)) return rc;
  StringHandle dot;
  parikh_status st = parikh_model_to_dot(m.model, &dot.s);
  if (st != PARIKH_OK) return fail(status_name(st));
  if (out_path.empty()) {
    std::cout << dot.s;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error[io]: cannot write " << out_path << "\n";
      return 2;
    }
    out << dot.s;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  parikh_config_defaults(&cli.config);
  if (parikh_config_env(&cli.config) != PARIKH_OK) return fail("invalid-argument");

  CLI::App app{"Parikh / constrained automata toolkit"};
  app.require_subcommand(1);
  app.add_option("--solver-cap", cli.config.solver_cap, "linear system exploration cap");
  app.add_option("--monoid-cap", cli.config.monoid_cap, "matrix monoid closure cap");
  app.add_option("--cd-bound", cli.config.cd_bound, "constraint-determinism check bound");
  app.add_option("--seed", cli.config.seed, "seed for randomized drivers (none are built in)");
  app.add_flag("--json", cli.json, "machine-readable output");

  std::string file, word, file_b, socle, out_path;
  int max_len = 8;

  CLI::App* member = app.add_subcommand("member", "decide membership of a word");
  member->add_option("model", file, "model JSON file")->required();
  member->add_option("word", word, "word to test ('' for the empty word)")->required();

  CLI::App* pipeline =
      app.add_subcommand("pipeline", "determinize a bounded model into a CQDD");
  pipeline->add_option("model", file, "BSL or PA JSON file")->required();
  pipeline->add_option("-o,--out", out_path, "output CQDD JSON file")->required();
  pipeline->add_option("--socle", socle, "socle words, comma separated (PA input)");

  CLI::App* crosscheck = app.add_subcommand("crosscheck", "compare two models up to a length");
  crosscheck->add_option("model_a", file, "first model")->required();
  crosscheck->add_option("model_b", file_b, "second model")->required();
  crosscheck->add_option("--max-len", max_len, "maximum word length (default 8)");

  CLI::App* dot = app.add_subcommand("dot", "export Graphviz DOT");
  dot->add_option("model", file, "model JSON file")->required();
  dot->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (member->parsed()) return cmd_member(cli, file, word);
  if (pipeline->parsed()) return cmd_pipeline(cli, file, socle, out_path);
  if (crosscheck->parsed()) return cmd_crosscheck(cli, file, file_b, max_len);
  if (dot->parsed()) return cmd_dot(cli, file, out_path);
  return 2;
}
