// skewspec command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skewspec/skewspec.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { skewspec_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(skewspec_graph* g) const { skewspec_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<skewspec_graph, GraphDeleter>;

int fail(int status) {
  std::cerr << "skewspec: " << skewspec_last_error() << "\n";
  return status;
}

// inline JSON, inline "n:code", or a path to a file holding either
bool resolve_graph_text(const std::string& spec, std::string& text) {
  static const std::regex code_prefix(R"(^\s*[0-9]+:)");
  if (!spec.empty() && (spec.front() == '{' || std::regex_search(spec, code_prefix))) {
    text = spec;
    return true;
  }
  std::ifstream in(spec, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int load_graph(const std::string& spec, OwnedGraph& out) {
  std::string text;
  if (!resolve_graph_text(spec, text)) {
    std::cerr << "skewspec: cannot read graph '" << spec << "' (not a code, JSON or readable file)\n";
    return SKEWSPEC_E_INPUT;
  }
  skewspec_graph* g = nullptr;
  const skewspec_status st = skewspec_graph_parse(text.c_str(), &g);
  if (st != SKEWSPEC_OK) return fail(st);
  out.reset(g);
  return SKEWSPEC_OK;
}

void print(const OwnedString& s) {
  if (s) std::fputs(s.get(), stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized skew-spectral analysis of oriented graphs"};
  app.set_version_flag("--version", std::string(skewspec_version()));
  app.require_subcommand(1);

  std::string graph_spec;
  bool timing = false;
  bool dot = false;
  unsigned n = 0;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  auto* analyze = app.add_subcommand("analyze", "family verdict, SNF, Q0 and its level");
  analyze->add_option("graph", graph_spec, "pair code n:code, JSON, or file")->required();
  analyze->add_flag("--timing", timing, "add wall-clock timing (output no longer byte-stable)");

  auto* mates = app.add_subcommand("mates", "enumerate generalized cospectral mates");
  mates->add_option("graph", graph_spec, "pair code n:code, JSON, or file")->required();
  mates->add_flag("--dot", dot, "print the relationship diagram as DOT instead of JSON");
  mates->add_flag("--timing", timing, "add wall-clock timing (output no longer byte-stable)");

  auto* verify = app.add_subcommand("verify", "run every invariant and theorem check");
  verify->add_option("graph", graph_spec, "pair code n:code, JSON, or file")->required();

  auto* survey = app.add_subcommand("survey", "classify random oriented graphs (CSV)");
  survey->add_option("--n", n, "number of vertices, 2..10")->required();
  survey->add_option("--count", count, "number of samples")->capture_default_str();
  survey->add_option("--seed", seed, "mt19937_64 seed")->capture_default_str();
  survey->add_option("--threads", threads, "worker threads (0 = default; SKEWSPEC_THREADS caps)");

  auto* oracle = app.add_subcommand("oracle", "compare with exhaustive enumeration, n <= 5");
  oracle->add_option("--n", n, "number of vertices")->required();
  oracle->add_option("--threads", threads, "worker threads (0 = default; SKEWSPEC_THREADS caps)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return SKEWSPEC_E_INPUT;
  }

  const unsigned flags = timing ? static_cast<unsigned>(SKEWSPEC_FLAG_TIMING) : 0u;

  if (analyze->parsed() || mates->parsed() || verify->parsed()) {
    OwnedGraph g;
    if (int st = load_graph(graph_spec, g); st != SKEWSPEC_OK) return st;
    char* raw = nullptr;
    char* raw_dot = nullptr;
    skewspec_status st;
    if (analyze->parsed()) {
      st = skewspec_analyze(g.get(), flags, &raw);
    } else if (mates->parsed()) {
      st = skewspec_mates(g.get(), flags, &raw, dot ? &raw_dot : nullptr);
    } else {
      st = skewspec_verify(g.get(), &raw);
    }
    OwnedString out(raw);
    OwnedString dot_out(raw_dot);
    print(dot ? dot_out : out);
    if (st != SKEWSPEC_OK) return fail(st);
    return 0;
  }

  char* raw = nullptr;
  const skewspec_status st = survey->parsed() ? skewspec_survey(n, count, seed, threads, &raw)
                                              : skewspec_oracle(n, threads, &raw);
  OwnedString out(raw);
  print(out);
  if (st != SKEWSPEC_OK) return fail(st);
  return 0;
}
