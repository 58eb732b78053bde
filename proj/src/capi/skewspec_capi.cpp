#include "skewspec/skewspec.h"

#include <chrono>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "common/error.hpp"
#include "graphs/graph_io.hpp"
#include "report/report.hpp"

struct skewspec_graph {
  skewspec::graphs::OrientedGraph graph;
};

namespace {

using skewspec::Error;
using skewspec::ErrorKind;

thread_local std::string last_error;

skewspec_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Argument:
    case ErrorKind::NotSkewAdjacency:
    case ErrorKind::Dimension:
      return SKEWSPEC_E_INPUT;
    case ErrorKind::NotControllable:
      return SKEWSPEC_E_NOT_CONTROLLABLE;
    case ErrorKind::Capability:
      return SKEWSPEC_E_CAPABILITY;
    case ErrorKind::Singular:
    case ErrorKind::InvalidMatrix:
      return SKEWSPEC_E_INTERNAL;
  }
  return SKEWSPEC_E_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Body>
skewspec_status guarded(Body body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    last_error = std::string(skewspec::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SKEWSPEC_E_INTERNAL;
}

skewspec_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SKEWSPEC_E_INPUT;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

extern "C" {

const char* skewspec_version(void) { return "1.0.0"; }

const char* skewspec_last_error(void) { return last_error.c_str(); }

void skewspec_string_free(char* s) { delete[] s; }

skewspec_status skewspec_graph_parse(const char* text, skewspec_graph** out) {
  if (text == nullptr) return missing("text");
  if (out == nullptr) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = new skewspec_graph{skewspec::graphs::parse_graph(text)};
    return SKEWSPEC_OK;
  });
}

void skewspec_graph_free(skewspec_graph* g) { delete g; }

skewspec_status skewspec_graph_order(const skewspec_graph* g, size_t* out) {
  if (g == nullptr) return missing("graph");
  if (out == nullptr) return missing("out");
  *out = g->graph.order();
  last_error.clear();
  return SKEWSPEC_OK;
}

skewspec_status skewspec_graph_code(const skewspec_graph* g, char** out) {
  if (g == nullptr) return missing("graph");
  if (out == nullptr) return missing("out");
  return guarded([&] {
    *out = copy_out(skewspec::graphs::to_code(g->graph));
    return SKEWSPEC_OK;
  });
}

skewspec_status skewspec_analyze(const skewspec_graph* g, unsigned flags, char** json_out) {
  if (g == nullptr) return missing("graph");
  if (json_out == nullptr) return missing("json_out");
  *json_out = nullptr;
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = skewspec::mates::analyze(g->graph);
    std::optional<double> timing;
    if (flags & SKEWSPEC_FLAG_TIMING) timing = seconds_since(t0);
    *json_out = copy_out(skewspec::report::dump(skewspec::report::analysis_document(r, false, timing)));
    return SKEWSPEC_OK;
  });
}

skewspec_status skewspec_mates(const skewspec_graph* g, unsigned flags, char** json_out, char** dot_out) {
  if (g == nullptr) return missing("graph");
  if (json_out == nullptr) return missing("json_out");
  *json_out = nullptr;
  if (dot_out != nullptr) *dot_out = nullptr;
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = skewspec::mates::enumerate_mates(g->graph);
    std::optional<double> timing;
    if (flags & SKEWSPEC_FLAG_TIMING) timing = seconds_since(t0);
    *json_out = copy_out(skewspec::report::dump(skewspec::report::analysis_document(r, true, timing)));
    if (dot_out != nullptr) *dot_out = copy_out(skewspec::report::relationship_dot(r));
    if (r.verdict == skewspec::mates::Verdict::OutOfFamily) {
      last_error = "graph is outside the family";
      return SKEWSPEC_E_OUT_OF_FAMILY;
    }
    return SKEWSPEC_OK;
  });
}

skewspec_status skewspec_verify(const skewspec_graph* g, char** text_out) {
  if (g == nullptr) return missing("graph");
  if (text_out == nullptr) return missing("text_out");
  *text_out = nullptr;
  return guarded([&] {
    const auto v = skewspec::report::verify(g->graph);
    *text_out = copy_out(v.text);
    if (!v.passed) {
      last_error = "audit check failed";
      return SKEWSPEC_CHECK_FAILED;
    }
    return SKEWSPEC_OK;
  });
}

skewspec_status skewspec_survey(unsigned n, uint64_t count, uint64_t seed, unsigned threads, char** csv_out) {
  if (csv_out == nullptr) return missing("csv_out");
  *csv_out = nullptr;
  return guarded([&] {
    *csv_out = copy_out(skewspec::report::survey_csv(n, static_cast<std::size_t>(count), seed, threads));
    return SKEWSPEC_OK;
  });
}

skewspec_status skewspec_oracle(unsigned n, unsigned threads, char** json_out) {
  if (json_out == nullptr) return missing("json_out");
  *json_out = nullptr;
  return guarded([&] {
    const auto cmp = skewspec::mates::compare_with_oracle(n, threads);
    *json_out = copy_out(skewspec::report::dump(skewspec::report::oracle_document(cmp)));
    if (!cmp.mismatches.empty()) {
      last_error = std::to_string(cmp.mismatches.size()) + " oracle mismatches";
      return SKEWSPEC_CHECK_FAILED;
    }
    return SKEWSPEC_OK;
  });
}

}  // extern "C"
