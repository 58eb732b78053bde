#include <string>

#include "doctest.h"
#include "json.hpp"
#include "skewspec/skewspec.h"

namespace {

struct Graph {
  skewspec_graph* g = nullptr;
  skewspec_status status;
  explicit Graph(const char* text) : status(skewspec_graph_parse(text, &g)) {}
  ~Graph() { skewspec_graph_free(g); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  skewspec_string_free(s);
  return out;
}

const char* kExample2 =
    R"({"skew": [[0,1,-1,0,0,0],[-1,0,0,1,-1,0],[1,0,0,1,1,-1],[0,-1,-1,0,-1,1],[0,1,-1,1,0,0],[0,0,1,-1,0,0]]})";

}  // namespace

TEST_CASE("parse and code") {
  Graph g("3:+0-");
  REQUIRE(g.status == SKEWSPEC_OK);
  size_t n = 0;
  CHECK(skewspec_graph_order(g.g, &n) == SKEWSPEC_OK);
  CHECK(n == 3);
  char* code = nullptr;
  CHECK(skewspec_graph_code(g.g, &code) == SKEWSPEC_OK);
  CHECK(take(code) == "3:+0-");
  CHECK(std::string(skewspec_last_error()).empty());

  Graph bad("3:+x-");
  CHECK(bad.status == SKEWSPEC_E_INPUT);
  CHECK(bad.g == nullptr);
  CHECK(std::string(skewspec_last_error()).find("position 3") != std::string::npos);

  Graph not_skew(R"({"skew": [[0,1],[1,0]]})");
  CHECK(not_skew.status == SKEWSPEC_E_INPUT);
  CHECK(skewspec_graph_parse(nullptr, nullptr) == SKEWSPEC_E_INPUT);
  CHECK(std::string(skewspec_version()) == "1.0.0");
}

TEST_CASE("analyze and mates documents") {
  Graph g(kExample2);
  REQUIRE(g.status == SKEWSPEC_OK);
  char* json = nullptr;
  CHECK(skewspec_analyze(g.g, 0, &json) == SKEWSPEC_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc.at("schema") == "skewspec/1");
  CHECK(doc.at("q0").at("level") == "21");
  CHECK_FALSE(doc.contains("timing"));
  CHECK_FALSE(doc.contains("mates"));

  char* dot = nullptr;
  CHECK(skewspec_mates(g.g, 0, &json, &dot) == SKEWSPEC_OK);
  const std::string text = take(json);
  const auto full = nlohmann::json::parse(text);
  CHECK(full.at("verdict") == "NOT_WDGSS");
  CHECK(full.at("mates").size() == 3);
  CHECK(full.at("relationship_edges").size() == 6);
  CHECK(full.dump(2) + "\n" == text);  // sorted keys, re-parse identical
  const std::string diagram = take(dot);
  CHECK(diagram.find("digraph mates") == 0);
  CHECK(diagram.find("label=\"Q(21)\"") != std::string::npos);

  CHECK(skewspec_mates(g.g, SKEWSPEC_FLAG_TIMING, &json, nullptr) == SKEWSPEC_OK);
  CHECK(nlohmann::json::parse(take(json)).contains("timing"));
}

TEST_CASE("status codes") {
  Graph empty("3:000");
  char* out = nullptr;
  CHECK(skewspec_analyze(empty.g, 0, &out) == SKEWSPEC_E_NOT_CONTROLLABLE);
  CHECK(out == nullptr);
  CHECK(skewspec_mates(empty.g, 0, &out, nullptr) == SKEWSPEC_E_NOT_CONTROLLABLE);

  // controllable but det W / 2^floor(n/2) even
  Graph even("4:++++++");
  CHECK(skewspec_mates(even.g, 0, &out, nullptr) == SKEWSPEC_E_OUT_OF_FAMILY);
  CHECK(nlohmann::json::parse(take(out)).at("verdict") == "OUT_OF_FAMILY");

  CHECK(skewspec_oracle(6, 1, &out) == SKEWSPEC_E_CAPABILITY);
  CHECK(skewspec_oracle(1, 1, &out) == SKEWSPEC_E_INPUT);
  CHECK(skewspec_survey(11, 3, 1, 1, &out) == SKEWSPEC_E_INPUT);
  CHECK(skewspec_survey(1, 3, 1, 1, &out) == SKEWSPEC_E_INPUT);
  CHECK(skewspec_analyze(nullptr, 0, &out) == SKEWSPEC_E_INPUT);
}

TEST_CASE("verify, survey and oracle") {
  Graph g(kExample2);
  char* out = nullptr;
  CHECK(skewspec_verify(g.g, &out) == SKEWSPEC_OK);
  const std::string text = take(out);
  CHECK(text.find("result PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  CHECK(skewspec_survey(6, 30, 1, 1, &out) == SKEWSPEC_OK);
  const std::string a = take(out);
  CHECK(skewspec_survey(6, 30, 1, 4, &out) == SKEWSPEC_OK);
  CHECK(take(out) == a);
  CHECK(a.rfind("code,in_family,ell0,t,mate_count,verdict\n", 0) == 0);

  CHECK(skewspec_oracle(3, 2, &out) == SKEWSPEC_OK);
  CHECK(nlohmann::json::parse(take(out)).at("mismatch_count") == 0);
}
