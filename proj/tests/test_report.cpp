#include <catch_amalgamated.hpp>

#include <complex>
#include <regex>
#include <string>

#include "report.hpp"

using namespace modschwarz;
using report::Json;

namespace {

const std::regex kRational(R"(^-?[0-9]+/[0-9]+$)");
const std::regex kDecimal(R"(^-?(inf|nan|[0-9]+(\.[0-9]+)?(e[-+][0-9]+)?)$)");

// Walks the tree and collects every string stored under `key`.
void collect(const Json& v, const std::string& key, std::vector<Json>& out) {
  if (v.is_object()) {
    for (const auto& [k, value] : v.items()) {
      if (k == key) out.push_back(value);
      collect(value, key, out);
    }
  } else if (v.is_array()) {
    for (const Json& e : v) collect(e, key, out);
  }
}

void require_schema(const Json& tree, const std::string& command) {
  REQUIRE(tree.is_object());
  std::vector<std::string> keys;
  for (const auto& [k, v] : tree.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "params", "results", "checks"});
  CHECK(tree["command"] == command);
  CHECK(tree["params"].contains("m"));
  CHECK(tree["params"].contains("n"));
  CHECK(tree["params"].contains("terms"));
  for (const Json& c : tree["checks"]) {
    CHECK(c["name"].is_string());
    CHECK(c["pass"].is_boolean());
    CHECK(c["detail"].is_string());
  }
}

void require_round_trip(const Json& tree) {
  const std::string once = tree.dump(2);
  CHECK(Json::parse(once).dump(2) == once);
  const std::string compact = tree.dump();
  CHECK(Json::parse(compact).dump() == compact);
}

}  // namespace

TEST_CASE("solve report", "[report]") {
  const Json tree = report::solve_report(7, 1, 12).to_json();
  require_schema(tree, "solve");
  require_round_trip(tree);
  const Json& r = tree["results"];
  CHECK(r["offset"] == "1/7");
  CHECK(r["schwarz_constant"] == "-1/98");
  CHECK(r["ode_parameter"] == "-1/196");
  CHECK(r["coefficients"].size() == 12);
  CHECK(r["coefficients"][0] == "1/1");
  CHECK(r["coefficients"][1] == "-5/14");
  CHECK(r["levels"][0]["wronskian"]["e"] == "1/1");
  CHECK(r["convention"]["schwarz_constant_under_2D"] == "-2/49");
  for (const Json& c : r["coefficients"]) CHECK(std::regex_match(c.get<std::string>(), kRational));
}

TEST_CASE("every rational field is p/q", "[report]") {
  const Json tree = report::vvmf_report(7, 9, 8).to_json();
  require_schema(tree, "vvmf");
  require_round_trip(tree);
  CHECK(tree["results"]["weight"] == "11/1");
  CHECK(tree["results"]["c2"] == "24/19");
  for (const std::string key : {"offset", "weight", "c1", "c2", "c", "e", "first_offset", "second_offset"}) {
    std::vector<Json> found;
    collect(tree, key, found);
    CHECK_FALSE(found.empty());
    for (const Json& v : found) {
      INFO(key << " = " << v.dump());
      REQUIRE(v.is_string());
      CHECK(std::regex_match(v.get<std::string>(), kRational));
    }
  }
}

TEST_CASE("verify report names every check", "[report]") {
  const report::Report rep = report::verify_report(8, 3, 16);
  CHECK(rep.all_pass());
  const Json tree = rep.to_json();
  require_schema(tree, "verify");
  require_round_trip(tree);
  std::vector<std::string> names;
  for (const Json& c : tree["checks"]) names.push_back(c["name"]);
  for (const char* expected : {"minimal form shape", "wronskian level 0", "c2 = 12n'/(m+6n')",
                               "schwarzian proportional to E4", "ode y1", "ode y2", "y1/y2 = h",
                               "invariance under 1/h", "invariance under a*h", "numeric cross-check at tau=2i"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  CHECK(tree["results"]["c1"]["agree"] == false);
}

TEST_CASE("eval report uses decimal-string complex pairs", "[report]") {
  const Json tree = report::eval_report(7, 1, std::complex<double>{0, 2}, 30, 53).to_json();
  require_schema(tree, "eval");
  require_round_trip(tree);
  for (const char* key : {"tau", "via_series", "via_hypergeom"}) {
    const Json& z = tree["results"][key];
    std::vector<std::string> keys;
    for (const auto& [k, v] : z.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"re", "im"});
    CHECK(std::regex_match(z["re"].get<std::string>(), kDecimal));
    CHECK(std::regex_match(z["im"].get<std::string>(), kDecimal));
  }
  CHECK(std::stod(tree["results"]["rel_error"].get<std::string>()) < 1e-12);
}

TEST_CASE("eval outside the disk fails the named check", "[report]") {
  const report::Report rep = report::eval_report(7, 1, std::complex<double>{0.3, 1.2}, 20, 53);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.first_failure());
  CHECK(rep.first_failure()->rfind("hypergeometric route: OutsideDisk", 0) == 0);
}

TEST_CASE("decimal strings parse back to the same value", "[report]") {
  for (const double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(report::decimal(x)) == x);
  for (const long double x : {0.1L, 1.0L / 3.0L}) CHECK(std::stold(report::decimal(x)) == x);
}

TEST_CASE("text rendering mirrors the tree", "[report]") {
  const Json tree = report::solve_report(7, 2, 6).to_json();
  const std::string text = report::render_text(tree);
  CHECK(text.rfind("command: solve\n", 0) == 0);
  CHECK(text.find("  offset: 2/7\n") != std::string::npos);
  CHECK(text.find("  schwarz_constant: -2/49\n") != std::string::npos);
  CHECK(text.find("  [PASS] solve") != std::string::npos);
}
