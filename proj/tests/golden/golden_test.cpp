// Runs every case in cases.txt through the CLI and compares the records with
// <name>.jsonl. Timing fields are dropped before comparing. Set
// SGP_UPDATE_GOLDEN=1 to rewrite the expected files.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgp/cli.hpp"

namespace {

struct Case {
  std::string name;
  int rc = 0;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<Case> load_cases() {
  std::ifstream in(std::string(SGP_GOLDEN_DIR) + "/cases.txt");
  REQUIRE(in.good());
  std::vector<Case> out;
  for (std::string line; std::getline(in, line);) {
    if (trim(line).empty() || line[0] == '#') continue;
    std::istringstream parts(line);
    std::string name, rc, args;
    std::getline(parts, name, '|');
    std::getline(parts, rc, '|');
    std::getline(parts, args);
    Case c{trim(name), std::stoi(trim(rc)), {"sgp"}};
    std::istringstream words(args);
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(std::move(c));
  }
  return out;
}

void strip_timing(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("elapsed_us");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

std::string normalized(const std::string& text) {
  std::istringstream lines(text);
  std::string out;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    strip_timing(j);
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("golden CLI records") {
  const bool update = std::getenv("SGP_UPDATE_GOLDEN") != nullptr;
  const auto cases = load_cases();
  CHECK(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    std::ostringstream out, err;
    const int rc = sgp::cli::run(c.args, out, err);
    CHECK(rc == c.rc);
    const std::string actual = normalized(out.str());
    const std::string path = std::string(SGP_GOLDEN_DIR) + "/" + c.name + ".jsonl";
    if (update) {
      std::ofstream(path) << actual;
      continue;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(actual == expected.str());
  }
}
