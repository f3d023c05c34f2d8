// End-to-end tests of the pqx binary: exit-code contract and golden output.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PQX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << text;
}

}  // namespace

TEST_CASE("check: exit 0 when the property holds") {
  write_file("/tmp/pqx_star.hg", "5 2\n1 2\n1 3\n1 4\n1 5\n");
  RunResult r = run("check /tmp/pqx_star.hg --p 3 --q 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("holds") != std::string::npos);
}

TEST_CASE("check: exit 1 with a witness when violated") {
  write_file("/tmp/pqx_matching.hg", "6 2\n1 2\n3 4\n5 6\n");
  RunResult r = run("check /tmp/pqx_matching.hg --p 3 --q 2 --json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["violation"]["edge_indices"].size() == 3);
}

TEST_CASE("check: exit 2 on a missing file") {
  CHECK(run("check /tmp/pqx_no_such_file.hg --p 3 --q 2").exit_code == 2);
}

TEST_CASE("check: exit 2 on malformed input") {
  write_file("/tmp/pqx_bad.hg", "3 2\n1 2\n1 2\n");
  CHECK(run("check /tmp/pqx_bad.hg --p 2 --q 2").exit_code == 2);
}

TEST_CASE("construct golden output") {
  RunResult r = run("construct --family split --n 6 --k 2 --t 2 --r 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "6 2\n1 2\n1 3\n2 3\n1 4\n2 4\n1 5\n2 5\n1 6\n2 6\n");

  RunResult kpe = run("construct --family kpe --p 4");
  CHECK(kpe.exit_code == 0);
  CHECK(kpe.out == "4 2\n1 2\n1 3\n2 3\n3 4\n");
}

TEST_CASE("phi matches the worked example") {
  RunResult r = run("phi --n 10 --k 2 --p 5 --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "17\n");

  RunResult j = run("phi --n 10 --k 2 --p 5 --q 3 --json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["phi"] == 17);
  CHECK(parsed["t"] == 2);
  CHECK(parsed["r"] == 0);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["threshold"]["simple"] == 50);
}

TEST_CASE("extremal json carries value, witness, stats and the cover report") {
  RunResult r = run("extremal --n 5 --k 2 --p 5 --q 3 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 7);
  CHECK(j["complete"] == true);
  CHECK(j["method"] == "branch_and_bound");
  CHECK(j["witness"]["edges"].size() == 7);
  CHECK(j["cover_structure"]["found"] == false);  // the n=p extremal graph is not split
  CHECK(j.contains("stats"));

  RunResult o = run("extremal --n 5 --k 2 --p 3 --q 3 --oracle --json");
  auto jo = nlohmann::json::parse(o.out);
  CHECK(jo["value"] == 4);
  CHECK(jo["method"] == "oracle");
}

TEST_CASE("kneser subcommand: petersen battery and emitted files") {
  RunResult r = run("kneser --n 5 --k 2 --p 2 --q 2 --alpha --chi --chi-f --json --emit /tmp/pqx_petersen");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == 10);
  CHECK(j["edges"] == 15);
  CHECK(j["alpha"]["value"] == 4);
  CHECK(j["chi"]["value"] == 3);
  CHECK(j["chi_f"]["lp"]["num"] == 5);
  CHECK(j["chi_f"]["lp"]["den"] == 2);
  CHECK(j["chi_f"]["transitive"]["num"] == 5);

  std::ifstream hg("/tmp/pqx_petersen.hg");
  REQUIRE(hg.good());
  std::string header;
  std::getline(hg, header);
  CHECK(header == "10 2");
  std::ifstream labels("/tmp/pqx_petersen.labels.json");
  REQUIRE(labels.good());
  nlohmann::json lj;
  labels >> lj;
  CHECK(lj["labels"].size() == 10);
  CHECK(lj["labels"][0] == nlohmann::json::array({1, 2}));
}

TEST_CASE("sarkaria subcommand") {
  RunResult r = run("sarkaria --n 6 --k 2 --p 2 --q 2 --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["chi"] == 4);
  CHECK(j["raw"] == 4);
}

TEST_CASE("verify subcommand: exit 0 on success and stable stripped json") {
  RunResult a = run("verify --suite theorem6 --max-p 4 --json --strip-timing");
  CHECK(a.exit_code == 0);
  RunResult b = run("verify --suite theorem6 --max-p 4 --json --strip-timing --workers 4");
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("extremal --n 5").exit_code == 2);       // missing required options
  CHECK(run("frobnicate").exit_code == 2);           // unknown subcommand
  CHECK(run("check /tmp/pqx_star.hg --p 1 --q 2").exit_code == 2);  // p < q
}
