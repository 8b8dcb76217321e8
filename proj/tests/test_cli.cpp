#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grouplet/cli.hpp"
#include "grouplet/report.hpp"

using namespace grouplet;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig base(RunConfig::Command cmd, const std::string& group = "",
               const std::string& field = "") {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.group_spec = group;
  cfg.field_spec = field;
  cfg.format = RunConfig::Format::Json;
  return cfg;
}

}  // namespace

TEST_CASE("check reports the dichotomy") {
  RunResult modular = run_cli(base(RunConfig::Command::Check, "C3", "F3"));
  REQUIRE(modular.code == 0);
  json doc = json::parse(modular.out);
  CHECK(doc["outcome"] == "non_semisimple");
  CHECK(doc["order"] == 3);
  CHECK(doc["characteristic"] == 3);
  CHECK(doc["radical_dimension"] == 2);
  CHECK(doc["certificate"]["method"] == "witness_ideal_closure");

  RunResult semisimple = run_cli(base(RunConfig::Command::Check, "C3", "Q"));
  REQUIRE(semisimple.code == 0);
  json doc2 = json::parse(semisimple.out);
  CHECK(doc2["outcome"] == "semisimple");
  CHECK(doc2["radical_dimension"] == 0);
  CHECK(doc2["certificate"]["gram_determinant"] == "-27");
}

TEST_CASE("check text format mentions the verdict") {
  RunConfig cfg = base(RunConfig::Command::Check, "C6", "F2");
  cfg.format = RunConfig::Format::Text;
  RunResult r = run_cli(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("non_semisimple") != std::string::npos);
  CHECK(r.out.find("sigma") != std::string::npos);
}

TEST_CASE("verdict JSON round-trips through the recheck") {
  for (const auto& [group, field] :
       std::vector<std::pair<std::string, std::string>>{
           {"C3", "Q"}, {"C3", "F3"}, {"C6", "F2"}, {"S3", "F5"}, {"Q8", "F2"}, {"C1", "F2"}}) {
    RunResult r = run_cli(base(RunConfig::Command::Check, group, field));
    REQUIRE(r.code == 0);
    FiniteGroup g = parse_group_spec(group);
    CHECK_NOTHROW(recheck_verdict_json_text(r.out, g));
  }
}

TEST_CASE("recheck rejects tampered reports") {
  RunResult r = run_cli(base(RunConfig::Command::Check, "C3", "Q"));
  FiniteGroup c3 = parse_group_spec("C3");

  json doc = json::parse(r.out);
  doc["certificate"]["gram_determinant"] = "27";  // wrong sign
  CHECK_THROWS_AS(recheck_verdict_json_text(doc.dump(), c3), CertificateViolation);

  json doc2 = json::parse(r.out);
  doc2["outcome"] = "non_semisimple";
  CHECK_THROWS_AS(recheck_verdict_json_text(doc2.dump(), c3), CertificateViolation);

  CHECK_THROWS_AS(recheck_verdict_json_text("{not json", c3), ValidationError);
}

TEST_CASE("radical command") {
  RunResult exact = run_cli(base(RunConfig::Command::Radical, "C3", "F3"));
  REQUIRE(exact.code == 0);
  json doc = json::parse(exact.out);
  CHECK(doc["method"] == "oracle");
  CHECK(doc["dimension"] == 2);
  CHECK(doc["exact"] == true);
  CHECK(doc["basis"].size() == 2);
  CHECK(doc["nilpotency_indices"].size() == 2);

  RunResult trivial = run_cli(base(RunConfig::Command::Radical, "S3", "F5"));
  json doc2 = json::parse(trivial.out);
  CHECK(doc2["method"] == "gram_kernel");
  CHECK(doc2["dimension"] == 0);

  // modular but oracle-infeasible: the witness lower bound
  RunResult witness = run_cli(base(RunConfig::Command::Radical, "C2xC2xC2xC2xC2", "F2"));
  json doc3 = json::parse(witness.out);
  CHECK(doc3["method"] == "witness_ideal_closure");
  CHECK(doc3["exact"] == false);
  CHECK(doc3["dimension"] >= 1);
}

TEST_CASE("embed emits the circulant matrix") {
  RunConfig cfg = base(RunConfig::Command::Embed, "C3", "Q");
  cfg.element_literal = "1,2,3";
  RunResult r = run_cli(cfg);
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  json expected = json::array({{"1", "2", "3"}, {"3", "1", "2"}, {"2", "3", "1"}});
  CHECK(doc == expected);
}

TEST_CASE("embed then extract round-trips through a matrix file") {
  std::string path = "/tmp/grouplet_test_matrix.json";
  RunConfig emb = base(RunConfig::Command::Embed, "Q8", "F5");
  emb.element_literal = "1,2,3,4,0,1,2,3";
  emb.out_path = path;
  REQUIRE(run_cli(emb).code == 0);

  RunConfig ext = base(RunConfig::Command::Extract, "Q8", "F5");
  ext.matrix_path = path;
  RunResult r = run_cli(ext);
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["coefficients"] ==
        json::array({"1", "2", "3", "4", "0", "1", "2", "3"}));

  // tamper with one off-diagonal entry: extract must reject
  std::ifstream in(path);
  json m;
  in >> m;
  in.close();
  m[0][1] = "4";
  {
    std::ofstream outf(path);
    outf << m.dump();
  }
  RunResult bad = run_cli(ext);
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not Q8-circulant") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("extract requires an existing matrix file") {
  RunConfig ext = base(RunConfig::Command::Extract, "C2", "Q");
  ext.matrix_path = "/tmp/grouplet_definitely_missing.json";
  RunResult r = run_cli(ext);
  CHECK(r.code == 1);
  CHECK(r.err.find("does not exist") != std::string::npos);
}

TEST_CASE("domain errors exit with code 1 and a message") {
  CHECK(run_cli(base(RunConfig::Command::Check, "Z5", "Q")).code == 1);
  CHECK(run_cli(base(RunConfig::Command::Check, "C3", "F4")).code == 1);
  CHECK(run_cli(base(RunConfig::Command::Check, "C200", "Q")).code == 1);
  RunResult r = run_cli(base(RunConfig::Command::Check, "C3", "F4"));
  CHECK(r.err.find("F4") != std::string::npos);

  RunConfig missing = base(RunConfig::Command::Embed, "C3", "Q");
  CHECK(run_cli(missing).code == 1);  // no --element
}

TEST_CASE("sweep is deterministic for a fixed seed") {
  RunConfig cfg = base(RunConfig::Command::Sweep);
  cfg.seed = 42;
  RunResult first = run_cli(cfg);
  RunResult second = run_cli(cfg);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);  // byte-identical

  json doc = json::parse(first.out);
  CHECK(doc["seed"] == 42);
  CHECK(doc["cells"].size() == 21 * 5);
  for (const auto& cell : doc["cells"]) {
    bool modular = cell["outcome"] == "non_semisimple";
    int order = cell["order"].get<int>();
    std::uint64_t character = cell["characteristic"].get<std::uint64_t>();
    CHECK(modular == (character != 0 && order % static_cast<int>(character) == 0));
  }
}

TEST_CASE("sweep cells pass the certificate recheck") {
  RunConfig cfg = base(RunConfig::Command::Sweep);
  RunResult r = run_cli(cfg);
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  // spot-check a handful of cells end to end
  for (std::size_t i = 0; i < doc["cells"].size(); i += 17) {
    const json& cell = doc["cells"][i];
    FiniteGroup g = parse_group_spec(cell["group"].get<std::string>());
    CHECK_NOTHROW(recheck_verdict_json_text(cell.dump(), g));
  }
}

TEST_CASE("selftest reports pass counts and exits cleanly") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Selftest;
  cfg.format = RunConfig::Format::Text;
  RunResult r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest: 11 passed, 0 failed") != std::string::npos);
}

TEST_CASE("output lands in --out when configured") {
  std::string path = "/tmp/grouplet_test_out.json";
  RunConfig cfg = base(RunConfig::Command::Check, "C2", "F2");
  cfg.out_path = path;
  RunResult r = run_cli(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  CHECK(doc["outcome"] == "non_semisimple");
  std::remove(path.c_str());
}
