#include "colorlie/cli.hpp"
#include "colorlie/verify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace colorlie;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = COLORLIE_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir(const std::string &name) {
  const auto dir = fs::temp_directory_path() / ("colorlie_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("exit codes") {
  CHECK(run({"check", data_dir + "/sl2c.json"}).code == 0);
  CHECK(run({"check", data_dir + "/sl2_graded.json"}).code == 0);
  CHECK(run({"check", data_dir + "/example_triple.json"}).code == 0);

  const auto bad = run({"check", data_dir + "/bad_cocycle.json"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("E_COCYCLE") != std::string::npos);

  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", data_dir + "/missing.json"}).code == 2);
  CHECK(run({"pbw", "sl2c", "a1 +"}).code == 2);
  CHECK(run({"rep", "verify", "W:4"}).code == 1);
  CHECK(run({"rep", "verify", "Q:1"}).code == 2);

  const auto incompatible =
      run({"twist", data_dir + "/sl2_graded.json", data_dir + "/incompatible_triple.json"});
  CHECK(incompatible.code == 1);
  CHECK(incompatible.out.find("E_INCOMPATIBLE_TRIPLE") != std::string::npos);
}

TEST_CASE("truncated JSON is a parse error") {
  const auto dir = scratch_dir("truncated");
  const auto text = slurp(data_dir + "/sl2c.json");
  std::ofstream(dir / "cut.json") << text.substr(0, text.size() / 2);
  const auto r = run({"check", (dir / "cut.json").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("E_PARSE") != std::string::npos);
}

TEST_CASE("twist reproduces the sl2c fixture") {
  const auto dir = scratch_dir("twist");
  const auto out = dir / "twisted.json";
  const auto r = run({"twist", data_dir + "/sl2_graded.json", data_dir + "/example_triple.json",
                      "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("<a1,a2> = a3") != std::string::npos);
  CHECK(slurp(out) == slurp(data_dir + "/sl2c.json"));

  // the trivial triple leaves the algebra unchanged
  const auto L = builtin_algebra("sl2c");
  const auto &G = L.group();
  const TwistTriple trivial{Cocycle::trivial(G), GroupMorphism::identity(G), L.eps()};
  std::ofstream(dir / "trivial.json") << dump_canonical(to_json(trivial));
  const auto same = dir / "same.json";
  CHECK(run({"twist", data_dir + "/sl2c.json", (dir / "trivial.json").string(), "--out",
             same.string()})
            .code == 0);
  CHECK(slurp(same) == slurp(data_dir + "/sl2c.json"));
}

TEST_CASE("pbw") {
  const auto r = run({"pbw", "sl2c", "a2*a1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1*a1*a2 + a3\n", 0) == 0);
  CHECK(run({"pbw", data_dir + "/sl2c.json", "a1*a2 + a2*a1"}).out.rfind("a3\n", 0) == 0);
  CHECK(run({"pbw", "sl2", "f*e"}).out.rfind("e*f + -1*h\n", 0) == 0);
}

TEST_CASE("rep") {
  const auto d = run({"rep", "decompose", "K2V:2"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("W3 + W3\n", 0) == 0);
  CHECK(run({"rep", "decompose", "K2V:3"}).out.rfind("V2(1,1) + V2(1,-1) + V2(-1,1) + V2(-1,-1)\n",
                                                    0) == 0);
  for (const char *m : {"W:5", "V:4:(1,-1)", "sl2:3", "K2V:2"})
    CHECK(run({"rep", "verify", m}).code == 0);
  CHECK(run({"rep", "iso", "V:2:(1,1)", "V:2:(1,-1)"}).out.find("dimension 0") !=
        std::string::npos);
  CHECK(run({"rep", "iso", "V:2:(1,1)", "V:2:(1,1)"}).out.find("dimension 1") !=
        std::string::npos);

  const auto dir = scratch_dir("rep");
  const auto file = dir / "w3.json";
  CHECK(run({"rep", "show", "W:3", "--out", file.string()}).code == 0);
  CHECK(run({"rep", "decompose", file.string()}).out.rfind("W3\n", 0) == 0);
}

TEST_CASE("JSON reports") {
  const auto r = run({"--json", "check", data_dir + "/sl2c.json"});
  CHECK(r.code == 0);
  const auto rep = command_report_from_json(parse_json_text(r.out));
  CHECK(rep.command == "check");
  CHECK(rep.status == "pass");
  CHECK(rep.checks.size() == 4);
  CHECK(to_json(rep) == parse_json_text(r.out));

  const auto bad = run({"check", "--json", data_dir + "/bad_cocycle.json"});
  const auto b = command_report_from_json(parse_json_text(bad.out));
  CHECK(b.status == "fail");
  CHECK(b.checks.back().report.code == "E_COCYCLE");
  CHECK_FALSE(b.checks.back().report.witness.empty());

  const auto err = run({"--json", "check", data_dir + "/missing.json"});
  CHECK(err.code == 2);
  CHECK(command_report_from_json(parse_json_text(err.out)).status == "error");
}

TEST_CASE("verify-paper") {
  const auto r = run({"verify-paper", "--nmax", "3", "--json"});
  CHECK(r.code == 0);
  const auto rep = command_report_from_json(parse_json_text(r.out));
  CHECK(rep.status == "pass");
  CHECK(rep.checks.size() == verify_sections().size());
  CHECK(rep.data["nmax"] == 3);

  const auto text = run({"verify-paper", "--nmax", "2", "--fixtures", data_dir});
  CHECK(text.code == 0);
  CHECK(text.out.find("passed, status pass") != std::string::npos);
  CHECK(run({"verify-paper", "--nmax", "0"}).code == 2);
}

TEST_CASE("verify-paper against corrupted fixtures") {
  const auto dir = scratch_dir("fixtures");
  for (const char *name : {"sl2_graded.json", "sl2c.json", "example_triple.json"})
    fs::copy_file(data_dir + "/" + name, dir / name);
  auto j = parse_json_text(slurp(dir / "sl2c.json"));
  for (auto &entry : j["brackets"])
    if (entry[0] == 1 && entry[1] == 2)
      entry[3] = "2";
  std::ofstream(dir / "sl2c.json", std::ios::trunc) << dump_canonical(j);

  const auto r = run({"verify-paper", "--nmax", "2", "--fixtures", dir.string(), "--json"});
  CHECK(r.code == 1);
  const auto rep = command_report_from_json(parse_json_text(r.out));
  CHECK(rep.status == "fail");
  bool named = false;
  for (const auto &s : rep.checks)
    if (!s.report.passed) {
      CHECK_FALSE(s.report.code.empty());
      named = true;
    }
  CHECK(named);
}
