#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "milnorfiber/cli.hpp"
#include "milnorfiber/jsonio.hpp"

using namespace mf;
namespace fs = std::filesystem;

namespace {

struct CliOut {
  int code;
  std::string out, err;
};

CliOut cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int rc = run_cli(args, o, e);
  return {rc, o.str(), e.str()};
}

fs::path tmpdir() {
  auto d = fs::temp_directory_path() / "mf_cli_test";
  fs::create_directories(d);
  return d;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("resolve emits the paper example graph in json") {
  auto r = cli({"resolve", "-f", "x^3", "-g", "y^3", "--format", "json", "--no-meta"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["vertices"].size() == 1);
  CHECK(j["vertices"][0]["m"] == 3);
  CHECK(j["vertices"][0]["l"] == 3);
  CHECK(j["schema_version"] == 1);
}

TEST_CASE("common factors and non-vanishing germs exit with code 2") {
  CHECK(cli({"resolve", "-f", "x^2", "-g", "x"}).code == 2);
  CHECK(cli({"resolve", "-f", "1+x", "-g", "y"}).code == 2);
  CHECK(cli({"invariants", "-f", "x^("}).code == 2);  // parse error
  CHECK(cli({"invariants", "-f", "x"}).code == 2);    // missing -g without --curve-only
}

TEST_CASE("graph json round trip is byte identical") {
  auto r1 = cli({"resolve", "-f", "x^2+y^3", "-g", "x*y", "--format", "json", "--no-meta"});
  REQUIRE(r1.code == 0);
  auto d = tmpdir();
  write_file(d / "g.json", r1.out);
  auto r2 = cli({"resolve", "--graph", (d / "g.json").string(), "--format", "json", "--no-meta"});
  REQUIRE(r2.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("dot output parses back to the same graph") {
  auto rdot = cli({"resolve", "-f", "x^2+y^3", "--curve-only", "--format", "dot", "--no-meta"});
  REQUIRE(rdot.code == 0);
  CHECK(rdot.out.find("(2, 0) e=-3") != std::string::npos);
  auto d = tmpdir();
  write_file(d / "g.dot", rdot.out);
  auto rjson1 = cli({"resolve", "-f", "x^2+y^3", "--curve-only", "--format", "json", "--no-meta"});
  auto rjson2 =
      cli({"resolve", "--graph", (d / "g.dot").string(), "--format", "json", "--no-meta"});
  CHECK(rjson1.out == rjson2.out);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  auto a = cli({"invariants", "-f", "x^2+y^3", "-g", "x*y", "--format", "json", "--no-meta"});
  auto b = cli({"invariants", "-f", "x^2+y^3", "-g", "x*y", "--format", "json", "--no-meta"});
  CHECK(a.out == b.out);
  auto c = cli({"zeta", "-f", "x^2+y^3", "--curve-only", "--no-meta"});
  CHECK(c.out == "(1-t^2)^-1(1-t^3)^-1(1-t^6)\n");
}

TEST_CASE("single-purpose commands") {
  CHECK(cli({"chi", "-f", "x^3", "-g", "y^3", "--no-meta"}).out == "3\n");
  auto cls = cli({"classify", "-f", "x^2*y^2", "-g", "x+y", "--no-meta"});
  CHECK(cls.out.find("bouquet of 3 two-spheres") != std::string::npos);
  auto fib = cli({"fiber", "-f", "x^3", "-g", "y^3", "--no-meta"});
  CHECK(fib.out.find("count 3, twist 3, framing -3") != std::string::npos);
  auto bnd = cli({"boundary", "-f", "x^3", "-g", "y^3", "--no-meta"});
  CHECK(bnd.out.find("coefficient 1/3") != std::string::npos);
  auto cov = cli({"boundary", "-f", "(x^2+y^3)^2", "--curve-only", "--no-meta"});
  CHECK(cov.out.find("2 component(s)") != std::string::npos);
}

TEST_CASE("branches file mode reproduces the graph") {
  auto ex = expand_pair(parse_poly("x^2+y^3"), parse_poly("x*y"), false);
  auto d = tmpdir();
  write_file(d / "branches.json", branches_to_json(ex).dump(2));
  auto direct = cli({"resolve", "-f", "x^2+y^3", "-g", "x*y", "--format", "json", "--no-meta"});
  auto viafile =
      cli({"resolve", "--branches", (d / "branches.json").string(), "--format", "json",
           "--no-meta"});
  REQUIRE(viafile.code == 0);
  CHECK(direct.out == viafile.out);
  auto chi1 = cli({"chi", "--branches", (d / "branches.json").string(), "--no-meta"});
  CHECK(chi1.out == "5\n");
}

TEST_CASE("check command over a corpus directory") {
  auto d = fs::temp_directory_path() / "mf_corpus_test";
  fs::remove_all(d);
  fs::create_directories(d);
  write_file(d / "a.germ", "f = x^2+y^3\ng = x\n");
  write_file(d / "b.germ", "f = x^3\ng = y^3\n");
  auto ok = cli({"check", "--corpus", d.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ALL CHECKS PASSED") != std::string::npos);

  // corrupted golden: that entry fails, run continues, exit code 1
  write_file(d / "b.expected.json", "{\"chi\": 999}");
  auto bad = cli({"check", "--corpus", d.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("a.germ: PASS") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  // unreadable entry reported individually, other entries still run
  fs::remove(d / "b.expected.json");
  write_file(d / "c.germ", "f = x^2\ng = x\n");  // common factor
  auto mixed = cli({"check", "--corpus", d.string()});
  CHECK(mixed.code == 1);
  CHECK(mixed.out.find("a.germ: PASS") != std::string::npos);

  // empty corpus: warning, exit 0
  auto e = fs::temp_directory_path() / "mf_corpus_empty";
  fs::remove_all(e);
  fs::create_directories(e);
  auto empty = cli({"check", "--corpus", e.string()});
  CHECK(empty.code == 0);
  CHECK(empty.err.find("warning") != std::string::npos);
}

TEST_CASE("the shipped corpus passes") {
  auto r = cli({"check", "--corpus", MF_CORPUS_DIR});
  CHECK(r.code == 0);
  CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("meta header appears unless suppressed") {
  auto with = cli({"resolve", "-f", "x", "-g", "y", "--format", "json"});
  CHECK(with.out.find("generated_at") != std::string::npos);
  auto without = cli({"resolve", "-f", "x", "-g", "y", "--format", "json", "--no-meta"});
  CHECK(without.out.find("generated_at") == std::string::npos);
}
