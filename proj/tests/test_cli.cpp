#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "sfdga/certify.hpp"
#include "sfdga/cli.hpp"
#include "sfdga/io.hpp"

using namespace sfdga;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / ("sfdga_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = (dir / name).string();
    io::write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("build") {
  Scratch s;
  auto group = s.write("t.pres", "group T = < g | g >\n");
  auto r = run({"build", group, "--construction", "sec4", "--out", s.path("t")});
  CHECK(r.code == cli::kExitOk);
  auto a = io::dga_from_json(io::read_json_file(s.path("t.A.json")));
  auto b = io::dga_from_json(io::read_json_file(s.path("t.B.json")));
  CHECK(a.signature()->size() == 7);
  CHECK(b.differential("z_g").to_string() == "g + 1");  // default ring zmod:2

  auto alg = s.write("a.pres", "algebra A = < x1, x2 | x1*x2 - 1 >\n");
  r = run({"build", alg, "--construction", "sec3", "--ring", "int"});
  CHECK(r.code == cli::kExitOk);
  CHECK(fs::exists(s.path("a.A.json")));
  CHECK(io::dga_from_json(io::read_json_file(s.path("a.A.json"))).differential("r1").to_string() == "x1*x2 - 1");

  r = run({"build", group, "--construction", "sec3"});
  CHECK(r.code == cli::kExitInputError);
  CHECK(contains(r.err, "sec3"));
  CHECK(run({"build", group}).code == cli::kExitInputError);
  CHECK(run({"build", group, "--construction", "sec5"}).code == cli::kExitInputError);
  CHECK(run({"build", s.path("missing.pres"), "--construction", "sec4"}).code == cli::kExitInputError);
  auto broken = s.write("broken.pres", "group T = < g | g^ >\n");
  r = run({"build", broken, "--construction", "sec4"});
  CHECK(r.code == cli::kExitInputError);
  CHECK(contains(r.err, "line 1"));
  CHECK(run({}).code == cli::kExitInputError);
}

TEST_CASE("certify and verify a group") {
  Scratch s;
  auto group = s.write("t.pres", "group T = < g | g >\n");
  REQUIRE(run({"build", group, "--construction", "sec4", "--ring", "int", "--out", s.path("t")}).code == 0);
  auto r = run({"certify", group, "--ring", "int", "--max-bound", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "bound 1"));
  auto cert = s.path("t.cert.json");
  REQUIRE(fs::exists(cert));
  r = run({"verify", cert, s.path("t.A.json"), s.path("t.B.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "PASS"));

  // Flip one sign in the shift of z_g_inv.
  auto j = io::read_json_file(cert);
  auto& shift = j["phi"]["steps"][1]["shift"];
  CHECK(shift == "-g_inv*y1 + y3");
  shift = "g_inv*y1 + y3";
  auto flipped = s.write("flipped.json", io::dump(j));
  r = run({"verify", flipped, s.path("t.A.json"), s.path("t.B.json")});
  CHECK(r.code == cli::kExitVerificationFailed);
  CHECK(contains(r.out, "z_g_inv"));
  CHECK(contains(r.out, "FAIL"));

  // Swapped A and B.
  CHECK(run({"verify", cert, s.path("t.B.json"), s.path("t.A.json")}).code == cli::kExitVerificationFailed);

  // Ring stamp disagrees with the DGA files.
  REQUIRE(run({"build", group, "--construction", "sec4", "--out", s.path("z2")}).code == 0);
  r = run({"verify", cert, s.path("z2.A.json"), s.path("z2.B.json")});
  CHECK(r.code == cli::kExitVerificationFailed);
  CHECK(contains(r.out, "RingMismatch"));

  auto garbage = s.write("garbage.json", "{\"format\": \"sfdga.group-triviality\", \"version\": 1}");
  CHECK(run({"verify", garbage, s.path("t.A.json"), s.path("t.B.json")}).code == cli::kExitInputError);
  auto unknown = s.write("unknown.json", "{\"format\": \"other\"}");
  CHECK(run({"verify", unknown, s.path("t.A.json"), s.path("t.B.json")}).code == cli::kExitInputError);

  // The phi block on its own is a stable tame certificate B -> A.
  auto tame = s.write("phi.json", io::dump(io::read_json_file(cert)["phi"]));
  CHECK(run({"verify", tame, s.path("t.B.json"), s.path("t.A.json")}).code == cli::kExitOk);
  CHECK(run({"verify", tame, s.path("t.A.json"), s.path("t.B.json")}).code == cli::kExitVerificationFailed);
}

TEST_CASE("inconclusive searches are reported honestly") {
  Scratch s;
  auto z = s.write("z.pres", "group Z = < a | >\n");
  auto r = run({"certify", z, "--max-bound", "2"});
  CHECK(r.code == cli::kExitInconclusive);
  CHECK(contains(r.out, "inconclusive"));
  CHECK(contains(r.out, "<= 2"));
  CHECK_FALSE(contains(r.out, "non-trivial"));
  CHECK_FALSE(fs::exists(s.path("z.cert.json")));

  auto two = s.write("two.pres", "algebra A = < x | 2 >\n");
  r = run({"certify", two, "--ring", "int", "--max-bound", "4"});
  CHECK(r.code == cli::kExitInconclusive);
  r = run({"certify", two, "--ring", "rat", "--max-bound", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "bound 0"));
  CHECK(contains(r.out, "u_A = 1/2*r1"));
  REQUIRE(run({"build", two, "--construction", "sec3", "--ring", "rat"}).code == 0);
  CHECK(run({"verify", s.path("two.cert.json"), s.path("two.A.json"), s.path("two.B.json")}).code == cli::kExitOk);

  CHECK(run({"certify", z, "--time-budget", "0"}).code == cli::kExitInputError);
  CHECK(run({"certify", z, "--ring", "zmod:1"}).code == cli::kExitInputError);
}

TEST_CASE("h0, validate, stabilize") {
  Scratch s;
  auto alg = s.write("a.pres", "algebra A = < x1, x2 | x1*x2 - 1, x1^2 >\n");
  REQUIRE(run({"build", alg, "--construction", "sec3", "--ring", "int"}).code == 0);
  auto r = run({"h0", s.path("a.B.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "algebra H0 = < x1, x2 | 1, 1 >\n");
  CHECK(run({"h0", s.path("a.A.json")}).out == "algebra H0 = < x1, x2 | x1*x2 - 1, x1^2 >\n");

  r = run({"validate", s.path("a.A.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "PASS"));

  // Hand-edited: d(e) = a with d(a) = x, so d^2(e) = x.
  auto bad = s.write("bad.json", R"({"format": "sfdga.dga", "version": 1, "ring": "int",
    "generators": [{"name": "x", "degree": 0}, {"name": "a", "degree": 1}, {"name": "e", "degree": 2}],
    "differential": ["0", "x", "a"]})");
  r = run({"validate", bad});
  CHECK(r.code == cli::kExitVerificationFailed);
  CHECK(contains(r.out, "FAIL"));

  r = run({"stabilize", s.path("a.A.json"), "-k", "0", "--out", s.path("s.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "e#1"));
  CHECK(run({"validate", s.path("s.json")}).code == cli::kExitOk);
  CHECK(run({"stabilize", s.path("s.json"), "--k", "-1"}).code == cli::kExitOk);
  auto twice = io::dga_from_json(io::read_json_file(s.path("s.json")));
  CHECK(twice.signature()->size() == 8);
  r = run({"h0", s.path("s.json")});
  CHECK(r.code == cli::kExitInputError);
  INFO(r.err);
  CHECK(contains(r.err, "negative"));

  ::setenv("DGA_COLOR", "1", 1);
  r = run({"validate", s.path("a.A.json")});
  ::unsetenv("DGA_COLOR");
  CHECK(contains(r.out, "\x1b[32mPASS"));
}
