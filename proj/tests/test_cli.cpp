#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "liedense/errors.hpp"
#include "liedense/json_io.hpp"
#include "liedense/representation.hpp"
#include "liedense/root_system.hpp"

using namespace liedense;

namespace {

const std::string kCli = LIEDENSE_CLI_PATH;
const std::filesystem::path kTmp = LIEDENSE_TEST_TMPDIR;

int run(const std::string& args, const std::string& capture_name = "") {
  std::filesystem::create_directories(kTmp);
  std::string cmd = kCli + " " + args;
  std::filesystem::path cap =
      kTmp / (capture_name.empty() ? std::string("discard.txt") : capture_name);
  cmd += " > " + cap.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ErrorKind load_kind(const std::string& path) {
  try {
    load_representation_file(path);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("rational matrices serialize as string arrays") {
  QVec v(2);
  v(0) = Rational(1, 2);
  v(1) = Rational(-3);
  Json jv = json_vec(v);
  CHECK(jv.dump() == R"(["1/2","-3"])");

  QMat m(1, 2);
  m(0, 0) = Rational(0);
  m(0, 1) = Rational(7, 3);
  CHECK(json_mat(m).dump() == R"([["0","7/3"]])");

  CHECK(json_dump(Json{{"a", 1}}).back() == '\n');
}

TEST_CASE("module files round-trip through JSON") {
  Representation rep = adjoint_rep(LieAlgebra::build(RootSystem::build("A2")));
  Json j = json_representation(rep);
  CHECK(j["algebra"] == "A2");
  CHECK(j["dim"] == 8);
  CHECK(j["matrices"].size() == 8);

  Representation back = representation_from_json(j);
  CHECK(back.dim == rep.dim);
  CHECK(back.algebra->root_system().type() == rep.algebra->root_system().type());
  for (int b = 0; b < rep.algebra->dim(); ++b) CHECK(back.matrix(b) == rep.matrix(b));

  std::filesystem::create_directories(kTmp);
  std::string path = (kTmp / "roundtrip.json").string();
  save_representation_file(rep, path);
  Representation loaded = load_representation_file(path);
  CHECK(loaded.dim == rep.dim);
  for (int b = 0; b < rep.algebra->dim(); ++b) CHECK(loaded.matrix(b) == rep.matrix(b));

  // Identical content on a rewrite: deterministic serialization.
  std::string again = (kTmp / "roundtrip2.json").string();
  save_representation_file(loaded, again);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("the module loader rejects malformed input as a load failure") {
  std::filesystem::create_directories(kTmp);
  auto stage = [&](const std::string& name, const std::string& content) {
    std::string path = (kTmp / name).string();
    std::ofstream(path) << content;
    return path;
  };

  CHECK(load_kind((kTmp / "does-not-exist.json").string()) == ErrorKind::LoadError);
  CHECK(load_kind(stage("garbage.json", "not json {")) == ErrorKind::LoadError);
  CHECK(load_kind(stage("nodim.json", R"({"algebra": "A1", "matrices": {}})")) ==
        ErrorKind::LoadError);
  CHECK(load_kind(stage("badtype.json", R"({"algebra": "Q9", "dim": 2, "matrices": {}})")) ==
        ErrorKind::LoadError);
  CHECK(load_kind(stage("missinglabel.json",
                        R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"],["0","0"]],
                            "F1": [["0","0"],["1","0"]], "X9": [["0","0"],["0","0"]]}})")) ==
        ErrorKind::LoadError);
  CHECK(load_kind(stage("badrow.json",
                        R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"]],
                            "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","-1"]]}})")) ==
        ErrorKind::LoadError);
  CHECK(load_kind(stage("badliteral.json",
                        R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","x"],["0","0"]],
                            "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","-1"]]}})")) ==
        ErrorKind::LoadError);
  // Valid shapes but the bracket relations fail.
  CHECK(load_kind(stage("nothom.json",
                        R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"],["0","0"]],
                            "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","0"]]}})")) ==
        ErrorKind::LoadError);

  // The standard rank-one module passes validation.
  std::string good = stage("good.json",
                           R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"],["0","0"]],
                               "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","-1"]]}})");
  Representation rep = load_representation_file(good);
  CHECK(rep.dim == 2);
  CHECK(homomorphism_ok(rep));
}

TEST_CASE("report serializers expose the campaign fields") {
  RootSystem b2 = RootSystem::build("B2");
  Json momega = json_momega(verify_momega(b2, 6));
  CHECK(momega["type"] == "B2");
  CHECK(momega["all_ok"] == true);
  for (const Json& c : momega["cases"]) {
    if (c["part"] == "c")
      CHECK(c.contains("verification"));
    else {
      CHECK(c.contains("witness"));
      CHECK(c.contains("value"));
    }
  }

  RootSystem a2 = RootSystem::build("A2");
  Json even = json_even_coroot(verify_even_coroot(a2, 5));
  CHECK(even["checked"] == 10);             // pairs (c1, c2) >= 1 with sum <= 5
  CHECK(even["skipped_multiples"] == 10);   // m * omega_i, m = 1..5, i = 1, 2
  CHECK(even["all_ok"] == true);
  CHECK(even["failures"].empty());

  // Rank one admits no weight with two nonzero coordinates.
  EvenCorootReport rank1 = verify_even_coroot(RootSystem::build("A1"), 5);
  CHECK(rank1.checked == 0);
  CHECK(rank1.all_ok);
  CHECK(verify_even_coroot(RootSystem::build("G2"), 5).all_ok);

  Json cert = json_certificate(certify(sl2_irrep(2)));
  CHECK(cert["generated"] == true);
  CHECK(cert["target_dim"] == 9);
  CHECK(cert["closure_dims"].is_array());
}

TEST_CASE("polynomials serialize as exponent-keyed coefficient maps") {
  Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 0);
  p += GaussianRational(Rational(1, 2), Rational(3)) * Polynomial::variable(2, 1);
  Json j = json_polynomial(p);
  CHECK(j["nvars"] == 2);
  CHECK(j["coefficients"]["2,0"] == "1");
  CHECK(j["coefficients"]["0,1"] == "1/2+3i");
}

TEST_CASE("verification subcommands succeed on sound inputs") {
  CHECK(run("roots G2 --format text", "roots.txt") == 0);
  std::string roots = slurp(kTmp / "roots.txt");
  CHECK(roots.find("12 roots") != std::string::npos);

  CHECK(run("roots --type B2", "rootsb2.txt") == 0);
  CHECK(slurp(kTmp / "rootsb2.txt").find("\"root_count\": 8") != std::string::npos);

  CHECK(run("pairing --type F4") == 0);
  CHECK(run("lattice --type A3 --m-max 4") == 0);
  CHECK(run("momega --type A3 --m-max 6") == 0);
  CHECK(run("even-coroot --type B2 --m-max 4") == 0);
  CHECK(run("chevalley --type A2") == 0);
  CHECK(run("old-sl2 --rep sl2:6") == 0);
  CHECK(run("quadric --rank 2") == 0);
  CHECK(run("euler") == 0);
  CHECK(run("symplectic --rank 2") == 0);

  CHECK(run("certify --type A2 --rep adjoint", "certify.txt") == 0);
  CHECK(slurp(kTmp / "certify.txt").find("\"generated\": true") != std::string::npos);
  CHECK(run("certify --rep sl2:4") == 0);
  CHECK(run("irrep --type A1 --lambda 2") == 0);
}

TEST_CASE("usage mistakes exit with the usage code") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("roots --bogus-flag") == 2);
  CHECK(run("roots") == 2);                       // no type given
  CHECK(run("roots --type A") == 2);              // family letter without --rank
  CHECK(run("roots --type A2 --rank 3") == 2);    // conflicting rank
  CHECK(run("roots --type A2 --format yaml") == 2);
  CHECK(run("certify --type A2 --rep banana") == 2);
  CHECK(run("certify --type A2 --rep sl2:4") == 2);  // rank-one module, wrong type
  CHECK(run("old-sl2 --rep adjoint") == 2);
  CHECK(run("momega --type A2 --m-max 0") == 2);
}

TEST_CASE("rejected inputs and failed checks exit with the failure code") {
  std::filesystem::create_directories(kTmp);
  std::string bad = (kTmp / "corrupt.json").string();
  std::ofstream(bad) << R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"],["0","0"]],
                            "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","0"]]}})";
  CHECK(run("certify --rep file:" + bad, "corrupt-out.txt") == 1);
  CHECK(slurp(kTmp / "corrupt-out.txt").find("LoadError") != std::string::npos);

  // A sound module file certifies end to end.
  std::string good = (kTmp / "standard.json").string();
  std::ofstream(good) << R"({"algebra": "A1", "dim": 2, "matrices": {"E1": [["0","1"],["0","0"]],
                             "F1": [["0","0"],["1","0"]], "H1": [["1","0"],["0","-1"]]}})";
  CHECK(run("certify --rep file:" + good) == 0);

  // An odd highest weight above one is reported as not generated.
  CHECK(run("certify --rep sl2:3", "notgen.txt") == 1);
  CHECK(slurp(kTmp / "notgen.txt").find("\"generated\": false") != std::string::npos);
}

TEST_CASE("identical configurations write byte-identical reports") {
  std::filesystem::path d1 = kTmp / "rep1", d2 = kTmp / "rep2";
  CHECK(run("certify --type B2 --rep adjoint --out " + d1.string()) == 0);
  CHECK(run("certify --type B2 --rep adjoint --out " + d2.string()) == 0);
  CHECK(slurp(d1 / "certify-B2-adjoint.json") == slurp(d2 / "certify-B2-adjoint.json"));

  CHECK(run("euler --out " + d1.string()) == 0);
  CHECK(run("euler --out " + d2.string()) == 0);
  CHECK(slurp(d1 / "euler.json") == slurp(d2 / "euler.json"));

  CHECK(run("momega --type E6 --m-max 6 --out " + d1.string()) == 0);
  CHECK(run("momega --type E6 --m-max 6 --out " + d2.string()) == 0);
  CHECK(slurp(d1 / "momega-E6.json") == slurp(d2 / "momega-E6.json"));
}
