#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string tag = "cli_" + std::to_string(counter++);
  const std::string outPath = tag + ".out", errPath = tag + ".err";
  const std::string cmd =
      std::string("\"") + CLI_BINARY_PATH + "\" " + args + " > " + outPath + " 2> " + errPath;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(outPath);
  r.err = slurp(errPath);
  std::remove(outPath.c_str());
  std::remove(errPath.c_str());
  return r;
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const std::string kGvPsd = "cli_gv_psd.json";      // x0^2 + x1^2
const std::string kGvIndef = "cli_gv_indef.json";  // x0^2 - x1^2

struct Fixtures {
  Fixtures() {
    writeFile(kGvPsd, R"({"m": 2, "n": 2, "v": [1, 0, 1]})");
    writeFile(kGvIndef, R"({"m": 2, "n": 2, "v": [1, 0, -1]})");
  }
} const fixtures;

}  // namespace

TEST_CASE("eval reports both evaluation routes") {
  const auto r = run("eval --gv " + kGvPsd + " --x 3 4");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("value").get<double>() == doctest::Approx(25.0));
  CHECK(j.at("conv_side").get<double>() == doctest::Approx(25.0));
  CHECK(j.at("tensor_side").get<double>() == doctest::Approx(25.0));
  CHECK(j.at("rel_diff").get<double>() <= 1e-10);
}

TEST_CASE("check-hsos certifies the definite form with Q close to identity") {
  const auto r = run("check-hsos --gv " + kGvPsd + " --quiet");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("status") == "certified");
  const auto q = j.at("Q");
  CHECK(q.at(0).at(0).get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(q.at(1).at(1).get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(q.at(0).at(1).get<double>()) <= 1e-6);
  CHECK(j.at("config").at("rng") == "mt19937-64/box-muller");
}

TEST_CASE("check-hsos refutes the indefinite form with a coordinate witness") {
  const auto r = run("check-hsos --gv " + kGvIndef + " --quiet");
  REQUIRE(r.exitCode == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("status") == "refuted");
  CHECK(j.at("witness_value").get<double>() < 0);
  const auto w = j.at("witness");
  CHECK(std::abs(w.at(0).get<double>()) == doctest::Approx(0.0));
  CHECK(std::abs(w.at(1).get<double>()) == doctest::Approx(1.0));
}

TEST_CASE("tensorize output feeds straight into check-sos") {
  const auto t = run("tensorize --gv " + kGvPsd);
  REQUIRE(t.exitCode == 0);
  writeFile("cli_tensor.json", t.out);
  const auto r = run("check-sos --tensor cli_tensor.json --quiet");
  CHECK(r.exitCode == 0);
  CHECK(json::parse(r.out).at("status") == "certified");
  std::remove("cli_tensor.json");
}

TEST_CASE("decompose with custom nodes reproduces the hand-solved weights") {
  writeFile("cli_nodes.json", "[0, 1, -1]");
  const auto r = run("decompose --gv " + kGvPsd + " --nodes custom:cli_nodes.json --quiet");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  const auto alpha = j.at("alpha");
  CHECK(alpha.at(0).get<double>() == doctest::Approx(0.0));
  CHECK(alpha.at(1).get<double>() == doctest::Approx(0.5));
  CHECK(alpha.at(2).get<double>() == doctest::Approx(0.5));
  CHECK(j.at("reconstruction_residual").get<double>() <= 1e-10);
  CHECK(j.at("gap_warning") == false);
  std::remove("cli_nodes.json");
}

TEST_CASE("decompose output is accepted back as a frame file") {
  const auto first = run("decompose --gv " + kGvPsd + " --quiet");
  REQUIRE(first.exitCode == 0);
  writeFile("cli_frame.json", first.out);
  const auto second = run("decompose --gv " + kGvPsd + " --nodes custom:cli_frame.json --quiet");
  REQUIRE(second.exitCode == 0);
  CHECK(json::parse(second.out).at("alpha") == json::parse(first.out).at("alpha"));
  std::remove("cli_frame.json");
}

TEST_CASE("dual-check flags a vector outside the spectrahedron") {
  writeFile("cli_b.json", "[-1, 0, 0]");
  const auto r = run("dual-check --b cli_b.json --m 2 --n 2");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("member") == false);
  CHECK(j.at("min_eig").get<double>() == doctest::Approx(-1.0));
  std::remove("cli_b.json");
}

TEST_CASE("psd-sample is reproducible for a fixed seed") {
  const std::string args = "psd-sample --gv " + kGvIndef + " --count 200 --seed 9";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exitCode == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j.at("verdict") == "REFUTED");
  CHECK(j.at("seed") == 9);
}

TEST_CASE("identity-check passes on the 6,3 shape and reports its size") {
  const auto r = run("identity-check --m 6 --n 3 --quiet");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("constraints") == 28);
  CHECK(j.at("gram_size") == 10);
  CHECK(j.at("pass") == true);
  CHECK(j.at("cor2").at("pass") == true);
  CHECK(j.at("gram_identity").at("pass") == true);
}

TEST_CASE("lemma-const reports the point norms and a passing spot check") {
  const auto r = run("lemma-const --m 2 --n 2 --points 0 1");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("point_norms").at(0).get<double>() == doctest::Approx(1.0));
  CHECK(j.at("point_norms").at(1).get<double>() == doctest::Approx(std::sqrt(3.0)));
  CHECK(j.at("spot_check").at("pass") == true);
}

TEST_CASE("pairing experiment passes on a small run") {
  const auto r = run("pairing --m 4 --n 2 --members 5 --samples 50 --jobs 2 --quiet");
  REQUIRE(r.exitCode == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("pairs") == 250);
  CHECK(j.at("pass") == true);
  CHECK(j.at("min_value").get<double>() >= -1e-9);
}

TEST_CASE("search-pns emits a header and a zero-candidate footer on easy shapes") {
  const auto r = run("search-pns --m 2 --n 2 --trials 3 --quiet --max-iter 20000");
  REQUIRE(r.exitCode == 0);
  CHECK(r.out.find("\"candidates\": 0") != std::string::npos);
  CHECK(r.out.find("\"command\": \"search-pns\"") != std::string::npos);
}

TEST_CASE("errors surface on stderr with exit code 3") {
  SUBCASE("malformed JSON input") {
    writeFile("cli_bad.json", "{ this is not json");
    const auto r = run("check-hsos --gv cli_bad.json");
    CHECK(r.exitCode == 3);
    CHECK(r.err.find("error:") != std::string::npos);
    std::remove("cli_bad.json");
  }
  SUBCASE("missing file") {
    const auto r = run("eval --gv no_such_file.json --x 1 0");
    CHECK(r.exitCode == 3);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("unknown flag") {
    const auto r = run("eval --gv " + kGvPsd + " --x 1 0 --definitely-not-a-flag");
    CHECK(r.exitCode == 3);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("wrong point length") {
    const auto r = run("eval --gv " + kGvPsd + " --x 1 0 0");
    CHECK(r.exitCode == 3);
    CHECK(r.err.find("error:") != std::string::npos);
  }
}
