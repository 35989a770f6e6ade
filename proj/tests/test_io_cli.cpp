#include "gvcp/canonical.hpp"
#include "gvcp/cli.hpp"
#include "gvcp/json_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gvcp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("gvcp_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("form encoding") {
    const json j = form_to_json(sigma0());
    CHECK(j["dim"] == 6);
    CHECK(j["degree"] == 3);
    CHECK(j["terms"].size() == 4);
    CHECK(j["terms"][0]["indices"] == json::array({1, 3, 5}));
    CHECK(j["terms"][0]["coeff"] == 1.0);
    CHECK(form_from_json(j) == sigma0());
  }

  TEST_CASE("parse, print, parse is stable") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const int n = 1 + static_cast<int>(seed % 10);
      const int k = static_cast<int>(seed % (n + 1));
      const ExteriorForm f = random_form(seed, n, k);
      const ExteriorForm once = parse_form(dump_form(f));
      CHECK(once == f);
      CHECK(dump_form(parse_form(dump_form(once))) == dump_form(once));
    }
  }

  TEST_CASE("invalid encodings are rejected with a location") {
    auto message = [](const std::string& text) {
      try {
        parse_form(text);
      } catch (const FormError& e) {
        return std::string(e.what());
      }
      return std::string("accepted");
    };
    CHECK(message("{\"dim\": 3,\n \"degree\": 2,\n \"terms\": [}").find("line 3") != std::string::npos);
    CHECK(message(R"({"dim":3,"degree":2,"terms":[{"indices":[2,1],"coeff":1}]})").find("terms[0]") !=
          std::string::npos);
    CHECK(message(R"({"dim":3,"degree":2,"terms":[{"indices":[1,2],"coeff":1},{"indices":[1,2],"coeff":2}]})")
              .find("terms[1]: duplicate") != std::string::npos);
    CHECK(message(R"({"dim":3,"degree":2,"terms":[{"indices":[1,4],"coeff":1}]})").find("outside") !=
          std::string::npos);
    CHECK(message(R"({"dim":3,"degree":2,"terms":[{"indices":[1],"coeff":1}]})") != "accepted");
    CHECK(message(R"({"dim":11,"degree":2,"terms":[]})") != "accepted");
    CHECK(message(R"({"dim":3,"terms":[]})") != "accepted");
    CHECK(message(R"({"dim":3,"degree":2,"terms":[{"indices":[1,2],"coeff":"x"}]})") != "accepted");
  }

  TEST_CASE("signature encoding") {
    const OrbitSignature sig{{{-1.0, 4}, {0.0, 2}}};
    const json j = signature_to_json(sig);
    CHECK(j == json::parse("[[-1.0, 4], [0.0, 2]]"));
    CHECK(signature_from_json(j) == sig);
    CHECK_THROWS_AS(signature_from_json(json::parse("[[1]]")), FormError);
  }

  TEST_CASE("report encoding") {
    const json g2 = report_to_json(classify(tau0()));
    CHECK(g2["verdict"] == "G2");
    CHECK(g2["scale"].get<double>() == doctest::Approx(1.0));
    CHECK(g2["signature"].size() == 2);
    CHECK_FALSE(g2.contains("witness"));

    const json split = report_to_json(classify(testing::form(6, 3, {{{1, 2, 3}, 1.0}, {{4, 5, 6}, 1.0}})));
    CHECK(split["verdict"] == "NOT_GVCP");
    CHECK(split["witness"]["vectors"].size() == 2);
    CHECK(same_signature(signature_from_json(split["witness"]["signatures"][1]), OrbitSignature{{{-0.5, 4}, {0.0, 2}}},
                         1e-12));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    Scratch scratch;
    const auto tau = scratch.write("tau0.json", dump_form(tau0()));
    const Run g2 = run({"analyze", tau});
    CHECK(g2.code == cli::kExitOk);
    const json report = json::parse(g2.out);
    CHECK(report["verdict"] == "G2");
    CHECK(report["scale"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const Run zero = run({"analyze", scratch.write("zero.json", dump_form(ExteriorForm::zero(5, 3)))});
    CHECK(zero.code == cli::kExitOk);
    CHECK(json::parse(zero.out)["verdict"] == "ZERO");

    const auto split = scratch.write("split.json", dump_form(testing::form(6, 3, {{{1, 2, 3}, 1.0}, {{4, 5, 6}, 1.0}})));
    const Run ng = run({"analyze", split, "--mode", "sampled", "--samples", "32", "--seed", "5"});
    CHECK(ng.code == cli::kExitOk);
    CHECK(json::parse(ng.out)["verdict"] == "NOT_GVCP");
    CHECK(json::parse(ng.out).contains("witness"));
  }

  TEST_CASE("analyze failures and anomaly exit code") {
    Scratch scratch;
    const Run missing = run({"analyze", scratch.path("nope.json")});
    CHECK(missing.code == cli::kExitFailure);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const Run malformed = run({"analyze", scratch.write("bad.json", "{\"dim\": 3,\n\"degree\": }")});
    CHECK(malformed.code == cli::kExitFailure);
    CHECK(malformed.err.find("line 2") != std::string::npos);

    const Run two_form = run({"analyze", scratch.write("omega.json", dump_form(omega0()))});
    CHECK(two_form.code == cli::kExitFailure);

    // A clustering tolerance wider than the spectral gap merges every eigenvalue into the kernel.
    const Run anomaly = run({"analyze", scratch.write("tau0.json", dump_form(tau0())), "--tol", "2"});
    CHECK(anomaly.code == cli::kExitAnomaly);
    CHECK(json::parse(anomaly.out)["verdict"] == "ANOMALY");

    CHECK(run({"analyze"}).code == cli::kExitFailure);
    CHECK(run({"frobnicate"}).code == cli::kExitFailure);
  }

  TEST_CASE("canonical") {
    const Run tau = run({"canonical", "TAU0"});
    CHECK(tau.code == cli::kExitOk);
    CHECK(json::parse(tau.out)["terms"].size() == 7);
    CHECK(parse_form(tau.out) == tau0());
    CHECK(parse_form(run({"canonical", "A0"}).out) == endo_to_two_form(a0(3)));
    CHECK(run({"canonical", "TAU1"}).code == cli::kExitFailure);
  }

  TEST_CASE("lift then restrict reproduces SIGMA0 byte for byte") {
    Scratch scratch;
    const auto sigma = scratch.write("sigma.json", run({"canonical", "SIGMA0"}).out);
    const Run lifted = run({"lift", sigma});
    REQUIRE(lifted.code == cli::kExitOk);
    CHECK(lifted.out == run({"canonical", "TAU0"}).out);
    const auto tau = scratch.write("lifted.json", lifted.out);
    const Run restricted = run({"restrict", tau, "--vector", "0,0,0,0,0,0,1"});
    CHECK(restricted.code == cli::kExitOk);
    CHECK(restricted.out == run({"canonical", "SIGMA0"}).out);

    CHECK(run({"restrict", tau, "--vector", "0,0,0,0,0,0,2"}).code == cli::kExitFailure);
    CHECK(run({"restrict", tau, "--vector", "0,0,1"}).code == cli::kExitFailure);
    CHECK(run({"restrict", tau, "--vector", "a,b"}).code == cli::kExitFailure);
    CHECK(run({"lift", tau}).code == cli::kExitFailure);
  }

  TEST_CASE("conjugate is deterministic per seed") {
    Scratch scratch;
    const auto sigma = scratch.write("sigma.json", dump_form(sigma0()));
    const Run a = run({"conjugate", sigma, "--seed", "7"});
    const Run b = run({"conjugate", sigma, "--seed", "7"});
    const Run c = run({"conjugate", sigma, "--seed", "8"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    const Run report = run({"analyze", scratch.write("conj.json", a.out)});
    CHECK(json::parse(report.out)["verdict"] == "SU3");
  }

  TEST_CASE("su3-check") {
    const Run r = run({"su3-check", "--samples", "100"});
    CHECK(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["max_residual"].get<double>() <= 1e-10);
    CHECK(j["passed"] == true);
  }

  TEST_CASE("--out writes to a file") {
    Scratch scratch;
    const auto target = scratch.path("omega.json");
    const Run r = run({"canonical", "OMEGA0", "--out", target});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    CHECK(parse_form(slurp(target)) == omega0());
  }
}
