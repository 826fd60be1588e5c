#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "amat/cli.hpp"

using namespace amat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("disc") {
  auto r = run({"disc", "--form", "1,1,0,-2,-1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "-275\n");
  r = run({"--json", "disc", "--form", "1,1,0,-2,-1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "disc");
  CHECK(j["discriminant"] == "-275");
  r = run({"disc", "--form", "1,x"});
  CHECK(r.code == exit_parse);
  CHECK(r.err.find("parse-error") != std::string::npos);
}

TEST_CASE("matrix") {
  auto r = run({"matrix", "--pair", "1:1,1,-2,-1", "--coords", "1,2,3"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "[1, 3, 5]\n[2, 5, 7]\n[3, 2, 7]\n");
  r = run({"matrix", "--pair", "1:1,1,-2,-1", "--symbolic"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("u - x + 2*y") != std::string::npos);
  CHECK(run({"matrix", "--pair", "1:1,1,-2,-1"}).code == exit_parse);
  CHECK(run({"matrix", "--pair", "1:1,0,-1", "--coords", "1,2"}).code == exit_domain);
}

TEST_CASE("element operations") {
  const std::string pair = "1:1,1,-2,-1";
  CHECK(run({"mul", "--pair", pair, "--a", "1,2,3", "--b", "0,1,0"}).out == "3,5,2\n");
  CHECK(run({"mul", "--pair", pair, "--a", "1,2,3", "--b", "0,1,0", "--via", "fft"}).out == "3,5,2\n");
  CHECK(run({"add", "--pair", pair, "--a", "1,2,3", "--b", "-1,1/2,0"}).out == "0,5/2,3\n");
  CHECK(run({"norm", "--pair", pair, "--a", "1/2,0,0"}).out == "1/8\n");
  CHECK(run({"trace", "--pair", pair, "--a", "1,0,0"}).out == "3\n");
  CHECK(run({"charpoly", "--pair", pair, "--a", "0,1,0"}).out == "x^3 + x^2 - 2*x - 1\n");
  const auto j = nlohmann::json::parse(run({"--json", "inv", "--pair", pair, "--a", "1,2,3"}).out);
  CHECK(j["result"] == nlohmann::json::array({"-21/13", "-7/13", "11/13"}));
  auto r = run({"inv", "--pair", pair, "--a", "0,0,0"});
  CHECK(r.code == exit_domain);
  CHECK(r.err.find("zero-element") != std::string::npos);
  CHECK(run({"mul", "--pair", "1:1,1,0,-2,-1", "--a", "1,2,3", "--b", "1,1,1"}).code == exit_domain);
  CHECK(run({"mul", "--pair", pair, "--a", "1,2,3", "--b", "1,1,1", "--via", "magic"}).code == exit_parse);
  CHECK(run({"norm", "--pair", "1:1,0,-1", "--a", "1,1"}).code == exit_domain);
}

TEST_CASE("search and tables") {
  auto r = run({"search", "--disc", "-275", "--degree", "4", "--height", "2", "--max-a0", "1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("1:1,1,0,-2,-1\n") != std::string::npos);
  CHECK(run({"search", "--disc", "5", "--degree", "7", "--height", "1"}).code == exit_domain);
  r = run({"verify-tables", "--file", std::string(AMAT_DATA_DIR) + "/table1_quartic.txt", "--file",
           std::string(AMAT_DATA_DIR) + "/table2_quintic.txt"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("rows 152 failures 0") != std::string::npos);
  CHECK(run({"verify-tables", "--file", "/nonexistent"}).code != exit_ok);
}

TEST_CASE("verification commands") {
  auto r = run({"syzygy", "--quartic", "1,0,0,0,1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "PASS\n");
  CHECK(run({"syzygy", "--cubic", "1,1,-2,-1"}).out == "PASS\n");
  CHECK(run({"syzygy"}).code == exit_parse);
  r = run({"diag-check", "--pair", "1:1,1,-2,-1", "--coords", "1,2,3", "--threshold", "1e-8"});
  CHECK(r.code == exit_ok);
  CHECK(run({"diag-check", "--pair", "1:1,1,-2,-1", "--coords", "1,2,3", "--threshold", "0"}).code ==
        exit_verification);
}

TEST_CASE("bench") {
  auto r = run({"bench", "--size", "4", "--algo", "ww"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("m,strategy,mults,adds,nanoseconds\n4,ww,46,", 0) == 0);
  r = run({"bench", "--size", "8", "--algo", "schoolbook"});
  CHECK(r.out.find("8,schoolbook,512,") != std::string::npos);
  CHECK(run({"bench", "--size", "3", "--algo", "ww"}).code == exit_domain);
  CHECK(run({"bench", "--size", "4", "--algo", "strassen"}).code == exit_parse);
  CHECK(run({"nonsense"}).code == exit_parse);
}
