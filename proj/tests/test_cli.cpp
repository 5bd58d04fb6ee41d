#include "doctest.h"

#include <sstream>

#include "dehn/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dehn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("growth subcommand") {
  RunResult r = run({"growth", "--n", "1", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("lengths csv") {
  RunResult r = run({"lengths", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N,L,sum,ratio\n") == 0);
  CHECK(r.out.find("4,41,69,1.682926") != std::string::npos);
}

TEST_CASE("dehn table lists the whole family") {
  RunResult r = run({"dehn-table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("G0\tx^2") != std::string::npos);
  CHECK(r.out.find("H1\texp(sqrt(x))") != std::string::npos);
  CHECK(r.out.find("G2\texp(exp(x))") != std::string::npos);
  CHECK(r.out.find("H3\texp(exp(exp(sqrt(x))))") != std::string::npos);
  RunResult j = run({"dehn-table", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"rule\"") != std::string::npos);
}

TEST_CASE("sphere inventory json") {
  RunResult r = run({"sphere", "--group", "H1", "--r", "1", "--emit", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"area\": \"38\"") != std::string::npos);
  CHECK(r.out.find("\"group\": \"H1\"") != std::string::npos);
}

TEST_CASE("explicit sphere summary") {
  RunResult r = run({"sphere", "--group", "G0", "--r", "1", "--explicit"});
  CHECK(r.code == 0);
  CHECK(r.out.find("area 22") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("diagram exports") {
  RunResult dot = run({"diagram", "--type", "delta", "--n", "1", "--i", "1",
                       "--j", "2", "--k", "0", "--r", "1", "--emit", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") == 0);
  RunResult txt = run({"diagram", "--type", "theta", "--n", "1", "--i", "2",
                       "--k", "0", "--r", "1"});
  CHECK(txt.code == 0);
  CHECK(txt.out.find("faces 5") != std::string::npos);
}

TEST_CASE("table and distort csv") {
  RunResult t = run({"table", "--group", "H1", "--r-max", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("r,area_exact,vol_lower_exact,log_area,log_vol\n") == 0);
  RunResult d = run({"distort", "--n", "1", "--N-max", "6"});
  CHECK(d.code == 0);
  CHECK(d.out.find("N,area_edge_exact,area_ambient_upper,log_edge,fitted_beta") == 0);
}

TEST_CASE("validate subcommand") {
  RunResult r = run({"validate", "--group", "H1", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (auto args : {std::vector<std::string>{"present", "--level", "H1",
                                             "--format", "json"},
                    std::vector<std::string>{"sphere", "--group", "G1", "--r",
                                             "2", "--emit", "json"},
                    std::vector<std::string>{"lengths", "--max-n", "12"}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("errors surface as machine-readable objects") {
  RunResult r = run({"sphere", "--group", "H9", "--r", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("\"error\"") != std::string::npos);
  CHECK(r.err.find("DepthExceeded") != std::string::npos);
  RunResult usage = run({"nonsense"});
  CHECK(usage.code != 0);
}
