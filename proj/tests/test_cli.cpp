#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "popmax/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(POPMAX_TEST_DATA) + "/" + name; }

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "popmax");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = popmax::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve") {
  CHECK(cli({"solve", data("I0.txt")}).out == "a b\n");
  const Run r = cli({"solve", data("I1.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "a1 b1\na2 b2\n");
  CHECK(cli({"solve", data("I3.txt")}).out == "a1 b1\n");
  CHECK(cli({"solve", "--side", "B", data("I2.txt")}).out == "a1 b2\na2 b1\n");
  CHECK(cli({"solve", "-"}, "side A a\nside B b\npref a: b\npref b: a\n").out == "a b\n");
}

TEST_CASE("verify, certify and pareto") {
  const Run ok = cli({"verify", data("I1.txt"), data("I1_perfect.match")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "popular\n");

  const Run bad = cli({"verify", data("I3.txt"), data("I3_bad.match")});
  CHECK(bad.code == popmax::cli::kRejected);
  CHECK(bad.out == "path: a1 (b1,a3) wt=2\na1 b1\na3 b1\n");

  const Run cert = cli({"certify", data("I1.txt"), data("I1_perfect.match")});
  CHECK(cert.code == 0);
  CHECK(cert.out == "alpha a1 -2\nalpha a2 0\nalpha b1 2\nalpha b2 0\n");

  const Run checked = cli({"certify", "--cert", "-", data("I1.txt"), data("I1_perfect.match")},
                          cert.out);
  CHECK(checked.code == 0);
  CHECK(checked.out == "certificate verified\n");

  const Run wrong = cli({"certify", "--cert", "-", data("I1.txt"), data("I1_perfect.match")},
                        "alpha a1 0\nalpha a2 0\nalpha b1 0\nalpha b2 0\n");
  CHECK(wrong.code == popmax::cli::kRejected);
  CHECK(wrong.out.rfind("violation F: ", 0) == 0);

  const Run pareto = cli({"pareto", data("I5.txt"), data("I5_diag.match")});
  CHECK(pareto.code == popmax::cli::kRejected);
  CHECK(pareto.out.rfind("cycle:", 0) == 0);
  CHECK(pareto.out.find("wt=4") != std::string::npos);
}

TEST_CASE("mincost") {
  const Run r = cli({"mincost", data("I2_costs.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("a1 b2\na2 b1\ncost 0\n", 0) == 0);
  CHECK(r.out.find("alpha a1 0") != std::string::npos);
}

TEST_CASE("json envelope") {
  const Run r = cli({"--json", "verify", data("I3.txt"), data("I3_bad.match")});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "rejected");
  CHECK(j["witness"]["kind"] == "path");
  CHECK(j["witness"]["weight"] == 2);

  const Run s = cli({"--json", "solve", data("I1.txt")});
  const auto k = nlohmann::json::parse(s.out);
  CHECK(k["status"] == "ok");
  CHECK(k["result"]["pairs"].size() == 2);

  const Run e = cli({"--json", "solve", data("missing.txt")});
  CHECK(e.code == popmax::cli::kInputError);
  CHECK(nlohmann::json::parse(e.out)["status"] == "input-error");
}

TEST_CASE("error exit codes") {
  CHECK(cli({"solve", data("missing.txt")}).code == popmax::cli::kInputError);
  CHECK(cli({"solve", "-"}, "side A a\nside B b\npref a: b\n").code ==
        popmax::cli::kInputError);
  const Run parse = cli({"solve", "-"}, "side A a\nbogus\n");
  CHECK(parse.code == popmax::cli::kInputError);
  CHECK(parse.err.find("line 2, column 1") != std::string::npos);
  CHECK(cli({"verify", data("I1.txt"), "-"}, "a2 b1\n").code == popmax::cli::kInputError);
  CHECK(cli({"nonsense"}).code == popmax::cli::kInputError);
  CHECK(cli({"verify", "-", "-"}, "").code == popmax::cli::kInputError);
  const Run bound = cli({"oracle", "--bound", "3", "count", data("I2.txt")});
  CHECK(bound.code == popmax::cli::kBoundExceeded);
}

TEST_CASE("oracle, generators and reduction") {
  CHECK(cli({"oracle", "count", data("I2.txt")}).out ==
        "matchings 7\nmaximum 2\npopular-max 2\nstable 2\n");
  CHECK(cli({"oracle", "unpopularity", data("I3.txt"), data("I3_bad.match")}).out ==
        "unpopularity 2\n");

  const Run g1 = cli({"gen-random", "--na", "3", "--nb", "4", "--density", "0.5", "--seed", "7"});
  const Run g2 = cli({"gen-random", "--na", "3", "--nb", "4", "--density", "0.5", "--seed", "7"});
  CHECK(g1.code == 0);
  CHECK(g1.out == g2.out);
  CHECK(cli({"solve", "-"}, g1.out).code == 0);

  const Run sat = cli({"check-reduction", data("sat3.cnf")});
  CHECK(sat.code == 0);
  CHECK(sat.out.find("result: confirmed") != std::string::npos);
  CHECK(cli({"check-reduction", data("unsat1.cnf")}).code == 0);

  const Run gadget = cli({"gen-hardness", data("sat3.cnf")});
  CHECK(gadget.code == 0);
  CHECK(cli({"solve", "-"}, gadget.out).code == 0);

  const Run gs = cli({"gstar", data("I1.txt")});
  CHECK(gs.out.rfind("side A a1#0 a1#1 a2#0 a2#1\n", 0) == 0);

  const Run lp = cli({"emit-lp", "--integral", data("I1.txt")});
  CHECK(lp.out.find("Generals") != std::string::npos);
}
