// End-to-end command-line behavior: output formats, exit codes, option
// handling, and the verification/scan/reproduce subcommands.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <branchq/cli.hpp>

using namespace branchq;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream o, e;
  CliResult r;
  r.code = run_cli(std::move(args), o, e);
  r.out = o.str();
  r.err = e.str();
  return r;
}

}  // namespace

TEST_CASE("kpoly json output is bit-exact") {
  const CliResult r = run({"kpoly", "--group", "sp", "--rank", "4", "--levi", "a1,a2,a3",
                           "--lambda", "4,2,2,1", "--mu", "3,1,1,0"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "{\"group\":\"sp\",\"rank\":4,\"levi\":[1,2,3],\"lambda\":[4,2,2,1],"
          "\"mu\":[3,1,1,0],\"variant\":\"standard\",\"poly\":{\"2\":\"1\"}}\n");

  const CliResult r2 = run({"kpoly", "--group", "gl", "--rank", "2", "--levi", "none",
                            "--lambda", "2,0", "--mu", "1,1"});
  REQUIRE(r2.code == 0);
  REQUIRE(r2.out ==
          "{\"group\":\"gl\",\"rank\":2,\"levi\":[],\"lambda\":[2,0],\"mu\":[1,1],"
          "\"variant\":\"standard\",\"poly\":{\"1\":\"1\"}}\n");
}

TEST_CASE("kpoly text and csv formats") {
  const CliResult t = run({"--format", "text", "kpoly", "--group", "sp", "--rank", "4", "--levi",
                           "a1,a2,a3", "--lambda", "4,2,2,1", "--mu", "3,1,1,0"});
  REQUIRE(t.code == 0);
  REQUIRE(t.out == "q^2\n");
  const CliResult c = run({"kpoly", "--format", "csv", "--group", "sp", "--rank", "4", "--levi",
                           "a1,a2,a3", "--lambda", "4,2,2,1", "--mu", "3,1,1,0"});
  REQUIRE(c.code == 0);
  REQUIRE(c.out ==
          "group,rank,levi,lambda,mu,variant,poly\n"
          "sp,4,a1 a2 a3,4 2 2 1,3 1 1 0,standard,q^2\n");
}

TEST_CASE("kpoly variants and the descending key order") {
  const CliResult r = run({"kpoly", "--group", "sp", "--rank", "4", "--levi", "none", "--lambda",
                           "4,2,2,1", "--mu", "3,1,1,0"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"poly\":{\"8\":\"1\",\"7\":\"2\",\"6\":\"3\",\"5\":\"4\",\"4\":\"5\","
                     "\"3\":\"4\",\"2\":\"1\"}") != std::string::npos);
  const CliResult h = run({"kpoly", "--group", "so-odd", "--rank", "2", "--levi", "none",
                           "--lambda", "1,0", "--mu", "0,0", "--variant", "h"});
  REQUIRE(h.code == 0);
  REQUIRE(h.out.find("\"variant\":\"h\"") != std::string::npos);
  REQUIRE(h.out.find("\"poly\":{\"3\":\"1\",\"2\":\"-1\",\"1\":\"1\"}") != std::string::npos);
  const CliResult s = run({"kpoly", "--group", "sp", "--rank", "2", "--levi", "a1", "--lambda",
                           "2,1", "--mu", "1,0", "--variant", "stable"});
  REQUIRE(s.code == 0);
  REQUIRE(s.out.find("\"variant\":\"stable\"") != std::string::npos);
}

TEST_CASE("tensor output") {
  const std::vector<std::string> base = {"tensor", "--family", "d",      "--eta",    "1,2,2",
                                         "--blocks", "5;4,4;2,2", "--lambda", "1,1,1,0,0"};
  std::vector<std::string> graded = base;
  graded.push_back("--q");
  const CliResult g = run(graded);
  REQUIRE(g.code == 0);
  REQUIRE(g.out ==
          "{\"family\":\"d\",\"eta\":[1,2,2],\"blocks\":[[5],[4,4],[2,2]],"
          "\"lambda\":[1,1,1,0,0],\"poly\":{\"11\":\"1\",\"8\":\"-1\"}}\n");
  const CliResult plain = run(base);
  REQUIRE(plain.code == 0);
  REQUIRE(plain.out == "0\n");

  const CliResult dq = run({"tensor", "--family", "dfrak", "--group", "sp", "--eta", "2",
                            "--blocks", "1,1", "--lambda", "0,0", "--q"});
  REQUIRE(dq.code == 0);
  REQUIRE(dq.out ==
          "{\"family\":\"dfrak\",\"group\":\"sp\",\"eta\":[2],\"blocks\":[[1,1]],"
          "\"lambda\":[0,0],\"poly\":{\"1\":\"1\"}}\n");

  // Singleton blocks reduce to the charge grading; the unique column filling
  // of shape (1,1) has charge 0.
  const CliResult cq = run({"tensor", "--family", "c", "--eta", "1,1", "--blocks", "1;1",
                            "--lambda", "1,1", "--q"});
  REQUIRE(cq.code == 0);
  REQUIRE(cq.out ==
          "{\"family\":\"c\",\"eta\":[1,1],\"blocks\":[[1],[1]],\"lambda\":[1,1],"
          "\"poly\":{\"0\":\"1\"}}\n");
  const CliResult cq2 = run({"tensor", "--family", "c", "--eta", "1,1", "--blocks", "1;1",
                             "--lambda", "2,0", "--q"});
  REQUIRE(cq2.code == 0);
  REQUIRE(cq2.out ==
          "{\"family\":\"c\",\"eta\":[1,1],\"blocks\":[[1],[1]],\"lambda\":[2,0],"
          "\"poly\":{\"1\":\"1\"}}\n");
}

TEST_CASE("tensor group flag rules") {
  REQUIRE(run({"tensor", "--family", "dfrak", "--eta", "2", "--blocks", "1,1", "--lambda",
               "0,0"}).code == 2);
  REQUIRE(run({"tensor", "--family", "c", "--group", "sp", "--eta", "1,1", "--blocks", "1;1",
               "--lambda", "1,1"}).code == 2);
  REQUIRE(run({"tensor", "--family", "dfrak", "--group", "gl", "--eta", "2", "--blocks", "1,1",
               "--lambda", "0,0"}).code == 2);
}

TEST_CASE("rank guard") {
  const CliResult deny = run({"kpoly", "--group", "sp", "--rank", "9", "--levi", "none",
                              "--lambda", "0,0,0,0,0,0,0,0,0", "--mu", "0,0,0,0,0,0,0,0,0"});
  REQUIRE(deny.code == 2);
  REQUIRE(deny.err.find("--rank-guard") != std::string::npos);
  const CliResult allow =
      run({"--rank-guard", "10", "kpoly", "--group", "gl", "--rank", "9", "--levi", "all",
           "--lambda", "0,0,0,0,0,0,0,0,0", "--mu", "0,0,0,0,0,0,0,0,0"});
  REQUIRE(allow.code == 0);
  REQUIRE(allow.out.find("\"poly\":{\"0\":\"1\"}") != std::string::npos);
  // The hard capacity cap stays in force no matter the guard.
  const CliResult cap = run({"--rank-guard", "20", "kpoly", "--group", "sp", "--rank", "13",
                             "--levi", "none", "--lambda", "0,0,0,0,0,0,0,0,0,0,0,0,0", "--mu",
                             "0,0,0,0,0,0,0,0,0,0,0,0,0"});
  REQUIRE(cap.code == 2);
}

TEST_CASE("invalid input handling") {
  REQUIRE(run({"kpoly", "--group", "xx", "--rank", "2", "--lambda", "1,0", "--mu",
               "1,0"}).code == 2);
  REQUIRE(run({"kpoly", "--group", "sp", "--rank", "2", "--lambda", "1,0,0", "--mu",
               "1,0"}).code == 2);
  REQUIRE(run({"kpoly", "--group", "sp", "--rank", "2", "--levi", "a7", "--lambda", "1,0",
               "--mu", "1,0"}).code == 2);
  REQUIRE(run({"kpoly", "--group", "sp", "--rank", "2", "--lambda", "1,x", "--mu",
               "1,0"}).code == 2);
  REQUIRE(run({"nonsense"}).code == 2);
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"--help"}).code == 0);
}

TEST_CASE("verify single instances and perturbation") {
  const CliResult ok = run({"verify", "--identity", "stable-shift", "--group", "sp", "--rank",
                            "2", "--levi", "a1", "--lambda", "3,1", "--mu", "2,0"});
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("2 instances, 0 violations") != std::string::npos);

  std::vector<std::string> bad = {"verify", "--identity", "stable-shift", "--group", "sp",
                                  "--rank", "2",          "--levi",      "a1",      "--lambda",
                                  "3,1",    "--mu",       "2,0",         "--perturb"};
  const CliResult pert = run(bad);
  REQUIRE(pert.code == 3);
  REQUIRE(pert.err.find("violation:") != std::string::npos);

  const CliResult dec = run({"verify", "--identity", "dec-k-c", "--group", "so-odd", "--rank",
                             "2", "--levi", "a1", "--lambda", "2,1", "--mu", "1,0"});
  REQUIRE(dec.code == 0);

  const CliResult duald = run({"verify", "--identity", "dual-d", "--eta", "1,1", "--blocks",
                               "1;1", "--lambda", "1,1"});
  REQUIRE(duald.code == 0);

  const CliResult dualq = run({"verify", "--identity", "dual-dfrak", "--group", "sp", "--eta",
                               "1,1", "--blocks", "1;1", "--lambda", "1,1"});
  REQUIRE(dualq.code == 0);
}

TEST_CASE("verify random modes") {
  const CliResult r = run({"verify", "--identity", "stable-shift", "--random", "10", "--seed",
                           "5", "--rank", "2", "--max-weight", "4"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("20 instances, 0 violations") != std::string::npos);
  const CliResult d = run({"verify", "--identity", "dual-dfrak", "--random", "5", "--seed", "9",
                           "--rank", "2", "--max-weight", "4"});
  REQUIRE(d.code == 0);
}

TEST_CASE("verify exhaustive requires bounds") {
  REQUIRE(run({"verify", "--identity", "stable-shift", "--exhaustive", "--max-weight",
               "2"}).code == 2);
  const CliResult ok = run({"verify", "--identity", "stable-shift", "--exhaustive", "--rank",
                            "1", "--max-weight", "2", "--group", "sp"});
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out.find("0 violations") != std::string::npos);
}

TEST_CASE("verify known divergence of the two restriction routes") {
  // The alternating and tableau routes disagree here; the command reports the
  // violation and signals it in the exit code.
  const CliResult r = run({"verify", "--identity", "mul-sum", "--group", "sp", "--rank", "2",
                           "--nu", "2,2", "--plus", "1", "--minus", "1"});
  REQUIRE(r.code == 3);
  REQUIRE(r.err.find("alternating=0") != std::string::npos);
  REQUIRE(r.err.find("tableau=1") != std::string::npos);
  REQUIRE(r.out.find("rational 1/1") != std::string::npos);
  // Polynomial weights agree on the same shape.
  const CliResult p = run({"verify", "--identity", "mul-sum", "--group", "sp", "--rank", "2",
                           "--nu", "2,2", "--plus", "2,2", "--minus", ""});
  REQUIRE(p.code == 0);
  REQUIRE(p.out.find("polynomial 0/1") != std::string::npos);
}

TEST_CASE("verify iso-levi") {
  const CliResult r = run({"verify", "--identity", "iso-levi"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("1 instances, 0 violations") != std::string::npos);
  REQUIRE(r.out.find("recorded (not asserted)") != std::string::npos);
  REQUIRE(r.out.find("(different)") != std::string::npos);
  const CliResult bad = run({"verify", "--identity", "iso-levi", "--lambda", "4,2,0,0", "--mu",
                             "1,1,0,0"});
  REQUIRE(bad.code == 3);  // the equality is not a general law
}

TEST_CASE("scan positivity") {
  const std::string path = "scan_test_tmp.csv";
  const CliResult r = run({"scan", "--conjecture", "positivity", "--group", "sp", "--rank", "1",
                           "--max-weight", "2", "--out", path});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("0 violations") != std::string::npos);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  REQUIRE(header == "group,rank,levi,lambda,mu,poly,min-coeff");
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  REQUIRE(rows == 8);  // 2 levi subsets x (|lambda| in {0,1,2} with matching-parity targets)
  std::remove(path.c_str());

  // Zero polynomials stay in the listing.
  const CliResult z = run({"scan", "--conjecture", "positivity", "--group", "sp", "--rank", "2",
                           "--max-weight", "2"});
  REQUIRE(z.code == 0);
  REQUIRE(z.out.find("sp,2,-,1 1,2 0,0,0\n") != std::string::npos);

  // Empty scan: header only.
  const CliResult e = run({"scan", "--conjecture", "positivity", "--group", "sp", "--rank", "1",
                           "--max-weight=-1"});
  REQUIRE(e.code == 0);
  REQUIRE(e.out.find("group,rank,levi,lambda,mu,poly,min-coeff\n") != std::string::npos);
  REQUIRE(e.out.find("0 rows") != std::string::npos);
}

TEST_CASE("scan stdout includes every family") {
  const CliResult r = run({"scan", "--conjecture", "positivity", "--group", "all", "--rank", "1",
                           "--max-weight", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\ngl,1,") != std::string::npos);
  REQUIRE(r.out.find("\nso-odd,1,") != std::string::npos);
  REQUIRE(r.out.find("\nsp,1,") != std::string::npos);
  REQUIRE(r.out.find("\nso-even,1,") != std::string::npos);
}

TEST_CASE("reproduce the published table") {
  const CliResult r = run({"reproduce", "sp8-table"});
  REQUIRE(r.code == 3);
  REQUIRE(r.out.find("unambiguous rows matched: 12/13") != std::string::npos);
  REQUIRE(r.out.find("suspect rows agreeing at q=1: 3/3") != std::string::npos);
  REQUIRE(r.out.find("MISMATCH") != std::string::npos);
  REQUIRE(r.out.find("2q^4") != std::string::npos);   // the printed reference cell
  REQUIRE(r.out.find("2q^2") != std::string::npos);   // the computed value
  REQUIRE(r.out.find("GL_2×Sp_4") != std::string::npos);
  REQUIRE(run({"reproduce", "nothere"}).code == 2);
}

TEST_CASE("worker count does not change bytes") {
  const std::vector<std::string> base = {"kpoly", "--group", "sp", "--rank", "3", "--levi",
                                         "a1",    "--lambda", "3,2,1", "--mu", "2,1,0"};
  std::vector<std::string> serial = base;
  serial.insert(serial.begin(), {"--jobs", "1"});
  std::vector<std::string> parallel = base;
  parallel.insert(parallel.begin(), {"--jobs", "4"});
  const CliResult a = run(serial);
  const CliResult b = run(parallel);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("environment fallbacks") {
  setenv("BRANCHQ_JOBS", "bogus", 1);
  const CliResult bad = run({"kpoly", "--group", "sp", "--rank", "2", "--lambda", "1,0", "--mu",
                             "1,0"});
  REQUIRE(bad.code == 2);
  setenv("BRANCHQ_JOBS", "2", 1);
  const CliResult ok = run({"kpoly", "--group", "sp", "--rank", "2", "--lambda", "1,0", "--mu",
                            "1,0"});
  REQUIRE(ok.code == 0);
  unsetenv("BRANCHQ_JOBS");
  setenv("BRANCHQ_MEMO_MB", "1", 1);
  const CliResult memo = run({"kpoly", "--group", "sp", "--rank", "2", "--lambda", "1,0", "--mu",
                              "1,0"});
  REQUIRE(memo.code == 0);
  unsetenv("BRANCHQ_MEMO_MB");
  const CliResult limited = run({"--memo-limit", "4", "kpoly", "--group", "sp", "--rank", "2",
                                 "--lambda", "1,0", "--mu", "1,0"});
  REQUIRE(limited.code == 0);
}
