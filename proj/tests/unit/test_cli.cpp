#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kCli = ANS_CLI_PATH;
const std::string kDir = ANS_SYSTEMS_DIR;

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr is kept separate so goldens stay exact
Run run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string spec(const char* name) { return "--spec " + kDir + "/" + name + ".ans"; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ans_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("rep and val") {
  std::string base4 = temp_path("base4.ans");
  REQUIRE(run("construct base 4 --out " + base4).code == 0);
  CHECK(run("rep --spec " + base4 + " 27").out == "123\n");
  CHECK(run("val " + spec("pansiot") + " 22").out == "8\n");
  CHECK(run("rep " + spec("squares") + " 9").out == "aaa\n");
  Run bad = run("val " + spec("pansiot") + " 01");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("rep").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("rep " + spec("pansiot") + " -4").code == 1);
}

TEST_CASE("invalid specs exit 2") {
  std::string bad = temp_path("bad.ans");
  std::ofstream(bad) << "name: x\nalphabet: 0 1\nlanguage:\n  regex: eps|1(0|1)*\nset:\n  regex: 1*0*\n";
  CHECK(run("rep --spec " + bad + " 1").code == 2);
  CHECK(run("rep --spec /nonexistent.ans 1").code == 2);
}

TEST_CASE("enum") {
  CHECK(run("enum " + spec("base4_13") + " --from 1 --to 10").out == "1\n3\n5\n7\n13\n15\n21\n23\n29\n31\n");
  CHECK(run("enum " + spec("base4_fibonacci") + " --to 6 --csv").out ==
        "n,t\n0,0\n1,1\n2,4\n3,16\n4,17\n5,64\n6,65\n");
  std::string nat = temp_path("unary.ans");
  REQUIRE(run("construct unary --out " + nat).code == 0);
  CHECK(run("enum --spec " + nat + " --to 4").out == "0\n1\n2\n3\n4\n");
}

TEST_CASE("csv output is stable across runs") {
  std::string a = run("enum " + spec("base4_K") + " --to 2000 --csv").out;
  CHECK(a == run("enum " + spec("base4_K") + " --to 2000 --csv").out);
  CHECK(run("count " + spec("pansiot") + " --nmax 30").out == run("count " + spec("pansiot") + " --nmax 30").out);
}

TEST_CASE("growth and predict") {
  CHECK(run("growth " + spec("pansiot")).out == "sig p=1 c=1 theta=2\n");
  CHECK(run("predict " + spec("pansiot")).out == "class logpower f=1 logexp=1\n");
  CHECK(run("predict " + spec("base2_10star")).out ==
        "class stretchedexp polyexp=0 base=2 innerexp=1/2 innerconst~sqrt(2) refined=asymptotic\n");
  CHECK(run("growth " + spec("base4_K") + " --set").out == "sig p=2 c=0 theta=[2.449489742,2.449489743]~sqrt(6)\n");
  std::string out = temp_path("rp.ans");
  REQUIRE(run("construct rational_power 3 2 --out " + out).code == 0);
  CHECK(run("predict --spec " + out).out == "class power r=3/2\n");
  REQUIRE(run("construct logpoly 2 1 --out " + out).code == 0);
  CHECK(run("predict --spec " + out).out == "class logpower f=1 logexp=2\n");
}

TEST_CASE("verify") {
  Run ok = run("verify " + spec("pansiot") + " --nmax 40");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all PASS") != std::string::npos);

  std::ifstream in(kDir + "/pansiot.ans");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  text.replace(text.find("final 0 1 2"), 11, "final 0 1");
  std::string tampered = temp_path("tampered.ans");
  std::ofstream(tampered) << text;
  Run bad = run("verify --spec " + tampered + " --nmax 40");
  CHECK(bad.code != 0);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("first mismatch n=") != std::string::npos);

  Run fit = run("verify " + spec("base4_K") + " --fit");
  CHECK(fit.code == 0);
  CHECK(fit.out.find("check fit") != std::string::npos);
}

TEST_CASE("construct output reloads") {
  for (const char* fam : {"base 3", "unary", "bounded 3", "fibonacci", "squares", "rational_power 5 2",
                          "logpoly 1 2", "inverse_logpoly 2 3"}) {
    Run r = run(std::string("construct ") + fam);
    INFO(fam);
    CHECK(r.code == 0);
    std::string path = temp_path("fam.ans");
    std::ofstream(path) << r.out;
    Run again = run("construct " + std::string(fam) + " --out " + path);
    CHECK(again.code == 0);
    CHECK(run("rep --spec " + path + " 5").code == 0);
  }
  CHECK(run("construct bounded 0").code == 1);
}

TEST_CASE("bracket, impossible, morphism") {
  CHECK(run("bracket " + spec("pansiot") + " 5").out == "2\n");
  CHECK(run("bracket " + spec("pansiot") + " 0").out == "-1\n");
  Run imp = run("impossible 1");
  CHECK(imp.code == 0);
  CHECK(imp.out.find("infeasible: f=1 ⇒ c≥d ⇒ log-exponent ≥ 0\n") != std::string::npos);
  Run m = run("morphism " + spec("pansiot") + " --nmax 2");
  CHECK(m.out.find("n,length,coded_length,F\n0,1,1,1\n1,4,4,2\n2,12,12,4\n") != std::string::npos);
}
