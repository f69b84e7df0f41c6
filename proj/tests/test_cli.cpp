#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is dropped.
Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(JCR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "jcr_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("synthesize") {
  auto r = run("synthesize --t 1/2 --rho 2 --n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha^2 = 28/9\n") != std::string::npos);
  CHECK(r.out.find("F = (11/8, 1/8)\n") != std::string::npos);
  CHECK(r.out.find("T = 6*pi ~ 18.8495559\n") != std::string::npos);

  auto csv = run("synthesize --t 1/2 --rho 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("alpha2=28/9\n") != std::string::npos);
  CHECK(csv.out.find("K1=5\n") != std::string::npos);
  CHECK(csv.out.find("T_pi=6*pi\n") != std::string::npos);

  CHECK(run("synthesize --t 0 --rho 2").code == 2);
  CHECK(run("synthesize --t 1 --rho 2").code == 2);
  CHECK(run("synthesize --t 1/q --rho 2").code == 1);
  CHECK(run("synthesize --rho 2").code == 1);
}

TEST_CASE("check-revival") {
  auto r = run("check-revival --alpha 0 --beta 1 --n 1");
  CHECK(r.code == 3);
  CHECK(r.out == "no certificate (resonance)\n");

  auto irr = run("check-revival --alpha 1 --beta 1 --n 1");
  CHECK(irr.code == 3);
  CHECK(irr.out == "no certificate (irrational gap ratios)\n");

  auto ok = run("check-revival --alpha '2*sqrt(7)/3' --beta '2 - 2*sqrt(7)/3' --format csv");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ratios=1,8/5,3\nK1=5\ndelta=1/3\n") == 0);

  CHECK(run("check-revival --alpha2 28/9 --rho 2").code == 0);
  CHECK(run("check-revival --alpha '1+sqrt(2)' --beta 1").code == 2);
  CHECK(run("check-revival --alpha 1").code == 1);
  CHECK(run("check-revival --alpha 0 --beta 1 --n 0").code == 1);
  CHECK(run("check-revival --bogus").code == 1);
  CHECK(run("no-such-command").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("spectrum") {
  auto r = run("spectrum --t 1/2 --rho 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("index,block,branch,exact,value\n0,1,lower,5/3 - 1/3*sqrt(7),", 0) == 0);
  auto human = run("spectrum --t 1/2 --rho 3");
  CHECK(human.out.find("degenerate: yes") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run("verify --t 1/2 --rho 2 --format csv --seed 4 --states 100");
  CHECK(r.code == 0);
  CHECK(r.out.find("states=100\nseed=4\n") != std::string::npos);
  auto again = run("verify --t 1/2 --rho 2 --format csv --seed 4 --states 100 --workers 3");
  CHECK(again.out == r.out);
  auto other = run("verify --t 1/2 --rho 2 --format csv --seed 5 --states 100 --time 2");
  CHECK(other.out != r.out);

  auto state = scratch("state.csv");
  std::ofstream(state) << "0,0\n1,0\n0,0\n0,0\n";
  auto s = run("verify --t 1/2 --rho 2 --format csv --state " + state.string());
  CHECK(s.code == 0);
  CHECK(s.out.find("state_fidelity=") != std::string::npos);

  CHECK(run("verify --alpha 0 --beta 1").code == 3);  // no certificate, no --time
  CHECK(run("verify --alpha 0 --beta 1 --time 1").code == 0);
}

TEST_CASE("scan-lcm") {
  auto a = scratch("scan_a.csv"), b = scratch("scan_b.csv"), h = scratch("hist.csv");
  CHECK(run("scan-lcm --d 1/10000 --count 30000 --out " + a.string() + " --workers 1").code == 0);
  CHECK(run("scan-lcm --d 1/10000 --count 30000 --out " + b.string() + " --workers 6 --hist " + h.string() +
            " --bin-width 1")
            .code == 0);
  std::string text = slurp(a);
  CHECK(text == slurp(b));
  std::istringstream in(text);
  std::string line;
  int rows = -1;  // header
  std::string row5000, row10000;
  while (std::getline(in, line)) {
    if (rows == 4999) row5000 = line;
    if (rows == 9999) row10000 = line;
    ++rows;
  }
  CHECK(rows == 30000);
  CHECK(row5000 == "5000,1/2,3,0");
  CHECK(row10000 == "10000,1,0,1");
  CHECK(slurp(h).rfind("bin_lower_log10,count\n0,", 0) == 0);
  CHECK(run("scan-lcm --d 0 --count 3").code == 2);
}

TEST_CASE("solvers") {
  auto k = run("solve-k --k 64 --format csv");
  CHECK(k.code == 0);
  CHECK(k.out == "kind,X,Y\nrational,65/2,63/2\ninteger,17,15\ninteger,10,6\ninteger,8,0\n");
  CHECK(run("solve-k --k 2").code == 3);
  CHECK(run("solve-k --k 3/7 --s 2").code == 0);
  CHECK(run("solve-k --k 0").code == 2);

  auto c = run("solve-chain --ks 64,144 --bound 50 --format csv");
  CHECK(c.code == 0);
  CHECK(c.out == "17,15,9\n");
  CHECK(run("solve-chain --ks 2 --bound 50").code == 3);
  CHECK(run("solve-chain --ks 64,x --bound 50").code == 1);

  auto m = run("middles --bound 50 --format csv");
  CHECK(m.code == 0);
  CHECK(m.out == "5\n10\n13\n15\n17\n20\n25\n26\n29\n30\n34\n35\n37\n39\n40\n41\n45\n50\n");
  CHECK(run("middles --bound 4").code == 3);
}

TEST_CASE("parameter file") {
  auto p = scratch("params.txt");
  std::ofstream(p) << "# worked example\nt = 1/2\nrho = 2\nn = 1\ny_hz = 1000000\n";
  auto r = run("check-revival --params " + p.string() + " --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("T_seconds=3e-06\n") != std::string::npos);
  auto bad = scratch("bad.txt");
  std::ofstream(bad) << "gamma = 2\n";
  CHECK(run("check-revival --params " + bad.string()).code == 1);
}
