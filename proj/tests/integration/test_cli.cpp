// End-to-end checks of the CLI binary: exit codes, artifact files, and
// bit-identical reproducibility across worker counts.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "  ok: " : "  FAIL: ") << what << '\n';
  if (!ok) ++failures;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CAVWIG_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "cavwig_cli_it";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::cout << "[cli] exit codes\n";
  check(run("--help") == 0, "--help exits 0");
  check(run("pulsed --alpha 1 --bogus-flag 1 -o " + (dir / "x").string()) == 2,
        "unknown flag is a hard error (exit 2)");
  check(run("--preset fig9z -o " + (dir / "x").string()) == 2,
        "unknown preset exits 2");
  check(run("pulsed --alpha 1 --r-l 0.3 -o " + (dir / "x").string()) == 2,
        "conflicting inputs exit 2");
  check(run("steady --k 0.1 --g0-over-kappa 3 --truncation 40 --eps-tail 1e-30 -o " +
            (dir / "x").string()) == 3,
        "unmet tail condition exits 3 (numerical error)");

  std::cout << "[cli] pulsed artifacts\n";
  const fs::path adir = dir / "a";
  const std::string common =
      "pulsed --alpha 1 --g0-over-kappa 0.5 --grid -5 5 -4 9 --nx 81 --np 81 "
      "--quad-nodes 257 -o ";
  check(run(common + adir.string()) == 0, "pulsed run exits 0");
  check(fs::exists(adir / "wigner.csv"), "wigner.csv written");
  check(fs::exists(adir / "wigner.json"), "wigner.json sidecar written");
  check(fs::exists(adir / "report.json"), "report.json written");
  {
    nlohmann::json rep;
    std::ifstream f(adir / "report.json");
    f >> rep;
    check(rep.at("metrics").at("delta").get<double>() >= 0.0, "report has delta");
    check(rep.at("params").at("g0_over_kappa") == 0.5, "report has provenance");
  }

  std::cout << "[cli] reproducibility across worker counts\n";
  const fs::path b1 = dir / "b1", b2 = dir / "b2";
  check(run(common + b1.string(), "OMP_NUM_THREADS=1") == 0, "single-thread run");
  check(run(common + b2.string(), "OMP_NUM_THREADS=7") == 0, "seven-thread run");
  check(slurp(b1 / "wigner.csv") == slurp(b2 / "wigner.csv"),
        "wigner.csv bit-identical regardless of worker count");

  std::cout << "[cli] config file with flag override\n";
  {
    std::ofstream f(dir / "run.cfg");
    f << "alpha=1\ng0-over-kappa=0.5\nnx=81\nnp=81\nquad-nodes=257\n";
  }
  const fs::path cdir = dir / "c";
  check(run("pulsed --config " + (dir / "run.cfg").string() +
            " --grid -5 5 -4 9 --g0-over-kappa 0.7 -o " + cdir.string()) == 0,
        "config-file run exits 0");
  {
    nlohmann::json rep;
    std::ifstream f(cdir / "report.json");
    f >> rep;
    check(rep.at("params").at("g0_over_kappa") == 0.7,
          "flag overrides config file value");
  }

  std::cout << "[cli] steady artifacts\n";
  const fs::path sdir = dir / "s";
  check(run("steady --k 0.05 --g0-over-kappa 3 --truncation 60 --eps-tail 1e-2 "
            "--nx 81 --np 81 -o " +
            sdir.string()) == 0,
        "steady run exits 0");
  check(fs::exists(sdir / "populations.csv"), "populations.csv written");
  check(fs::exists(sdir / "populations.json"), "populations sidecar written");
  {
    std::ifstream f(sdir / "populations.csv");
    std::string header;
    std::getline(f, header);
    check(header == "n,P_n", "populations.csv header");
  }

  std::cout << "[cli] sweep artifacts\n";
  const fs::path wdir = dir / "w";
  check(run("sweep --command baseline --axis g0_over_kappa 0.2 0.6 3 --alpha 1 "
            "--nx 41 --np 81 -o " +
            wdir.string()) == 0,
        "sweep exits 0");
  check(fs::exists(wdir / "sweep.csv"), "sweep.csv written");
  {
    std::ifstream f(wdir / "sweep.csv");
    std::string header;
    std::getline(f, header);
    check(header == "axis1,axis2,delta,min_w,min_x,min_p,witness,tau_inf",
          "sweep.csv header");
    int rows = 0;
    for (std::string l; std::getline(f, l);) ++rows;
    check(rows == 3, "one row per sweep point");
  }

  std::cout << (failures == 0 ? "[cli] all checks passed\n"
                              : "[cli] FAILURES: " + std::to_string(failures) + "\n");
  fs::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
