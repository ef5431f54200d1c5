#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "oscq/checks.hpp"
#include "oscq/oscillator.hpp"

using namespace oscq;
using checks::VerificationReport;

namespace {

constexpr std::uint64_t kSeed = 20240101;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void announce(int id, const char* name, bool pass, double seconds) {
  std::printf("[acceptance] criterion %02d  %-64s %s  (%.2fs)\n", id, name,
              pass ? "PASS" : "FAIL", seconds);
  std::fflush(stdout);
}

bool run_criterion(int id, const char* name, const VerificationReport& report, double seconds,
                   double budget) {
  bool pass = report.all_pass() && seconds < budget;
  announce(id, name, pass, seconds);
  if (!report.all_pass()) {
    for (const auto& check : report.checks()) {
      if (!check.pass) {
        std::printf("    failing: %s residual=%.3e tol=%.3e\n", check.name.c_str(),
                    check.max_abs_residual, check.tolerance);
      }
    }
  }
  return pass;
}

std::string cli_path() {
  const char* env = std::getenv("OSCQ_CLI");
  return env ? env : "./oscq";
}

int run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("criterion 1: joint spectrum at n_max = 20, integer-exact") {
  Stopwatch timer;
  const VerificationReport report = checks::spectrum_checks(20, 1.0);
  CHECK(run_criterion(1, "joint spectrum is the quarter lattice (exact)", report,
                      timer.seconds(), 1.0));
}

TEST_CASE("criterion 2: su(2)/u(2) identities at n_max = 20, residual <= 1e-12") {
  Stopwatch timer;
  const VerificationReport report =
      checks::su2_u2_checks(osc::build_oscillator_operators(20, 1.0), 1e-12);
  CHECK(run_criterion(2, "su(2)/u(2) commutators and self-adjointness", report, timer.seconds(),
                      10.0));
}

TEST_CASE("criterion 3: b_p algebra, integer-exact through q = 200") {
  Stopwatch timer;
  const VerificationReport report = checks::b_algebra_checks(200);
  CHECK(run_criterion(3, "b_p closed form = recurrence, boundary zeros emerge", report,
                      timer.seconds(), 1.0));
}

TEST_CASE("criterion 4: reduced su(2) for q <= 50, residual <= 1e-12") {
  Stopwatch timer;
  const VerificationReport report = checks::reduced_su2_checks(50, 1.0, 1e-12);
  CHECK(run_criterion(4, "reduced commutators incl. [Q+,Q-] = -4 hbar Q3", report,
                      timer.seconds(), 10.0));
}

TEST_CASE("criterion 5: decomposition dimensions and commutants") {
  Stopwatch timer;
  VerificationReport report = checks::parity_checks(100, 1.0);
  report.merge(checks::oscillator_commutant_checks(12, 1.0));
  report.merge(checks::reduced_commutant_checks(12, 1.0));
  CHECK(run_criterion(5, "dims q+1 / q (q <= 100); commutants 1 and 2 (q <= 12)", report,
                      timer.seconds(), 30.0));
}

TEST_CASE("criterion 6: intertwining for q <= 30, residual <= 1e-12") {
  Stopwatch timer;
  const VerificationReport report = checks::intertwiner_checks(30, 50, 1.0, 1e-12);
  CHECK(run_criterion(6, "five intertwining identities; exact round trips", report,
                      timer.seconds(), 5.0));
}

TEST_CASE("criterion 7: casimir block scalars vs dense oracle, q <= 20") {
  Stopwatch timer;
  const VerificationReport report = checks::casimir_checks(20, 20, 1.0, 1e-10);
  CHECK(run_criterion(7, "casimir = hbar^2 q(q+2) Id, expected from the oracle", report,
                      timer.seconds(), 5.0));
}

TEST_CASE("criterion 8: Poisson table vs finite differences, 1e3 points") {
  Stopwatch timer;
  const VerificationReport report = checks::poisson_table_checks(1000, kSeed, 1e-6);
  CHECK(run_criterion(8, "all 16 bracket pairs match the fd oracle", report, timer.seconds(),
                      5.0));
}

TEST_CASE("criterion 9: Hopf geometry") {
  Stopwatch timer;
  VerificationReport report = checks::hopf_checks(1000, kSeed + 1, 1e-12);
  report.merge(checks::reduced_geometry_checks(500, kSeed + 2, 1e-10));
  CHECK(run_criterion(9, "fiber invariance, plane equations, torus actions, period pi", report,
                      timer.seconds(), 5.0));
}

TEST_CASE("criterion 10: prequantization integral, q in {1,2,5}") {
  Stopwatch timer;
  const VerificationReport report =
      checks::prequantization_checks({1, 2, 5}, 200, 100, 1.0, 1e-4);
  CHECK(run_criterion(10, "quadrature of omega_e equals 2 pi q hbar (2e4 cells)", report,
                      timer.seconds(), 5.0));
}

TEST_CASE("criterion 11: appendix identities, 1e3 seeded trials each") {
  Stopwatch timer;
  const VerificationReport report = checks::su2geo_checks(1000, kSeed + 3, 1e-10);
  CHECK(run_criterion(11, "j-bracket, killing, Ad/rotation, equivariance, orbit form", report,
                      timer.seconds(), 5.0));
}

TEST_CASE("criterion 12: end-to-end exit codes and mutation smoke test") {
  Stopwatch timer;
  bool pass = true;

  const int verify_all = run_cli("verify all");
  pass = pass && (verify_all == 0) && (timer.seconds() < 60.0);

  pass = pass && (run_cli("spectrum --nmax 2") == 0);
  pass = pass && (run_cli("verify oscillator --tol 1e-20") == 1);
  pass = pass && (run_cli("verify --bogus-flag") == 2);
  pass = pass && (run_cli("spectrum --nmax -3") == 2);

  // Every stored pi matrix element, sign-flipped one at a time, must fail.
  const int mutation_nmax = 6;
  const int mutations =
      checks::mutation_count(osc::build_oscillator_operators(mutation_nmax, 1.0));
  CHECK(mutations > 0);
  int caught = 0;
  for (int k = 0; k < mutations; ++k) {
    const std::string args = "verify oscillator --nmax " + std::to_string(mutation_nmax) +
                             " --mutate " + std::to_string(k);
    if (run_cli(args) == 1) ++caught;
  }
  pass = pass && (caught == mutations);

  announce(12, "verify all exits 0 in < 60 s; every pi sign flip exits 1", pass,
           timer.seconds());
  CHECK(verify_all == 0);
  CHECK(caught == mutations);
  CHECK(pass);
}
