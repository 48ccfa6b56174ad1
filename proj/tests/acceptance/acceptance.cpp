// Prints one [PASS]/[FAIL] line per acceptance criterion; exits nonzero if any
// criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gsfock/cli.hpp"
#include "gsfock/fock_space.hpp"
#include "gsfock/statistics_zoo.hpp"
#include "gsfock/wick_ops.hpp"
#include "../oracles.hpp"

namespace {

using namespace gsfock;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail << "\n";
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

StatisticsSpec mixed_color(std::size_t dim) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({2}));
  Grading degrees;
  for (std::size_t k = 0; k < dim; ++k) degrees.push_back({static_cast<int>(k % 2)});
  return family_color(eps, degrees);
}

void criterion1() {
  const auto start = Clock::now();
  const StatisticsSpec s = family_boltzmann(3);
  ScalarProduct product(tilde(s.cross));
  bool identity_exact = true;
  for (std::size_t n = 1; n <= 4; ++n)
    identity_exact = identity_exact && product.p(n) == identity(oracle::power(3, n));
  const double crel = verify_crel(s.cross, product, 4).max;
  const double elapsed = seconds_since(start);
  report(1, identity_exact && crel == 0.0 && elapsed < 1.0,
         "Boltzmann N=3 n_max=4: G_n identity exact=" + std::string(identity_exact ? "yes" : "no") +
             ", crel residual " + fmt(crel) + ", " + fmt(elapsed) + " s");
}

struct QuotientSummary {
  bool dims_ok = true;
  bool induced_pd = true;
  double containment = 0.0;
};

QuotientSummary quotient_summary(ScalarProduct& product, const BraidOperator& braid,
                                 const std::vector<std::size_t>& expected) {
  QuotientSummary out;
  for (std::size_t n = 1; n < expected.size() + 1; ++n) {
    const QuotientLevel q = quotient_structure(product, braid, n);
    out.dims_ok = out.dims_ok && q.quotient_dim == expected[n - 1];
    out.containment = std::max(out.containment, q.containment_residual);
    if (q.quotient_dim) out.induced_pd = out.induced_pd && inertia(q.induced_gram).positive == q.quotient_dim;
  }
  return out;
}

double number_operator_integrality(const QuotientRepresentation& q) {
  double worst = 0.0;
  for (std::size_t n = 1; n <= q.n_max; ++n) {
    if (q.levels[n].quotient_dim == 0) continue;
    const Spectrum sp = spectrum(number_operator(q, n));
    worst = std::max(worst, sp.max_imaginary);
    for (Eigen::Index k = 0; k < sp.real.size(); ++k)
      worst = std::max(worst, std::abs(sp.real(k) - std::round(sp.real(k))));
  }
  return worst;
}

double brel_max(const BrelResiduals& r) {
  return std::max({r.aa, r.cc, r.crel, r.adjointness, r.creation_invariance, r.annihilation_invariance});
}

void criterion2() {
  const StatisticsSpec s = family_boson(2);
  double structural = check_yang_baxter(tilde(s.cross)).residual;
  structural = std::max(structural, check_braid_relation(*s.braid).residual);
  const ConsistencyReport cons = check_consistency(s.cross, s.braid);
  structural = std::max({structural, cons.mixed_yb_residual, cons.projector_residual,
                         check_cross_structure(s.cross).hermiticity_residual});
  ScalarProduct product(tilde(s.cross));
  std::vector<std::size_t> expected;
  for (std::size_t n = 1; n <= 4; ++n) expected.push_back(oracle::binomial(2 + n - 1, n));
  const QuotientSummary qs = quotient_summary(product, *s.braid, expected);
  const QuotientRepresentation q = build_quotient_representation(product, *s.braid, 4);
  const double brel = brel_max(verify_brel(s.cross, *s.braid, product, q));
  const double integer = number_operator_integrality(q);
  report(2, structural <= 1e-12 && qs.dims_ok && brel <= 1e-10 && integer <= 1e-10,
         "boson N=2: structural " + fmt(structural) + ", quotient dims (2,3,4,5) " +
             (qs.dims_ok ? "match" : "MISMATCH") + ", brel " + fmt(brel) + ", number operator " + fmt(integer));
}

void criterion3() {
  const StatisticsSpec s = family_fermion(3);
  ScalarProduct product(tilde(s.cross));
  std::vector<std::size_t> expected;
  for (std::size_t n = 1; n <= 4; ++n) expected.push_back(oracle::binomial(3, n));
  const QuotientSummary qs = quotient_summary(product, *s.braid, expected);
  const double brel = brel_max(verify_brel(s.cross, *s.braid, product, 4));
  report(3, qs.dims_ok && qs.induced_pd && brel <= 1e-10,
         "fermion N=3: quotient dims (3,3,1,0) " + std::string(qs.dims_ok ? "match" : "MISMATCH") +
             ", induced Gram PD " + (qs.induced_pd ? "yes" : "no") + ", anticommutation " + fmt(brel));
}

void criterion4() {
  double worst1 = 0.0;
  for (double q : {0.3, 0.5, -0.5}) {
    ScalarProduct product(tilde(family_quon(1, q).cross));
    worst1 = std::max(worst1, std::abs(product.p(3)(0, 0) - oracle::permutation_gram(q, 1, 3)(0, 0)));
  }
  ScalarProduct half(tilde(family_quon(1, 0.5).cross));
  const double at_half = half.p(3)(0, 0).real();
  double worst2 = 0.0;
  bool pd = true;
  for (double q : {0.3, 0.5, -0.5}) {
    ScalarProduct product(tilde(family_quon(2, q).cross));
    for (std::size_t n = 1; n <= 4; ++n) {
      worst2 = std::max(worst2, max_abs(product.p(n) - oracle::permutation_gram(q, 2, n)));
      pd = pd && positivity_report(gram(product, n)).positive_definite;
    }
  }
  report(4, worst1 <= 1e-12 && std::abs(at_half - 2.625) <= 1e-12 && worst2 <= 1e-12 && pd,
         "quon oracle: N=1 n=3 deviation " + fmt(worst1) + " (q=0.5 entry " + std::to_string(at_half) +
             "), N=2 n<=4 deviation " + fmt(worst2) + ", positive definite " + (pd ? "yes" : "no"));
}

void criterion5() {
  const std::vector<StatisticsSpec> specs = {family_boltzmann(2), family_boson(2), family_fermion(3),
                                             family_quon(2, 0.5), mixed_color(2)};
  double worst = 0.0;
  for (const StatisticsSpec& s : specs) {
    ScalarProduct product(tilde(s.cross));
    worst = std::max(worst, verify_adjointness(product, 4).max);
  }
  report(5, worst <= 1e-10, "adjointness over five presets, n <= 4: max residual " + fmt(worst));
}

void criterion6() {
  std::vector<StatisticsSpec> consistent = {family_boson(2), family_fermion(3), mixed_color(2), mixed_color(3)};
  const Bicharacter z22 = Bicharacter::standard(AbelianGroup({2, 2}));
  consistent.push_back(family_color(z22, {{0, 1}, {1, 0}, {1, 1}}));
  double worst = 0.0;
  double containment = 0.0;
  for (const StatisticsSpec& s : consistent) {
    const ConsistencyReport r = check_consistency(s.cross, s.braid);
    worst = std::max({worst, r.mixed_yb_residual, r.projector_residual});
    ScalarProduct product(tilde(s.cross));
    for (std::size_t n = 2; n <= 4; ++n)
      containment = std::max(containment, quotient_structure(product, *s.braid, n).containment_residual);
  }
  const ConsistencyReport forced = check_consistency(family_quon(2, 0.5).cross, BraidOperator(2, flip(2)));
  const double forced_residual = std::max(forced.mixed_yb_residual, forced.projector_residual);
  report(6, worst <= 1e-12 && !forced.pass() && forced_residual >= 0.4 && containment <= 1e-10,
         "consistency: consistent pairs " + fmt(worst) + ", quon q=0.5 forced flip " + fmt(forced_residual) +
             ", ideal containment " + fmt(containment));
}

void criterion7() {
  double worst = 0.0;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    worst = std::max(worst, check_yang_baxter(TildeOperator(dim, flip(dim))).residual);
    worst = std::max(worst, check_yang_baxter(TildeOperator(dim, 0.5 * flip(dim))).residual);
    worst = std::max(worst, check_yang_baxter(tilde(mixed_color(dim).cross)).residual);
  }
  const Bicharacter z3 = Bicharacter::standard(AbelianGroup({3}));
  worst = std::max(worst, check_yang_baxter(tilde(family_color(z3, {{0}, {1}, {2}}).cross)).residual);
  ComplexMatrix perturbed = flip(2);
  perturbed(1, 1) += 0.1;
  const CheckOutcome bad = check_yang_baxter(TildeOperator(2, perturbed));
  report(7, worst <= 1e-12 && !bad.pass && bad.residual > 1e-3,
         "Yang-Baxter: flip/scaled flip/color " + fmt(worst) + ", perturbed flip " + fmt(bad.residual));
}

int run_binary(const std::string& args) {
  const std::string command = std::string(GSFOCK_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion8() {
  const std::string fixtures = GSFOCK_FIXTURES;
  const auto dir = std::filesystem::temp_directory_path() / "gsfock_acceptance";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  const int ra = run_binary("report " + fixtures + "/color_z2_mixed.json -o " + a.string());
  const int rb = run_binary("report " + fixtures + "/color_z2_mixed.json -o " + b.string());
  const bool identical = ra == 0 && rb == 0 && !slurp(a).empty() && slurp(a) == slurp(b);
  const int pass_code = run_binary("check " + fixtures + "/boson_n2.json");
  const int fail_code = run_binary("check " + fixtures + "/quon_forced_braid.json");
  const int bad_code = run_binary("check " + fixtures + "/malformed.json");
  std::filesystem::remove_all(dir);
  report(8, identical && pass_code == 0 && fail_code == 1 && bad_code == 2,
         std::string("byte-identical reports ") + (identical ? "yes" : "no") + ", exit codes pass/fail/malformed = " +
             std::to_string(pass_code) + "/" + std::to_string(fail_code) + "/" + std::to_string(bad_code));
}

void criterion9() {
  const auto t0 = Clock::now();
  const cli::Outcome small = cli::run_report(
      cli::parse_config(R"({"dimension":3,"statistics":{"family":"color","group":[2],"degrees":[[0],[1],[1]]},"nmax":4})"));
  const double small_s = seconds_since(t0);
  const auto t1 = Clock::now();
  const cli::Outcome large = cli::run_report(
      cli::parse_config(R"({"dimension":4,"statistics":{"family":"boson"},"nmax":5})"));
  const double large_s = seconds_since(t1);
  const bool verdicts = small.report.at("verdict") == "pass" && large.report.at("verdict") == "pass";
  report(9, small_s < 10.0 && large_s < 120.0 && verdicts,
         "full report N=3 n_max=4 " + fmt(small_s) + " s, N=4 n_max=5 " + fmt(large_s) + " s, verdicts " +
             (verdicts ? "pass" : "FAIL"));
}

}  // namespace

int main() {
  const std::pair<int, void (*)()> criteria[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                 {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                 {7, criterion7}, {8, criterion8}, {9, criterion9}};
  for (const auto& [k, fn] : criteria) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(k, false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << failures << " failing)\n";
  return failures ? 1 : 0;
}
