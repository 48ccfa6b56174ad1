#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gsfock/cli.hpp"
#include "gsfock/errors.hpp"
#include "gsfock/fock_space.hpp"
#include "gsfock/statistics_ops.hpp"
#include "gsfock/wick_ops.hpp"

namespace gsfock::cli {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

constexpr const char* kError = "error";
constexpr const char* kWarning = "warning";

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

// Accumulates checks and the names of failed error-severity checks.
class ReportBuilder {
 public:
  explicit ReportBuilder(const RunConfig& config)
      : config_(config),
        built_(make_spec(config)),
        product_(tilde(built_.spec.cross)) {}

  const StatisticsSpec& spec() const { return built_.spec; }
  double tol() const { return config_.tolerance; }

  Json check(const std::string& name, double residual, bool pass, const char* severity) {
    if (!pass) {
      (std::string(severity) == kError ? failed_ : warned_).push_back(name);
    }
    return Json{{"name", name}, {"residual", residual}, {"pass", pass}, {"severity", severity}};
  }

  Json structural() {
    const StatisticsSpec& s = spec();
    const TildeOperator& tt = product_.tilde();
    Json checks = Json::array();

    const CrossStructure cross = check_cross_structure(s.cross, tol());
    checks.push_back(check("cross_hermitian", cross.hermiticity_residual, cross.hermitian, kWarning));
    checks.push_back(check("cross_invertible", cross.min_singular_value, cross.invertible, kWarning));
    const NormBound norm = check_norm_bound(tt, tol());
    checks.push_back(check("norm_bound", norm.norm, norm.satisfies_bound, kWarning));
    const CheckOutcome yb = check_yang_baxter(tt, tol());
    checks.push_back(check("yang_baxter", yb.residual, yb.pass, kError));

    if (s.braid) {
      const CheckOutcome braid = check_braid_relation(*s.braid, tol());
      checks.push_back(check("braid_relation", braid.residual, braid.pass, kError));
      const BraidInvertibility inv = check_braid_invertible(*s.braid);
      const double reciprocal = std::isfinite(inv.condition_number) ? 1.0 / inv.condition_number : 0.0;
      checks.push_back(check("braid_invertible", reciprocal, inv.invertible, kWarning));
    }
    const ConsistencyReport cod = check_consistency(s.cross, s.braid, tol());
    if (cod.braid_present) {
      checks.push_back(check("consistency_mixed_yang_baxter", cod.mixed_yb_residual,
                             cod.mixed_yb_pass, kError));
      checks.push_back(check("consistency_projector", cod.projector_residual,
                             cod.projector_pass, kError));
    }
    if (built_.epsilon) {
      const BicharacterReport laws = check_bicharacter(*built_.epsilon, tol());
      checks.push_back(check("bicharacter_laws", laws.bicharacter_residual, laws.bicharacter_ok, kError));
      checks.push_back(check("bicharacter_symmetric", laws.symmetry_residual, laws.symmetric_ok, kWarning));
    }
    structural_pass_ = failed_.empty();

    Json warnings = Json::array();
    for (const auto& w : s.warnings) warnings.push_back(w);
    if (std::abs(max_abs(s.cross.matrix())) == 0.0) {
      warnings.push_back("T = 0 is not invertible; accepted as Boltzmann statistics");
    }
    return Json{{"checks", std::move(checks)}, {"warnings", std::move(warnings)}};
  }

  bool quotient_enabled() const {
    return spec().braid.has_value() && (structural_pass_ || config_.allow_inconsistent);
  }

  Json gram_level(std::size_t n, bool emit_matrix) {
    const FockLevel level = gram(product_, n, tol());
    Json out{{"level", n},
             {"size", product_.level_size(n)},
             {"hermiticity_residual", level.hermiticity_residual},
             {"hermitian", level.hermitian},
             {"kernel_dim", level.kernel_dim}};
    Json checks = Json::array();
    checks.push_back(check("gram_hermitian_" + std::to_string(n), level.hermiticity_residual,
                           level.hermitian, kError));
    if (level.hermitian) {
      const PositivityReport pos = positivity_report(level, tol());
      out["min_eigenvalue"] = pos.min_eigenvalue;
      out["max_eigenvalue"] = pos.max_eigenvalue;
      out["positivity"] = pos.classification();
      checks.push_back(check("gram_positive_semidefinite_" + std::to_string(n), pos.min_eigenvalue,
                             pos.positive_semidefinite, kWarning));
    } else {
      out["positivity"] = "inconsistent";
    }
    out["checks"] = std::move(checks);
    if (emit_matrix) out["matrix"] = matrix_to_json(level.gram);
    return out;
  }

  Json quotient_level(const QuotientLevel& q) {
    Json out{{"level", q.n},
             {"ideal_dim", q.ideal_dim},
             {"quotient_dim", q.quotient_dim},
             {"well_defined", q.well_defined},
             {"containment_residual", q.containment_residual}};
    Json checks = Json::array();
    checks.push_back(check("quotient_well_defined_" + std::to_string(q.n), q.containment_residual,
                           q.well_defined, kError));
    if (q.quotient_dim > 0) {
      const double min_ev = q.induced_eigenvalues.minCoeff();
      const double threshold = kernel_threshold(q.induced_eigenvalues, tol());
      out["induced_min_eigenvalue"] = min_ev;
      out["induced_max_eigenvalue"] = q.induced_eigenvalues.maxCoeff();
      checks.push_back(check("induced_gram_positive_definite_" + std::to_string(q.n), min_ev,
                             min_ev > threshold, kWarning));
    }
    out["checks"] = std::move(checks);
    return out;
  }

  // Per-level sections: Gram summary, quotient, adjointness at that level.
  Json levels() {
    if (quotient_enabled()) {
      for (std::size_t n = 0; n <= config_.n_max; ++n) {
        quotient_levels_.push_back(quotient_structure(product_, *spec().braid, n, tol()));
      }
    }
    const LevelResiduals adj = verify_adjointness(product_, config_.n_max);
    adjointness_ = adj.max;
    Json out = Json::array();
    for (std::size_t n = 1; n <= config_.n_max; ++n) {
      Json entry{{"level", n}, {"gram", gram_level(n, config_.emit_matrix)}};
      entry["adjointness_residual"] = adj.per_level[n - 1];
      entry["quotient"] = quotient_enabled() ? quotient_level(quotient_levels_[n]) : Json(nullptr);
      out.push_back(std::move(entry));
    }
    return out;
  }

  double operator_scale() {
    return std::max({1.0, max_abs(product_.p(config_.n_max)), max_abs(product_.r(config_.n_max))});
  }

  Json operators() {
    const StatisticsSpec& s = spec();
    const double threshold = scaled_tolerance(tol(), operator_scale());
    Json checks = Json::array();
    if (levels_pending_) adjointness_ = verify_adjointness(product_, config_.n_max).max;
    checks.push_back(check("adjointness", adjointness_, adjointness_ <= threshold, kError));
    const LevelResiduals crel = verify_crel(s.cross, product_, config_.n_max);
    checks.push_back(check("crel", crel.max, crel.max <= threshold, kError));
    const LevelResiduals theorem = verify_representation_theorem(s.cross, product_, config_.n_max);
    checks.push_back(check("representation_theorem", theorem.max, theorem.max <= threshold, kError));
    const LevelResiduals literal =
        verify_crel(s.cross, product_, config_.n_max, CrelConvention::kLiteral);

    Json out{{"crel_convention", to_string(CrelConvention::kWickOrdered)},
             {"crel_literal_residual", literal.max}};

    Json quotient{{"available", false}};
    if (!s.braid) {
      quotient["note"] = s.name == "quon"
                             ? "no nontrivial braid quotient exists: ker(id + T~) = {0} forces B = id"
                             : "no braid operator supplied";
    } else if (!quotient_enabled()) {
      quotient["note"] = "skipped: structural checks failed (use --allow-inconsistent to override)";
    } else {
      if (quotient_levels_.empty()) {
        for (std::size_t n = 0; n <= config_.n_max; ++n) {
          quotient_levels_.push_back(quotient_structure(product_, *s.braid, n, tol()));
        }
      }
      Json dims = Json::array();
      for (const auto& q : quotient_levels_) dims.push_back(q.quotient_dim);
      quotient["dims"] = std::move(dims);
      try {
        const QuotientRepresentation rep = build_quotient_representation(product_, quotient_levels_);
        const BrelResiduals brel = verify_brel(s.cross, *s.braid, product_, rep);
        quotient["available"] = true;
        checks.push_back(check("brel_annihilation", brel.aa, brel.aa <= threshold, kError));
        checks.push_back(check("brel_creation", brel.cc, brel.cc <= threshold, kError));
        checks.push_back(check("brel_crel", brel.crel, brel.crel <= threshold, kError));
        checks.push_back(check("quotient_adjointness", brel.adjointness,
                               brel.adjointness <= threshold, kError));
        const double invariance = std::max(brel.creation_invariance, brel.annihilation_invariance);
        checks.push_back(check("quotient_invariance", invariance, invariance <= threshold, kError));

        Json number = Json::array();
        double integer_residual = 0.0;
        double imaginary = 0.0;
        for (std::size_t n = 1; n <= config_.n_max; ++n) {
          const Spectrum sp = spectrum(number_operator(rep, n));
          for (Eigen::Index k = 0; k < sp.real.size(); ++k) {
            integer_residual = std::max(integer_residual, std::abs(sp.real(k) - std::round(sp.real(k))));
          }
          imaginary = std::max(imaginary, sp.max_imaginary);
          number.push_back(Json{{"level", n}, {"eigenvalues", vector_to_json(sp.real)}});
        }
        quotient["number_operator"] = Json{{"levels", std::move(number)},
                                           {"integer_residual", integer_residual},
                                           {"max_imaginary", imaginary}};
      } catch (const ConstructionError& e) {
        quotient["note"] = e.what();
        checks.push_back(check("brel", 0.0, false, kError));
      }
    }
    out["checks"] = std::move(checks);
    out["quotient"] = std::move(quotient);
    return out;
  }

  void mark_levels_done() { levels_pending_ = false; }

  void finish(Json& report) const {
    Json failed = Json::array();
    for (const auto& f : failed_) failed.push_back(f);
    Json warned = Json::array();
    for (const auto& w : warned_) warned.push_back(w);
    report["failed_checks"] = std::move(failed);
    report["warning_checks"] = std::move(warned);
    report["verdict"] = failed_.empty() ? "pass" : "fail";
    report["tool"] = "gsfock";
    report["format_version"] = 1;
    report["statistics"] = Json{{"name", spec().name}, {"dimension", spec().dim},
                                {"braid", spec().braid.has_value()}};
    Json params = Json::object();
    for (const auto& [k, v] : spec().parameters) params[k] = v;
    report["statistics"]["parameters"] = std::move(params);
  }

  int exit_code() const { return failed_.empty() ? kExitPass : kExitFail; }

 private:
  RunConfig config_;
  BuiltSpec built_;
  ScalarProduct product_;
  std::vector<std::string> failed_;
  std::vector<std::string> warned_;
  std::vector<QuotientLevel> quotient_levels_;
  bool structural_pass_ = true;
  bool levels_pending_ = true;
  double adjointness_ = 0.0;
};

}  // namespace

Outcome run_check(const RunConfig& config) {
  ReportBuilder b(config);
  Json report{{"config", config_to_json(config)}, {"structural", b.structural()}};
  b.finish(report);
  return {std::move(report), b.exit_code()};
}

Outcome run_gram(const RunConfig& config, std::size_t level) {
  if (level < 1 || level > config.n_max) {
    throw ArgumentError("--level must be between 1 and nmax = " + std::to_string(config.n_max));
  }
  ReportBuilder b(config);
  Json report{{"config", config_to_json(config)}, {"gram", b.gram_level(level, config.emit_matrix)}};
  b.finish(report);
  return {std::move(report), b.exit_code()};
}

Outcome run_fock(const RunConfig& config) {
  ReportBuilder b(config);
  Json report{{"config", config_to_json(config)}, {"structural", b.structural()}};
  report["operators"] = b.operators();
  b.finish(report);
  return {std::move(report), b.exit_code()};
}

Outcome run_report(const RunConfig& config) {
  ReportBuilder b(config);
  Json report{{"config", config_to_json(config)}, {"structural", b.structural()}};
  report["levels"] = b.levels();
  b.mark_levels_done();
  report["operators"] = b.operators();
  b.finish(report);
  return {std::move(report), b.exit_code()};
}

namespace {

void write_number(double v, std::string& out) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  out += s;
}

void write_value(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write_value(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_primitive() ||
               (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); }));
      });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write_value(e, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      write_number(j.get<double>(), out);
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string emit_json(const Json& value) {
  std::string out;
  write_value(value, out, 0);
  out += "\n";
  return out;
}

std::string human_summary(const Json& report) {
  std::ostringstream os;
  const auto print_checks = [&os](const Json& checks) {
    for (const auto& c : checks) {
      const bool pass = c["pass"].get<bool>();
      const std::string severity = c["severity"].get<std::string>();
      const char* tag = pass ? "PASS" : (severity == "error" ? "FAIL" : "WARN");
      char buf[256];
      std::snprintf(buf, sizeof buf, "  %-4s %-40s %.3e\n", tag,
                    c["name"].get<std::string>().c_str(),
                    c["residual"].is_number() ? c["residual"].get<double>() : 0.0);
      os << buf;
    }
  };
  if (report.contains("statistics")) {
    os << "statistics: " << report["statistics"]["name"].get<std::string>()
       << ", N = " << report["statistics"]["dimension"].get<std::size_t>() << "\n";
  }
  if (report.contains("structural")) {
    os << "structural checks:\n";
    print_checks(report["structural"]["checks"]);
    for (const auto& w : report["structural"]["warnings"]) {
      os << "  note: " << w.get<std::string>() << "\n";
    }
  }
  if (report.contains("levels")) {
    os << "levels:\n";
    for (const auto& level : report["levels"]) {
      const Json& g = level["gram"];
      os << "  n = " << level["level"].get<std::size_t>() << ": size " << g["size"].get<std::size_t>()
         << ", " << g["positivity"].get<std::string>() << ", kernel " << g["kernel_dim"].get<std::size_t>();
      if (!level["quotient"].is_null()) {
        os << ", quotient dim " << level["quotient"]["quotient_dim"].get<std::size_t>();
      }
      os << "\n";
      print_checks(g["checks"]);
      if (!level["quotient"].is_null()) print_checks(level["quotient"]["checks"]);
    }
  }
  if (report.contains("gram")) {
    const Json& g = report["gram"];
    os << "gram level " << g["level"].get<std::size_t>() << ": " << g["positivity"].get<std::string>()
       << ", kernel " << g["kernel_dim"].get<std::size_t>() << "\n";
    print_checks(g["checks"]);
  }
  if (report.contains("operators")) {
    os << "operator relations:\n";
    print_checks(report["operators"]["checks"]);
    const Json& q = report["operators"]["quotient"];
    if (q.contains("note")) os << "  note: " << q["note"].get<std::string>() << "\n";
  }
  os << "verdict: " << report["verdict"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace gsfock::cli
