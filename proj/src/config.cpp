#include <cmath>
#include <set>
#include <string>

#include "gsfock/cli.hpp"
#include "gsfock/errors.hpp"

namespace gsfock::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void reject_unknown_keys(const Json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) fail(where + "." + key, "unknown key");
  }
}

double read_number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

std::size_t read_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

int read_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Complex read_complex(const Json& j, const std::string& where) {
  if (j.is_number()) return {read_number(j, where), 0.0};
  if (!j.is_array() || j.size() != 2) fail(where, "expected a complex number [re, im]");
  return {read_number(j[0], where + "[0]"), read_number(j[1], where + "[1]")};
}

ComplexMatrix read_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(row_where, "expected an array of complex entries");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols || cols == 0) fail(row_where, "rows must have equal non-zero length");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = read_complex(
          j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

void require_operator_shape(const ComplexMatrix& m, std::size_t dim,
                            const std::string& where) {
  const auto n2 = static_cast<Eigen::Index>(dim * dim);
  if (m.rows() != n2 || m.cols() != n2) {
    fail(where, "expected a " + std::to_string(n2) + "x" + std::to_string(n2) +
                    " matrix for dimension " + std::to_string(dim) + ", got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

const std::set<std::string> kFamilies = {"boltzmann", "boson", "fermion",
                                         "quon",      "color", "custom"};

StatisticsConfig read_statistics(const Json& j, std::size_t dim) {
  const std::string where = "statistics";
  if (!j.is_object()) fail(where, "expected an object");
  reject_unknown_keys(j, {"family", "q", "group", "degrees", "epsilon", "cross", "braid"},
                      where);
  if (!j.contains("family") || !j["family"].is_string()) {
    fail(where + ".family", "required string");
  }
  StatisticsConfig s;
  s.family = j["family"].get<std::string>();
  if (!kFamilies.contains(s.family)) {
    fail(where + ".family", "unknown family \"" + s.family + "\"");
  }
  const auto only_for = [&](const char* key, std::initializer_list<const char*> families) {
    if (!j.contains(key)) return false;
    for (const char* f : families) {
      if (s.family == f) return true;
    }
    fail(where + "." + key, "not applicable to family \"" + s.family + "\"");
  };

  if (s.family == "quon") {
    if (!j.contains("q")) fail(where + ".q", "required for family quon");
  }
  if (only_for("q", {"quon"})) s.q = read_number(j["q"], where + ".q");

  if (s.family == "color" && !j.contains("degrees")) {
    fail(where + ".degrees", "required for family color");
  }
  if (only_for("group", {"color"})) {
    const Json& g = j["group"];
    if (!g.is_array() || g.empty()) fail(where + ".group", "expected a non-empty array of orders");
    std::vector<int> factors;
    for (std::size_t r = 0; r < g.size(); ++r) {
      factors.push_back(read_int(g[r], where + ".group[" + std::to_string(r) + "]"));
    }
    s.group = factors;
  }
  if (only_for("degrees", {"color"})) {
    const Json& d = j["degrees"];
    if (!d.is_array() || d.empty()) fail(where + ".degrees", "expected a non-empty array");
    Grading degrees;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::string at = where + ".degrees[" + std::to_string(i) + "]";
      if (d[i].is_number_integer()) {
        degrees.push_back({read_int(d[i], at)});
        continue;
      }
      if (!d[i].is_array()) fail(at, "expected a group element [int, ...]");
      GroupElement e;
      for (std::size_t r = 0; r < d[i].size(); ++r) {
        e.push_back(read_int(d[i][r], at + "[" + std::to_string(r) + "]"));
      }
      degrees.push_back(std::move(e));
    }
    if (degrees.size() != dim) {
      fail(where + ".degrees", "has " + std::to_string(degrees.size()) +
                                   " entries but dimension is " + std::to_string(dim));
    }
    s.degrees = std::move(degrees);
  }
  if (only_for("epsilon", {"color"})) s.epsilon = read_matrix(j["epsilon"], where + ".epsilon");

  if (s.family == "custom" && !j.contains("cross")) {
    fail(where + ".cross", "required for family custom");
  }
  if (only_for("cross", {"custom"})) {
    s.cross = read_matrix(j["cross"], where + ".cross");
    require_operator_shape(*s.cross, dim, where + ".cross");
  }
  if (j.contains("braid")) {
    s.braid = read_matrix(j["braid"], where + ".braid");
    require_operator_shape(*s.braid, dim, where + ".braid");
  }
  return s;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) fail("<root>", "expected a JSON object");
  reject_unknown_keys(j, {"dimension", "statistics", "nmax", "tolerance"}, "<root>");

  RunConfig config;
  if (!j.contains("dimension")) fail("dimension", "required");
  config.dimension = read_count(j["dimension"], "dimension");
  if (config.dimension < 1 || config.dimension > kMaxDimension) {
    fail("dimension", "must be between 1 and " + std::to_string(kMaxDimension));
  }
  if (j.contains("nmax")) config.n_max = read_count(j["nmax"], "nmax");
  if (config.n_max < 1 || config.n_max > kMaxLevels) {
    fail("nmax", "must be between 1 and " + std::to_string(kMaxLevels));
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < config.n_max; ++k) total *= config.dimension;
  if (total > kMaxTruncatedSize) {
    fail("nmax", "dimension^nmax = " + std::to_string(total) + " exceeds " +
                     std::to_string(kMaxTruncatedSize));
  }
  if (j.contains("tolerance")) {
    config.tolerance = read_number(j["tolerance"], "tolerance");
    if (config.tolerance <= 0.0) fail("tolerance", "must be positive");
  }
  if (!j.contains("statistics")) fail("statistics", "required");
  config.statistics = read_statistics(j["statistics"], config.dimension);
  return config;
}

Json config_to_json(const RunConfig& config) {
  const StatisticsConfig& s = config.statistics;
  Json stats = {{"family", s.family}};
  if (s.q) stats["q"] = *s.q;
  if (s.group) stats["group"] = *s.group;
  if (s.degrees) stats["degrees"] = *s.degrees;
  if (s.epsilon) stats["epsilon"] = matrix_to_json(*s.epsilon);
  if (s.cross) stats["cross"] = matrix_to_json(*s.cross);
  if (s.braid) stats["braid"] = matrix_to_json(*s.braid);
  return Json{{"dimension", config.dimension},
              {"nmax", config.n_max},
              {"tolerance", config.tolerance},
              {"statistics", std::move(stats)}};
}

BuiltSpec make_spec(const RunConfig& config) {
  const StatisticsConfig& s = config.statistics;
  const std::size_t dim = config.dimension;
  BuiltSpec built{family_boltzmann(dim), std::nullopt};
  if (s.family == "boltzmann") {
    // already built
  } else if (s.family == "boson") {
    built.spec = family_boson(dim);
  } else if (s.family == "fermion") {
    built.spec = family_fermion(dim);
    built.epsilon = Bicharacter::standard(AbelianGroup({2}));
  } else if (s.family == "quon") {
    built.spec = family_quon(dim, *s.q);
  } else if (s.family == "color") {
    AbelianGroup group(s.group.value_or(std::vector<int>{2}));
    Bicharacter eps = s.epsilon ? Bicharacter(group, *s.epsilon)
                                : Bicharacter::standard(group);
    built.spec = family_color(eps, *s.degrees, config.tolerance);
    built.epsilon = std::move(eps);
  } else if (s.family == "custom") {
    built.spec = load_custom(*s.cross, std::nullopt);
  } else {
    throw ConfigError("statistics.family: unknown family \"" + s.family + "\"");
  }
  if (s.braid) {
    built.spec.braid.emplace(dim, *s.braid);
    if (s.family != "custom") built.spec.parameters["forced_braid"] = 1.0;
  }
  return built;
}

}  // namespace gsfock::cli
