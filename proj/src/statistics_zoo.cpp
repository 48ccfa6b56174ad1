#include "gsfock/statistics_zoo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gsfock/errors.hpp"

namespace gsfock {

AbelianGroup::AbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)), order_(1) {
  if (factors_.empty()) throw InputError("group needs at least one cyclic factor");
  for (int m : factors_) {
    if (m < 1) throw InputError("cyclic factor orders must be >= 1");
    if (order_ * static_cast<std::size_t>(m) > kMaxGroupOrder) {
      throw InputError("group order exceeds " + std::to_string(kMaxGroupOrder));
    }
    order_ *= static_cast<std::size_t>(m);
  }
}

GroupElement AbelianGroup::element(std::size_t index) const {
  GroupElement out(factors_.size());
  for (std::size_t r = factors_.size(); r-- > 0;) {
    const auto m = static_cast<std::size_t>(factors_[r]);
    out[r] = static_cast<int>(index % m);
    index /= m;
  }
  return out;
}

std::size_t AbelianGroup::index(const GroupElement& element) const {
  const GroupElement e = normalize(element);
  std::size_t idx = 0;
  for (std::size_t r = 0; r < factors_.size(); ++r) {
    idx = idx * static_cast<std::size_t>(factors_[r]) + static_cast<std::size_t>(e[r]);
  }
  return idx;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size()) {
    throw ArgumentError("group element has the wrong number of components");
  }
  GroupElement sum(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) sum[r] = a[r] + b[r];
  return normalize(sum);
}

GroupElement AbelianGroup::normalize(const GroupElement& element) const {
  if (element.size() != factors_.size()) {
    throw ArgumentError("group element has " + std::to_string(element.size()) +
                        " components, group has " +
                        std::to_string(factors_.size()) + " factors");
  }
  GroupElement out(element.size());
  for (std::size_t r = 0; r < element.size(); ++r) {
    const int m = factors_[r];
    out[r] = ((element[r] % m) + m) % m;
  }
  return out;
}

Bicharacter::Bicharacter(AbelianGroup group, ComplexMatrix table)
    : group_(std::move(group)), table_(std::move(table)) {
  const auto order = static_cast<Eigen::Index>(group_.order());
  if (table_.rows() != order || table_.cols() != order) {
    throw InputError("bicharacter table must be " + std::to_string(order) + "x" +
                     std::to_string(order));
  }
  if (!table_.allFinite()) throw InputError("bicharacter table has non-finite entries");
}

Bicharacter Bicharacter::standard(AbelianGroup group) {
  const auto order = static_cast<Eigen::Index>(group.order());
  ComplexMatrix table(order, order);
  for (Eigen::Index a = 0; a < order; ++a) {
    const GroupElement ea = group.element(static_cast<std::size_t>(a));
    for (Eigen::Index b = 0; b < order; ++b) {
      const GroupElement eb = group.element(static_cast<std::size_t>(b));
      // Integer phase numerators keep Z_2 signs exactly +-1.
      double turns = 0.0;
      for (std::size_t r = 0; r < ea.size(); ++r) {
        const int m = group.factors()[r];
        turns += static_cast<double>((ea[r] * eb[r]) % m) / m;
      }
      turns -= std::floor(turns);
      if (turns == 0.0) {
        table(a, b) = 1.0;
      } else if (turns == 0.5) {
        table(a, b) = -1.0;
      } else {
        table(a, b) = std::polar(1.0, 2.0 * std::numbers::pi * turns);
      }
    }
  }
  return Bicharacter(std::move(group), std::move(table));
}

Complex Bicharacter::operator()(const GroupElement& a, const GroupElement& b) const {
  return table_(static_cast<Eigen::Index>(group_.index(a)),
                static_cast<Eigen::Index>(group_.index(b)));
}

BicharacterReport check_bicharacter(const Bicharacter& epsilon, double tol) {
  const AbelianGroup& g = epsilon.group();
  const std::size_t order = g.order();
  const ComplexMatrix& t = epsilon.table();
  const auto at = [&t](std::size_t a, std::size_t b) {
    return t(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  };
  std::vector<GroupElement> elems;
  elems.reserve(order);
  for (std::size_t a = 0; a < order; ++a) elems.push_back(g.element(a));

  BicharacterReport out;
  double phase_residual = 0.0;
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      phase_residual = std::max(phase_residual, std::abs(std::abs(at(a, b)) - 1.0));
      out.symmetry_residual =
          std::max(out.symmetry_residual, std::abs(at(a, b) * at(b, a) - 1.0));
      const std::size_t ab = g.index(g.add(elems[a], elems[b]));
      for (std::size_t c = 0; c < order; ++c) {
        const std::size_t bc = g.index(g.add(elems[b], elems[c]));
        const double right = std::abs(at(a, bc) - at(a, b) * at(a, c));
        const double left = std::abs(at(ab, c) - at(a, c) * at(b, c));
        out.bicharacter_residual = std::max({out.bicharacter_residual, left, right});
      }
    }
  }
  out.bicharacter_ok = out.bicharacter_residual <= tol;
  out.symmetric_ok = out.symmetry_residual <= tol;
  out.phases_ok = phase_residual <= tol;
  return out;
}

StatisticsSpec family_boltzmann(std::size_t dim) {
  if (dim == 0) throw InputError("dimension must be >= 1");
  const auto n2 = static_cast<Eigen::Index>(dim * dim);
  return StatisticsSpec{"boltzmann", dim,
                        CrossOperator(dim, ComplexMatrix::Zero(n2, n2)),
                        std::nullopt, {}, {}};
}

StatisticsSpec family_boson(std::size_t dim) {
  if (dim == 0) throw InputError("dimension must be >= 1");
  // T^{ij}_{kl} = delta^j_k delta^i_l has the same matrix as the flip.
  return StatisticsSpec{"boson", dim, CrossOperator(dim, flip(dim)),
                        BraidOperator(dim, flip(dim)), {}, {}};
}

StatisticsSpec family_fermion(std::size_t dim) {
  if (dim == 0) throw InputError("dimension must be >= 1");
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({2}));
  StatisticsSpec spec = family_color(eps, Grading(dim, GroupElement{1}));
  spec.name = "fermion";
  return spec;
}

StatisticsSpec family_quon(std::size_t dim, double q) {
  if (dim == 0) throw InputError("dimension must be >= 1");
  if (!std::isfinite(q)) throw InputError("quon parameter q must be finite");
  StatisticsSpec spec{"quon", dim, CrossOperator(dim, q * flip(dim)),
                      std::nullopt, {{"q", q}}, {}};
  if (std::abs(q) > 1.0) {
    std::ostringstream msg;
    msg << "|q| = " << std::abs(q) << " > 1 violates the norm bound on T~";
    spec.warnings.push_back(msg.str());
  }
  return spec;
}

StatisticsSpec family_color(const Bicharacter& epsilon, const Grading& degrees,
                            double tol) {
  if (degrees.empty()) throw InputError("color statistics needs at least one generator");
  const BicharacterReport laws = check_bicharacter(epsilon, tol);
  if (!laws.bicharacter_ok) {
    throw ValidationError("epsilon violates the bicharacter laws (residual " +
                          std::to_string(laws.bicharacter_residual) + ")");
  }
  const AbelianGroup& g = epsilon.group();
  Grading normalized;
  normalized.reserve(degrees.size());
  for (const auto& d : degrees) {
    try {
      normalized.push_back(g.normalize(d));
    } catch (const ArgumentError& e) {
      throw InputError(std::string("degree: ") + e.what());
    }
  }

  const std::size_t dim = degrees.size();
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix t = ComplexMatrix::Zero(n * n, n * n);
  ComplexMatrix b = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& di = normalized[static_cast<std::size_t>(i)];
      const auto& dj = normalized[static_cast<std::size_t>(j)];
      // Both map the basis pair (i, j) to (j, i).
      t(j * n + i, i * n + j) = epsilon(dj, di);
      b(j * n + i, i * n + j) = epsilon(di, dj);
    }
  }
  StatisticsSpec spec{"color", dim, CrossOperator(dim, std::move(t)),
                      BraidOperator(dim, std::move(b)), {}, {}};
  if (!laws.symmetric_ok) {
    spec.warnings.push_back(
        "epsilon is not symmetric: eps(a,b) eps(b,a) != 1 (residual " +
        std::to_string(laws.symmetry_residual) + ")");
  }
  if (!laws.phases_ok) spec.warnings.push_back("epsilon has values off the unit circle");
  return spec;
}

StatisticsSpec load_custom(const ComplexMatrix& cross,
                           const std::optional<ComplexMatrix>& braid) {
  if (cross.rows() != cross.cols()) {
    throw InputError("custom cross matrix must be square");
  }
  const auto size = static_cast<std::size_t>(cross.rows());
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(size))));
  if (size == 0 || dim * dim != size) {
    throw InputError("custom cross matrix size " + std::to_string(size) +
                     " is not N^2 for an integer N");
  }
  std::optional<BraidOperator> b;
  if (braid) b.emplace(dim, *braid);
  return StatisticsSpec{"custom", dim, CrossOperator(dim, cross), std::move(b), {}, {}};
}

}  // namespace gsfock
