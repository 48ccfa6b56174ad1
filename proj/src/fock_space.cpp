#include "gsfock/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "gsfock/errors.hpp"

namespace gsfock {

std::uint64_t fingerprint(const ComplexMatrix& m) {
  std::uint64_t hash = 14695981039346656037ull;
  const auto mix = [&hash](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < bytes; ++k) {
      hash ^= p[k];
      hash *= 1099511628211ull;
    }
  };
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  mix(&rows, sizeof rows);
  mix(&cols, sizeof cols);
  mix(m.data(), static_cast<std::size_t>(m.size()) * sizeof(Complex));
  return hash;
}

ScalarProduct::ScalarProduct(TildeOperator tilde_op, std::size_t max_level_size)
    : tilde_(std::move(tilde_op)),
      max_level_size_(max_level_size),
      fingerprint_(gsfock::fingerprint(tilde_.matrix())) {}

std::size_t ScalarProduct::level_size(std::size_t n) const {
  return checked_power(dim(), n, max_level_size_);
}

const ComplexMatrix& ScalarProduct::r(std::size_t n) {
  if (n == 0) throw ArgumentError("R_n is defined for n >= 1");
  if (auto it = r_.find(n); it != r_.end()) return it->second;
  const std::size_t size = level_size(n);
  // Horner form: R_n = id + T~(1) (id + T~(2) (id + ... (id + T~(n-1)))).
  ComplexMatrix acc = identity(size);
  for (std::size_t m = n - 1; m >= 1; --m) {
    acc = apply_placed(tilde_.matrix(), m, n, dim(), acc);
    acc.diagonal().array() += Complex(1.0, 0.0);
  }
  return r_.emplace(n, std::move(acc)).first->second;
}

const ComplexMatrix& ScalarProduct::p(std::size_t n) {
  if (auto it = p_.find(n); it != p_.end()) return it->second;
  const std::size_t size = level_size(n);
  if (n <= 1) return p_.emplace(n, identity(size)).first->second;

  const ComplexMatrix& previous = p(n - 1);
  const ComplexMatrix& rn = r(n);
  // id (x) P_{n-1} is block diagonal with N copies of P_{n-1}.
  const auto block = static_cast<Eigen::Index>(size / dim());
  ComplexMatrix out(rn.rows(), rn.cols());
  for (Eigen::Index b = 0; b < static_cast<Eigen::Index>(dim()); ++b) {
    out.middleRows(b * block, block).noalias() =
        previous * rn.middleRows(b * block, block);
  }
  return p_.emplace(n, std::move(out)).first->second;
}

ComplexMatrix r_operator(const TildeOperator& tilde_op, std::size_t n,
                         std::size_t max_level_size) {
  ScalarProduct product(tilde_op, max_level_size);
  return product.r(n);
}

ComplexMatrix p_operator(const TildeOperator& tilde_op, std::size_t n,
                         std::size_t max_level_size) {
  ScalarProduct product(tilde_op, max_level_size);
  return product.p(n);
}

double kernel_threshold(const Eigen::VectorXd& eigenvalues, double tol) {
  const double largest = eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return tol * std::max(1.0, largest);
}

FockLevel gram(ScalarProduct& product, std::size_t n, double tol) {
  FockLevel level;
  level.n = n;
  level.dim = product.dim();
  level.gram = product.p(n);
  level.hermiticity_residual = max_abs(level.gram - level.gram.adjoint());
  level.hermitian =
      level.hermiticity_residual <= scaled_tolerance(tol, max_abs(level.gram));

  const ComplexMatrix symmetric = 0.5 * (level.gram + level.gram.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(symmetric);
  level.eigenvalues = eig.eigenvalues();
  level.kernel_threshold = kernel_threshold(level.eigenvalues, tol);

  std::vector<Eigen::Index> kernel;
  for (Eigen::Index k = 0; k < level.eigenvalues.size(); ++k) {
    if (std::abs(level.eigenvalues(k)) <= level.kernel_threshold) kernel.push_back(k);
  }
  level.kernel_dim = kernel.size();
  level.kernel_basis.resize(symmetric.rows(), static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t c = 0; c < kernel.size(); ++c) {
    level.kernel_basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(kernel[c]);
  }
  return level;
}

FockLevel gram(const TildeOperator& tilde_op, std::size_t n, double tol) {
  ScalarProduct product(tilde_op);
  return gram(product, n, tol);
}

std::string PositivityReport::classification() const {
  if (positive_definite) return "positive_definite";
  if (positive_semidefinite) return "positive_semidefinite";
  return "indefinite";
}

PositivityReport positivity_report(const FockLevel& level, double tol) {
  if (!level.hermitian) {
    throw InconsistencyError("Gram matrix at level " + std::to_string(level.n) +
                             " is not Hermitian (residual " +
                             std::to_string(level.hermiticity_residual) + ")");
  }
  PositivityReport out;
  const Eigen::VectorXd& ev = level.eigenvalues;
  const double threshold = kernel_threshold(ev, tol);
  out.min_eigenvalue = ev.size() > 0 ? ev.minCoeff() : 0.0;
  out.max_eigenvalue = ev.size() > 0 ? ev.maxCoeff() : 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (std::abs(ev(k)) <= threshold) ++out.kernel_dim;
  }
  out.positive_semidefinite = out.min_eigenvalue >= -threshold;
  out.positive_definite = out.min_eigenvalue > threshold;
  return out;
}

IdealComponent ideal_component(const BraidOperator& braid, std::size_t n,
                               double tol, std::size_t max_level_size) {
  if (n < 2) throw ArgumentError("ideal component is defined for n >= 2");
  const std::size_t dim = braid.dim();
  const std::size_t size = checked_power(dim, n, max_level_size);

  const ComplexMatrix generator = identity(dim * dim) - braid.matrix();
  const ComplexMatrix gram_generator = generator * generator.adjoint();
  // range(sum_i X_i X_i^dagger) = sum_i range(X_i) for X_i = place(id - B, i, n).
  ComplexMatrix span = ComplexMatrix::Zero(static_cast<Eigen::Index>(size),
                                           static_cast<Eigen::Index>(size));
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    span += place(gram_generator, i, n, dim, max_level_size);
  }

  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(span);
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  const double leading = diag.size() > 0 ? diag(0) : 0.0;
  const double threshold = tol * std::max(1.0, leading);
  Eigen::Index rank = 0;
  while (rank < diag.size() && diag(rank) > threshold) ++rank;

  const ComplexMatrix q = qr.householderQ();
  IdealComponent out;
  out.n = n;
  out.basis = q.leftCols(rank);
  out.complement = q.rightCols(q.cols() - rank);
  return out;
}

QuotientLevel quotient_structure(ScalarProduct& product,
                                 const BraidOperator& braid, std::size_t n,
                                 double tol) {
  if (braid.dim() != product.dim()) {
    throw ArgumentError("quotient_structure: braid and cross dimensions differ");
  }
  QuotientLevel out;
  out.n = n;
  const std::size_t size = product.level_size(n);
  const ComplexMatrix& g = product.p(n);
  if (n < 2) {
    out.ideal_basis.resize(static_cast<Eigen::Index>(size), 0);
    out.complement_basis = identity(size);
  } else {
    IdealComponent ideal = ideal_component(braid, n, tol, product.max_level_size());
    out.ideal_basis = std::move(ideal.basis);
    out.complement_basis = std::move(ideal.complement);
  }
  out.ideal_dim = static_cast<std::size_t>(out.ideal_basis.cols());
  out.quotient_dim = size - out.ideal_dim;
  out.containment_residual =
      out.ideal_dim > 0 ? max_abs(g * out.ideal_basis) : 0.0;
  out.well_defined = out.containment_residual <= scaled_tolerance(tol, max_abs(g));

  out.induced_gram = out.complement_basis.adjoint() * g * out.complement_basis;
  if (out.quotient_dim > 0) {
    const ComplexMatrix symmetric = 0.5 * (out.induced_gram + out.induced_gram.adjoint());
    out.induced_eigenvalues =
        Eigen::SelfAdjointEigenSolver<ComplexMatrix>(symmetric, Eigen::EigenvaluesOnly)
            .eigenvalues();
  }
  return out;
}

Inertia inertia(const ComplexMatrix& hermitian, double tol) {
  Inertia out;
  if (hermitian.size() == 0) return out;
  const ComplexMatrix symmetric = 0.5 * (hermitian + hermitian.adjoint());
  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<ComplexMatrix>(symmetric, Eigen::EigenvaluesOnly)
          .eigenvalues();
  const double threshold = kernel_threshold(ev, tol);
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > threshold) {
      ++out.positive;
    } else if (ev(k) < -threshold) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

}  // namespace gsfock
