#include "gsfock/statistics_ops.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gsfock/errors.hpp"

namespace gsfock {

double scaled_tolerance(double tol, double scale) {
  return tol * std::max(1.0, scale);
}

template <class Tag>
TwoLegOperator<Tag>::TwoLegOperator(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw InputError("operator dimension must be >= 1");
  const auto expected = static_cast<Eigen::Index>(dim_ * dim_);
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    throw InputError("operator must be " + std::to_string(expected) + "x" +
                     std::to_string(expected) + " for dimension " +
                     std::to_string(dim_) + ", got " +
                     std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()));
  }
  if (!matrix_.allFinite()) throw InputError("operator has non-finite entries");
}

template class TwoLegOperator<CrossTag>;
template class TwoLegOperator<TildeTag>;
template class TwoLegOperator<BraidTag>;

Pairing canonical_pairing(std::size_t dim) {
  ComplexMatrix row = ComplexMatrix::Zero(1, static_cast<Eigen::Index>(dim * dim));
  for (std::size_t i = 0; i < dim; ++i) {
    row(0, static_cast<Eigen::Index>(i * dim + i)) = 1.0;
  }
  return {dim, std::move(row)};
}

ComplexMatrix flip(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix tau = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) tau(j * n + i, i * n + j) = 1.0;
  }
  return tau;
}

TildeOperator tilde(const CrossOperator& cross) {
  const std::size_t n = cross.dim();
  ComplexMatrix m(cross.matrix().rows(), cross.matrix().cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          m(static_cast<Eigen::Index>(k * n + l),
            static_cast<Eigen::Index>(i * n + j)) = cross.coefficient(k, i, l, j);
        }
      }
    }
  }
  return TildeOperator(n, std::move(m));
}

CrossOperator untilde(const TildeOperator& tilde_op) {
  // T^{ab}_{cd} = (T~)^{bd}_{ac}
  const std::size_t n = tilde_op.dim();
  ComplexMatrix m(tilde_op.matrix().rows(), tilde_op.matrix().cols());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          m(static_cast<Eigen::Index>(c * n + d),
            static_cast<Eigen::Index>(a * n + b)) =
              tilde_op.coefficient(b, d, a, c);
        }
      }
    }
  }
  return CrossOperator(n, std::move(m));
}

CrossStructure check_cross_structure(const CrossOperator& cross, double tol) {
  const ComplexMatrix& t = cross.matrix();
  const double threshold = scaled_tolerance(tol, max_abs(t));
  CrossStructure out;
  out.hermiticity_residual = max_abs(t - t.adjoint());
  out.hermitian = out.hermiticity_residual <= threshold;
  Eigen::BDCSVD<ComplexMatrix> svd(t);
  const auto& sv = svd.singularValues();
  out.min_singular_value = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  out.invertible = out.min_singular_value > tol;
  return out;
}

namespace {

// || X(1) X(2) X(1) - X(2) X(1) X(2) || for a two-leg X on E^(x3).
double braid_residual(const ComplexMatrix& x, std::size_t dim) {
  const ComplexMatrix x1 = place(x, 1, 3, dim);
  const ComplexMatrix x2 = place(x, 2, 3, dim);
  return max_abs(x1 * x2 * x1 - x2 * x1 * x2);
}

}  // namespace

CheckOutcome check_yang_baxter(const TildeOperator& tilde_op, double tol) {
  const double residual = braid_residual(tilde_op.matrix(), tilde_op.dim());
  return {residual, residual <= scaled_tolerance(tol, max_abs(tilde_op.matrix()))};
}

CheckOutcome check_braid_relation(const BraidOperator& braid, double tol) {
  const double residual = braid_residual(braid.matrix(), braid.dim());
  return {residual, residual <= scaled_tolerance(tol, max_abs(braid.matrix()))};
}

BraidInvertibility check_braid_invertible(const BraidOperator& braid,
                                          double max_condition) {
  Eigen::BDCSVD<ComplexMatrix> svd(braid.matrix());
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  BraidInvertibility out;
  out.condition_number = smallest > 0.0 ? sv(0) / smallest
                                        : std::numeric_limits<double>::infinity();
  out.invertible = out.condition_number < max_condition;
  return out;
}

ConsistencyReport check_consistency(const CrossOperator& cross,
                                    const std::optional<BraidOperator>& braid,
                                    double tol) {
  ConsistencyReport out;
  if (!braid) return out;
  if (braid->dim() != cross.dim()) {
    throw ArgumentError("check_consistency: cross has dimension " +
                        std::to_string(cross.dim()) + ", braid has " +
                        std::to_string(braid->dim()));
  }
  out.braid_present = true;
  const std::size_t n = cross.dim();
  const ComplexMatrix& t = cross.matrix();
  const ComplexMatrix& b = braid->matrix();
  const double scale = std::max(max_abs(t), max_abs(b));
  const double threshold = scaled_tolerance(tol, scale);

  const ComplexMatrix t1 = place(t, 1, 3, n);
  const ComplexMatrix t2 = place(t, 2, 3, n);
  const ComplexMatrix b1 = place(b, 1, 3, n);
  const ComplexMatrix b2 = place(b, 2, 3, n);
  out.mixed_yb_residual = max_abs(b1 * t2 * t1 - t2 * t1 * b2);
  out.mixed_yb_pass = out.mixed_yb_residual <= threshold;

  const ComplexMatrix id = identity(n * n);
  const ComplexMatrix tt = tilde(cross).matrix();
  out.projector_residual = max_abs((id + tt) * (id - b));
  out.projector_pass = out.projector_residual <= threshold;
  return out;
}

NormBound check_norm_bound(const TildeOperator& tilde_op, double tol) {
  NormBound out;
  out.norm = operator_norm(tilde_op.matrix());
  out.satisfies_bound = out.norm <= 1.0 + tol;
  return out;
}

}  // namespace gsfock
