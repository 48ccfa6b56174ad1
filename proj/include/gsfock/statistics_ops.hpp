#pragma once

// Cross operator T, its rearrangement T~, braid operator B, and numeric
// checkers for the structural laws relating them.
//
// Two-leg operators are stored as N^2 x N^2 matrices. For the cross
// T : E* (x) E -> E (x) E*, the entry at row k*N+l, column i*N+j is T^{ij}_{kl}:
//     T(x*^i (x) x^j) = sum_{kl} T^{ij}_{kl} x^k (x) x*^l.
// T~ and B act on E (x) E with the same row/column layout.

#include <cstddef>
#include <optional>

#include "gsfock/multilinear.hpp"

namespace gsfock {

inline constexpr double kDefaultTolerance = 1e-10;

// tol * max(1, scale): the pass threshold for residuals of inputs of
// magnitude `scale`.
double scaled_tolerance(double tol, double scale);

template <class Tag>
class TwoLegOperator {
 public:
  TwoLegOperator(std::size_t dim, ComplexMatrix matrix);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  // Coefficient with upper (input) indices i, j and lower (output) k, l.
  Complex coefficient(std::size_t i, std::size_t j, std::size_t k,
                      std::size_t l) const {
    return matrix_(static_cast<Eigen::Index>(k * dim_ + l),
                   static_cast<Eigen::Index>(i * dim_ + j));
  }

  bool operator==(const TwoLegOperator& other) const {
    return dim_ == other.dim_ && matrix_ == other.matrix_;
  }

 private:
  std::size_t dim_;
  ComplexMatrix matrix_;
};

struct CrossTag {};
struct TildeTag {};
struct BraidTag {};

using CrossOperator = TwoLegOperator<CrossTag>;
using TildeOperator = TwoLegOperator<TildeTag>;
using BraidOperator = TwoLegOperator<BraidTag>;

extern template class TwoLegOperator<CrossTag>;
extern template class TwoLegOperator<TildeTag>;
extern template class TwoLegOperator<BraidTag>;

// g_E : E* (x) E -> C, g_E(x*^i (x) x^j) = delta^{ij}, as a 1 x N^2 row.
struct Pairing {
  std::size_t dim;
  ComplexMatrix row;
};

Pairing canonical_pairing(std::size_t dim);

// The flip tau(x^i (x) x^j) = x^j (x) x^i on E (x) E.
ComplexMatrix flip(std::size_t dim);

// (T~)^{ij}_{kl} = T^{ki}_{lj}.
TildeOperator tilde(const CrossOperator& cross);

// Exact inverse of tilde(). The relabeling itself has order 4, not 2.
CrossOperator untilde(const TildeOperator& tilde_op);

struct CrossStructure {
  bool hermitian = false;
  bool invertible = false;
  double hermiticity_residual = 0.0;
  double min_singular_value = 0.0;
};

CrossStructure check_cross_structure(const CrossOperator& cross,
                                     double tol = kDefaultTolerance);

struct CheckOutcome {
  double residual = 0.0;
  bool pass = true;
};

// || T~(1) T~(2) T~(1) - T~(2) T~(1) T~(2) || on E^(x3).
CheckOutcome check_yang_baxter(const TildeOperator& tilde_op,
                               double tol = kDefaultTolerance);

// || B(1) B(2) B(1) - B(2) B(1) B(2) || on E^(x3).
CheckOutcome check_braid_relation(const BraidOperator& braid,
                                  double tol = kDefaultTolerance);

struct BraidInvertibility {
  bool invertible = false;
  double condition_number = 0.0;
};

inline constexpr double kMaxBraidCondition = 1e12;

BraidInvertibility check_braid_invertible(
    const BraidOperator& braid, double max_condition = kMaxBraidCondition);

struct ConsistencyReport {
  double mixed_yb_residual = 0.0;
  double projector_residual = 0.0;
  bool mixed_yb_pass = true;
  bool projector_pass = true;
  bool braid_present = false;

  bool pass() const { return mixed_yb_pass && projector_pass; }
};

// Mixed Yang-Baxter B(1) T(2) T(1) = T(2) T(1) B(2) on E* (x) E (x) E and the
// projector law (id + T~)(id - B) = 0. Without a braid both pass trivially.
// Leg reading: T(1) acts on legs (1,2), T(2) on (2,3), B(1) = B (x) id,
// B(2) = id (x) B; every carrier space has dimension N so each factor is an
// N^3 x N^3 matrix.
ConsistencyReport check_consistency(const CrossOperator& cross,
                                    const std::optional<BraidOperator>& braid,
                                    double tol = kDefaultTolerance);

struct NormBound {
  double norm = 0.0;
  bool satisfies_bound = true;
};

// ||T~|| <= 1 (+ tol).
NormBound check_norm_bound(const TildeOperator& tilde_op,
                           double tol = kDefaultTolerance);

}  // namespace gsfock
