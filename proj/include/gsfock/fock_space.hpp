#pragma once

// Deformed scalar product on the tensor algebra over E:
//   R_n = id + T~(1) + T~(1) T~(2) + ... + T~(1) ... T~(n-1),
//   P_1 = id,  P_{n+1} = (id (x) P_n) R_{n+1},
//   <s|t>_T = <s|P_n t>_0 on E^(x n).
// Monomials are orthonormal for <.|.>_0, so the level-n Gram matrix is the
// matrix of P_n itself.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "gsfock/multilinear.hpp"
#include "gsfock/statistics_ops.hpp"

namespace gsfock {

// FNV-1a over the exact bytes of the entries.
std::uint64_t fingerprint(const ComplexMatrix& m);

// Memoizes R_n and P_n for one T~. Level 0 is the vacuum, P_0 = [1].
class ScalarProduct {
 public:
  explicit ScalarProduct(TildeOperator tilde_op,
                         std::size_t max_level_size = kDefaultMaxLevelSize);

  const TildeOperator& tilde() const { return tilde_; }
  std::size_t dim() const { return tilde_.dim(); }
  std::uint64_t fingerprint() const { return fingerprint_; }
  std::size_t max_level_size() const { return max_level_size_; }

  // N^n; throws SizeLimitError above max_level_size().
  std::size_t level_size(std::size_t n) const;

  const ComplexMatrix& r(std::size_t n);
  const ComplexMatrix& p(std::size_t n);

 private:
  TildeOperator tilde_;
  std::size_t max_level_size_;
  std::uint64_t fingerprint_;
  std::map<std::size_t, ComplexMatrix> r_;
  std::map<std::size_t, ComplexMatrix> p_;
};

ComplexMatrix r_operator(const TildeOperator& tilde_op, std::size_t n,
                         std::size_t max_level_size = kDefaultMaxLevelSize);
ComplexMatrix p_operator(const TildeOperator& tilde_op, std::size_t n,
                         std::size_t max_level_size = kDefaultMaxLevelSize);

struct FockLevel {
  std::size_t n = 0;
  std::size_t dim = 0;
  ComplexMatrix gram;
  double hermiticity_residual = 0.0;
  bool hermitian = true;
  // Eigenvalues of (G + G^dagger)/2, ascending.
  Eigen::VectorXd eigenvalues;
  std::size_t kernel_dim = 0;
  ComplexMatrix kernel_basis;  // orthonormal columns
  double kernel_threshold = 0.0;
};

// |lambda| <= tol * max(1, max |lambda|) counts as zero.
double kernel_threshold(const Eigen::VectorXd& eigenvalues, double tol);

FockLevel gram(ScalarProduct& product, std::size_t n,
               double tol = kDefaultTolerance);
FockLevel gram(const TildeOperator& tilde_op, std::size_t n,
               double tol = kDefaultTolerance);

struct PositivityReport {
  bool positive_definite = false;
  bool positive_semidefinite = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  std::size_t kernel_dim = 0;

  // "positive_definite", "positive_semidefinite" or "indefinite".
  std::string classification() const;
};

// Throws InconsistencyError when the Gram matrix is not Hermitian.
PositivityReport positivity_report(const FockLevel& level,
                                   double tol = kDefaultTolerance);

// Level-n part of the two-sided ideal generated by the image of id - B.
struct IdealComponent {
  std::size_t n = 0;
  ComplexMatrix basis;       // orthonormal basis of I_n
  ComplexMatrix complement;  // orthonormal basis of the free-product complement
};

// Requires n >= 2.
IdealComponent ideal_component(const BraidOperator& braid, std::size_t n,
                               double tol = kDefaultTolerance,
                               std::size_t max_level_size = kDefaultMaxLevelSize);

struct QuotientLevel {
  std::size_t n = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  // I_n inside ker G_n.
  bool well_defined = true;
  double containment_residual = 0.0;  // max over ideal basis v of ||G_n v||
  ComplexMatrix ideal_basis;
  ComplexMatrix complement_basis;
  ComplexMatrix induced_gram;  // complement^dagger G_n complement
  Eigen::VectorXd induced_eigenvalues;
};

// Levels 0 and 1 carry no relations: the quotient is the full level.
QuotientLevel quotient_structure(ScalarProduct& product,
                                 const BraidOperator& braid, std::size_t n,
                                 double tol = kDefaultTolerance);

// (positive, zero, negative) eigenvalue counts with the kernel tolerance.
struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  bool operator==(const Inertia&) const = default;
};

Inertia inertia(const ComplexMatrix& hermitian, double tol = kDefaultTolerance);

}  // namespace gsfock
