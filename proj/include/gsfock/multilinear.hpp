#pragma once

// Dense complex tensor-index engine.
//
// Index convention used everywhere in this library: the multi-index
// (j_1, ..., j_n) over {0, ..., N-1} has flat index sum_k j_k N^(n-k), so the
// leftmost tensor factor is the most significant. kron() follows the same rule.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gsfock {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Largest tensor-power dimension that builders materialize as a dense matrix.
inline constexpr std::size_t kDefaultMaxLevelSize = 2048;

class MultiIndex {
 public:
  MultiIndex(std::vector<std::size_t> letters, std::size_t alphabet);

  static MultiIndex from_flat(std::size_t flat, std::size_t rank,
                              std::size_t alphabet);

  std::size_t flat() const;
  std::size_t rank() const { return letters_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  std::size_t operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<std::size_t>& letters() const { return letters_; }

  // (i) || J
  MultiIndex prepend(std::size_t letter) const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<std::size_t> letters_;
  std::size_t alphabet_;
};

// base^exponent, throwing SizeLimitError when the result exceeds `limit`.
std::size_t checked_power(std::size_t base, std::size_t exponent,
                          std::size_t limit = kDefaultMaxLevelSize);

// Number of tensor legs m with dim^m == size; throws ArgumentError otherwise.
std::size_t legs_of(std::size_t size, std::size_t dim);

ComplexMatrix identity(std::size_t dim);

// Kronecker product: row r_a * rows(b) + r_b, column c_a * cols(b) + c_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t limit = kDefaultMaxLevelSize);

// id^(position-1) (x) op (x) id^(rest) on E^(x arity), dim E = dim.
// `op` acts on m consecutive legs (dim^m square); position is 1-based.
ComplexMatrix place(const ComplexMatrix& op, std::size_t position,
                    std::size_t arity, std::size_t dim,
                    std::size_t limit = kDefaultMaxLevelSize);

// place(op, position, arity, dim) * x without forming the placed matrix.
ComplexMatrix apply_placed(const ComplexMatrix& op, std::size_t position,
                           std::size_t arity, std::size_t dim,
                           const ComplexMatrix& x);

// x * place(op, position, arity, dim) without forming the placed matrix.
ComplexMatrix apply_placed_right(const ComplexMatrix& x, const ComplexMatrix& op,
                                 std::size_t position, std::size_t arity,
                                 std::size_t dim);

ComplexMatrix adjoint(const ComplexMatrix& a);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// Entrywise max-modulus norm; 0 for empty matrices.
double max_abs(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

}  // namespace gsfock
