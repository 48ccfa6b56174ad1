#include "gsfock/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gsfock/errors.hpp"

namespace gsfock {

MultiIndex::MultiIndex(std::vector<std::size_t> letters, std::size_t alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  if (alphabet_ == 0) throw ArgumentError("MultiIndex: alphabet must be >= 1");
  for (auto letter : letters_) {
    if (letter >= alphabet_) {
      throw ArgumentError("MultiIndex: letter " + std::to_string(letter) +
                          " outside alphabet of size " +
                          std::to_string(alphabet_));
    }
  }
}

MultiIndex MultiIndex::from_flat(std::size_t flat, std::size_t rank,
                                 std::size_t alphabet) {
  std::vector<std::size_t> letters(rank);
  for (std::size_t k = rank; k-- > 0;) {
    letters[k] = flat % alphabet;
    flat /= alphabet;
  }
  if (flat != 0) throw ArgumentError("MultiIndex: flat index out of range");
  return MultiIndex(std::move(letters), alphabet);
}

std::size_t MultiIndex::flat() const {
  std::size_t flat = 0;
  for (auto letter : letters_) flat = flat * alphabet_ + letter;
  return flat;
}

MultiIndex MultiIndex::prepend(std::size_t letter) const {
  std::vector<std::size_t> letters;
  letters.reserve(letters_.size() + 1);
  letters.push_back(letter);
  letters.insert(letters.end(), letters_.begin(), letters_.end());
  return MultiIndex(std::move(letters), alphabet_);
}

std::size_t checked_power(std::size_t base, std::size_t exponent,
                          std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > limit / base) {
      throw SizeLimitError("dimension " + std::to_string(base) + "^" +
                           std::to_string(exponent) +
                           " exceeds the maximum level size " +
                           std::to_string(limit));
    }
    result *= base;
  }
  if (result > limit) {
    throw SizeLimitError("dimension " + std::to_string(result) +
                         " exceeds the maximum level size " +
                         std::to_string(limit));
  }
  return result;
}

std::size_t legs_of(std::size_t size, std::size_t dim) {
  if (dim == 0) throw ArgumentError("legs_of: dimension must be >= 1");
  if (dim == 1) {
    if (size != 1) throw ArgumentError("legs_of: size is not a power of 1");
    return 1;
  }
  std::size_t legs = 0;
  std::size_t acc = 1;
  while (acc < size) {
    acc *= dim;
    ++legs;
  }
  if (acc != size || legs == 0) {
    throw ArgumentError("legs_of: " + std::to_string(size) +
                        " is not a positive power of " + std::to_string(dim));
  }
  return legs;
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t limit) {
  const auto ra = static_cast<std::size_t>(a.rows());
  const auto rb = static_cast<std::size_t>(b.rows());
  const auto ca = static_cast<std::size_t>(a.cols());
  const auto cb = static_cast<std::size_t>(b.cols());
  if ((rb != 0 && ra > limit / rb) || ra * rb > limit ||
      (cb != 0 && ca > limit / cb) || ca * cb > limit) {
    throw SizeLimitError("kron: result exceeds the maximum level size " +
                         std::to_string(limit));
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

struct Layout {
  std::size_t prefix;  // N^(position-1)
  std::size_t block;   // N^m, the span of op
  std::size_t suffix;  // N^(arity-position-m+1)
};

Layout placement_layout(const ComplexMatrix& op, std::size_t position,
                        std::size_t arity, std::size_t dim) {
  if (op.rows() != op.cols()) throw ArgumentError("place: operator not square");
  const std::size_t legs = legs_of(static_cast<std::size_t>(op.rows()), dim);
  if (position < 1 || position + legs - 1 > arity) {
    throw ArgumentError("place: position " + std::to_string(position) +
                        " out of range for a " + std::to_string(legs) +
                        "-leg operator on " + std::to_string(arity) +
                        " factors");
  }
  const auto pow = [dim](std::size_t e) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= dim;
    return r;
  };
  return {pow(position - 1), static_cast<std::size_t>(op.rows()),
          pow(arity - position - legs + 1)};
}

}  // namespace

ComplexMatrix place(const ComplexMatrix& op, std::size_t position,
                    std::size_t arity, std::size_t dim, std::size_t limit) {
  const Layout layout = placement_layout(op, position, arity, dim);
  checked_power(dim, arity, limit);
  return kron(kron(identity(layout.prefix), op, limit), identity(layout.suffix),
              limit);
}

ComplexMatrix apply_placed(const ComplexMatrix& op, std::size_t position,
                           std::size_t arity, std::size_t dim,
                           const ComplexMatrix& x) {
  const Layout layout = placement_layout(op, position, arity, dim);
  const auto total = static_cast<Eigen::Index>(layout.prefix * layout.block *
                                               layout.suffix);
  if (x.rows() != total) {
    throw ArgumentError("apply_placed: operand has " + std::to_string(x.rows()) +
                        " rows, expected " + std::to_string(total));
  }
  const auto block = static_cast<Eigen::Index>(layout.block);
  const auto suffix = static_cast<Eigen::Index>(layout.suffix);
  const Eigen::Index slab = block * suffix;
  const ComplexMatrix op_t = op.transpose();

  ComplexMatrix out(x.rows(), x.cols());
  // Rows (a, b, d) of one column: for fixed a the (d, b) entries form a
  // column-major suffix x block matrix, so op acts by right multiplication.
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(layout.prefix); ++a) {
      const Eigen::Index offset = a * slab;
      Eigen::Map<const ComplexMatrix> in(x.col(j).data() + offset, suffix, block);
      Eigen::Map<ComplexMatrix> res(out.col(j).data() + offset, suffix, block);
      res.noalias() = in * op_t;
    }
  }
  return out;
}

ComplexMatrix apply_placed_right(const ComplexMatrix& x, const ComplexMatrix& op,
                                 std::size_t position, std::size_t arity,
                                 std::size_t dim) {
  const ComplexMatrix op_t = op.transpose();
  const ComplexMatrix x_t = x.transpose();
  return apply_placed(op_t, position, arity, dim, x_t).transpose();
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

}  // namespace gsfock
