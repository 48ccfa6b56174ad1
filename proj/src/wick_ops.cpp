#include "gsfock/wick_ops.hpp"

#include <algorithm>
#include <cmath>

#include "gsfock/errors.hpp"

namespace gsfock {

namespace {

Eigen::Index as_index(std::size_t v) { return static_cast<Eigen::Index>(v); }

void require_letter(std::size_t i, std::size_t dim) {
  if (i >= dim) {
    throw ArgumentError("generator index " + std::to_string(i) +
                        " out of range for dimension " + std::to_string(dim));
  }
}

// Rows of R_n whose leftmost letter is i.
ComplexMatrix leading_block(const ComplexMatrix& m, std::size_t i, std::size_t dim) {
  const Eigen::Index block = m.rows() / as_index(dim);
  return m.middleRows(as_index(i) * block, block);
}

}  // namespace

ComplexMatrix creation_matrix(std::size_t dim, std::size_t i, std::size_t n,
                              std::size_t max_level_size) {
  require_letter(i, dim);
  if (n < 1) throw ArgumentError("creation targets levels n >= 1");
  const std::size_t target = checked_power(dim, n, max_level_size);
  const std::size_t source = target / dim;
  ComplexMatrix out = ComplexMatrix::Zero(as_index(target), as_index(source));
  for (std::size_t col = 0; col < source; ++col) {
    out(as_index(i * source + col), as_index(col)) = 1.0;
  }
  return out;
}

ComplexMatrix annihilation_matrix(ScalarProduct& product, std::size_t i,
                                  std::size_t n) {
  require_letter(i, product.dim());
  if (n < 1) throw ArgumentError("annihilation acts on levels n >= 1");
  return leading_block(product.r(n), i, product.dim());
}

ComplexMatrix annihilation_matrix(const CrossOperator& cross, std::size_t i,
                                  std::size_t n) {
  ScalarProduct product(tilde(cross));
  return annihilation_matrix(product, i, n);
}

ComplexMatrix annihilation_word(ScalarProduct& product, const MultiIndex& word,
                                std::size_t n) {
  const std::size_t k = word.rank();
  if (k > n) {
    throw ArgumentError("annihilation word of length " + std::to_string(k) +
                        " exceeds level " + std::to_string(n));
  }
  if (word.alphabet() != product.dim()) {
    throw ArgumentError("annihilation word alphabet differs from the dimension");
  }
  ComplexMatrix acc = identity(product.level_size(n));
  // Rightmost letter first, removing one level each step.
  std::size_t level = n;
  for (std::size_t pos = k; pos-- > 0;) {
    acc = annihilation_matrix(product, word[pos], level) * acc;
    --level;
  }
  return acc;
}

ComplexMatrix annihilation_word(const CrossOperator& cross,
                                const MultiIndex& word, std::size_t n) {
  ScalarProduct product(tilde(cross));
  return annihilation_word(product, word, n);
}

CrossSymmetryLadder::CrossSymmetryLadder(CrossOperator cross,
                                         std::size_t max_level_size)
    : cross_(std::move(cross)), max_level_size_(max_level_size) {}

ComplexMatrix CrossSymmetryLadder::passage(std::size_t l) const {
  if (l < 1) throw ArgumentError("passage needs l >= 1");
  const std::size_t size = checked_power(dim(), l + 1, max_level_size_);
  ComplexMatrix acc = identity(size);
  for (std::size_t i = 1; i <= l; ++i) {
    acc = apply_placed(cross_.matrix(), i, l + 1, dim(), acc);
  }
  return acc;
}

ComplexMatrix CrossSymmetryLadder::contraction(std::size_t l) const {
  if (l < 1) throw ArgumentError("contraction needs l >= 1");
  const std::size_t size = checked_power(dim(), l + 1, max_level_size_);
  const ComplexMatrix g = canonical_pairing(dim()).row;
  ComplexMatrix out = ComplexMatrix::Zero(as_index(size / (dim() * dim())), as_index(size));
  // transported = T(p-1) ... T(1), the E* sitting on leg p.
  ComplexMatrix transported = identity(size);
  std::size_t before = 1;
  for (std::size_t p = 1; p <= l; ++p) {
    if (p > 1) {
      transported = apply_placed(cross_.matrix(), p - 1, l + 1, dim(), transported);
      before *= dim();
    }
    const std::size_t after = size / (before * dim() * dim());
    const ComplexMatrix contract = kron(kron(identity(before), g), identity(after));
    out.noalias() += contract * transported;
  }
  return out;
}

ComplexMatrix CrossSymmetryLadder::passage(std::size_t k, std::size_t l) const {
  if (k < 1) throw ArgumentError("passage needs k >= 1");
  const std::size_t size = checked_power(dim(), k + l, max_level_size_);
  const ComplexMatrix single = passage(l);
  ComplexMatrix acc = identity(size);
  // Psi_{1,l}(k) acts first.
  for (std::size_t i = k; i >= 1; --i) {
    acc = apply_placed(single, i, k + l, dim(), acc);
  }
  return acc;
}

ComplexMatrix CrossSymmetryLadder::annihilation(std::size_t i, std::size_t n) const {
  require_letter(i, dim());
  const ComplexMatrix c = contraction(n);
  const Eigen::Index block = c.cols() / as_index(dim());
  return c.middleCols(as_index(i) * block, block);
}

WickRepresentation build_representation(ScalarProduct& product,
                                        std::size_t n_max) {
  WickRepresentation rep;
  rep.dim = product.dim();
  rep.n_max = n_max;
  rep.creation.resize(rep.dim);
  rep.annihilation.resize(rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      rep.creation[i].push_back(
          creation_matrix(rep.dim, i, n, product.max_level_size()));
      rep.annihilation[i].push_back(annihilation_matrix(product, i, n));
    }
  }
  return rep;
}

LevelResiduals verify_adjointness(ScalarProduct& product, std::size_t n_max) {
  LevelResiduals out;
  const std::size_t dim = product.dim();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const ComplexMatrix& g = product.p(n);
    const ComplexMatrix& g_prev = product.p(n - 1);
    double level_max = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      // (A+_i)^dagger selects the rows of G_n whose leftmost letter is i.
      const ComplexMatrix lhs = leading_block(g, i, dim);
      const ComplexMatrix rhs = g_prev * annihilation_matrix(product, i, n);
      level_max = std::max(level_max, max_abs(lhs - rhs));
    }
    out.per_level.push_back(level_max);
    out.max = std::max(out.max, level_max);
  }
  return out;
}

std::string to_string(CrelConvention convention) {
  switch (convention) {
    case CrelConvention::kWickOrdered:
      return "a_i a+_j - sum_kl T^{ij}_{kl} a+_k a_l = delta_ij";
    case CrelConvention::kLiteral:
      return "a_i a+_j - sum_kl T^{ij}_{kl} a+_l a_k = delta_ij";
  }
  return "unknown";
}

LevelResiduals verify_crel(const CrossOperator& cross, ScalarProduct& product,
                           std::size_t n_max, CrelConvention convention) {
  const std::size_t dim = product.dim();
  if (cross.dim() != dim) throw ArgumentError("verify_crel: dimension mismatch");
  LevelResiduals out;
  for (std::size_t m = 0; m + 1 <= n_max; ++m) {
    const std::size_t size = product.level_size(m);
    std::vector<ComplexMatrix> lower;  // a_l : level m -> m-1
    if (m >= 1) {
      for (std::size_t l = 0; l < dim; ++l) lower.push_back(annihilation_matrix(product, l, m));
    }
    std::vector<ComplexMatrix> upper;  // a_i : level m+1 -> m
    for (std::size_t i = 0; i < dim; ++i) upper.push_back(annihilation_matrix(product, i, m + 1));

    double level_max = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        // a_i a+_j keeps the columns of a_i whose leftmost letter is j.
        ComplexMatrix residual = upper[i].middleCols(as_index(j * size), as_index(size));
        if (i == j) residual.diagonal().array() -= Complex(1.0, 0.0);
        if (m >= 1) {
          // sum T a+_c a_d: a+_c stacks its operand into row block c.
          const Eigen::Index block = as_index(size / dim);
          for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t l = 0; l < dim; ++l) {
              const Complex t = cross.coefficient(i, j, k, l);
              if (t == Complex(0.0, 0.0)) continue;
              const bool wick = convention == CrelConvention::kWickOrdered;
              const std::size_t created = wick ? k : l;
              const std::size_t removed = wick ? l : k;
              residual.middleRows(as_index(created) * block, block) -= t * lower[removed];
            }
          }
        }
        level_max = std::max(level_max, max_abs(residual));
      }
    }
    out.per_level.push_back(level_max);
    out.max = std::max(out.max, level_max);
  }
  return out;
}

LevelResiduals verify_representation_theorem(const CrossOperator& cross,
                                             ScalarProduct& product,
                                             std::size_t n_max) {
  return verify_crel(cross, product, n_max, CrelConvention::kWickOrdered);
}

QuotientRepresentation build_quotient_representation(ScalarProduct& product,
                                                     const BraidOperator& braid,
                                                     std::size_t n_max,
                                                     double tol) {
  std::vector<QuotientLevel> levels;
  for (std::size_t n = 0; n <= n_max; ++n) {
    levels.push_back(quotient_structure(product, braid, n, tol));
  }
  return build_quotient_representation(product, std::move(levels));
}

QuotientRepresentation build_quotient_representation(ScalarProduct& product,
                                                     std::vector<QuotientLevel> levels) {
  if (levels.empty()) throw ArgumentError("quotient representation needs level 0");
  for (const QuotientLevel& level : levels) {
    if (!level.well_defined) {
      throw ConstructionError(
          "quotient by the braid ideal is ill-defined at level " + std::to_string(level.n) +
          ": ideal not inside ker G_n (residual " +
          std::to_string(level.containment_residual) + ")");
    }
  }
  QuotientRepresentation q;
  q.dim = product.dim();
  q.n_max = levels.size() - 1;
  q.levels = std::move(levels);
  q.creation.resize(q.dim);
  q.annihilation.resize(q.dim);
  for (std::size_t n = 1; n <= q.n_max; ++n) {
    const ComplexMatrix& basis = q.levels[n].complement_basis;
    const ComplexMatrix& basis_prev = q.levels[n - 1].complement_basis;
    const ComplexMatrix basis_adj = basis.adjoint();
    const Eigen::Index block = basis.rows() / as_index(q.dim);
    for (std::size_t i = 0; i < q.dim; ++i) {
      q.creation[i].push_back(basis_adj.middleCols(as_index(i) * block, block) * basis_prev);
      q.annihilation[i].push_back(basis_prev.adjoint() *
                                  annihilation_matrix(product, i, n) * basis);
    }
  }
  return q;
}

BrelResiduals verify_brel(const CrossOperator& cross, const BraidOperator& braid,
                          ScalarProduct& product,
                          const QuotientRepresentation& q) {
  const std::size_t dim = q.dim;
  const std::size_t n_max = q.n_max;
  if (cross.dim() != dim || braid.dim() != dim) {
    throw ArgumentError("verify_brel: dimension mismatch");
  }
  const auto qdim = [&q](std::size_t n) { return as_index(q.levels[n].quotient_dim); };
  BrelResiduals out;

  // a+_i a+_j on input level m, m + 2 <= n_max.
  for (std::size_t m = 0; m + 2 <= n_max; ++m) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        ComplexMatrix r = q.create(i, m + 2) * q.create(j, m + 1);
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t l = 0; l < dim; ++l) {
            const Complex b = braid.coefficient(i, j, k, l);
            if (b != Complex(0.0, 0.0)) r -= b * q.create(k, m + 2) * q.create(l, m + 1);
          }
        }
        out.cc = std::max(out.cc, max_abs(r));
      }
    }
  }

  // a_i a_j on input level m >= 2.
  for (std::size_t m = 2; m <= n_max; ++m) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        ComplexMatrix r = q.annihilate(i, m - 1) * q.annihilate(j, m);
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t l = 0; l < dim; ++l) {
            const Complex b = std::conj(braid.coefficient(j, i, k, l));
            if (b != Complex(0.0, 0.0)) r -= b * q.annihilate(l, m - 1) * q.annihilate(k, m);
          }
        }
        out.aa = std::max(out.aa, max_abs(r));
      }
    }
  }

  // a_i a+_j on input level m < n_max.
  for (std::size_t m = 0; m + 1 <= n_max; ++m) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        ComplexMatrix r = q.annihilate(i, m + 1) * q.create(j, m + 1);
        if (i == j) r -= ComplexMatrix::Identity(qdim(m), qdim(m));
        if (m >= 1) {
          for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t l = 0; l < dim; ++l) {
              const Complex t = cross.coefficient(i, j, k, l);
              if (t != Complex(0.0, 0.0)) r -= t * q.create(k, m) * q.annihilate(l, m);
            }
          }
        }
        out.crel = std::max(out.crel, max_abs(r));
      }
    }
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    const QuotientLevel& level = q.levels[n];
    const QuotientLevel& prev = q.levels[n - 1];
    const Eigen::Index block = level.complement_basis.rows() / as_index(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const ComplexMatrix lhs = q.create(i, n).adjoint() * level.induced_gram;
      const ComplexMatrix rhs = prev.induced_gram * q.annihilate(i, n);
      out.adjointness = std::max(out.adjointness, max_abs(lhs - rhs));
      if (prev.ideal_dim > 0) {
        const ComplexMatrix leaked =
            level.complement_basis.adjoint().middleCols(as_index(i) * block, block) *
            prev.ideal_basis;
        out.creation_invariance = std::max(out.creation_invariance, max_abs(leaked));
      }
      if (level.ideal_dim > 0) {
        const ComplexMatrix projected =
            prev.complement_basis.adjoint() * annihilation_matrix(product, i, n);
        out.annihilation_invariance =
            std::max(out.annihilation_invariance, max_abs(projected * level.ideal_basis));
      }
    }
  }
  return out;
}

BrelResiduals verify_brel(const CrossOperator& cross, const BraidOperator& braid,
                          ScalarProduct& product, std::size_t n_max, double tol) {
  const QuotientRepresentation q = build_quotient_representation(product, braid, n_max, tol);
  return verify_brel(cross, braid, product, q);
}

ComplexMatrix number_operator(const QuotientRepresentation& quotient,
                              std::size_t n) {
  if (n < 1 || n > quotient.n_max) throw ArgumentError("number_operator: level out of range");
  const auto size = as_index(quotient.levels[n].quotient_dim);
  ComplexMatrix out = ComplexMatrix::Zero(size, size);
  for (std::size_t i = 0; i < quotient.dim; ++i) {
    out.noalias() += quotient.create(i, n) * quotient.annihilate(i, n);
  }
  return out;
}

Spectrum spectrum(const ComplexMatrix& op) {
  Spectrum out;
  if (op.size() == 0) {
    out.real.resize(0);
    return out;
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(op, false);
  const auto& ev = solver.eigenvalues();
  out.real = ev.real();
  std::sort(out.real.data(), out.real.data() + out.real.size());
  out.max_imaginary = ev.imag().cwiseAbs().maxCoeff();
  return out;
}

}  // namespace gsfock
