#pragma once

// Creation and annihilation operators on the truncated Fock space
// E^(x0) + E^(x1) + ... + E^(x n_max), and verification of the relations
// they satisfy.
//
// Creation prepends a letter: a+_i e_J = e_(i)||J.
// Annihilation contracts the leftmost factor after R_n:
//   a_i |_{E^(x n)} = (c_i (x) id^(n-1)) R_n,
// which makes a_i the adjoint of a+_i for <.|P_n .>_0.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gsfock/fock_space.hpp"
#include "gsfock/multilinear.hpp"
#include "gsfock/statistics_ops.hpp"

namespace gsfock {

// Level n-1 -> n, N^n x N^(n-1), a single 1 per column.
ComplexMatrix creation_matrix(std::size_t dim, std::size_t i, std::size_t n,
                              std::size_t max_level_size = kDefaultMaxLevelSize);

// Level n -> n-1, N^(n-1) x N^n.
ComplexMatrix annihilation_matrix(ScalarProduct& product, std::size_t i,
                                  std::size_t n);
ComplexMatrix annihilation_matrix(const CrossOperator& cross, std::size_t i,
                                  std::size_t n);

// The operator a_{w_0} a_{w_1} ... a_{w_{k-1}} on level n (rightmost letter
// acts first). For T = 0 the word (i_k, ..., i_1) applied to
// x^{j_1} ... x^{j_n} gives delta_{i_1 j_1} ... delta_{i_k j_k} x^{j_{k+1}} ... x^{j_n}.
ComplexMatrix annihilation_word(ScalarProduct& product, const MultiIndex& word,
                                std::size_t n);
ComplexMatrix annihilation_word(const CrossOperator& cross,
                                const MultiIndex& word, std::size_t n);

// Cross symmetry Psi generated by R = T + g_E on mixed tensor products.
// Every carrier space has dimension N, so E* (x) E^l is realized on N^(l+1)
// coordinates with the E* leg first.
class CrossSymmetryLadder {
 public:
  explicit CrossSymmetryLadder(CrossOperator cross,
                               std::size_t max_level_size = kDefaultMaxLevelSize);

  std::size_t dim() const { return cross_.dim(); }

  // Branch of Psi_{1,l} that carries E* through all l factors:
  // E* (x) E^l -> E^l (x) E*, equal to T(l) ... T(1).
  ComplexMatrix passage(std::size_t l) const;

  // Branch of Psi_{1,l} where g_E absorbs the E*: E* (x) E^l -> E^(l-1),
  //   sum_{p=1}^{l} g(p) T(p-1) ... T(1).
  ComplexMatrix contraction(std::size_t l) const;

  // Passage branch of Psi_{k,l} = Psi_{1,l}(1) o ... o Psi_{1,l}(k):
  // E*^k (x) E^l -> E^l (x) E*^k.
  ComplexMatrix passage(std::size_t k, std::size_t l) const;

  // contraction(n) restricted to the E* letter i: level n -> n-1.
  ComplexMatrix annihilation(std::size_t i, std::size_t n) const;

 private:
  CrossOperator cross_;
  std::size_t max_level_size_;
};

struct WickRepresentation {
  std::size_t dim = 0;
  std::size_t n_max = 0;
  // creation[i][n-1] : level n-1 -> n, annihilation[i][n-1] : level n -> n-1.
  std::vector<std::vector<ComplexMatrix>> creation;
  std::vector<std::vector<ComplexMatrix>> annihilation;
  std::map<std::string, double> residuals;

  const ComplexMatrix& create(std::size_t i, std::size_t n) const {
    return creation.at(i).at(n - 1);
  }
  const ComplexMatrix& annihilate(std::size_t i, std::size_t n) const {
    return annihilation.at(i).at(n - 1);
  }
};

WickRepresentation build_representation(ScalarProduct& product,
                                        std::size_t n_max);

struct LevelResiduals {
  double max = 0.0;
  // Indexed by the level the relation is evaluated on (see each verifier).
  std::vector<double> per_level;
};

// max over i, n of ||(A+_i)^dagger G_n - G_{n-1} A-_i||; per_level[n-1]
// holds level n = 1..n_max.
LevelResiduals verify_adjointness(ScalarProduct& product, std::size_t n_max);

// Index placement of the T term in a_i a+_j - T a+ a = delta_ij.
enum class CrelConvention {
  kWickOrdered,  // sum_kl T^{ij}_{kl} a+_k a_l
  kLiteral,      // sum_kl T^{ij}_{kl} a+_l a_k
};

std::string to_string(CrelConvention convention);

// Blocks on levels 0..n_max-1 (the top level is excluded); per_level[m]
// holds input level m.
LevelResiduals verify_crel(const CrossOperator& cross, ScalarProduct& product,
                           std::size_t n_max,
                           CrelConvention convention = CrelConvention::kWickOrdered);

// Generator-level form of the Wick representation theorem: with
// Psi|_{E* (x) E} = T + g_E the theorem's relation is the crel line.
LevelResiduals verify_representation_theorem(const CrossOperator& cross,
                                             ScalarProduct& product,
                                             std::size_t n_max);

// Operators induced on TE / I using the stored complement bases.
struct QuotientRepresentation {
  std::size_t dim = 0;
  std::size_t n_max = 0;
  std::vector<QuotientLevel> levels;  // 0..n_max
  std::vector<std::vector<ComplexMatrix>> creation;
  std::vector<std::vector<ComplexMatrix>> annihilation;

  const ComplexMatrix& create(std::size_t i, std::size_t n) const {
    return creation.at(i).at(n - 1);
  }
  const ComplexMatrix& annihilate(std::size_t i, std::size_t n) const {
    return annihilation.at(i).at(n - 1);
  }
};

// Throws ConstructionError when some I_n is not inside ker G_n.
QuotientRepresentation build_quotient_representation(ScalarProduct& product,
                                                     const BraidOperator& braid,
                                                     std::size_t n_max,
                                                     double tol = kDefaultTolerance);
// Same, from precomputed quotient levels 0..n_max.
QuotientRepresentation build_quotient_representation(ScalarProduct& product,
                                                     std::vector<QuotientLevel> levels);

struct BrelResiduals {
  double aa = 0.0;    // a_i a_j - sum conj(B^{ji}_{kl}) a_l a_k
  double cc = 0.0;    // a+_i a+_j - sum B^{ij}_{kl} a+_k a+_l
  double crel = 0.0;  // a_i a+_j - sum T^{ij}_{kl} a+_k a_l - delta_ij
  double adjointness = 0.0;
  // Largest component of A+ I_{n-1} and A- I_n outside the ideal.
  double creation_invariance = 0.0;
  double annihilation_invariance = 0.0;
};

BrelResiduals verify_brel(const CrossOperator& cross, const BraidOperator& braid,
                          ScalarProduct& product,
                          const QuotientRepresentation& quotient);
BrelResiduals verify_brel(const CrossOperator& cross, const BraidOperator& braid,
                          ScalarProduct& product, std::size_t n_max,
                          double tol = kDefaultTolerance);

// sum_i a+_i a_i on quotient level n (1 <= n <= n_max).
ComplexMatrix number_operator(const QuotientRepresentation& quotient,
                              std::size_t n);

struct Spectrum {
  Eigen::VectorXd real;  // ascending
  double max_imaginary = 0.0;
};

Spectrum spectrum(const ComplexMatrix& op);

}  // namespace gsfock
