#pragma once

// Preset statistics families and the color (bicharacter) construction that
// turns a commutation factor on a finite Abelian group into T and B.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsfock/multilinear.hpp"
#include "gsfock/statistics_ops.hpp"

namespace gsfock {

using GroupElement = std::vector<int>;

// Z_{m_1} + ... + Z_{m_r}. Elements are enumerated in mixed radix with the
// first factor most significant.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t order() const { return order_; }

  GroupElement element(std::size_t index) const;
  std::size_t index(const GroupElement& element) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  // Reduces every component into [0, m_r).
  GroupElement normalize(const GroupElement& element) const;

 private:
  std::vector<int> factors_;
  std::size_t order_;
};

// Bicharacters are stored as explicit |G| x |G| tables.
inline constexpr std::size_t kMaxGroupOrder = 64;

class Bicharacter {
 public:
  // table(a, b) = epsilon(element(a), element(b)).
  Bicharacter(AbelianGroup group, ComplexMatrix table);

  // epsilon(a, b) = exp(2 pi i sum_r a_r b_r / m_r); (-1)^{ab} on Z_2.
  static Bicharacter standard(AbelianGroup group);

  const AbelianGroup& group() const { return group_; }
  const ComplexMatrix& table() const { return table_; }
  Complex operator()(const GroupElement& a, const GroupElement& b) const;

 private:
  AbelianGroup group_;
  ComplexMatrix table_;
};

struct BicharacterReport {
  bool bicharacter_ok = false;
  bool symmetric_ok = false;
  bool phases_ok = false;
  double bicharacter_residual = 0.0;
  double symmetry_residual = 0.0;
};

// Exhaustive check of epsilon(a, b + c) = epsilon(a, b) epsilon(a, c),
// epsilon(a + b, c) = epsilon(a, c) epsilon(b, c) and
// epsilon(a, b) epsilon(b, a) = 1.
BicharacterReport check_bicharacter(const Bicharacter& epsilon,
                                    double tol = kDefaultTolerance);

// Degree |i| of generator x^i.
using Grading = std::vector<GroupElement>;

struct StatisticsSpec {
  std::string name;
  std::size_t dim = 0;
  CrossOperator cross;
  std::optional<BraidOperator> braid;
  std::map<std::string, double> parameters;
  std::vector<std::string> warnings;
};

StatisticsSpec family_boltzmann(std::size_t dim);
StatisticsSpec family_boson(std::size_t dim);
StatisticsSpec family_fermion(std::size_t dim);
StatisticsSpec family_quon(std::size_t dim, double q);

// T(x*^i (x) x^j) = eps(|j|, |i|) x^j (x) x*^i,
// B(x^i (x) x^j)  = eps(|i|, |j|) x^j (x) x^i.
// Throws ValidationError if the bicharacter laws fail; a non-symmetric
// bicharacter is accepted with a warning.
StatisticsSpec family_color(const Bicharacter& epsilon, const Grading& degrees,
                            double tol = kDefaultTolerance);

// Wraps user matrices; throws InputError unless both are N^2 x N^2.
StatisticsSpec load_custom(const ComplexMatrix& cross,
                           const std::optional<ComplexMatrix>& braid);

}  // namespace gsfock
