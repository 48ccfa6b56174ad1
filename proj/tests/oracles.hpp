#pragma once

// Independent brute-force references used by the tests. Nothing here calls
// into the placement or recursion code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace gsfock::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

inline std::vector<std::size_t> letters(std::size_t flat, std::size_t n, std::size_t dim) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = flat % dim;
    flat /= dim;
  }
  return out;
}

inline std::size_t flat(const std::vector<std::size_t>& word, std::size_t dim) {
  std::size_t f = 0;
  for (auto w : word) f = f * dim + w;
  return f;
}

inline std::size_t inversions(const std::vector<std::size_t>& perm) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b] ? 1 : 0;
  }
  return inv;
}

// sum over S_n of q^{inv(sigma)}.
inline double inversion_polynomial(double q, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    total += std::pow(q, static_cast<double>(inversions(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// G[I, J] = sum_{sigma in S_n} q^{inv(sigma)} <e_I, sigma . e_J>_0 where
// sigma permutes the letters of J.
inline Matrix permutation_gram(double q, std::size_t dim, std::size_t n) {
  const std::size_t size = power(dim, n);
  Matrix g = Matrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const double weight = std::pow(q, static_cast<double>(inversions(perm)));
    for (std::size_t j = 0; j < size; ++j) {
      const auto word = letters(j, n, dim);
      std::vector<std::size_t> moved(n);
      for (std::size_t k = 0; k < n; ++k) moved[k] = word[perm[k]];
      g(static_cast<Eigen::Index>(flat(moved, dim)), static_cast<Eigen::Index>(j)) += weight;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Dimension of the degree-n part of the graded-commutative algebra on
// generators whose squares vanish when `odd[i]` is set: count multisets of
// size n with odd generators used at most once.
inline std::size_t graded_symmetric_dim(const std::vector<bool>& odd, std::size_t n) {
  const std::size_t dim = odd.size();
  std::size_t count = 0;
  for (std::size_t f = 0; f < power(dim, n); ++f) {
    const auto word = letters(f, n, dim);
    if (!std::is_sorted(word.begin(), word.end())) continue;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (word[k] == word[k + 1] && odd[word[k]]) ok = false;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937& rng) {
  std::normal_distribution<double> dist;
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = Complex(dist(rng), dist(rng));
  }
  return m;
}

inline Matrix random_hermitian(Eigen::Index size, std::mt19937& rng) {
  const Matrix a = random_matrix(size, size, rng);
  return 0.5 * (a + a.adjoint());
}

inline Matrix random_unitary(Eigen::Index size, std::mt19937& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(size, size, rng));
  return qr.householderQ();
}

}  // namespace gsfock::oracle
