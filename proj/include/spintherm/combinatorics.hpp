#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spintherm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact multiplicities g(m) indexed by the shifted macrostate m = sum_j j*k_j.
///
/// Coefficients are non-negative. The polynomials produced in this library are
/// reflection symmetric, coeffs[m] == coeffs[degree - m], because the state
/// spectrum j = 0..d-1 is symmetric about its midpoint.
class MacrostatePolynomial {
 public:
  MacrostatePolynomial() = default;
  explicit MacrostatePolynomial(std::vector<BigInt> coeffs);

  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const BigInt& operator[](std::size_t m) const { return coeffs_.at(m); }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::size_t degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }

  /// Value at q = 1: the total number of microstates.
  [[nodiscard]] BigInt total() const;
  [[nodiscard]] bool is_symmetric() const;
  /// Coefficients rounded to double (exact below 2^53).
  [[nodiscard]] std::vector<double> to_doubles() const;

  friend bool operator==(const MacrostatePolynomial&, const MacrostatePolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Ordinary binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// The q-binomial [n_top choose k]_q, built from its product form
/// prod_{i=1..k} (1 - q^{n_top-k+i}) / (1 - q^i) with exact division at
/// every step. Degree k*(n_top - k).
MacrostatePolynomial gaussian_binomial(long n_top, long k);

/// Boson multiplicities for N particles over d states: [N+d-1 choose d-1]_q.
MacrostatePolynomial boson_multiplicities(int particles, int states);

/// Fermion multiplicities: the t^N coefficient of prod_{j=0}^{d-1} (1 + t x^j),
/// extracted by dynamic programming over the states. Returned with length
/// (d-1)*N + 1; entries below N(N-1)/2 are zero.
MacrostatePolynomial fermion_multiplicities(int particles, int states);

/// Number of monotone lattice paths in an N x (d-1) box enclosing area m,
/// counted by memoised depth-first enumeration. Equivalently the number of
/// boson configurations with macrostate m. Reference counter for the q-binomial.
BigInt grid_path_multiplicity(int particles, int states, int area);

/// N! / (k_0! k_1! ...).
BigInt multinomial(int particles, std::span<const int> occupation);

}  // namespace spintherm
