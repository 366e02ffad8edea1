#include "spintherm/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace spintherm {

MacrostatePolynomial::MacrostatePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) {
      throw std::invalid_argument("MacrostatePolynomial: negative multiplicity");
    }
  }
}

BigInt MacrostatePolynomial::total() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), BigInt{0});
}

bool MacrostatePolynomial::is_symmetric() const {
  return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

std::vector<double> MacrostatePolynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(c.convert_to<double>());
  }
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

// c * (1 - q^a)
std::vector<BigInt> times_one_minus_power(const std::vector<BigInt>& c, std::size_t a) {
  std::vector<BigInt> out(c.size() + a);
  for (std::size_t m = 0; m < out.size(); ++m) {
    if (m < c.size()) {
      out[m] += c[m];
    }
    if (m >= a && m - a < c.size()) {
      out[m] -= c[m - a];
    }
  }
  return out;
}

// c / (1 - q^a), which must divide exactly.
std::vector<BigInt> divide_one_minus_power(const std::vector<BigInt>& c, std::size_t a) {
  if (c.size() <= a) {
    throw std::logic_error("gaussian_binomial: divisor degree exceeds dividend");
  }
  std::vector<BigInt> quot(c.size() - a);
  for (std::size_t m = 0; m < quot.size(); ++m) {
    quot[m] = c[m];
    if (m >= a) {
      quot[m] += quot[m - a];
    }
  }
  for (std::size_t m = quot.size(); m < c.size(); ++m) {
    BigInt rem = c[m];
    if (m >= a && m - a < quot.size()) {
      rem += quot[m - a];
    }
    if (rem != 0) {
      throw std::logic_error("gaussian_binomial: inexact division");
    }
  }
  return quot;
}

}  // namespace

MacrostatePolynomial gaussian_binomial(long n_top, long k) {
  if (n_top < 0 || k < 0 || k > n_top) {
    throw std::invalid_argument("gaussian_binomial: require 0 <= k <= n_top, got n_top=" +
                                std::to_string(n_top) + ", k=" + std::to_string(k));
  }
  k = std::min(k, n_top - k);
  std::vector<BigInt> c{1};
  // After step i the running product is [n_top-k+i choose i]_q.
  for (long i = 1; i <= k; ++i) {
    c = times_one_minus_power(c, static_cast<std::size_t>(n_top - k + i));
    c = divide_one_minus_power(c, static_cast<std::size_t>(i));
  }
  return MacrostatePolynomial(std::move(c));
}

MacrostatePolynomial boson_multiplicities(int particles, int states) {
  if (particles < 0 || states < 1) {
    throw std::invalid_argument("boson_multiplicities: require N >= 0 and d >= 1");
  }
  return gaussian_binomial(static_cast<long>(particles) + states - 1, states - 1);
}

MacrostatePolynomial fermion_multiplicities(int particles, int states) {
  if (particles < 0 || states < 1 || particles > states) {
    throw std::invalid_argument("fermion_multiplicities: require 0 <= N <= d");
  }
  const std::size_t n = static_cast<std::size_t>(particles);
  const std::size_t top = static_cast<std::size_t>(states - 1);
  const std::size_t len = top * n + 1;
  // dp[k][m]: number of k-subsets of the states seen so far with index sum m.
  std::vector<std::vector<BigInt>> dp(n + 1, std::vector<BigInt>(len));
  dp[0][0] = 1;
  for (std::size_t j = 0; j <= top; ++j) {
    for (std::size_t k = std::min(j + 1, n); k >= 1; --k) {
      const std::size_t reach = (k - 1) * top;
      for (std::size_t m = 0; m <= reach && m + j < len; ++m) {
        if (!dp[k - 1][m].is_zero()) {
          dp[k][m + j] += dp[k - 1][m];
        }
      }
    }
  }
  return MacrostatePolynomial(std::move(dp[n]));
}

BigInt grid_path_multiplicity(int particles, int states, int area) {
  if (particles < 1 || states < 1) {
    throw std::invalid_argument("grid_path_multiplicity: require N >= 1 and d >= 1");
  }
  const int max_area = (states - 1) * particles;
  if (area < 0 || area > max_area) {
    throw std::invalid_argument("grid_path_multiplicity: area " + std::to_string(area) +
                                " outside [0, " + std::to_string(max_area) + "]");
  }
  // A path with N horizontal and d-1 vertical unit steps is a non-increasing
  // column-height sequence h_1 >= ... >= h_N with h_i in [0, d-1]; the area
  // under it is sum h_i. Count sequences column by column, memoised on
  // (columns left, height cap, remaining area).
  const int caps = states;
  const int areas = area + 1;
  std::vector<std::optional<BigInt>> memo(static_cast<std::size_t>(particles + 1) * caps * areas);
  auto index = [&](int cols, int cap, int rem) {
    return (static_cast<std::size_t>(cols) * caps + cap) * areas + rem;
  };
  auto count = [&](auto&& self, int cols, int cap, int rem) -> BigInt {
    if (cols == 0) {
      return rem == 0 ? 1 : 0;
    }
    if (rem > cols * cap) {
      return 0;
    }
    auto& slot = memo[index(cols, cap, rem)];
    if (slot) {
      return *slot;
    }
    BigInt total = 0;
    for (int h = 0; h <= std::min(cap, rem); ++h) {
      total += self(self, cols - 1, h, rem - h);
    }
    slot = total;
    return total;
  };
  return count(count, particles, states - 1, area);
}

BigInt multinomial(int particles, std::span<const int> occupation) {
  long sum = 0;
  for (int k : occupation) {
    if (k < 0) {
      throw std::invalid_argument("multinomial: negative occupation");
    }
    sum += k;
  }
  if (sum != particles) {
    throw std::invalid_argument("multinomial: occupations sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(particles));
  }
  BigInt r = 1;
  long placed = 0;
  for (int k : occupation) {
    placed += k;
    r *= binomial(placed, k);
  }
  return r;
}

}  // namespace spintherm
