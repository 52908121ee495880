#include "grasscub/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "grasscub/errors.hpp"

namespace grasscub {

double factorial(int n) {
  if (n < 0 || n > 170) throw ParameterError("factorial: n out of range");
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

double log_factorial(int n) {
  if (n < 0) throw ParameterError("log_factorial: negative n");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::int64_t binomial_i64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

double multinomial(int t, const std::vector<int>& beta) {
  int total = 0;
  double result = factorial(t);
  for (int b : beta) {
    if (b < 0) throw ParameterError("multinomial: negative entry");
    total += b;
    result /= factorial(b);
  }
  if (total != t) throw ParameterError("multinomial: |beta| != t");
  return result;
}

namespace {

void multi_indices_rec(int dim, int remaining, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == dim - 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current.push_back(v);
    multi_indices_rec(dim, remaining - v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int dim, int total) {
  if (dim <= 0 || total < 0) throw ParameterError("multi_indices: bad arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  multi_indices_rec(dim, total, current, out);
  return out;
}

std::int64_t count_partitions(int w, int max_len) {
  if (w < 0) return 0;
  if (w == 0) return 1;
  if (max_len <= 0) return 0;
  // p(w, <= L) by the standard recurrence on the largest part.
  std::vector<std::vector<std::int64_t>> dp(
      static_cast<std::size_t>(max_len + 1),
      std::vector<std::int64_t>(static_cast<std::size_t>(w + 1), 0));
  for (int l = 0; l <= max_len; ++l) dp[static_cast<std::size_t>(l)][0] = 1;
  for (int l = 1; l <= max_len; ++l) {
    for (int s = 1; s <= w; ++s) {
      // at most l parts = at most l-1 parts + exactly l parts (drop 1 from each).
      dp[l][s] = dp[l - 1][s] + (s >= l ? dp[l][s - l] : 0);
    }
  }
  return dp[static_cast<std::size_t>(max_len)][static_cast<std::size_t>(w)];
}

}  // namespace grasscub
