#include "grasscub/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "grasscub/combinatorics.hpp"
#include "grasscub/errors.hpp"

namespace grasscub {

double pochhammer(double a, int s) {
  if (s < 0) throw ParameterError("pochhammer: negative order");
  double result = 1.0;
  for (int i = 0; i < s; ++i) result *= a + i;
  return result;
}

double pochhammer_gen(double a, const IntegerPartition& pi) {
  double result = 1.0;
  for (int i = 1; i <= pi.length(); ++i)
    result *= pochhammer(a - 0.5 * (i - 1), pi.part(i));
  return result;
}

namespace {

// log (a)_s for a > 0.
double log_pochhammer(double a, int s) {
  return std::lgamma(a + s) - std::lgamma(a);
}

}  // namespace

double zonal_at_identity(const IntegerPartition& pi, int m) {
  const int l = pi.length();
  const int t = pi.weight();
  if (m < 1) throw ParameterError("zonal_at_identity: m must be positive");
  if (l > m) throw ParameterError("zonal_at_identity: partition longer than dimension");
  if (t == 0) return 1.0;

  // The printed power 2^{|pi|} breaks the normalization
  // sum_{|pi|=t} C_pi(I_m) = m^t (already at t=1); 2^{2|pi|} restores it and
  // the regression tests keep guarding the identity.
  if (t <= 20) {
    double num = std::ldexp(factorial(t), 2 * t) * pochhammer_gen(0.5 * m, pi);
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j)
        num *= 2 * pi.part(i) - 2 * pi.part(j) - i + j;
    double den = 1.0;
    for (int i = 1; i <= l; ++i) den *= factorial(2 * pi.part(i) + l - i);
    return num / den;
  }

  // Log accumulation for large weights; every factor is positive.
  double log_num = 2.0 * t * std::log(2.0) + log_factorial(t);
  for (int i = 1; i <= l; ++i)
    log_num += log_pochhammer(0.5 * (m - i + 1), pi.part(i));
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      log_num += std::log(static_cast<double>(2 * pi.part(i) - 2 * pi.part(j) - i + j));
  double log_den = 0.0;
  for (int i = 1; i <= l; ++i) log_den += log_factorial(2 * pi.part(i) + l - i);
  return std::exp(log_num - log_den);
}

double ffp_lower_bound(int t, int k, int d) {
  if (d < 2 || k < 1 || k > d - 1 || t < 1)
    throw ParameterError("ffp_lower_bound: need 1 <= k <= d-1 and t >= 1");
  // Partitions with len(pi) > k contribute C_pi(I_k) = 0 ((k/2)_pi vanishes),
  // so the sum runs over len(pi) <= k.
  double sum = 0.0;
  for (const IntegerPartition& pi : partitions(t, k)) {
    const double ck = zonal_at_identity(pi, k);
    const double cd = zonal_at_identity(pi, d);
    sum += ck * ck / cd;
  }
  return sum;
}

double laplace_eigenvalue(const IntegerPartition& pi, int d) {
  if (d < 2) throw ParameterError("laplace_eigenvalue: d must be >= 2");
  double s = 0.0;
  for (int i = 1; i <= pi.length(); ++i)
    s += static_cast<double>(pi.part(i)) * (pi.part(i) - i);
  return 2.0 * pi.weight() * d + 4.0 * s;
}

namespace {

// Valid eigenvalue lower bound over all partitions of weight w with at most k
// parts: lambda >= 2wd + 4(w^2/k - kw), clipped at zero.
double lambda_floor(double w, int k, int d) {
  return std::max(0.0, 2.0 * w * d + 4.0 * (w * w / k - static_cast<double>(k) * w));
}

}  // namespace

TruncatedSum random_points_constant(double s, int k, int d, int cutoff) {
  if (d < 2 || k < 1 || k > d - 1)
    throw ParameterError("random_points_constant: need 1 <= k <= d-1");
  if (cutoff < 0) throw ParameterError("random_points_constant: negative cutoff");
  if (!(s > 0.5 * k * (d - k)))
    throw ParameterError("random_points_constant: s must exceed k(d-k)/2 = " +
                         std::to_string(0.5 * k * (d - k)));

  double value = 0.0;
  for (int w = 1; w <= cutoff; ++w)
    for (const IntegerPartition& pi : partitions(w, k))
      value += std::pow(1.0 + laplace_eigenvalue(pi, d), -s);

  // Tail: exact partition counts against the eigenvalue floor out to a
  // horizon, then an integral comparison in the weight. Convergent because
  // s > k(d-k)/2 >= k/2 makes the integrand O(x^{k-1-2s}).
  const int horizon = std::max(cutoff, 2 * k * k) + 2000;
  double tail = 0.0;
  for (int w = cutoff + 1; w <= horizon; ++w) {
    const double count = static_cast<double>(count_partitions(w, k));
    tail += count * std::pow(1.0 + lambda_floor(w, k, d), -s);
  }
  // Beyond the horizon: p_k(w) <= (2w)^{k-1}/(k-1)! and lambda >= 2w^2/k.
  const double log_c = (k - 1) * std::log(2.0) - log_factorial(k - 1) +
                       s * std::log(0.5 * k);
  const double exponent = k - 2.0 * s;  // < 0
  tail += std::exp(log_c) * std::pow(static_cast<double>(horizon), exponent) /
          (2.0 * s - k);
  return TruncatedSum{value, tail, true};
}

std::int64_t rep_dimension(int d, const IntegerPartition& pi) {
  if (d < 2) throw ParameterError("rep_dimension: d must be >= 2");
  const int h = d / 2;
  if (pi.length() > h)
    throw ParameterError("rep_dimension: partition longer than floor(d/2)");

  std::vector<double> l(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i)
    l[static_cast<std::size_t>(i - 1)] = 0.5 * d + pi.part(i) - i;

  double result = 1.0;
  for (int i = 1; i <= h; ++i)
    for (int j = i + 1; j <= h; ++j)
      result *= (l[i - 1] + l[j - 1]) * (l[i - 1] - l[j - 1]) /
                (static_cast<double>(j - i) * (d - i - j));
  if (d % 2 == 1) {
    for (int i = 1; i <= h; ++i) result *= 2.0 * l[i - 1] / (d - 2 * i);
  } else if (pi.part(h) > 0) {
    result *= 2.0;
  }

  const double rounded = std::round(result);
  if (std::abs(result - rounded) > 1e-6 || rounded < 1.0)
    throw ConsistencyError("rep_dimension: non-integral value " + std::to_string(result));
  return static_cast<std::int64_t>(rounded);
}

std::int64_t dim_pol_grassmannian(int t, int k, int d) {
  if (d < 2 || k < 1 || k > d - 1 || t < 0)
    throw ParameterError("dim_pol_grassmannian: invalid (t,k,d)");
  const int max_len = std::min(k, d - k);
  std::int64_t sum = 0;
  for (int w = 0; w <= t; ++w) {
    for (const IntegerPartition& pi : partitions(w, max_len)) {
      std::vector<int> doubled(pi.parts());
      for (int& part : doubled) part *= 2;
      sum += rep_dimension(d, IntegerPartition(std::move(doubled)));
    }
  }
  return sum;
}

std::int64_t dim_pol_union(const GrassmannSpec& spec, int t) {
  if (t < 0) throw ParameterError("dim_pol_union: negative degree");
  std::vector<int> ranks = spec.ranks;
  std::stable_sort(ranks.begin(), ranks.end(), [&](int a, int b) {
    const int ma = std::min(a, spec.d - a);
    const int mb = std::min(b, spec.d - b);
    return ma != mb ? ma > mb : a < b;
  });
  const int s = std::min<int>(t + 1, static_cast<int>(ranks.size()));
  std::int64_t sum = 0;
  for (int i = 1; i <= s; ++i)
    sum += dim_pol_grassmannian(t - i + 1, ranks[static_cast<std::size_t>(i - 1)], spec.d);
  return sum;
}

}  // namespace grasscub
