#pragma once

#include <cstdint>

#include "grasscub/partitions.hpp"

namespace grasscub {

/// Rising factorial (a)_s = a (a+1) ... (a+s-1).
double pochhammer(double a, int s);

/// Generalized hypergeometric coefficient
/// (a)_pi = prod_i (a - (i-1)/2)_{pi_i}; empty partition -> 1.
double pochhammer_gen(double a, const IntegerPartition& pi);

/// Zonal polynomial at the identity,
///
///   C_pi(I_m) = 2^{2|pi|} |pi|! (m/2)_pi
///               prod_{i<j} (2 pi_i - 2 pi_j - i + j) / prod_i (2 pi_i + l - i)!
///
/// normalized so that sum_{|pi|=t, len(pi)<=m} C_pi(I_m) = m^t. Requires
/// len(pi) <= m.
double zonal_at_identity(const IntegerPartition& pi, int m);

/// Double-integral lower bound for the t-fusion frame potential on G_{k,d}:
/// B(t,k,d) = sum_{|pi|=t, len(pi)<=k} C_pi(I_k)^2 / C_pi(I_d).
double ffp_lower_bound(int t, int k, int d);

/// Laplace-Beltrami eigenvalue lambda_pi = 2|pi|d + 4 sum_i pi_i (pi_i - i).
double laplace_eigenvalue(const IntegerPartition& pi, int d);

struct TruncatedSum {
  double value;       // truncated sum
  double tail_bound;  // crude upper bound on the omitted tail
  bool tail_finite;   // false when the crude bound cannot certify convergence
};

/// Random-point worst-case constant c^2 = sum_{1<=len(pi)<=k} (1+lambda_pi)^{-s},
/// truncated at |pi| <= cutoff, with a reported tail estimate. Requires the
/// convergence condition s > k(d-k)/2.
TruncatedSum random_points_constant(double s, int k, int d, int cutoff);

/// Dimension D(d, pi) of the orthogonal-group representation attached to pi
/// (closed product formula over l_i = d/2 + pi_i - i). Requires
/// len(pi) <= floor(d/2); asserts integrality of the product.
std::int64_t rep_dimension(int d, const IntegerPartition& pi);

/// dim Pol_t(G_{k,d}) = sum_{|pi|<=t, len(pi)<=min(k,d-k)} D(d, 2 pi).
std::int64_t dim_pol_grassmannian(int t, int k, int d);

/// dim Pol_t on a union of Grassmannians: ranks sorted so min(k, d-k) is
/// nonincreasing, then sum_{i=1}^{s} dim Pol_{t-i+1}(G_{k_i,d}) with
/// s = min(t+1, |K|).
std::int64_t dim_pol_union(const GrassmannSpec& spec, int t);

}  // namespace grasscub
