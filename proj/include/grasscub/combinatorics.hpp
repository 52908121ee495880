#pragma once

#include <cstdint>
#include <vector>

namespace grasscub {

/// n! as a double; exact for n <= 22, correctly rounded beyond; n <= 170.
double factorial(int n);

/// log(n!) via lgamma.
double log_factorial(int n);

double binomial(int n, int k);
std::int64_t binomial_i64(int n, int k);

/// t! / (beta_1! ... beta_m!) for |beta| = t.
double multinomial(int t, const std::vector<int>& beta);

/// All multi-indices beta in N^dim with |beta| = total, lexicographically
/// descending (first component decreases first). Deterministic order shared by
/// every evaluation matrix in the library.
std::vector<std::vector<int>> multi_indices(int dim, int total);

/// Number of partitions of weight w with at most max_len parts.
std::int64_t count_partitions(int w, int max_len);

}  // namespace grasscub
