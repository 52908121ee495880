#include "grasscub/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "grasscub/errors.hpp"

namespace grasscub {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParameterError("IntegerPartition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParameterError("IntegerPartition: parts must be nonincreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void enumerate(int remaining, int max_part, int slots_left, std::vector<int>& current,
               std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (slots_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // Even greedy filling of the remaining slots cannot absorb the weight.
    if (static_cast<long long>(p) * slots_left < remaining) break;
    current.push_back(p);
    enumerate(remaining - p, p, slots_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> partitions(int t, int max_len) {
  if (t < 0 || max_len < 0) throw ParameterError("partitions: negative arguments");
  std::vector<IntegerPartition> out;
  if (t == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> current;
  enumerate(t, t, max_len, current, out);
  return out;
}

GrassmannSpec::GrassmannSpec(int d_, std::vector<int> ranks_)
    : d(d_), ranks(std::move(ranks_)) {
  if (d < 2) throw ParameterError("GrassmannSpec: d must be >= 2");
  if (ranks.empty()) throw ParameterError("GrassmannSpec: rank set must be nonempty");
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || ranks[i] > d - 1)
      throw ParameterError("GrassmannSpec: rank out of range [1, d-1]");
    if (i > 0 && ranks[i] == ranks[i - 1])
      throw ParameterError("GrassmannSpec: duplicate rank");
  }
}

}  // namespace grasscub
