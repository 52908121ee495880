#pragma once

#include <compare>
#include <vector>

namespace grasscub {

/// Nonincreasing list of positive integers. The empty partition (weight 0,
/// length 0) is a valid value.
class IntegerPartition {
public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);
  IntegerPartition(std::initializer_list<int> parts)
      : IntegerPartition(std::vector<int>(parts)) {}

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// 1-based part, zero beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const IntegerPartition& other) const = default;
  auto operator<=>(const IntegerPartition& other) const { return parts_ <=> other.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of weight exactly t with length <= max_len, in
/// lexicographic-descending order: (4), (3,1), (2,2), ...
std::vector<IntegerPartition> partitions(int t, int max_len);

/// A single Grassmannian (one rank) or a union of Grassmannians (a rank set).
struct GrassmannSpec {
  GrassmannSpec(int d, std::vector<int> ranks);

  int d;
  std::vector<int> ranks;  // distinct, each in [1, d-1]
};

}  // namespace grasscub
