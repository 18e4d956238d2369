#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace mzv {

// An integer partition stored as a non-increasing list of positive parts.
// Ordering is lexicographic on the parts, which puts [1,1,1,1] before
// [2,1,1] before [2,2] before [3,1] before [4].
class IntPartition {
 public:
  explicit IntPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  // multiplicity[j] = number of parts equal to j.
  std::map<int, int> multiplicities() const;

  std::string to_string() const;

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
  friend auto operator<=>(const IntPartition& a, const IntPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n >= 1 in ascending IntPartition order.
std::vector<IntPartition> partitions_of(int n);

}  // namespace mzv
