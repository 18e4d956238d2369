#include "mzv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> IntPartition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string IntPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Smallest admissible part first so the output comes out sorted.
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<IntPartition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mzv
