#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

using Int = boost::multiprecision::cpp_int;

// Integer partition, weakly decreasing positive parts, trailing zeros
// stripped.  This canonical form is what equality and ordering use.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k)
      if (parts_[k] < parts_[k + 1])
        throw std::invalid_argument("partition parts must weakly decrease");
    if (!parts_.empty() && parts_.back() < 0)
      throw std::invalid_argument("partition parts must be non-negative");
  }
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  // 1-based part access; zero beyond the last row.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Total order: length first, then lexicographic.  Used for map keys and
  // deterministic output.
  bool operator<(const Partition& o) const {
    if (parts_.size() != o.parts_.size())
      return parts_.size() < o.parts_.size();
    return parts_ < o.parts_;
  }

  std::string str() const;  // "[3,1]", "[]" for empty

private:
  std::vector<int> parts_;
};

// Index of an unstraightened Schur function; arbitrary integers.
using IntegerSequence = std::vector<int>;

Int factorial(int n);

// f^lambda by the hook length formula.
Int standard_tableau_count(const Partition& lambda);

// f^lambda by explicit enumeration of standard fillings (test oracle).
Int standard_tableau_count_brute(const Partition& lambda);

// Dominance order on partitions of equal weight; throws otherwise.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// All partitions of n with parts <= max_part and length <= max_len
// (-1 = unbounded), in a deterministic order.
std::vector<Partition> partitions_of(int n, int max_part = -1,
                                     int max_len = -1);

}  // namespace qc
