#pragma once

#include <string>
#include <vector>

#include "qc/partition.hpp"

namespace qc {

// Permutation in one-line notation (1-based values).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  // "2431" (digits, m <= 9) or "2,4,3,1".
  static Permutation parse(const std::string& text);
  static Permutation identity(int m);
  static Permutation longest(int m);  // m m-1 ... 1

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }  // 1-based
  const std::vector<int>& image() const { return image_; }

  int length() const;  // inversion count
  Permutation inverse() const;
  // 1^n x w: identity on 1..n, i -> w(i-n)+n above.
  Permutation shifted(int n) const;
  // Extend with fixed points to size m.
  Permutation padded(int m) const;
  // Drop trailing fixed points (size >= 1 kept).
  Permutation trimmed() const;
  Permutation after_transposition(int i) const;  // w * s_i

  // r_w(p,q) = #{ i <= p : w(i) <= q }
  int rank_function(int p, int q) const;
  // r_p(w) = #{ q < p : w(q) > w(p) }
  int inversions_before(int p) const;

  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

  std::string str() const;

private:
  std::vector<int> image_;
};

// w x u: w on the first block, m + u(.-m) on the second.
Permutation cross(const Permutation& w, const Permutation& u);

// All permutations of S_m.
std::vector<Permutation> symmetric_group(int m);

// All reduced words of w (lists of simple reflection indices), by DFS over
// descents.  Independent of the quiver pipeline.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

// One reduced word, by greedy descent peeling; cheap even when the full
// list is huge.
std::vector<int> first_reduced_word(const Permutation& w);

}  // namespace qc
