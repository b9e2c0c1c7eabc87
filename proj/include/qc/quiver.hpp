#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/schur.hpp"

namespace qc {

struct Rectangle {
  int rows = 0;
  int cols = 0;
  bool empty() const { return rows == 0 || cols == 0; }
  int boxes() const { return rows * cols; }
  // The partition whose Young diagram is the rectangle.
  Partition shape() const {
    if (empty()) return {};
    return Partition(std::vector<int>(rows, cols));
  }
  bool operator==(const Rectangle& o) const {
    return rows == o.rows && cols == o.cols;
  }
};

// Rank conditions r_{ij} for a sequence of n maps (n+1 spaces),
// 0 <= i <= j <= n, with r_{ii} the dimension of the i-th space.
class RankConditions {
public:
  explicit RankConditions(int n);

  int n() const { return n_; }
  int rank(int i, int j) const { return data_[index(i, j)]; }
  void set_rank(int i, int j, int value) { data_[index(i, j)] = value; }

  // Occurrence conditions: r_{ij} <= min(r_{i,j-1}, r_{i+1,j}) and
  // r_{ij} - r_{i,j-1} - r_{i+1,j} + r_{i+1,j-1} >= 0 for j-i >= 2.
  bool valid() const;

  // d(r) = sum (r_{i,j-1} - r_{ij})(r_{i+1,j} - r_{ij}).
  int expected_codim() const;

  Rectangle rectangle(int i, int j) const;  // i < j

  // Bottom n rows of the rank diagram: n-1 maps with ranks r_{i,i+1}.
  RankConditions bottom_rows() const;

  // Mirror: r^v_{ij} = r_{n-j,n-i}.
  RankConditions dual() const;

  bool operator==(const RankConditions& o) const {
    return n_ == o.n_ && data_ == o.data_;
  }
  bool operator<(const RankConditions& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return data_ < o.data_;
  }

  // Text format: line 1 is n; then n+1 lines, row k listing r_{i,i+k} for
  // i = 0..n-k, space separated.
  std::string serialize() const;
  static RankConditions parse(const std::string& text);

private:
  int index(int i, int j) const;
  int n_;
  std::vector<int> data_;
};

// The element P_r in the n-th tensor power of the symmetric function ring;
// its coefficients are the quiver coefficients c_mu(r).  Memoized on the
// serialized rank conditions.
TensorElement compute_P(const RankConditions& r);

Int quiver_coefficient(const RankConditions& r, const PartitionTuple& mu);

// (mu_n', ..., mu_1')
PartitionTuple dual_tuple(const PartitionTuple& mu);

// An independent subsequence split: interval [p,q] such that R_{ij} is
// empty whenever exactly one of i, j lies in [p,q], with the restricted
// rank conditions for E_p..E_q and for the spliced outside sequence.
struct Split {
  int p = 0;
  int q = 0;
  RankConditions inner{0};  // q-p maps (E_p..E_q)
  RankConditions outer{0};  // spliced complement
};
std::optional<Split> split_independent(const RankConditions& r);
std::vector<Split> all_independent_splits(const RankConditions& r);

// The factor-wise product identity P_r = (1 x..x 1 x P_r' x 1 x..x 1) *
// Phi^{q-p+2}_p(P_r'') evaluated for one split; true when it holds.
bool split_identity_holds(const RankConditions& r, const Split& s);

}  // namespace qc
