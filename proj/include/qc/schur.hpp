#pragma once

#include <map>
#include <string>
#include <vector>

#include "qc/lr.hpp"
#include "qc/partition.hpp"

namespace qc {

// Straightening of s_I for an integer sequence I, via row exchanges in the
// Jacobi-Trudi determinant: s_I = sign * s_shape with sign in {-1,0,+1}.
struct Straightened {
  int sign = 0;
  Partition shape;
};
Straightened straighten(const IntegerSequence& seq);

// Element of the ring of symmetric functions in the Schur basis, with
// arbitrary-precision integer coefficients.  Immutable value semantics;
// no zero coefficients stored.
class SchurElement {
public:
  SchurElement() = default;
  static SchurElement unit() { return term(Partition{}, 1); }
  static SchurElement term(const Partition& shape, Int coeff);

  const std::map<Partition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Partition& shape) const;

  SchurElement operator+(const SchurElement& o) const;
  SchurElement operator-(const SchurElement& o) const;
  SchurElement operator*(const SchurElement& o) const;  // LR expansion
  SchurElement scaled(const Int& c) const;

  bool operator==(const SchurElement& o) const { return terms_ == o.terms_; }

  std::string str() const;  // "s[3,1] + 2*s[2,1,1]", "1" for the unit

private:
  void add_term(const Partition& shape, const Int& coeff);
  std::map<Partition, Int> terms_;
};

// Tuple of partitions; key type of TensorElement.
class PartitionTuple {
public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> entries)
      : entries_(std::move(entries)) {}

  const std::vector<Partition>& entries() const { return entries_; }
  int arity() const { return static_cast<int>(entries_.size()); }
  int total_weight() const;

  bool operator==(const PartitionTuple& o) const {
    return entries_ == o.entries_;
  }
  bool operator<(const PartitionTuple& o) const;  // lexicographic

  std::string str() const;  // "s[1](x)s[2,1](x)1"

private:
  std::vector<Partition> entries_;
};

// Element of the n-th tensor power of the ring of symmetric functions, in
// the Schur-tuple basis.
class TensorElement {
public:
  explicit TensorElement(int arity) : arity_(arity) {}
  static TensorElement unit(int arity);  // 1 x ... x 1
  static TensorElement term(PartitionTuple key, Int coeff);

  int arity() const { return arity_; }
  const std::map<PartitionTuple, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const PartitionTuple& key) const;

  void add_term(const PartitionTuple& key, const Int& coeff);

  TensorElement operator+(const TensorElement& o) const;
  // Factor-wise product, expanded back to the Schur-tuple basis.
  TensorElement operator*(const TensorElement& o) const;

  // Pad every key with empty partitions on both sides.
  TensorElement embed(int left_pad, int right_pad) const;

  // k-fold coproduct expansion of the p-th factor (1-based); arity grows
  // by k-1.
  TensorElement coproduct_at(int p, int k) const;

  bool operator==(const TensorElement& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  std::string str() const;

private:
  int arity_ = 0;
  std::map<PartitionTuple, Int> terms_;
};

}  // namespace qc
