#pragma once

#include <set>
#include <utility>
#include <vector>

#include "qc/partition.hpp"

namespace qc {

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase, entries positive.
class Tableau {
public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);
  Tableau(std::initializer_list<std::vector<int>> rows)
      : Tableau(std::vector<std::vector<int>>(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int box_count() const;
  Partition shape() const;

  // Entry multiset, sorted ascending.
  std::vector<int> content() const;

  // Row word: bottom row first, each row left to right.
  std::vector<int> row_word() const;

  // Schensted row insertion of v; throws for v < 1.
  Tableau insert(int v) const;

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

  std::string str() const;  // "[[1,1],[2]]"

private:
  std::vector<std::vector<int>> rows_;
};

// Plactic product P*Q: insert the row word of Q into P.
Tableau product(const Tableau& p, const Tableau& q);

// All semistandard tableaux whose entry multiset equals `content`
// (given sorted ascending).
std::set<Tableau> tableaux_with_content(std::vector<int> content);

// All pairs (P,Q) with product(P,Q) == u.  Memoized.
std::set<std::pair<Tableau, Tableau>> factorizations(const Tableau& u);

}  // namespace qc
