#pragma once

#include <map>
#include <set>

#include "qc/permutation.hpp"
#include "qc/quiver.hpp"
#include "qc/tableau.hpp"

namespace qc {

// Filling of a rectangle diagram by semistandard tableaux such that the
// entries of each T_{ij} are strictly larger than all entries of the
// tableaux in its 45-degree cone (T_{kl} with i <= k < l <= j).
class TableauDiagram {
public:
  explicit TableauDiagram(int n) : n_(n) {}

  int n() const { return n_; }
  const Tableau& tab(int i, int j) const;
  void set_tab(int i, int j, Tableau t);

  int total_boxes() const;
  // Diagram of the bottom n-1 rows: entry (i,j) becomes (i,j+1) here.
  TableauDiagram bottom_rows() const;

  bool satisfies_invariants(const RankConditions& r) const;

private:
  int n_;
  std::map<std::pair<int, int>, Tableau> tabs_;
  static const Tableau kEmpty;
};

// Constant-row filling: each non-empty rectangle gets rows offset+1,
// offset+2, ..., offset = max entry over its cone.  With alt_filling, a
// different valid filling (spaced rows with a bumped last column) used to
// spot-check that factor-sequence shape counts do not depend on the
// filling.
TableauDiagram canonical_tableau_diagram(const RankConditions& r,
                                         bool alt_filling = false);

// All distinct factor sequences of the diagram.
std::set<std::vector<Tableau>> factor_sequences(const TableauDiagram& d);

// Comparison of factor-sequence shape counts against the quiver
// coefficients c_mu(r).
struct ConjectureEntry {
  Int factor_count;
  Int coefficient;
  bool match() const { return factor_count == coefficient; }
};
struct ConjectureReport {
  std::map<PartitionTuple, ConjectureEntry> entries;
  bool all_match() const;
};
ConjectureReport conjecture_check(const RankConditions& r,
                                  bool alt_filling = false);

// The proven regime of the factor-sequence rule: rows four and below of
// the rectangle diagram empty, no two neighboring non-empty rectangles in
// row three.
bool in_proven_regime(const RankConditions& r);

// Extremal middle tableaux of the canonical diagram of a permutation:
// shape(w_right) = lambda(w)', shape(w_left) = mu(w)'.
Tableau w_right(const Permutation& w);
Tableau w_left(const Permutation& w);

}  // namespace qc
