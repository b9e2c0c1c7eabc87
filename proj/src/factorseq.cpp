#include "qc/factorseq.hpp"

#include <algorithm>
#include <stdexcept>

#include "qc/schubert.hpp"
#include "qc/stanley.hpp"

namespace qc {

const Tableau TableauDiagram::kEmpty{};

const Tableau& TableauDiagram::tab(int i, int j) const {
  auto it = tabs_.find({i, j});
  return it == tabs_.end() ? kEmpty : it->second;
}

void TableauDiagram::set_tab(int i, int j, Tableau t) {
  if (i < 0 || i >= j || j > n_)
    throw std::invalid_argument("tableau position out of range");
  if (t.empty()) tabs_.erase({i, j});
  else tabs_[{i, j}] = std::move(t);
}

int TableauDiagram::total_boxes() const {
  int total = 0;
  for (const auto& [pos, t] : tabs_) total += t.box_count();
  return total;
}

TableauDiagram TableauDiagram::bottom_rows() const {
  TableauDiagram out(n_ - 1);
  for (const auto& [pos, t] : tabs_)
    if (pos.second > pos.first + 1) out.set_tab(pos.first, pos.second - 1, t);
  return out;
}

bool TableauDiagram::satisfies_invariants(const RankConditions& r) const {
  if (n_ != r.n()) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      Rectangle rect = r.rectangle(i, j);
      if (!(tab(i, j).shape() == rect.shape())) return false;
      if (tab(i, j).empty()) continue;
      int low = tab(i, j).rows()[0][0];
      for (int k = i; k < j; ++k)
        for (int l = k + 1; l <= j; ++l) {
          if (k == i && l == j) continue;
          for (const auto& row : tab(k, l).rows())
            for (int v : row)
              if (v >= low) return false;
        }
    }
  return true;
}

TableauDiagram canonical_tableau_diagram(const RankConditions& r,
                                         bool alt_filling) {
  TableauDiagram d(r.n());
  // rows of the diagram top to bottom; the cone of (i,j) lies in rows
  // strictly above, so this is a topological order
  for (int span = 1; span <= r.n(); ++span)
    for (int i = 0; i + span <= r.n(); ++i) {
      int j = i + span;
      Rectangle rect = r.rectangle(i, j);
      if (rect.empty()) continue;
      int offset = 0;
      for (int k = i; k < j; ++k)
        for (int l = k + 1; l <= j; ++l) {
          if (k == i && l == j) continue;
          for (const auto& row : d.tab(k, l).rows())
            for (int v : row) offset = std::max(offset, v);
        }
      std::vector<std::vector<int>> rows(rect.rows,
                                         std::vector<int>(rect.cols));
      for (int t = 0; t < rect.rows; ++t)
        for (int c = 0; c < rect.cols; ++c) {
          if (!alt_filling) rows[t][c] = offset + t + 1;
          else
            rows[t][c] = offset + 2 * t + 1 +
                         (rect.cols >= 2 && c == rect.cols - 1 ? 1 : 0);
        }
      d.set_tab(i, j, Tableau(std::move(rows)));
    }
  return d;
}

std::set<std::vector<Tableau>> factor_sequences(const TableauDiagram& d) {
  int n = d.n();
  if (n < 1) throw std::invalid_argument("diagram needs at least one row");
  if (n == 1) return {{d.tab(0, 1)}};
  std::set<std::vector<Tableau>> out;
  for (const auto& u : factor_sequences(d.bottom_rows())) {
    // all factorization choices U_i = P_i * Q_i
    std::vector<std::vector<std::pair<Tableau, Tableau>>> options(n - 1);
    for (int i = 0; i < n - 1; ++i) {
      auto f = factorizations(u[i]);
      options[i].assign(f.begin(), f.end());
    }
    std::vector<std::size_t> pick(n - 1, 0);
    while (true) {
      std::vector<Tableau> w(n);
      for (int i = 0; i < n; ++i) {
        Tableau t;
        if (i > 0) t = options[i - 1][pick[i - 1]].second;  // Q_i
        t = product(t, d.tab(i, i + 1));
        if (i < n - 1) t = product(t, options[i][pick[i]].first);  // P_{i+1}
        w[i] = std::move(t);
      }
      out.insert(std::move(w));
      int k = 0;
      while (k < n - 1) {
        if (++pick[k] < options[k].size()) break;
        pick[k] = 0;
        ++k;
      }
      if (k == n - 1) break;
    }
  }
  return out;
}

ConjectureReport conjecture_check(const RankConditions& r, bool alt_filling) {
  if (!r.valid())
    throw std::invalid_argument("rank conditions cannot occur");
  ConjectureReport report;
  TensorElement p = compute_P(r);
  for (const auto& [key, c] : p.terms())
    report.entries[key].coefficient = c;
  TableauDiagram d = canonical_tableau_diagram(r, alt_filling);
  for (const auto& seq : factor_sequences(d)) {
    std::vector<Partition> shapes;
    shapes.reserve(seq.size());
    for (const Tableau& t : seq) shapes.push_back(t.shape());
    report.entries[PartitionTuple(std::move(shapes))].factor_count += 1;
  }
  return report;
}

bool ConjectureReport::all_match() const {
  for (const auto& [key, entry] : entries)
    if (!entry.match()) return false;
  return true;
}

bool in_proven_regime(const RankConditions& r) {
  for (int span = 4; span <= r.n(); ++span)
    for (int i = 0; i + span <= r.n(); ++i)
      if (!r.rectangle(i, i + span).empty()) return false;
  for (int i = 0; i + 3 <= r.n(); ++i)
    if (i + 4 <= r.n() && !r.rectangle(i, i + 3).empty() &&
        !r.rectangle(i + 1, i + 4).empty())
      return false;
  return true;
}

namespace {

int half_size(const Permutation& w) {
  Permutation v = w.size() >= 2 ? w : w.padded(2);
  return v.size() - 1;
}

}  // namespace

Tableau w_right(const Permutation& w) {
  int m = half_size(w);
  TableauDiagram d = canonical_tableau_diagram(rank_conditions_of(w));
  Tableau out;
  for (int j = m; j <= 2 * m - 1; ++j) {
    Tableau col;
    for (int i = 0; i <= m - 1 && i < j; ++i) col = product(col, d.tab(i, j));
    out = product(out, col);
  }
  return out;
}

Tableau w_left(const Permutation& w) {
  int m = half_size(w);
  TableauDiagram d = canonical_tableau_diagram(rank_conditions_of(w));
  Tableau out;
  for (int i = 0; i <= m - 1; ++i)
    for (int j = std::max(m, i + 1); j <= 2 * m - 1; ++j)
      out = product(out, d.tab(i, j));
  return out;
}

}  // namespace qc
