#include "qc/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qc {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("empty interior row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw std::invalid_argument("entries must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw std::invalid_argument("rows must weakly increase");
      if (r > 0) {
        if (row.size() > rows_[r - 1].size())
          throw std::invalid_argument("row lengths must weakly decrease");
        if (row[c] <= rows_[r - 1][c])
          throw std::invalid_argument("columns must strictly increase");
      }
    }
  }
}

int Tableau::box_count() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

Tableau Tableau::insert(int v) const {
  if (v < 1) throw std::invalid_argument("invalid entry");
  std::vector<std::vector<int>> rows = rows_;
  int cur = v;
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      Tableau t;
      t.rows_ = std::move(rows);
      return t;
    }
    std::swap(cur, *it);
  }
  rows.push_back({cur});
  Tableau t;
  t.rows_ = std::move(rows);
  return t;
}

std::string Tableau::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows_[r][c]);
    }
    s += ']';
  }
  return s + "]";
}

Tableau product(const Tableau& p, const Tableau& q) {
  Tableau out = p;
  for (int v : q.row_word()) out = out.insert(v);
  return out;
}

std::set<Tableau> tableaux_with_content(std::vector<int> content) {
  static std::map<std::vector<int>, std::set<Tableau>> cache;
  static std::mutex mtx;
  std::sort(content.begin(), content.end());
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(content);
    if (it != cache.end()) return it->second;
  }
  // Every SSYT with this content is the insertion tableau of at least one
  // arrangement of the multiset.
  std::set<Tableau> out;
  std::vector<int> word = content;
  do {
    Tableau t;
    for (int v : word) t = t.insert(v);
    out.insert(t);
  } while (std::next_permutation(word.begin(), word.end()));
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(std::move(content), out);
  return out;
}

std::set<std::pair<Tableau, Tableau>> factorizations(const Tableau& u) {
  static std::map<Tableau, std::set<std::pair<Tableau, Tableau>>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(u);
    if (it != cache.end()) return it->second;
  }
  std::set<std::pair<Tableau, Tableau>> out;
  std::vector<int> content = u.content();
  int n = static_cast<int>(content.size());
  // Split the entry multiset in all ways; subsets of positions of the
  // sorted multiset, deduplicated through the set of (P,Q) results.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> a, b;
    for (int k = 0; k < n; ++k)
      (mask >> k & 1 ? a : b).push_back(content[k]);
    for (const Tableau& p : tableaux_with_content(a))
      for (const Tableau& q : tableaux_with_content(b))
        if (product(p, q) == u) out.emplace(p, q);
  }
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(u, out);
  return out;
}

}  // namespace qc
