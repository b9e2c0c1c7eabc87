#include "qc/partition.hpp"

#include <algorithm>
#include <functional>

namespace qc {

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(parts_[0], 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++cols[c];
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + "]";
}

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Int standard_tableau_count(const Partition& lambda) {
  Int num = factorial(lambda.weight());
  Int den = 1;
  Partition conj = lambda.conjugate();
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      den *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
  return num / den;
}

Int standard_tableau_count_brute(const Partition& lambda) {
  // Place 1..n one at a time; each value goes at the end of a row whose
  // current length is still below the row above it.
  int n = lambda.weight();
  std::vector<int> fill(lambda.length(), 0);
  Int count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      ++count;
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      if (fill[r] >= lambda.part(r + 1)) continue;
      if (r > 0 && fill[r] >= fill[r - 1]) continue;
      ++fill[r];
      rec(v + 1);
      --fill[r];
    }
  };
  rec(1);
  return count;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("dominance order needs equal weights");
  int a = 0, b = 0;
  int n = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a > b) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  if (max_part < 0 || max_part > n) max_part = n;
  if (max_len < 0) max_len = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(cap, rest); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

}  // namespace qc
