#include "qc/lr.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qc {

namespace {

// Cells of mu/sigma in reverse reading order: rows top to bottom, each row
// right to left.
struct Cell {
  int row, col;  // 0-based
};

Int lr_count(const Partition& mu, const Partition& sigma,
             const Partition& tau) {
  std::vector<Cell> cells;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = mu.part(r + 1) - 1; c >= sigma.part(r + 1); --c)
      cells.push_back({r, c});
  int width = mu.part(1);
  std::vector<std::vector<int>> fill(mu.length(), std::vector<int>(width, 0));
  std::vector<int> used(tau.length() + 1, 0);
  Int count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= tau.length(); ++v) {
      if (used[v] >= tau.part(v)) continue;
      // lattice condition on the reverse reading word
      if (v > 1 && used[v] >= used[v - 1]) continue;
      // weakly increasing along the row (right neighbor already placed)
      if (c + 1 < mu.part(r + 1) && v > fill[r][c + 1]) continue;
      // strictly increasing down the column
      if (r > 0 && c >= sigma.part(r) && v <= fill[r - 1][c]) continue;
      fill[r][c] = v;
      ++used[v];
      rec(k + 1);
      --used[v];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return count;
}

}  // namespace

Int lr_coefficient(const Partition& mu, const Partition& sigma,
                   const Partition& tau) {
  if (sigma.weight() + tau.weight() != mu.weight()) return 0;
  if (!mu.contains(sigma)) return 0;
  if (tau.length() > mu.length()) return 0;
  static std::map<std::tuple<Partition, Partition, Partition>, Int> cache;
  static std::mutex mtx;
  std::tuple<Partition, Partition, Partition> key(mu, sigma, tau);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int c = lr_count(mu, sigma, tau);
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(std::move(key), c);
  return c;
}

std::map<std::pair<Partition, Partition>, Int> lr_pairs(
    const Partition& lambda) {
  std::map<std::pair<Partition, Partition>, Int> out;
  // Both sigma and tau are contained in lambda when the coefficient is
  // non-zero, so enumerating sub-partitions of lambda for sigma and bounded
  // partitions for tau covers everything.
  std::vector<Partition> sigmas;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > lambda.length()) {
      sigmas.push_back(Partition(cur));
      return;
    }
    int hi = lambda.part(i);
    if (i > 1 && !cur.empty()) hi = std::min(hi, cur.back());
    if (i > 1 && cur.size() < static_cast<std::size_t>(i - 1)) hi = 0;
    for (int p = hi; p >= 0; --p) {
      if (p > 0) cur.push_back(p);
      rec(i + 1);
      if (p > 0) cur.pop_back();
      if (p == 0) break;  // once a row is empty, all lower rows are too
    }
  };
  rec(1);
  for (const Partition& sigma : sigmas) {
    int rest = lambda.weight() - sigma.weight();
    for (const Partition& tau :
         partitions_of(rest, lambda.part(1), lambda.length())) {
      Int c = lr_coefficient(lambda, sigma, tau);
      if (c != 0) out[{sigma, tau}] = c;
    }
  }
  return out;
}

std::map<std::vector<Partition>, Int> coproduct_k(const Partition& lambda,
                                                  int k) {
  if (k < 1) throw std::invalid_argument("coproduct needs k >= 1");
  std::map<std::vector<Partition>, Int> out;
  if (k == 1) {
    out[{lambda}] = 1;
    return out;
  }
  for (const auto& [pair, c] : lr_pairs(lambda)) {
    const auto& [sigma, rest] = pair;
    for (const auto& [tail, c2] : coproduct_k(rest, k - 1)) {
      std::vector<Partition> key;
      key.reserve(k);
      key.push_back(sigma);
      key.insert(key.end(), tail.begin(), tail.end());
      out[key] += c * c2;
    }
  }
  return out;
}

}  // namespace qc
