#include "qc/quiver.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qc {

RankConditions::RankConditions(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative map count");
  data_.assign((n + 1) * (n + 2) / 2, 0);
}

int RankConditions::index(int i, int j) const {
  if (i < 0 || i > j || j > n_)
    throw std::out_of_range("rank index out of range");
  // row-major over i, then j >= i
  return i * (2 * n_ + 3 - i) / 2 + (j - i);
}

bool RankConditions::valid() const {
  for (int i = 0; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      if (rank(i, j) > std::min(rank(i, j - 1), rank(i + 1, j))) return false;
      if (j - i >= 2 &&
          rank(i, j) - rank(i, j - 1) - rank(i + 1, j) + rank(i + 1, j - 1) <
              0)
        return false;
    }
  return true;
}

int RankConditions::expected_codim() const {
  int d = 0;
  for (int i = 0; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      d += (rank(i, j - 1) - rank(i, j)) * (rank(i + 1, j) - rank(i, j));
  return d;
}

Rectangle RankConditions::rectangle(int i, int j) const {
  if (i >= j) throw std::invalid_argument("rectangle needs i < j");
  return {rank(i + 1, j) - rank(i, j), rank(i, j - 1) - rank(i, j)};
}

RankConditions RankConditions::bottom_rows() const {
  if (n_ < 1) throw std::invalid_argument("no bottom rows");
  RankConditions out(n_ - 1);
  for (int i = 0; i <= n_ - 1; ++i)
    for (int j = i; j <= n_ - 1; ++j) out.set_rank(i, j, rank(i, j + 1));
  return out;
}

RankConditions RankConditions::dual() const {
  RankConditions out(n_);
  for (int i = 0; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) out.set_rank(i, j, rank(n_ - j, n_ - i));
  return out;
}

std::string RankConditions::serialize() const {
  std::ostringstream os;
  os << n_ << "\n";
  for (int k = 0; k <= n_; ++k) {
    for (int i = 0; i + k <= n_; ++i) {
      if (i) os << ' ';
      os << rank(i, i + k);
    }
    os << "\n";
  }
  return os.str();
}

RankConditions RankConditions::parse(const std::string& text) {
  std::istringstream is(text);
  int n;
  if (!(is >> n) || n < 0)
    throw std::invalid_argument("rank conditions: bad map count");
  RankConditions out(n);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i + k <= n; ++i) {
      int v;
      if (!(is >> v) || v < 0)
        throw std::invalid_argument("rank conditions: bad entry in row " +
                                    std::to_string(k));
      out.set_rank(i, i + k, v);
    }
  int extra;
  if (is >> extra)
    throw std::invalid_argument("rank conditions: trailing input");
  return out;
}

namespace {

// Row-length sequence of a rectangle with sigma attached to its right side
// and tau attached beneath.
IntegerSequence attachment_sequence(const Rectangle& rect,
                                    const Partition& sigma,
                                    const Partition& tau) {
  IntegerSequence seq;
  seq.reserve(rect.rows + tau.length());
  for (int t = 1; t <= rect.rows; ++t) seq.push_back(rect.cols + sigma.part(t));
  for (int t = 1; t <= tau.length(); ++t) seq.push_back(tau.part(t));
  return seq;
}

TensorElement compute_P_impl(const RankConditions& r) {
  int n = r.n();
  if (n == 1) {
    return TensorElement::term(
        PartitionTuple({r.rectangle(0, 1).shape()}), 1);
  }
  TensorElement prev = compute_P(r.bottom_rows());
  std::vector<Rectangle> top(n + 1);
  for (int i = 1; i <= n; ++i) top[i] = r.rectangle(i - 1, i);

  TensorElement out(n);
  for (const auto& [key, coeff] : prev.terms()) {
    // per-slot (sigma, tau, lr-coefficient) choices
    std::vector<std::vector<std::tuple<Partition, Partition, Int>>> choices(
        n - 1);
    for (int i = 1; i <= n - 1; ++i)
      for (const auto& [pair, c] : lr_pairs(key.entries()[i - 1]))
        if (pair.first.length() <= top[i].rows)
          choices[i - 1].emplace_back(pair.first, pair.second, c);

    std::vector<std::size_t> pick(n - 1, 0);
    while (true) {
      Int c = coeff;
      std::vector<Partition> shapes(n);
      bool nonzero = true;
      for (int i = 1; i <= n && nonzero; ++i) {
        Partition sigma, tau;
        if (i <= n - 1) {
          const auto& [s, t, lr] = choices[i - 1][pick[i - 1]];
          sigma = s;
          c *= lr;
        }
        if (i >= 2) tau = std::get<1>(choices[i - 2][pick[i - 2]]);
        Straightened st = straighten(attachment_sequence(top[i], sigma, tau));
        if (st.sign == 0) {
          nonzero = false;
          break;
        }
        c *= st.sign;
        shapes[i - 1] = st.shape;
      }
      if (nonzero) out.add_term(PartitionTuple(std::move(shapes)), c);
      // advance the mixed-radix counter; (sigma,tau) = (empty, mu_i) is
      // always admissible, so no slot has an empty choice list
      int k = 0;
      while (k < n - 1) {
        if (++pick[k] < choices[k].size()) break;
        pick[k] = 0;
        ++k;
      }
      if (k == n - 1) break;
    }
  }
  return out;
}

}  // namespace

TensorElement compute_P(const RankConditions& r) {
  if (!r.valid())
    throw std::invalid_argument("rank conditions cannot occur");
  if (r.n() < 1) throw std::invalid_argument("need at least one map");
  static std::map<std::string, TensorElement> cache;
  static std::mutex mtx;
  std::string key = r.serialize();
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TensorElement p = compute_P_impl(r);
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(std::move(key), p);
  return p;
}

Int quiver_coefficient(const RankConditions& r, const PartitionTuple& mu) {
  if (mu.arity() != r.n())
    throw std::invalid_argument("tuple arity must equal map count");
  return compute_P(r).coefficient(mu);
}

PartitionTuple dual_tuple(const PartitionTuple& mu) {
  std::vector<Partition> entries;
  entries.reserve(mu.arity());
  for (auto it = mu.entries().rbegin(); it != mu.entries().rend(); ++it)
    entries.push_back(it->conjugate());
  return PartitionTuple(std::move(entries));
}

std::vector<Split> all_independent_splits(const RankConditions& r) {
  std::vector<Split> out;
  int n = r.n();
  for (int p = 1; p <= n - 1; ++p)
    for (int q = p; q <= n - 1; ++q) {
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i)
        for (int j = i + 1; j <= n && ok; ++j) {
          bool iin = i >= p && i <= q, jin = j >= p && j <= q;
          if (iin != jin && !r.rectangle(i, j).empty()) ok = false;
        }
      if (!ok) continue;
      Split s;
      s.p = p;
      s.q = q;
      s.inner = RankConditions(q - p);
      for (int a = 0; a <= q - p; ++a)
        for (int b = a; b <= q - p; ++b)
          s.inner.set_rank(a, b, r.rank(p + a, p + b));
      std::vector<int> keep;
      for (int i = 0; i < p; ++i) keep.push_back(i);
      for (int i = q + 1; i <= n; ++i) keep.push_back(i);
      s.outer = RankConditions(static_cast<int>(keep.size()) - 1);
      for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a; b < keep.size(); ++b)
          s.outer.set_rank(static_cast<int>(a), static_cast<int>(b),
                           r.rank(keep[a], keep[b]));
      out.push_back(std::move(s));
    }
  return out;
}

std::optional<Split> split_independent(const RankConditions& r) {
  auto splits = all_independent_splits(r);
  if (splits.empty()) return std::nullopt;
  return splits.front();
}

bool split_identity_holds(const RankConditions& r, const Split& s) {
  int n = r.n();
  TensorElement left =
      s.inner.n() >= 1 ? compute_P(s.inner).embed(s.p, n - s.q)
                       : TensorElement::unit(n);
  TensorElement right = compute_P(s.outer).coproduct_at(s.p, s.q - s.p + 2);
  return left * right == compute_P(r);
}

}  // namespace qc
