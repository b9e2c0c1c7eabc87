#include "qc/schubert.hpp"

#include <stdexcept>

namespace qc {

Polynomial schubert_oracle(const Permutation& w, int nx, bool use_y) {
  if (nx + 1 < w.trimmed().size())
    throw std::invalid_argument("too few variables for this permutation");
  int k = nx + 1;  // ambient symmetric group S_k
  Permutation v = w.padded(k);
  int ny = use_y ? nx : 0;
  // work with x_1..x_k so every divided difference is in range; x_k is
  // dropped at the end (the result never involves it)
  Polynomial f = Polynomial::constant(k, ny, 1);
  for (int i = 1; i <= k - 1; ++i) {
    if (use_y) {
      for (int j = 1; i + j <= k; ++j)
        f = f * (Polynomial::x(k, ny, i) - Polynomial::y(k, ny, j));
    } else {
      f = f * Polynomial::x(k, ny, i).pow(k - i);
    }
  }
  // walk down along a reduced word of w0 * v
  Permutation w0 = Permutation::longest(k);
  std::vector<int> image(k);
  for (int i = 1; i <= k; ++i) image[i - 1] = w0(v(i));
  Permutation u(image);  // u = w0 * v, so v = w0 * u
  for (int i : first_reduced_word(u)) f = f.divided_difference(i);
  return f.resized(nx, ny);
}

RankConditions rank_conditions_of(const Permutation& w) {
  Permutation v = w.size() >= 2 ? w : w.padded(2);
  int m = v.size() - 1;  // v in S_{m+1}, m >= 1
  RankConditions r(2 * m - 1);
  for (int i = 0; i <= 2 * m - 1; ++i)
    for (int j = i; j <= 2 * m - 1; ++j) {
      if (j <= m - 1) r.set_rank(i, j, i + 1);          // F_{i+1} into F_{j+1}
      else if (i >= m) r.set_rank(i, j, 2 * m - j);     // G onto G
      else r.set_rank(i, j, v.rank_function(2 * m - j, i + 1));
    }
  return r;
}

bool nonempty_rectangle_test(const Permutation& w, int i, int j) {
  Permutation v = w.size() >= 2 ? w : w.padded(2);
  int m = v.size() - 1;
  if (i < 0 || i >= j || j > 2 * m - 1)
    throw std::invalid_argument("rectangle index out of range");
  // non-empty rectangles only occur in the diamond below R_{m-1,m}
  if (i > m - 1 || j < m) return false;
  Permutation vinv = v.inverse();
  return v(2 * m + 1 - j) <= i + 1 && vinv(i + 2) <= 2 * m - j;
}

std::map<ABKey, Int> quiver_coefficients(const Permutation& w, bool strict) {
  Permutation v = w.size() >= 2 ? w : w.padded(2);
  int m = v.size() - 1;
  TensorElement p = compute_P(rank_conditions_of(v));
  std::map<ABKey, Int> out;
  for (const auto& [key, c] : p.terms()) {
    ABKey k;
    k.a.assign(std::max(m - 1, 0), 0);
    k.b.assign(std::max(m - 1, 0), 0);
    bool keep = true;
    // slots 1..m-1 must be single rows (a_2..a_m)
    for (int i = 1; i <= m - 1 && keep; ++i) {
      const Partition& mu = key.entries()[i - 1];
      if (mu.length() > 1) keep = false;
      else k.a[i - 1] = mu.part(1);
    }
    // slot m is lambda
    k.lambda = key.entries()[m - 1];
    // slots m+1..2m-1 are single columns (1^{b_m}), ..., (1^{b_2})
    for (int j = 1; j <= m - 1 && keep; ++j) {
      const Partition& mu = key.entries()[m + j - 1];
      if (mu.part(1) > 1) keep = false;
      else k.b[m - 1 - j] = mu.length();
    }
    if (!keep) {
      if (strict)
        throw std::runtime_error("P_r key is not row/column shaped: " +
                                 key.str());
      continue;
    }
    out[k] += c;
  }
  return out;
}

Polynomial assemble_schubert(const Permutation& w, int nvars) {
  Permutation v = w.padded(std::max(nvars + 1, 2));
  if (v.size() != nvars + 1)
    throw std::invalid_argument("need nvars >= size(w)-1");
  int m = nvars;
  Polynomial out(m, m);
  for (const auto& [key, c] : quiver_coefficients(v)) {
    Polynomial term =
        super_schur_eval(key.lambda, m, m) * Polynomial::constant(m, m, c);
    for (int i = 2; i <= m; ++i) {
      int a = key.a[i - 2];
      if (a > 0) term = term * Polynomial::y(m, m, i).pow(a);
      int b = key.b[i - 2];
      if (b > 0) term = term * (-Polynomial::x(m, m, i)).pow(b);
    }
    out = out + term;
  }
  return out;
}

bool product_formula_check(const Permutation& w, const Permutation& u) {
  Permutation wu = cross(w, u);
  int nvars = wu.size() - 1;
  Polynomial lhs = assemble_schubert(wu, nvars);
  Polynomial rhs = schubert_oracle(w, nvars, true) *
                   schubert_oracle(u.shifted(w.size()), nvars, true);
  return lhs == rhs;
}

}  // namespace qc
