#include "qc/stanley.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc {

SchurElement stanley_function(const Permutation& w) {
  SchurElement f;
  for (const auto& [key, c] : quiver_coefficients(w)) {
    bool zero_exponents = true;
    for (int a : key.a) zero_exponents = zero_exponents && a == 0;
    for (int b : key.b) zero_exponents = zero_exponents && b == 0;
    if (zero_exponents) f = f + SchurElement::term(key.lambda.conjugate(), c);
  }
  return f;
}

Int stanley_coefficient(const Permutation& w, const Partition& lambda) {
  return stanley_function(w).coefficient(lambda);
}

Int reduced_word_count_via_stanley(const Permutation& w) {
  Int count = 0;
  SchurElement f = stanley_function(w);
  for (const auto& [lambda, alpha] : f.terms())
    count += alpha * standard_tableau_count(lambda);
  return count;
}

bool stable_limit_check(const Permutation& w, int n_vars) {
  int ell = w.length();
  if (n_vars < ell) throw std::invalid_argument("need N >= l(w)");
  SchurElement f = stanley_function(w);
  if (n_vars == 0) return f == SchurElement::unit();
  int n = n_vars - 1;  // shift amount; M = 0 so max(N-1, M-1) = N-1
  Permutation v = w.inverse().shifted(n);
  Polynomial s = schubert_oracle(v, v.size() - 1, false).resized(n_vars, 0);
  SchurElement expanded = expand_symmetric_in_schur(s);
  // compare after evaluating F_w in the same N variables
  SchurElement truncated;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.length() <= n_vars)
      truncated = truncated + SchurElement::term(lambda, c);
  return expanded == truncated;
}

Partition lambda_of(const Permutation& w) {
  std::vector<int> r;
  for (int p = 1; p <= w.size(); ++p) r.push_back(w.inversions_before(p));
  std::sort(r.rbegin(), r.rend());
  return Partition(std::move(r));
}

Partition mu_of(const Permutation& w) {
  return lambda_of(w.inverse()).conjugate();
}

bool extremal_check(const Permutation& w) {
  SchurElement f = stanley_function(w);
  Partition lo = lambda_of(w), hi = mu_of(w);
  if (f.coefficient(lo) != 1 || f.coefficient(hi) != 1) return false;
  for (const auto& [lambda, c] : f.terms())
    if (!dominance_leq(lo, lambda) || !dominance_leq(lambda, hi)) return false;
  return true;
}

bool family_2143_check(int p) {
  if (p < 1) throw std::invalid_argument("need p >= 1");
  std::vector<int> image;
  for (int k = 1; k <= p; ++k) {
    image.push_back(2 * k);
    image.push_back(2 * k - 1);
  }
  SchurElement f = stanley_function(Permutation(std::move(image)));
  SchurElement predicted;
  for (const Partition& lambda : partitions_of(p))
    predicted =
        predicted + SchurElement::term(lambda, standard_tableau_count(lambda));
  SchurElement power = SchurElement::unit();
  for (int k = 0; k < p; ++k) power = power * SchurElement::term({1}, 1);
  return f == predicted && f == power;
}

bool stanley_product_check(const Permutation& w, const Permutation& u) {
  return stanley_function(cross(w, u)) ==
         stanley_function(w) * stanley_function(u);
}

}  // namespace qc
