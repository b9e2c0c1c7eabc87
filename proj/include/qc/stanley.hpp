#pragma once

#include "qc/schubert.hpp"

namespace qc {

// F_w = sum_lambda c_w(0,0,lambda') s_lambda; homogeneous of weight l(w).
SchurElement stanley_function(const Permutation& w);

// Coefficient table alpha_{w lambda} keyed by lambda.
Int stanley_coefficient(const Permutation& w, const Partition& lambda);

// sum_lambda alpha_{w lambda} f^lambda; equals the reduced-word count.
Int reduced_word_count_via_stanley(const Permutation& w);

// F_w(x_1..x_N) against the stable Schubert polynomial
// S_{1^{N-1} x w^{-1}} with variables above N set to zero; needs
// N >= l(w).
bool stable_limit_check(const Permutation& w, int n_vars);

// r_1(w)..r_{m+1}(w) arranged decreasingly; mu(w) = lambda(w^{-1})'.
Partition lambda_of(const Permutation& w);
Partition mu_of(const Permutation& w);

// alpha_{w,lambda(w)} = alpha_{w,mu(w)} = 1 and the support of F_w lies
// between lambda(w) and mu(w) in dominance order.
bool extremal_check(const Permutation& w);

// w = 21 43 ... (2p)(2p-1): F_w = sum_{lambda of p} f^lambda s_lambda
// and F_w = (s_(1))^p.
bool family_2143_check(int p);

// F_{w x u} = F_w * F_u.
bool stanley_product_check(const Permutation& w, const Permutation& u);

}  // namespace qc
