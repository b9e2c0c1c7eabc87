#pragma once

#include <map>

#include "qc/permutation.hpp"
#include "qc/poly.hpp"
#include "qc/quiver.hpp"

namespace qc {

// Double (or single) Schubert polynomial by divided differences: start
// from the longest permutation's product formula and walk down a reduced
// word.  Independent of the quiver pipeline.  The result lives in
// x_1..x_nx (and y_1..y_nx when use_y); requires nx >= size(w)-1.
Polynomial schubert_oracle(const Permutation& w, int nx, bool use_y);

// Rank conditions of the flag sequence F_1 c ... c F_m -> G_m ->> ... ->>
// G_1 for w in S_{m+1}; 2m-1 maps.
RankConditions rank_conditions_of(const Permutation& w);

// Direct non-emptiness test for the rectangle R_{ij} of a permutation
// diagram: w(2m+1-j) <= i+1 and w^{-1}(i+2) <= 2m-j.
bool nonempty_rectangle_test(const Permutation& w, int i, int j);

// Key (a, b, lambda) of the c_w(a,b,lambda) table; a and b are exponent
// lists over indices 2..m, stored zero-padded with a[0] = a_2.
struct ABKey {
  std::vector<int> a;
  std::vector<int> b;
  Partition lambda;
  bool operator<(const ABKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return lambda < o.lambda;
  }
  bool operator==(const ABKey& o) const {
    return a == o.a && b == o.b && lambda == o.lambda;
  }
};

// All coefficients c_w(a,b,lambda), read off the keys of P_r whose y-slots
// are single rows and whose x-slots are single columns; other keys
// evaluate to zero and are dropped (strict = throw if any exists).
std::map<ABKey, Int> quiver_coefficients(const Permutation& w,
                                         bool strict = false);

// Schubert polynomial assembled from the quiver coefficients in
// x_1..x_nvars, y_1..y_nvars (nvars >= size(w)-1; w is padded so that the
// super-Schur factor uses exactly nvars variables of each kind).
Polynomial assemble_schubert(const Permutation& w, int nvars);

// S_{w x u} = S_w * S_{1^m x u} as exact polynomials.
bool product_formula_check(const Permutation& w, const Permutation& u);

}  // namespace qc
