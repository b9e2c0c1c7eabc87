#pragma once

#include <map>
#include <string>
#include <vector>

#include "qc/partition.hpp"
#include "qc/schur.hpp"

namespace qc {

// Exact multivariate polynomial over a fixed ordered variable list
// x_1..x_nx, y_1..y_ny.  Exponent vectors have length nx+ny; no zero
// coefficients stored.
class Polynomial {
public:
  Polynomial(int nx, int ny) : nx_(nx), ny_(ny) {}
  static Polynomial zero(int nx, int ny) { return Polynomial(nx, ny); }
  static Polynomial constant(int nx, int ny, Int c);
  static Polynomial x(int nx, int ny, int i);  // x_i, 1-based
  static Polynomial y(int nx, int ny, int j);  // y_j, 1-based

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(int e) const;
  bool operator==(const Polynomial& o) const;

  Int coefficient(const std::vector<int>& exponents) const;

  // Divided difference with respect to x_i, x_{i+1}; exact by construction.
  Polynomial divided_difference(int i) const;

  // Set x_i = 0 for i > keep_x and y_j = 0 for j > keep_y.
  Polynomial restrict_vars(int keep_x, int keep_y) const;

  // Same restriction, but the result lives in the smaller ring.
  Polynomial resized(int new_nx, int new_ny) const;

  bool symmetric_in_x() const;

  void add_term(std::vector<int> exponents, const Int& coeff);

  std::string str() const;

private:
  int nx_, ny_;
  std::map<std::vector<int>, Int> terms_;
};

// Complete homogeneous and elementary symmetric polynomials in the x- or
// y-block of an (nx,ny) polynomial ring.
Polynomial h_poly(int k, int nx, int ny, bool in_y = false);
Polynomial e_poly(int k, int nx, int ny, bool in_y = false);

// s_lambda(x_1..x_nx); zero when length(lambda) > nx.
Polynomial schur_eval(const Partition& lambda, int nx);

// Super-symmetric Schur polynomial s_lambda(x/y) with h_k(x/y) =
// sum_b (-1)^b e_b(y) h_{k-b}(x), via the Jacobi-Trudi determinant.
Polynomial super_schur_eval(const Partition& lambda, int nx, int ny);

// Schur expansion of a symmetric homogeneous polynomial of degree d <= nx;
// verified by re-evaluation.
SchurElement expand_symmetric_in_schur(const Polynomial& f);

}  // namespace qc
