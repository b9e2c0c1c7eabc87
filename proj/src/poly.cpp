#include "qc/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qc {

Polynomial Polynomial::constant(int nx, int ny, Int c) {
  Polynomial p(nx, ny);
  if (c != 0) p.terms_[std::vector<int>(nx + ny, 0)] = std::move(c);
  return p;
}

Polynomial Polynomial::x(int nx, int ny, int i) {
  if (i < 1 || i > nx) throw std::invalid_argument("x index out of range");
  Polynomial p(nx, ny);
  std::vector<int> e(nx + ny, 0);
  e[i - 1] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

Polynomial Polynomial::y(int nx, int ny, int j) {
  if (j < 1 || j > ny) throw std::invalid_argument("y index out of range");
  Polynomial p(nx, ny);
  std::vector<int> e(nx + ny, 0);
  e[nx + j - 1] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

void Polynomial::add_term(std::vector<int> exponents, const Int& coeff) {
  if (static_cast<int>(exponents.size()) != nx_ + ny_)
    throw std::invalid_argument("exponent vector length mismatch");
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[std::move(exponents)] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nx_, ny_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(nx_, ny_);
  for (const auto& [ea, a] : terms_)
    for (const auto& [eb, b] : o.terms_) {
      std::vector<int> e(nx_ + ny_);
      for (int k = 0; k < nx_ + ny_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(std::move(e), a * b);
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial out = constant(nx_, ny_, 1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nx_ == o.nx_ && ny_ == o.ny_ && terms_ == o.terms_;
}

Int Polynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Int(0) : it->second;
}

Polynomial Polynomial::divided_difference(int i) const {
  if (i < 1 || i >= nx_)
    throw std::invalid_argument("divided difference index out of range");
  Polynomial out(nx_, ny_);
  // Per monomial: (x^a y^b - x^b y^a)/(x - y) in the two variables
  // x_i, x_{i+1}, a closed form that keeps all arithmetic integral.
  for (const auto& [e, c] : terms_) {
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    Int coeff = a > b ? c : -c;
    for (int t = lo; t < hi; ++t) {
      std::vector<int> e2 = e;
      e2[i - 1] = t;
      e2[i] = a + b - 1 - t;
      out.add_term(std::move(e2), coeff);
    }
  }
  return out;
}

Polynomial Polynomial::resized(int new_nx, int new_ny) const {
  Polynomial out(new_nx, new_ny);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2(new_nx + new_ny, 0);
    bool drop = false;
    for (int k = 0; k < nx_ && !drop; ++k) {
      if (k < new_nx) e2[k] = e[k];
      else drop = e[k] > 0;
    }
    for (int k = 0; k < ny_ && !drop; ++k) {
      if (k < new_ny) e2[new_nx + k] = e[nx_ + k];
      else drop = e[nx_ + k] > 0;
    }
    if (!drop) out.terms_[std::move(e2)] = c;
  }
  return out;
}

Polynomial Polynomial::restrict_vars(int keep_x, int keep_y) const {
  Polynomial out(nx_, ny_);
  for (const auto& [e, c] : terms_) {
    bool drop = false;
    for (int k = keep_x; k < nx_ && !drop; ++k) drop = e[k] > 0;
    for (int k = nx_ + keep_y; k < nx_ + ny_ && !drop; ++k) drop = e[k] > 0;
    if (!drop) out.terms_[e] = c;
  }
  return out;
}

bool Polynomial::symmetric_in_x() const {
  for (int i = 1; i < nx_; ++i) {
    Polynomial swapped(nx_, ny_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> e2 = e;
      std::swap(e2[i - 1], e2[i]);
      swapped.terms_[std::move(e2)] = c;
    }
    if (!(swapped == *this)) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = abs(c);
    std::string mono;
    for (int k = 0; k < nx_ + ny_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (k < nx_ ? "x" + std::to_string(k + 1)
                       : "y" + std::to_string(k - nx_ + 1));
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) mono = a.str();
    else if (a != 1) mono = a.str() + "*" + mono;
    s += mono;
  }
  return s;
}

Polynomial h_poly(int k, int nx, int ny, bool in_y) {
  Polynomial out(nx, ny);
  if (k < 0) return out;
  int nvars = in_y ? ny : nx;
  int offset = in_y ? nx : 0;
  // multisets of size k from the block
  std::vector<int> e(nx + ny, 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (rest == 0) {
      out.add_term(e, 1);
      return;
    }
    if (var >= nvars) return;
    for (int take = rest; take >= 0; --take) {
      e[offset + var] = take;
      rec(var + 1, rest - take);
    }
    e[offset + var] = 0;
  };
  rec(0, k);
  return out;
}

Polynomial e_poly(int k, int nx, int ny, bool in_y) {
  Polynomial out(nx, ny);
  if (k < 0) return out;
  int nvars = in_y ? ny : nx;
  int offset = in_y ? nx : 0;
  std::vector<int> e(nx + ny, 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (rest == 0) {
      out.add_term(e, 1);
      return;
    }
    if (nvars - var < rest) return;
    // skip
    rec(var + 1, rest);
    e[offset + var] = 1;
    rec(var + 1, rest - 1);
    e[offset + var] = 0;
  };
  rec(0, k);
  return out;
}

Polynomial schur_eval(const Partition& lambda, int nx) {
  Polynomial out(nx, 0);
  if (lambda.length() > nx) return out;
  if (lambda.empty()) return Polynomial::constant(nx, 0, 1);
  // sum of x^content over semistandard fillings with entries <= nx
  int rows = lambda.length();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda.part(r + 1), 0);
  std::vector<int> content(nx, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      out.add_term(content, 1);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.part(r + 1)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= nx; ++v) {
      fill[r][c] = v;
      ++content[v - 1];
      rec(nr, nc);
      --content[v - 1];
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Determinant of a matrix of polynomials by permutation expansion; the
// Jacobi-Trudi matrices here are small.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, int nx,
                    int ny) {
  int n = static_cast<int>(m.size());
  Polynomial out(nx, ny);
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    Polynomial prod = Polynomial::constant(nx, ny, inv % 2 ? -1 : 1);
    for (int a = 0; a < n && !prod.is_zero(); ++a) prod = prod * m[a][perm[a]];
    out = out + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Polynomial super_schur_eval(const Partition& lambda, int nx, int ny) {
  if (lambda.empty()) return Polynomial::constant(nx, ny, 1);
  int n = lambda.length();
  int maxk = lambda.part(1) + n - 1;
  // h_k(x/y) = sum_b (-1)^b e_b(y) h_{k-b}(x)
  std::vector<Polynomial> hsup;
  for (int k = 0; k <= maxk; ++k) {
    Polynomial h(nx, ny);
    for (int b = 0; b <= std::min(k, ny); ++b) {
      Polynomial part = e_poly(b, nx, ny, true) * h_poly(k - b, nx, ny);
      h = b % 2 ? h - part : h + part;
    }
    hsup.push_back(std::move(h));
  }
  std::vector<std::vector<Polynomial>> m(
      n, std::vector<Polynomial>(n, Polynomial(nx, ny)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int k = lambda.part(i) + j - i;
      if (k >= 0) m[i - 1][j - 1] = hsup[k];
    }
  return poly_det(m, nx, ny);
}

SchurElement expand_symmetric_in_schur(const Polynomial& f) {
  SchurElement out;
  if (f.is_zero()) return out;
  for (const auto& [e, c] : f.terms())
    for (int k = f.nx(); k < f.nx() + f.ny(); ++k)
      if (e[k] > 0)
        throw std::invalid_argument("expansion requires a y-free polynomial");
  if (!f.symmetric_in_x())
    throw std::invalid_argument("polynomial is not symmetric");
  int degree = -1;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (int k = 0; k < f.nx(); ++k) d += e[k];
    if (degree < 0) degree = d;
    if (d != degree)
      throw std::invalid_argument("polynomial is not homogeneous");
  }
  if (degree > f.nx())
    throw std::invalid_argument("degree exceeds variable count");
  Polynomial rest = f;
  while (!rest.is_zero()) {
    // lex-leading exponent vector of a symmetric polynomial is a partition
    std::vector<int> lead = rest.terms().begin()->first;
    for (const auto& [e, c] : rest.terms())
      if (std::lexicographical_compare(lead.begin(), lead.end(), e.begin(),
                                       e.end()))
        lead = e;
    std::vector<int> parts(lead.begin(), lead.begin() + f.nx());
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
      throw std::invalid_argument("polynomial is not symmetric");
    Int c = rest.coefficient(lead);
    Partition shape(parts);
    out = out + SchurElement::term(shape, c);
    Polynomial s = schur_eval(shape, f.nx());
    // schur_eval is y-free in (nx,0); lift into f's ring
    Polynomial lifted(f.nx(), f.ny());
    for (const auto& [e, cc] : s.terms()) {
      std::vector<int> e2 = e;
      e2.resize(f.nx() + f.ny(), 0);
      lifted.add_term(std::move(e2), cc * c);
    }
    rest = rest - lifted;
  }
  // re-evaluation check is implicit: the loop subtracted to exactly zero
  return out;
}

}  // namespace qc
