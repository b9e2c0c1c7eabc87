#include "qc/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc {

Straightened straighten(const IntegerSequence& seq) {
  int p = static_cast<int>(seq.size());
  // J_i = a_i + p - i (1-based i); sort descending, sign = parity of the
  // sorting permutation, zero on repeats or negative resulting parts.
  std::vector<int> j(p);
  for (int i = 0; i < p; ++i) j[i] = seq[i] + p - (i + 1);
  int sign = 1;
  // insertion sort, counting transpositions
  for (int i = 1; i < p; ++i)
    for (int k = i; k > 0 && j[k] > j[k - 1]; --k) {
      std::swap(j[k], j[k - 1]);
      sign = -sign;
    }
  for (int i = 0; i + 1 < p; ++i)
    if (j[i] == j[i + 1]) return {};
  std::vector<int> parts(p);
  for (int i = 0; i < p; ++i) {
    parts[i] = j[i] - (p - (i + 1));
    if (parts[i] < 0) return {};
  }
  return {sign, Partition(std::move(parts))};
}

SchurElement SchurElement::term(const Partition& shape, Int coeff) {
  SchurElement e;
  if (coeff != 0) e.terms_[shape] = std::move(coeff);
  return e;
}

Int SchurElement::coefficient(const Partition& shape) const {
  auto it = terms_.find(shape);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurElement::add_term(const Partition& shape, const Int& coeff) {
  auto it = terms_.find(shape);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[shape] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

SchurElement SchurElement::operator+(const SchurElement& o) const {
  SchurElement out = *this;
  for (const auto& [shape, c] : o.terms_) out.add_term(shape, c);
  return out;
}

SchurElement SchurElement::operator-(const SchurElement& o) const {
  SchurElement out = *this;
  for (const auto& [shape, c] : o.terms_) out.add_term(shape, -c);
  return out;
}

SchurElement SchurElement::operator*(const SchurElement& o) const {
  SchurElement out;
  for (const auto& [sigma, a] : terms_)
    for (const auto& [tau, b] : o.terms_) {
      Int ab = a * b;
      for (const Partition& mu :
           partitions_of(sigma.weight() + tau.weight())) {
        Int c = lr_coefficient(mu, sigma, tau);
        if (c != 0) out.add_term(mu, ab * c);
      }
    }
  return out;
}

SchurElement SchurElement::scaled(const Int& c) const {
  SchurElement out;
  if (c == 0) return out;
  for (const auto& [shape, a] : terms_) out.terms_[shape] = a * c;
  return out;
}

std::string SchurElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [shape, c] : terms_) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = abs(c);
    std::string base = shape.empty() ? "1" : "s" + shape.str();
    if (a != 1 || shape.empty())
      s += a.str() + (shape.empty() ? "" : "*" + base);
    else
      s += base;
  }
  return s;
}

int PartitionTuple::total_weight() const {
  int w = 0;
  for (const Partition& p : entries_) w += p.weight();
  return w;
}

bool PartitionTuple::operator<(const PartitionTuple& o) const {
  return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                      o.entries_.begin(), o.entries_.end());
}

std::string PartitionTuple::str() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += "(x)";
    s += entries_[k].empty() ? "1" : "s" + entries_[k].str();
  }
  return s;
}

TensorElement TensorElement::unit(int arity) {
  TensorElement e(arity);
  e.terms_[PartitionTuple(std::vector<Partition>(arity))] = 1;
  return e;
}

TensorElement TensorElement::term(PartitionTuple key, Int coeff) {
  TensorElement e(key.arity());
  if (coeff != 0) e.terms_[std::move(key)] = std::move(coeff);
  return e;
}

Int TensorElement::coefficient(const PartitionTuple& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

void TensorElement::add_term(const PartitionTuple& key, const Int& coeff) {
  if (key.arity() != arity_)
    throw std::invalid_argument("tensor arity mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != 0) terms_[key] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("tensor arity mismatch");
  TensorElement out = *this;
  for (const auto& [key, c] : o.terms_) out.add_term(key, c);
  return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("tensor arity mismatch");
  TensorElement out(arity_);
  for (const auto& [ka, a] : terms_)
    for (const auto& [kb, b] : o.terms_) {
      // expand slot products left to right
      std::vector<std::pair<std::vector<Partition>, Int>> partial = {
          {{}, a * b}};
      for (int slot = 0; slot < arity_; ++slot) {
        SchurElement prod =
            SchurElement::term(ka.entries()[slot], 1) *
            SchurElement::term(kb.entries()[slot], 1);
        std::vector<std::pair<std::vector<Partition>, Int>> next;
        for (const auto& [prefix, c] : partial)
          for (const auto& [mu, cmu] : prod.terms()) {
            auto key = prefix;
            key.push_back(mu);
            next.emplace_back(std::move(key), c * cmu);
          }
        partial = std::move(next);
      }
      for (auto& [key, c] : partial)
        out.add_term(PartitionTuple(std::move(key)), c);
    }
  return out;
}

TensorElement TensorElement::embed(int left_pad, int right_pad) const {
  TensorElement out(arity_ + left_pad + right_pad);
  for (const auto& [key, c] : terms_) {
    std::vector<Partition> entries(left_pad);
    entries.insert(entries.end(), key.entries().begin(), key.entries().end());
    entries.resize(entries.size() + right_pad);
    out.add_term(PartitionTuple(std::move(entries)), c);
  }
  return out;
}

TensorElement TensorElement::coproduct_at(int p, int k) const {
  if (p < 1 || p > arity_) throw std::invalid_argument("slot out of range");
  if (k < 1) throw std::invalid_argument("coproduct needs k >= 1");
  TensorElement out(arity_ + k - 1);
  for (const auto& [key, c] : terms_) {
    for (const auto& [split, cs] : coproduct_k(key.entries()[p - 1], k)) {
      std::vector<Partition> entries(key.entries().begin(),
                                     key.entries().begin() + (p - 1));
      entries.insert(entries.end(), split.begin(), split.end());
      entries.insert(entries.end(), key.entries().begin() + p,
                     key.entries().end());
      out.add_term(PartitionTuple(std::move(entries)), c * cs);
    }
  }
  return out;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = abs(c);
    if (a != 1) s += a.str() + "*";
    s += key.str();
  }
  return s;
}

}  // namespace qc
