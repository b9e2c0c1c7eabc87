#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/poly.hpp"
#include "qc/schur.hpp"

using namespace qc;

namespace {

// literal determinant det(h_{a_i+j-i}) evaluated in nx variables
Polynomial jacobi_trudi_eval(const IntegerSequence& seq, int nx) {
  int p = static_cast<int>(seq.size());
  Polynomial out(nx, 0);
  std::vector<int> perm(p);
  for (int k = 0; k < p; ++k) perm[k] = k;
  do {
    int inv = 0;
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        if (perm[a] > perm[b]) ++inv;
    Polynomial prod = Polynomial::constant(nx, 0, inv % 2 ? -1 : 1);
    for (int i = 0; i < p; ++i)
      prod = prod * h_poly(seq[i] + (perm[i] + 1) - (i + 1), nx, 0);
    out = out + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SchurElement s(std::initializer_list<int> parts) {
  return SchurElement::term(Partition(parts), 1);
}

}  // namespace

TEST_CASE("straighten examples") {
  Straightened a = straighten({2, 1, 1});
  CHECK(a.sign == 1);
  CHECK(a.shape == Partition({2, 1, 1}));
  CHECK(straighten({1, 2}).sign == 0);
  Straightened b = straighten({0, 2});
  CHECK(b.sign == -1);
  CHECK(b.shape == Partition({1, 1}));
  CHECK(straighten({}).sign == 1);
  CHECK(straighten({}).shape == Partition{});
}

TEST_CASE("straighten vs literal determinant, p <= 3 entries in [-2,4]") {
  const int nx = 3;
  for (int p = 1; p <= 3; ++p) {
    std::vector<int> seq(p, -2);
    while (true) {
      Straightened st = straighten(seq);
      Polynomial lhs = jacobi_trudi_eval(seq, nx);
      Polynomial rhs(nx, 0);
      if (st.sign != 0) {
        Polynomial sp = schur_eval(st.shape, nx);
        rhs = st.sign > 0 ? sp : -sp;
      }
      CHECK(lhs == rhs);
      int k = 0;
      while (k < p && ++seq[k] > 4) seq[k++] = -2;
      if (k == p) break;
    }
  }
}

TEST_CASE("schur multiply") {
  SchurElement p = s({1}) * s({1});
  CHECK(p == s({2}) + s({1, 1}));
  SchurElement f = s({2, 1}) + s({3});
  CHECK(f * SchurElement::unit() == f);
  for (const auto& [shape, c] : p.terms()) CHECK(shape.weight() == 2);
}

TEST_CASE("schur multiply commutative and associative, |support| <= 4") {
  std::vector<SchurElement> elems;
  for (int n = 0; n <= 4; ++n)
    for (const Partition& p : partitions_of(n))
      elems.push_back(SchurElement::term(p, 1));
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(a * b == b * a);
  // associativity on small weights to keep runtime sane
  std::vector<SchurElement> small;
  for (int n = 0; n <= 2; ++n)
    for (const Partition& p : partitions_of(n))
      small.push_back(SchurElement::term(p, 1));
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("coproduct tables") {
  auto t = coproduct_k(Partition({1}), 2);
  CHECK(t.size() == 2);
  CHECK(t[{Partition({1}), Partition{}}] == 1);
  CHECK(t[{Partition{}, Partition({1})}] == 1);

  auto one = coproduct_k(Partition({2, 1}), 1);
  CHECK(one.size() == 1);
  CHECK(one[{Partition({2, 1})}] == 1);

  auto two = coproduct_k(Partition({2, 1}), 2);
  CHECK(two[{Partition({2, 1}), Partition{}}] == 1);
  CHECK(two[{Partition({2}), Partition({1})}] == 1);
  CHECK(two[{Partition({1, 1}), Partition({1})}] == 1);
  CHECK(two[{Partition({1}), Partition({2})}] == 1);
  CHECK(two[{Partition({1}), Partition({1, 1})}] == 1);
  CHECK(two[{Partition{}, Partition({2, 1})}] == 1);
  CHECK(two.size() == 6);
  // weights add up on every key
  for (const auto& [key, c] : two)
    CHECK(key[0].weight() + key[1].weight() == 3);
}

TEST_CASE("coproduct coassociativity, |lambda| <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      auto direct = coproduct_k(lambda, 3);
      // split in two stages: 2-fold, then 2-fold on the tail
      std::map<std::vector<Partition>, Int> staged;
      for (const auto& [pair, c] : coproduct_k(lambda, 2))
        for (const auto& [tail, c2] : coproduct_k(pair[1], 2))
          staged[{pair[0], tail[0], tail[1]}] += c * c2;
      CHECK(direct == staged);
    }
}

TEST_CASE("tensor operations") {
  TensorElement a =
      TensorElement::term(PartitionTuple({Partition({1}), Partition{}}), 1);
  TensorElement b =
      TensorElement::term(PartitionTuple({Partition{}, Partition({1})}), 1);
  CHECK(a * TensorElement::unit(2) == a);
  CHECK(a * b == TensorElement::term(
                     PartitionTuple({Partition({1}), Partition({1})}), 1));

  TensorElement single =
      TensorElement::term(PartitionTuple({Partition({1})}), 1);
  CHECK(single.embed(1, 1) ==
        TensorElement::term(
            PartitionTuple({Partition{}, Partition({1}), Partition{}}), 1));
  CHECK(single.embed(0, 0) == single);

  CHECK(single.coproduct_at(1, 1) == single);
  CHECK(single.coproduct_at(1, 2) == a + b);

  TensorElement t21 =
      TensorElement::term(PartitionTuple({Partition({2, 1})}), 1);
  TensorElement expanded = t21.coproduct_at(1, 2);
  for (const auto& [key, c] : coproduct_k(Partition({2, 1}), 2))
    CHECK(expanded.coefficient(PartitionTuple(key)) == c);
  CHECK(expanded.terms().size() == coproduct_k(Partition({2, 1}), 2).size());
}

TEST_CASE("embedding commutes with disjoint products") {
  TensorElement a =
      TensorElement::term(PartitionTuple({Partition({2})}), 1);
  TensorElement b =
      TensorElement::term(PartitionTuple({Partition({1, 1})}), 1);
  TensorElement left = a.embed(0, 1) * b.embed(1, 0);
  TensorElement expected = TensorElement::term(
      PartitionTuple({Partition({2}), Partition({1, 1})}), 1);
  CHECK(left == expected);
}
