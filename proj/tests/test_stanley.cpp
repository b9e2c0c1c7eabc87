#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/stanley.hpp"

using namespace qc;

TEST_CASE("examples") {
  CHECK(stanley_function(Permutation::identity(3)) == SchurElement::unit());
  CHECK(stanley_function(Permutation::parse("21")) ==
        SchurElement::term({1}, 1));
  CHECK(stanley_function(Permutation::parse("2431")) ==
        SchurElement::term({3, 1}, 1));
  CHECK(stanley_function(Permutation::parse("2143")) ==
        SchurElement::term({2}, 1) + SchurElement::term({1, 1}, 1));
  CHECK(stanley_coefficient(Permutation::parse("2431"), {3, 1}) == 1);
  CHECK(stanley_coefficient(Permutation::parse("2431"), {2, 2}) == 0);
}

TEST_CASE("homogeneity") {
  for (const Permutation& w : symmetric_group(4)) {
    SchurElement f = stanley_function(w);
    for (const auto& [lambda, c] : f.terms()) {
      CHECK(lambda.weight() == w.length());
      CHECK(c > 0);
    }
  }
}

TEST_CASE("reduced-word counts across S_4") {
  for (const Permutation& w : symmetric_group(4))
    CHECK(reduced_word_count_via_stanley(w) ==
          Int(reduced_words(w).size()));
}

TEST_CASE("staircase reduced-word counts") {
  CHECK(reduced_word_count_via_stanley(Permutation::longest(3)) == 2);
  CHECK(reduced_word_count_via_stanley(Permutation::longest(4)) == 16);
  CHECK(reduced_word_count_via_stanley(Permutation::longest(5)) == 768);
}

TEST_CASE("stable limit") {
  CHECK(stable_limit_check(Permutation::parse("21"), 2));
  CHECK(stable_limit_check(Permutation::parse("2143"), 3));
  CHECK(stable_limit_check(Permutation::parse("2431"), 4));
  CHECK(stable_limit_check(Permutation::parse("321"), 4));
  CHECK_THROWS(stable_limit_check(Permutation::parse("2431"), 2));
}

TEST_CASE("extremal shapes") {
  CHECK(lambda_of(Permutation::parse("2431")) == Partition{3, 1});
  CHECK(mu_of(Permutation::parse("2431")) == Partition{3, 1});
  CHECK(lambda_of(Permutation::parse("2143")) == Partition{1, 1});
  CHECK(mu_of(Permutation::parse("2143")) == Partition{2});
  for (const Permutation& w : symmetric_group(4)) CHECK(extremal_check(w));
}

TEST_CASE("21-blocks family") {
  CHECK(family_2143_check(1));
  CHECK(family_2143_check(2));
  CHECK(family_2143_check(3));
}

TEST_CASE("products") {
  CHECK(stanley_product_check(Permutation::parse("21"),
                              Permutation::parse("21")));
  CHECK(stanley_product_check(Permutation::parse("321"),
                              Permutation::parse("21")));
  CHECK(stanley_product_check(Permutation::parse("312"),
                              Permutation::parse("231")));
}
