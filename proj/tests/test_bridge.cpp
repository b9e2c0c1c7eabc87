#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/schubert.hpp"
#include "qc/quiver.hpp"

using namespace qc;

TEST_CASE("permutation basics") {
  Permutation w = Permutation::parse("2431");
  CHECK(w.length() == 4);
  CHECK(w.inverse() == Permutation::parse("4132"));
  CHECK(w.str() == "2431");
  CHECK(Permutation::parse("2,4,3,1") == w);
  CHECK(w.shifted(2) == Permutation::parse("124653"));
  CHECK(w.padded(6) == Permutation::parse("243156"));
  CHECK(Permutation::parse("213456").trimmed() == Permutation::parse("21"));
  CHECK(cross(Permutation::parse("21"), Permutation::parse("21")) ==
        Permutation::parse("2143"));
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(symmetric_group(4).size() == 24);
  CHECK_THROWS(Permutation::parse("221"));
}

TEST_CASE("rank function against direct count") {
  Permutation w = Permutation::parse("35142");
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      int direct = 0;
      for (int i = 1; i <= p; ++i)
        if (w(i) <= q) ++direct;
      CHECK(w.rank_function(p, q) == direct);
    }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation::identity(3)) ==
        std::vector<std::vector<int>>{{}});
  auto words = reduced_words(Permutation::parse("321"));
  REQUIRE(words.size() == 2);
  for (const auto& word : words) {
    Permutation v = Permutation::identity(3);
    for (int i : word) v = v.after_transposition(i);
    CHECK(v == Permutation::parse("321"));
  }
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
}

TEST_CASE("rank conditions of 2431 match the flag sequence") {
  RankConditions r = rank_conditions_of(Permutation::parse("2431"));
  CHECK(r.serialize() ==
        "5\n"
        "1 2 3 3 2 1\n"
        "1 2 2 2 1\n"
        "1 1 1 1\n"
        "0 1 1\n"
        "0 1\n"
        "0\n");
}

TEST_CASE("rank conditions of 312") {
  RankConditions r = rank_conditions_of(Permutation::parse("312"));
  CHECK(r.serialize() ==
        "3\n"
        "1 2 2 1\n"
        "1 1 1\n"
        "1 0\n"
        "0\n");
}

TEST_CASE("shifting adds a rim") {
  for (const char* s : {"312", "2431", "1234"}) {
    Permutation w = Permutation::parse(s);
    RankConditions r = rank_conditions_of(w);
    RankConditions rs = rank_conditions_of(w.shifted(1));
    CHECK(rs.n() == r.n() + 2);
    for (int i = 0; i <= r.n(); ++i)
      for (int j = i; j <= r.n(); ++j)
        CHECK(rs.rank(i + 1, j + 1) == r.rank(i, j) + 1);
    // the rim rectangles are empty, the interior is unchanged
    for (int j = 1; j <= rs.n(); ++j) CHECK(rs.rectangle(0, j).empty());
    for (int i = 0; i < rs.n(); ++i) CHECK(rs.rectangle(i, rs.n()).empty());
    for (int i = 0; i < r.n(); ++i)
      for (int j = i + 1; j <= r.n(); ++j)
        CHECK(rs.rectangle(i + 1, j + 1) == r.rectangle(i, j));
    CHECK(compute_P(rs) == compute_P(r).embed(1, 1));
  }
}

TEST_CASE("rectangle non-emptiness over S_4 and S_5") {
  for (int m : {3, 4})
    for (const Permutation& w : symmetric_group(m + 1)) {
      RankConditions r = rank_conditions_of(w);
      CHECK(r.valid());
      CHECK(r.expected_codim() == w.length());
      for (int i = 0; i <= r.n(); ++i)
        for (int j = i + 1; j <= r.n(); ++j) {
          const Rectangle rect = r.rectangle(i, j);
          CHECK(!rect.empty() == nonempty_rectangle_test(w, i, j));
          if (!rect.empty()) {
            CHECK(rect == Rectangle{1, 1});
            CHECK(i <= m - 1);
            CHECK(j >= m);
          }
        }
    }
}

TEST_CASE("strict mode rejects keys that are not row/column shaped") {
  // two P_r keys of 2431 have a column in a left slot
  CHECK_THROWS(quiver_coefficients(Permutation::parse("2431"), true));
  CHECK_NOTHROW(quiver_coefficients(Permutation::parse("1234"), true));
}

TEST_CASE("coefficient table of 2431") {
  auto table = quiver_coefficients(Permutation::parse("2431"));
  std::map<ABKey, Int> expected = {
      {{{1, 1}, {0, 0}, Partition({2})}, 1},
      {{{1, 1}, {0, 1}, Partition({1})}, 1},
      {{{1, 0}, {0, 0}, Partition({2, 1})}, 1},
      {{{1, 0}, {0, 1}, Partition({1, 1})}, 1},
      {{{0, 1}, {0, 0}, Partition({2, 1})}, 1},
      {{{0, 1}, {0, 1}, Partition({1, 1})}, 1},
      {{{0, 0}, {0, 0}, Partition({2, 1, 1})}, 1},
      {{{0, 0}, {0, 1}, Partition({1, 1, 1})}, 1},
  };
  CHECK(table == expected);
}

TEST_CASE("oracle example: longest element of S_3") {
  Polynomial f = schubert_oracle(Permutation::parse("321"), 2, true);
  Polynomial expected = (Polynomial::x(2, 2, 1) - Polynomial::y(2, 2, 1)) *
                        (Polynomial::x(2, 2, 1) - Polynomial::y(2, 2, 2)) *
                        (Polynomial::x(2, 2, 2) - Polynomial::y(2, 2, 1));
  CHECK(f == expected);
  CHECK(schubert_oracle(Permutation::identity(3), 2, true) ==
        Polynomial::constant(2, 2, 1));
}

TEST_CASE("assembled Schubert polynomials match the oracle on S_4") {
  for (const Permutation& w : symmetric_group(4)) {
    int nvars = 3;
    CHECK(assemble_schubert(w, nvars) == schubert_oracle(w, nvars, true));
  }
}

TEST_CASE("assembly is stable under extra variables") {
  Permutation w = Permutation::parse("2431");
  Polynomial f4 = assemble_schubert(w, 4);
  Polynomial f3 = schubert_oracle(w, 4, true);
  CHECK(f4 == f3);
}

TEST_CASE("product formula on small pairs") {
  CHECK(product_formula_check(Permutation::parse("21"),
                              Permutation::parse("21")));
  CHECK(product_formula_check(Permutation::parse("312"),
                              Permutation::parse("21")));
}
