#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qc/factorseq.hpp"
#include "qc/schubert.hpp"
#include "qc/stanley.hpp"

using namespace qc;

TEST_CASE("canonical diagram satisfies the invariants") {
  for (const char* s : {"2431", "2143", "4321", "321", "1234"}) {
    RankConditions r = rank_conditions_of(Permutation::parse(s));
    CHECK(canonical_tableau_diagram(r).satisfies_invariants(r));
    CHECK(canonical_tableau_diagram(r, true).satisfies_invariants(r));
  }
}

TEST_CASE("single-row base case") {
  RankConditions r(1);
  r.set_rank(0, 0, 3);
  r.set_rank(1, 1, 3);
  r.set_rank(0, 1, 1);
  TableauDiagram d = canonical_tableau_diagram(r);
  auto seqs = factor_sequences(d);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs.begin()->at(0) == d.tab(0, 1));
  CHECK(d.tab(0, 1).shape() == Partition{2, 2});
}

TEST_CASE("factor sequence count for 2431") {
  RankConditions r = rank_conditions_of(Permutation::parse("2431"));
  TableauDiagram d = canonical_tableau_diagram(r);
  CHECK(d.total_boxes() == 4);
  // ten shape tuples, one sequence each
  CHECK(factor_sequences(d).size() == 10);
}

TEST_CASE("conjecture holds for selected permutations") {
  for (const char* s : {"2431", "2143", "4321", "1234"}) {
    RankConditions r = rank_conditions_of(Permutation::parse(s));
    ConjectureReport report = conjecture_check(r);
    CHECK(report.all_match());
    for (const auto& [key, entry] : report.entries)
      CHECK(entry.coefficient > 0);
  }
}

TEST_CASE("conjecture is insensitive to the filling") {
  RankConditions r = rank_conditions_of(Permutation::parse("4321"));
  ConjectureReport a = conjecture_check(r);
  ConjectureReport b = conjecture_check(r, true);
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [key, entry] : a.entries)
    CHECK(b.entries.at(key).factor_count == entry.factor_count);
  CHECK(b.all_match());
}

TEST_CASE("proven regime predicate") {
  // base case: a single rectangle sits in row one
  RankConditions base(1);
  base.set_rank(0, 0, 2);
  base.set_rank(1, 1, 2);
  base.set_rank(0, 1, 0);
  CHECK(in_proven_regime(base));

  // 2431: boxes in rows one to three, only one in row three
  CHECK(in_proven_regime(rank_conditions_of(Permutation::parse("2431"))));
  // 4321: three adjacent boxes in row three
  CHECK_FALSE(in_proven_regime(rank_conditions_of(Permutation::parse("4321"))));
  // 2143: a box in row five
  CHECK_FALSE(in_proven_regime(rank_conditions_of(Permutation::parse("2143"))));
  CHECK(in_proven_regime(rank_conditions_of(Permutation::identity(4))));
}

TEST_CASE("middle-slot counts recover the Stanley coefficients") {
  Permutation w = Permutation::parse("2143");
  RankConditions r = rank_conditions_of(w);
  ConjectureReport report = conjecture_check(r);
  int m = w.size() - 1;
  for (const Partition& lambda : partitions_of(w.length())) {
    std::vector<Partition> key(2 * m - 1);
    key[m - 1] = lambda;
    Int count = 0;
    auto it = report.entries.find(PartitionTuple(key));
    if (it != report.entries.end()) count = it->second.factor_count;
    CHECK(count == stanley_coefficient(w, lambda.conjugate()));
  }
}

TEST_CASE("extremal tableaux of the canonical diagram") {
  for (const char* s : {"2431", "2143", "4321", "321"}) {
    Permutation w = Permutation::parse(s);
    CHECK(w_right(w).shape() == lambda_of(w).conjugate());
    CHECK(w_left(w).shape() == mu_of(w).conjugate());
  }
}
