#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qc/partition.hpp"

namespace qc {

// Littlewood-Richardson coefficient c^mu_{sigma tau}, computed by counting
// LR skew tableaux of shape mu/sigma and content tau (lattice condition on
// the reverse reading word).  Memoized.
Int lr_coefficient(const Partition& mu, const Partition& sigma,
                   const Partition& tau);

// All pairs (sigma,tau) with c^lambda_{sigma tau} > 0, with coefficients.
std::map<std::pair<Partition, Partition>, Int> lr_pairs(
    const Partition& lambda);

// k-fold coproduct table of s_lambda: all k-tuples (sigma_1..sigma_k) with
// iterated LR coefficient c^lambda_{sigma_1,...,sigma_k} > 0.
std::map<std::vector<Partition>, Int> coproduct_k(const Partition& lambda,
                                                  int k);

}  // namespace qc
