#pragma once

#include <string>

#include "quadric/excep.hpp"

namespace quadric {

// Bad characters on the O-branch found by scanning ranks 4..12 near the w_k slopes.
// One row per character: "k (r,nu,Delta)".
std::string wk_table(const ExceptionalCache& cache);

// Discriminant 1/2 pair seeds up to max_rank: "r v1 v2 w1", each as (r,nu,Delta).
// Rows whose w1 fails to be semistable and bad are marked.
std::string pair_table(long max_rank, const ExceptionalCache& cache);

// Distinct (slope type, position relative to DLP, Picard group) outcomes of the rank 2 sweep
// over c1 in [-4,4]^2 and 0 < Delta <= 4.
std::string r2_table(const ExceptionalCache& cache);

}  // namespace quadric
