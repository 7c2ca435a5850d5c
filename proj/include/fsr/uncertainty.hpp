#pragma once

#include "fsr/fuzzy_relation.hpp"

namespace fsr {

// Uncertainty measures for square fuzzy relations, no probability weighting.
// The class of row i has fuzzy cardinality sum_j t_ij; dividing by n gives
// its expected cardinality, whose negative base-2 log is the uncertainty
// quantity. An all-zero row would send the log to +inf, so it is an error
// naming the degenerate element instead of a propagated sentinel.

/// (sum_j t_ij) / n, in [0, 1]. Requires a square, nonempty matrix.
double expected_cardinality(const FuzzyRelationMatrix& t, Eigen::Index i);

/// -log2 of the expected cardinality; >= 0. Throws on an all-zero row.
double uncertainty_quantity(const FuzzyRelationMatrix& t, Eigen::Index i);

/// Mean uncertainty quantity over all rows; 0 for the empty universe.
double average_uncertainty(const FuzzyRelationMatrix& t);

}  // namespace fsr
