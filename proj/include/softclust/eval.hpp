#pragma once

#include <vector>

#include "softclust/numerics.hpp"

namespace softclust {

/// Hard cluster labels, one per sample.
using Assignment = std::vector<int>;

/// Best-matching accuracy: maximum over one-to-one cluster-to-class
/// matchings of the fraction of agreeing samples, via the Hungarian
/// algorithm on the contingency table (zero-padded to square when the label
/// alphabets differ). Invariant under relabeling of either argument.
double accuracy(const Assignment& predicted, const Assignment& truth);

/// Normalized mutual information I(pred;truth)/sqrt(H(pred)*H(truth)) from
/// empirical joint counts, in [0,1]. Either side constant (zero entropy)
/// yields 0.
double nmi(const Assignment& predicted, const Assignment& truth);

/// Maximum-total-value one-to-one matching of a square value matrix.
/// Exposed for the exhaustive-permutation cross-check in the tests.
double hungarian_max_value(const Matrix& value);

struct LloydResult {
    Assignment labels;
    Matrix prototypes; // k x d
    double loss;       // hard K-means objective at the returned solution
};

/// Best-of-restarts hard K-means with k-means++ seeding. Ties in the
/// nearest-prototype rule go to the lowest index.
LloydResult lloyd_oracle(const Matrix& z, std::size_t k, std::size_t restarts, Rng& rng);

/// Per-row argmax of a row-stochastic matrix; lowest index wins ties.
Assignment hardening(const Matrix& q);

} // namespace softclust
