#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softclust/numerics.hpp"

namespace softclust {

/// A loaded dataset. Labels, when present, are ground truth for evaluation
/// only; the training loops never see them.
struct Dataset {
    Matrix features;                        // N x d_x
    std::optional<std::vector<int>> labels; // length N, values in [0, K_true)
    std::string name;

    std::size_t size() const { return features.rows(); }
    std::size_t dim() const { return features.cols(); }
};

/// One epoch's visit order. The permutation is reseeded per epoch from the
/// master seed, so epochs differ but the whole schedule is reproducible.
struct BatchPlan {
    std::size_t batch_size = 0;
    std::vector<std::size_t> order;
    std::uint64_t rng_seed = 0;

    std::size_t num_batches() const {
        return (order.size() + batch_size - 1) / batch_size;
    }
    /// Indices of batch b; the last batch may be short.
    std::vector<std::size_t> batch(std::size_t b) const;
};

BatchPlan make_batch_plan(std::size_t n, std::size_t batch_size,
                          std::uint64_t master_seed, std::uint64_t epoch);

/// Synthetic Gaussian blobs. Cluster c is centered at sep*c*e_{c mod dim}
/// with isotropic noise; labels are populated. k>=2, per_cluster>=1, sep>0,
/// noise>0 or InvalidInput.
Dataset gen_gaussian_blobs(std::size_t k, std::size_t per_cluster, std::size_t dim,
                           double sep, double noise, Rng& rng);

/// IDX image/label pair as published with MNIST: big-endian integers, magic
/// 0x00000803 for images and 0x00000801 for labels. Pixels are scaled to
/// [0,1]. Truncation and magic/count mismatches raise FormatError naming the
/// byte offset or file.
Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::optional<std::size_t> limit = std::nullopt);

/// Rectangular numeric CSV, optional header row, optional label column.
/// Ragged or non-numeric rows raise FormatError with the 1-based line number.
Dataset load_csv(const std::string& path, std::optional<std::size_t> label_col = std::nullopt,
                 bool has_header = false);

/// Writes features (and labels, when present, as the last column) with
/// round-trip precision: save_csv then load_csv reproduces bits.
void save_csv(const Dataset& ds, const std::string& path);

} // namespace softclust
