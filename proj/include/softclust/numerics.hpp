#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "softclust/errors.hpp"

namespace softclust {

/// Dense row-major matrix of doubles. The whole library runs in 64-bit
/// precision; reductions iterate in row-major order so results are
/// reproducible across runs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    bool all_finite() const;

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Seeded random source. The engine is mt19937_64, whose output sequence is
/// fixed by the standard, and all distributions are derived from raw engine
/// words by explicit arithmetic, so equal seeds give identical draws on any
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller with a cached spare.
    double normal();

    /// Uniform integer in [0,n) without modulo bias.
    std::size_t below(std::size_t n);

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    /// Derives an independent stream, e.g. one per epoch.
    Rng fork(std::uint64_t stream) const;

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// log(x) with x clamped to 1e-300. Entropy-style sums multiply the result by
/// a possibly-zero weight, which enforces the 0*log 0 = 0 convention without
/// producing NaN.
double clamped_log(double x);

/// Row-wise softmax, computed with per-row max subtraction. Each output row
/// sums to 1 within 1e-12 even for logit magnitudes around +-1e3.
/// Throws InvalidInput on non-finite entries.
Matrix softmax_rows(const Matrix& logits);

/// log(sum_j exp(v_j)) under max subtraction. Throws InvalidInput when v is
/// empty.
double log_sum_exp(std::span<const double> v);

/// Sum of squared elementwise differences. Throws ShapeError on mismatch.
double frobenius_sq_diff(const Matrix& a, const Matrix& b);

// Small dense kernels shared by the autoencoder and the multilogit head.
// Plain triple loops; shapes are checked, accumulation order is fixed.

/// out = a * b
Matrix matmul(const Matrix& a, const Matrix& b);
/// out = a * b^T
Matrix matmul_transb(const Matrix& a, const Matrix& b);
/// out = a^T * b
Matrix matmul_transa(const Matrix& a, const Matrix& b);
/// m += row broadcast over every row of m
void add_row_inplace(Matrix& m, std::span<const double> row);

} // namespace softclust
