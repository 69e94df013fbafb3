#pragma once

#include <stdexcept>
#include <string>

namespace softclust {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateColumn : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCluster : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergenceUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainingDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InnerSolverStalled : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace softclust
