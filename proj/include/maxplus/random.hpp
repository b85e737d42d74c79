#pragma once

#include <random>

#include "maxplus/matrix.hpp"

namespace maxplus {

struct RandomMatrixOptions {
    std::size_t n = 3;
    long min_entry = -5;
    long max_entry = 10;
    double epsilon_density = 0.5;  ///< probability that an off-diagonal entry is epsilon
    bool finite_diagonal = false;  ///< force every diagonal entry finite
};

/// Integer-valued random matrix. Diagonal entries follow epsilon_density
/// unless finite_diagonal is set.
Matrix random_matrix(std::mt19937_64& rng, const RandomMatrixOptions& options);

/// Rejection-samples until the matrix is irreducible. Gives up with
/// std::runtime_error after `max_attempts` draws.
Matrix random_irreducible_matrix(std::mt19937_64& rng, const RandomMatrixOptions& options,
                                 unsigned max_attempts = 100'000);

}  // namespace maxplus
