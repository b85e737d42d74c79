#include "maxplus/random.hpp"

#include <stdexcept>

#include "maxplus/spectral.hpp"

namespace maxplus {

Matrix random_matrix(std::mt19937_64& rng, const RandomMatrixOptions& options) {
    std::uniform_int_distribution<long> entry(options.min_entry, options.max_entry);
    std::bernoulli_distribution is_epsilon(options.epsilon_density);
    Matrix m(options.n);
    for (std::size_t i = 0; i < options.n; ++i) {
        for (std::size_t j = 0; j < options.n; ++j) {
            const bool forced = options.finite_diagonal && i == j;
            if (forced || !is_epsilon(rng)) m(i, j) = Scalar(entry(rng));
        }
    }
    return m;
}

Matrix random_irreducible_matrix(std::mt19937_64& rng, const RandomMatrixOptions& options, unsigned max_attempts) {
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        auto m = random_matrix(rng, options);
        if (is_irreducible(m)) return m;
    }
    throw std::runtime_error("could not draw an irreducible matrix; lower the epsilon density");
}

}  // namespace maxplus
