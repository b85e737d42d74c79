#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

using MatrixMap = std::map<std::string, Matrix>;

struct Phase {
    std::string matrix;
    unsigned long length = 1;

    friend bool operator==(const Phase&, const Phase&) = default;
};

/**
 * Periodic switching law: phase p applies its matrix for `length`
 * consecutive steps, then the next phase takes over, cycling forever.
 */
class Schedule {
public:
    /// Throws std::invalid_argument when empty or when some length is zero.
    explicit Schedule(std::vector<Phase> phases);

    const std::vector<Phase>& phases() const noexcept { return phases_; }
    /// Sum of phase lengths (steps per switching cycle).
    unsigned long cycle_length() const noexcept { return cycle_length_; }
    /// Index into phases() active at step k.
    std::size_t phase_at(unsigned long k) const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::vector<Phase> phases_;
    unsigned long cycle_length_ = 0;
};

/// A_m^{l_m} ... A_2^{l_2} A_1^{l_1}: the first phase is the rightmost factor.
/// Throws UnknownMatrixName or DimensionMismatch.
Matrix compose(const Schedule& schedule, const MatrixMap& matrices);

struct ProductReport {
    Matrix product;
    bool irreducible = false;
    bool hypothesis_held = false;
};

/**
 * Builds factors[m-1]^{powers[m-1]} ... factors[0]^{powers[0]} and tests it.
 *
 * The sufficient condition checked is: every factor irreducible and, for a
 * plain two-factor product, at least one factor with a finite diagonal;
 * otherwise every factor with a finite diagonal. If that holds and the product
 * is reducible, TheoremViolation is thrown.
 */
ProductReport product_irreducibility_check(const std::vector<Matrix>& factors,
                                           const std::vector<unsigned long>& powers);

/// True when the schedule's matrices meet the sufficient condition above.
bool sufficient_condition_holds(const Schedule& schedule, const MatrixMap& matrices);

struct SwitchedSpectral {
    Matrix composed;
    SpectralResult composed_spectral;
    unsigned long cycle_length = 1;
    Rational lambda_per_step;
    unsigned long period = 1;     ///< in original step indices
    unsigned long transient = 1;  ///< in original step indices
    bool sufficient_condition = false;
};

/// Spectral data of the composed matrix rescaled to original step indices:
/// lambda / K, K d, K k0. Throws NotIrreducible when the product is reducible.
SwitchedSpectral switched_analysis(const Schedule& schedule, const MatrixMap& matrices,
                                   unsigned long max_steps = kDefaultTransientCap);

enum class Comparison { Greater, Equal, Less };

const char* to_symbol(Comparison c);

struct EigenvalueRelation {
    Rational lambda_a;
    Rational lambda_b;
    Rational lambda_ab;
    /// lambda_ab compared against lambda_a + lambda_b.
    Comparison comparison = Comparison::Equal;
};

/// Throws NotIrreducible if A, B or AB is reducible.
EigenvalueRelation eigenvalue_relation_probe(const Matrix& a, const Matrix& b);

}  // namespace maxplus
