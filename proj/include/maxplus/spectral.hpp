#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Arc `from -> to` carrying the finite entry a(to, from). Nodes are 0-based.
struct Arc {
    std::size_t from;
    std::size_t to;
    Rational weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Precedence digraph of a matrix: one arc j -> i per finite entry a(i, j).
struct Digraph {
    std::size_t nodes = 0;
    std::vector<Arc> arcs;

    /// Successor lists indexed by source node.
    std::vector<std::vector<std::size_t>> successors() const;
};

Digraph to_digraph(const Matrix& a);

/// Strongly connected. A 1x1 matrix is irreducible only with a finite entry.
bool is_irreducible(const Matrix& a);

/// Strongly connected components as sorted 0-based node lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& a);

bool has_finite_diagonal(const Matrix& a);

/// A critical circuit and its mean weight. `nodes` lists the circuit in arc
/// order without repeating the start node: nodes[0] -> nodes[1] -> ... -> nodes[0].
struct CriticalCircuit {
    Rational mean_weight;
    std::vector<std::size_t> nodes;
};

/// Mean weight of a circuit given as a node sequence in arc order. Throws
/// std::invalid_argument if some arc is missing.
Rational circuit_mean_weight(const Matrix& a, const std::vector<std::size_t>& nodes);

/// Maximum circuit mean (Karp's recurrence from node 0) plus a circuit attaining it.
/// Throws NotIrreducible.
CriticalCircuit eigenvalue(const Matrix& a);

/// B (+) B^2 (+) ... (+) B^n.
Matrix kleene_plus(const Matrix& b);

/// Eigenvector for the given eigenvalue: a column of (A - lambda)^+ with zero
/// diagonal entry. Throws NotIrreducible, or NoEigenvectorColumn if lambda is wrong.
Vector eigenvector(const Matrix& a, const Rational& lambda);

struct Cyclicity {
    unsigned long period = 1;     ///< smallest d
    unsigned long transient = 1;  ///< smallest k0 >= 1 for that d
};

inline constexpr unsigned long kDefaultTransientCap = 10'000;

/// Smallest d and k0 with A^{k+d} = (d lambda) A^k for all k >= k0, found by
/// hashing the powers of A - lambda until one repeats. Throws NotIrreducible,
/// or TransientBoundExceeded after `max_steps` powers without a repeat.
Cyclicity period_and_transient(const Matrix& a, unsigned long max_steps = kDefaultTransientCap);

struct SpectralResult {
    Rational lambda;
    Vector eigenvector;
    unsigned long period = 1;
    unsigned long transient = 1;
    std::vector<std::size_t> critical_circuit;
};

/// Everything above in one call. The result is checked before it is returned
/// (eigen-equation, cyclicity identity, circuit mean); a failed check throws
/// std::logic_error.
SpectralResult spectral_analysis(const Matrix& a, unsigned long max_steps = kDefaultTransientCap);

}  // namespace maxplus
