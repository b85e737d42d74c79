#include "maxplus/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "maxplus/errors.hpp"

namespace maxplus {

std::vector<std::vector<std::size_t>> Digraph::successors() const {
    std::vector<std::vector<std::size_t>> out(nodes);
    for (const auto& arc : arcs) out[arc.from].push_back(arc.to);
    return out;
}

Digraph to_digraph(const Matrix& a) {
    Digraph g{a.size(), {}};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a(i, j).is_finite()) g.arcs.push_back({j, i, a(i, j).value()});
    return g;
}

namespace {

// reach[s][t]: t is reachable from s by a path of length >= 0.
std::vector<std::vector<bool>> reachability(const Matrix& a) {
    const std::size_t n = a.size();
    const auto succ = to_digraph(a).successors();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : succ[u]) {
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return reach;
}

void require_irreducible(const Matrix& a) {
    if (!is_irreducible(a)) throw NotIrreducible("matrix is not irreducible (its digraph is not strongly connected)");
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& a) {
    const std::size_t n = a.size();
    const auto reach = reachability(a);
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t s = 0; s < n; ++s) {
        if (assigned[s]) continue;
        std::vector<std::size_t> component;
        for (std::size_t t = s; t < n; ++t) {
            if (reach[s][t] && reach[t][s]) {
                component.push_back(t);
                assigned[t] = true;
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

bool is_irreducible(const Matrix& a) {
    if (a.size() == 1) return a(0, 0).is_finite();
    return strongly_connected_components(a).size() == 1;
}

bool has_finite_diagonal(const Matrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a(i, i).is_epsilon()) return false;
    return true;
}

Rational circuit_mean_weight(const Matrix& a, const std::vector<std::size_t>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty circuit");
    Rational total = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto from = nodes[k];
        const auto to = nodes[(k + 1) % nodes.size()];
        const Scalar& w = a(to, from);
        if (w.is_epsilon())
            throw std::invalid_argument("no arc " + std::to_string(from + 1) + " -> " + std::to_string(to + 1));
        total += w.value();
    }
    return Rational(total / static_cast<long>(nodes.size()));
}

Matrix kleene_plus(const Matrix& b) {
    Matrix acc = b;
    Matrix pw = b;
    for (std::size_t k = 2; k <= b.size(); ++k) {
        pw = otimes(pw, b);
        acc = oplus(acc, pw);
    }
    return acc;
}

namespace {

Rational karp_max_cycle_mean(const Matrix& a) {
    const std::size_t n = a.size();
    // walk[k][v]: heaviest walk of exactly k arcs from node 0 to v.
    std::vector<std::vector<Scalar>> walk(n + 1, std::vector<Scalar>(n));
    walk[0][0] = Scalar::zero();
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) walk[k][v] = oplus(walk[k][v], otimes(walk[k - 1][u], a(v, u)));

    std::optional<Rational> best;
    for (std::size_t v = 0; v < n; ++v) {
        if (walk[n][v].is_epsilon()) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < n; ++k) {
            if (walk[k][v].is_epsilon()) continue;
            Rational mean = (walk[n][v].value() - walk[k][v].value()) / static_cast<long>(n - k);
            if (!worst || mean < *worst) worst = mean;
        }
        if (worst && (!best || *worst > *best)) best = worst;
    }
    // Irreducible input guarantees some length-n walk from node 0.
    if (!best) throw std::logic_error("Karp recurrence found no length-n walk");
    return *best;
}

// Follows arcs that close a zero-weight circuit in the normalized graph, starting
// from the lowest critical node, until a node repeats.
std::vector<std::size_t> extract_critical_circuit(const Matrix& normalized, const Matrix& closure) {
    const std::size_t n = normalized.size();
    const Scalar zero = Scalar::zero();
    auto critical_arc = [&](std::size_t from, std::size_t to) {
        return otimes(normalized(to, from), closure(from, to)) == zero;
    };

    std::size_t start = n;
    for (std::size_t i = 0; i < n && start == n; ++i)
        if (closure(i, i) == zero) start = i;
    if (start == n) throw std::logic_error("no critical node for the computed eigenvalue");

    std::vector<std::size_t> walk{start};
    std::vector<long> position(n, -1);
    position[start] = 0;
    while (true) {
        const auto cur = walk.back();
        std::size_t next = n;
        for (std::size_t v = 0; v < n && next == n; ++v)
            if (critical_arc(cur, v)) next = v;
        if (next == n) throw std::logic_error("critical node without a critical out-arc");
        if (position[next] >= 0) return {walk.begin() + position[next], walk.end()};
        position[next] = static_cast<long>(walk.size());
        walk.push_back(next);
    }
}

}  // namespace

CriticalCircuit eigenvalue(const Matrix& a) {
    require_irreducible(a);
    Rational lambda = karp_max_cycle_mean(a);
    const Matrix normalized = otimes(Scalar(Rational(-lambda)), a);
    auto circuit = extract_critical_circuit(normalized, kleene_plus(normalized));
    return {std::move(lambda), std::move(circuit)};
}

Vector eigenvector(const Matrix& a, const Rational& lambda) {
    require_irreducible(a);
    const Matrix closure = kleene_plus(otimes(Scalar(Rational(-lambda)), a));
    for (std::size_t j = 0; j < a.size(); ++j)
        if (closure(j, j) == Scalar::zero()) return closure.column(j);
    throw NoEigenvectorColumn("no column of the normalized closure has a zero diagonal entry; lambda " +
                              to_string(lambda) + " is not the eigenvalue");
}

Cyclicity period_and_transient(const Matrix& a, unsigned long max_steps) {
    const Rational lambda = eigenvalue(a).mean_weight;
    const Matrix normalized = otimes(Scalar(Rational(-lambda)), a);

    std::unordered_map<std::string, unsigned long> first_seen;
    Matrix current = normalized;
    for (unsigned long k = 1;; ++k) {
        auto [it, inserted] = first_seen.emplace(current.key(), k);
        if (!inserted) return {k - it->second, it->second};
        if (k >= max_steps)
            throw TransientBoundExceeded("no repeated power within " + std::to_string(max_steps) +
                                         " steps; raise the transient cap");
        current = otimes(current, normalized);
    }
}

SpectralResult spectral_analysis(const Matrix& a, unsigned long max_steps) {
    auto [lambda, circuit] = eigenvalue(a);
    Vector h = eigenvector(a, lambda);
    const auto cyc = period_and_transient(a, max_steps);

    const Scalar lam(lambda);
    if (h.is_zero() || otimes(a, h) != otimes(lam, h))
        throw std::logic_error("eigenvector residual is nonzero");
    const Scalar growth(Rational(lambda * static_cast<long>(cyc.period)));
    if (power(a, cyc.transient + cyc.period) != otimes(growth, power(a, cyc.transient)))
        throw std::logic_error("cyclicity identity fails at the reported transient");
    if (circuit_mean_weight(a, circuit) != lambda)
        throw std::logic_error("critical circuit mean differs from the eigenvalue");

    return {std::move(lambda), std::move(h), cyc.period, cyc.transient, std::move(circuit)};
}

}  // namespace maxplus
