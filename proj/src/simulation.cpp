#include "maxplus/simulation.hpp"

#include <algorithm>

#include "maxplus/errors.hpp"

namespace maxplus {

Trace simulate(const Schedule& schedule, const MatrixMap& matrices, const Vector& x0, unsigned long horizon) {
    if (x0.is_zero()) throw ZeroInitialState("initial state is all epsilon and would stay so forever");
    if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");

    std::vector<const Matrix*> phase_matrix;
    for (const auto& p : schedule.phases()) {
        auto it = matrices.find(p.matrix);
        if (it == matrices.end()) throw UnknownMatrixName("unknown matrix name '" + p.matrix + "'");
        if (it->second.size() != x0.size())
            throw DimensionMismatch("matrix '" + p.matrix + "' has dimension " + std::to_string(it->second.size()) +
                                    " but the initial state has " + std::to_string(x0.size()) + " entries");
        phase_matrix.push_back(&it->second);
    }

    Trace trace{schedule, {x0}, {}};
    trace.states.reserve(horizon + 1);
    trace.applied.reserve(horizon);
    for (unsigned long k = 0; k < horizon; ++k) {
        const auto p = schedule.phase_at(k);
        trace.states.push_back(otimes(*phase_matrix[p], trace.states.back()));
        trace.applied.push_back(schedule.phases()[p].matrix);
    }
    return trace;
}

namespace {

// X(k+d) = shift (x) X(k), epsilon entries matching.
bool shifted_equal(const Vector& later, const Vector& earlier, const Rational& shift) {
    for (std::size_t i = 0; i < later.size(); ++i) {
        if (later[i].is_epsilon() != earlier[i].is_epsilon()) return false;
        if (later[i].is_finite() && later[i].value() != earlier[i].value() + shift) return false;
    }
    return true;
}

}  // namespace

PeriodicityReport detect_periodicity(const Trace& trace, unsigned long max_period) {
    const unsigned long h = trace.horizon();
    const unsigned long window_start = h - h / 3;
    const auto& x = trace.states;

    for (unsigned long d = 1; d <= max_period && d <= h; ++d) {
        if (h - d < window_start || h - d - window_start + 1 < d) break;

        std::optional<Rational> shift;
        for (std::size_t i = 0; i < x[h].size() && !shift; ++i)
            if (x[h][i].is_finite() && x[h - d][i].is_finite()) shift = x[h][i].value() - x[h - d][i].value();
        if (!shift) continue;

        bool holds = true;
        for (unsigned long k = window_start; k + d <= h && holds; ++k) holds = shifted_equal(x[k + d], x[k], *shift);
        if (!holds) continue;

        unsigned long k0 = window_start;
        while (k0 > 0 && shifted_equal(x[k0 - 1 + d], x[k0 - 1], *shift)) --k0;

        PeriodicityReport report{true, d, Rational(*shift / static_cast<long>(d)), k0};
        report.lambda_per_step.canonicalize();
        return report;
    }
    return {};
}

unsigned long recommended_horizon(const SwitchedSpectral& spectral) {
    return spectral.cycle_length * (3 * spectral.composed_spectral.transient + 6 * spectral.composed_spectral.period);
}

CrossValidation cross_validate(const Schedule& schedule, const MatrixMap& matrices, const Vector& x0,
                               unsigned long horizon, unsigned long max_steps) {
    CrossValidation out{switched_analysis(schedule, matrices, max_steps), {}, horizon, false, {}};
    if (horizon == 0) horizon = out.horizon = recommended_horizon(out.spectral);

    const auto trace = simulate(schedule, matrices, x0, horizon);
    out.empirical = detect_periodicity(trace, std::max(kDefaultMaxPeriod, out.spectral.period));

    const auto& e = out.empirical;
    const auto& s = out.spectral;
    if (!e.detected) {
        out.diagnostics = "no periodic regime detected within horizon " + std::to_string(horizon) +
                          "; try a horizon of at least " + std::to_string(recommended_horizon(s));
    } else if (e.lambda_per_step != s.lambda_per_step) {
        out.diagnostics = "empirical lambda per step " + to_string(e.lambda_per_step) + " differs from predicted " +
                          to_string(s.lambda_per_step);
    } else if (s.period % e.period != 0) {
        out.diagnostics = "empirical period " + std::to_string(e.period) + " does not divide predicted period " +
                          std::to_string(s.period);
    } else if (e.transient > s.transient) {
        out.diagnostics = "empirical transient " + std::to_string(e.transient) + " exceeds predicted bound " +
                          std::to_string(s.transient);
    } else {
        out.agree = true;
    }
    return out;
}

}  // namespace maxplus
