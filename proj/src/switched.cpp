#include "maxplus/switched.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

Schedule::Schedule(std::vector<Phase> phases) : phases_(std::move(phases)) {
    if (phases_.empty()) throw std::invalid_argument("schedule needs at least one phase");
    for (const auto& p : phases_) {
        if (p.length == 0) throw std::invalid_argument("phase '" + p.matrix + "' has zero length");
        cycle_length_ += p.length;
    }
}

std::size_t Schedule::phase_at(unsigned long k) const {
    unsigned long offset = k % cycle_length_;
    for (std::size_t p = 0; p < phases_.size(); ++p) {
        if (offset < phases_[p].length) return p;
        offset -= phases_[p].length;
    }
    return phases_.size() - 1;  // unreachable
}

namespace {

const Matrix& lookup(const MatrixMap& matrices, const std::string& name) {
    auto it = matrices.find(name);
    if (it == matrices.end()) throw UnknownMatrixName("unknown matrix name '" + name + "'");
    return it->second;
}

}  // namespace

Matrix compose(const Schedule& schedule, const MatrixMap& matrices) {
    const auto& phases = schedule.phases();
    Matrix product = power(lookup(matrices, phases.front().matrix), phases.front().length);
    for (std::size_t p = 1; p < phases.size(); ++p)
        product = otimes(power(lookup(matrices, phases[p].matrix), phases[p].length), product);
    return product;
}

namespace {

bool hypothesis(const std::vector<const Matrix*>& factors, const std::vector<unsigned long>& powers) {
    if (!std::all_of(factors.begin(), factors.end(), [](const Matrix* m) { return is_irreducible(*m); }))
        return false;
    const bool two_plain_factors = factors.size() == 2 && powers[0] == 1 && powers[1] == 1;
    auto finite_diag = [](const Matrix* m) { return has_finite_diagonal(*m); };
    return two_plain_factors ? std::any_of(factors.begin(), factors.end(), finite_diag)
                             : std::all_of(factors.begin(), factors.end(), finite_diag);
}

}  // namespace

ProductReport product_irreducibility_check(const std::vector<Matrix>& factors,
                                           const std::vector<unsigned long>& powers) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    if (factors.size() != powers.size()) throw std::invalid_argument("one power per factor required");

    Matrix product = power(factors[0], powers[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) product = otimes(power(factors[i], powers[i]), product);

    std::vector<const Matrix*> refs;
    for (const auto& f : factors) refs.push_back(&f);
    ProductReport report{std::move(product), false, hypothesis(refs, powers)};
    report.irreducible = is_irreducible(report.product);
    if (report.hypothesis_held && !report.irreducible)
        throw TheoremViolation("factors meet the irreducibility hypothesis but their product is reducible");
    return report;
}

bool sufficient_condition_holds(const Schedule& schedule, const MatrixMap& matrices) {
    std::vector<const Matrix*> refs;
    std::vector<unsigned long> powers;
    for (const auto& p : schedule.phases()) {
        refs.push_back(&lookup(matrices, p.matrix));
        powers.push_back(p.length);
    }
    return hypothesis(refs, powers);
}

SwitchedSpectral switched_analysis(const Schedule& schedule, const MatrixMap& matrices, unsigned long max_steps) {
    Matrix composed = compose(schedule, matrices);
    if (!is_irreducible(composed))
        throw NotIrreducible("composed system matrix is not irreducible; the schedule has no single cycle time");
    auto spectral = spectral_analysis(composed, max_steps);
    const unsigned long k = schedule.cycle_length();
    Rational per_step = spectral.lambda / static_cast<long>(k);
    per_step.canonicalize();
    SwitchedSpectral out{std::move(composed),        spectral, k, per_step, k * spectral.period,
                         k * spectral.transient, false};
    out.sufficient_condition = sufficient_condition_holds(schedule, matrices);
    return out;
}

const char* to_symbol(Comparison c) {
    switch (c) {
        case Comparison::Greater: return ">";
        case Comparison::Equal: return "=";
        case Comparison::Less: return "<";
    }
    return "?";
}

EigenvalueRelation eigenvalue_relation_probe(const Matrix& a, const Matrix& b) {
    EigenvalueRelation r;
    r.lambda_a = eigenvalue(a).mean_weight;
    r.lambda_b = eigenvalue(b).mean_weight;
    r.lambda_ab = eigenvalue(otimes(a, b)).mean_weight;
    const Rational sum = r.lambda_a + r.lambda_b;
    r.comparison = r.lambda_ab > sum ? Comparison::Greater : (r.lambda_ab < sum ? Comparison::Less : Comparison::Equal);
    return r;
}

}  // namespace maxplus
