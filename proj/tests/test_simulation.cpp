#include "doctest.h"

#include <algorithm>
#include <random>

#include "maxplus/errors.hpp"
#include "maxplus/random.hpp"
#include "maxplus/simulation.hpp"

using namespace maxplus;

namespace {

const Scalar eps = Scalar::epsilon();

const Matrix a1{{eps, 1, eps}, {eps, eps, 1}, {1, eps, eps}};
const Matrix a2{{eps, eps, 1}, {1, eps, eps}, {eps, 1, eps}};
const Matrix super_a{{2, eps, 3}, {6, 2, eps}, {eps, 4, 3}};
const Matrix super_b{{eps, 3, eps}, {eps, eps, 2}, {4, eps, eps}};
const Matrix sub_a{{10, 1, eps}, {eps, 1, 1}, {1, eps, 1}};
const Matrix sub_b{{1, 1, eps}, {eps, 1, 1}, {1, eps, 10}};

const Vector zeros3{0, 0, 0};

}  // namespace

TEST_CASE("simulate scalar growth") {
    auto t = simulate(Schedule({{"A", 1}}), {{"A", Matrix{{5}}}}, Vector{0}, 3);
    REQUIRE(t.states.size() == 4);
    CHECK(t.states[1] == Vector{5});
    CHECK(t.states[3] == Vector{15});
    CHECK(t.applied == std::vector<std::string>{"A", "A", "A"});
    CHECK(t.horizon() == 3);
}

TEST_CASE("simulate alternates phases") {
    MatrixMap m{{"A1", a1}, {"A2", a2}};
    auto t = simulate(Schedule({{"A1", 1}, {"A2", 1}}), m, zeros3, 4);
    CHECK(t.applied == std::vector<std::string>{"A1", "A2", "A1", "A2"});
    CHECK(t.states[2] == otimes(otimes(a2, a1), zeros3));
    CHECK(t.states[2] == Vector{2, 2, 2});
    for (unsigned long k = 0; k < t.horizon(); ++k)
        CHECK(t.states[k + 1] == otimes(m.at(t.applied[k]), t.states[k]));
}

TEST_CASE("simulate input errors") {
    MatrixMap m{{"A", super_a}};
    CHECK_THROWS_AS(simulate(Schedule({{"A", 1}}), m, Vector(3), 5), ZeroInitialState);
    CHECK_THROWS_AS(simulate(Schedule({{"A", 1}}), m, Vector{0, 0}, 5), DimensionMismatch);
    CHECK_THROWS_AS(simulate(Schedule({{"B", 1}}), m, zeros3, 5), UnknownMatrixName);
    CHECK_THROWS_AS(simulate(Schedule({{"A", 1}}), m, zeros3, 0), std::invalid_argument);
}

TEST_CASE("trajectory of the superadditive A") {
    auto t = simulate(Schedule({{"A", 1}}), {{"A", super_a}}, zeros3, 12);
    // Every third step all components coincide: 13, 26, 39, 52.
    CHECK(t.states[3] == Vector{13, 13, 13});
    CHECK(t.states[12] == Vector{52, 52, 52});
    CHECK(t.states[4] == Vector{16, 19, 17});
}

TEST_CASE("detect periodicity") {
    auto s5 = detect_periodicity(simulate(Schedule({{"A", 1}}), {{"A", Matrix{{5}}}}, Vector{0}, 3));
    CHECK(s5.detected);
    CHECK(s5.period == 1);
    CHECK(s5.lambda_per_step == 5);
    CHECK(s5.transient == 0);

    // Frozen from an independent trajectory computation.
    auto a = detect_periodicity(simulate(Schedule({{"A", 1}}), {{"A", super_a}}, zeros3, 30));
    CHECK(a.detected);
    CHECK(a.period == 3);
    CHECK(a.lambda_per_step == Rational(13, 3));
    CHECK(a.transient == 0);

    MatrixMap m{{"A", super_a}, {"B", super_b}};
    auto two = detect_periodicity(simulate(Schedule({{"B", 1}, {"A", 1}}), m, zeros3, 60));
    CHECK(two.detected);
    CHECK(two.period == 2);
    CHECK(two.lambda_per_step == Rational(9, 2));
    CHECK(two.transient == 6);

    MatrixMap m2{{"A", sub_a}};
    auto e2 = detect_periodicity(simulate(Schedule({{"A", 1}}), m2, zeros3, 30));
    CHECK(e2.period == 1);
    CHECK(e2.lambda_per_step == 10);
    CHECK(e2.transient == 2);
}

TEST_CASE("detection fails on short or non-periodic windows") {
    // Too short for any period-3 window.
    auto shortrun = detect_periodicity(simulate(Schedule({{"A", 1}}), {{"A", super_a}}, zeros3, 4));
    CHECK_FALSE(shortrun.detected);

    // Reducible system whose components grow at different rates never settles.
    Matrix split{{1, eps}, {eps, 2}};
    auto diverging = detect_periodicity(simulate(Schedule({{"A", 1}}), {{"A", split}}, Vector{0, 0}, 60));
    CHECK_FALSE(diverging.detected);

    // epsilon components are matched, not compared numerically.
    Matrix half{{1, eps}, {eps, eps}};
    auto eps_tail = detect_periodicity(simulate(Schedule({{"A", 1}}), {{"A", half}}, Vector{0, 0}, 12));
    CHECK(eps_tail.detected);
    CHECK(eps_tail.lambda_per_step == 1);
    CHECK(eps_tail.transient == 1);
}

TEST_CASE("cross validation on the reference pairs") {
    MatrixMap m1{{"A", super_a}, {"B", super_b}};
    auto cv1 = cross_validate(Schedule({{"B", 1}, {"A", 1}}), m1, zeros3);
    CHECK(cv1.agree);
    CHECK(cv1.empirical.lambda_per_step == Rational(9, 2));
    CHECK(cv1.horizon == recommended_horizon(cv1.spectral));

    MatrixMap m2{{"A", sub_a}, {"B", sub_b}};
    auto cv2 = cross_validate(Schedule({{"B", 1}, {"A", 1}}), m2, zeros3);
    CHECK(cv2.agree);
    CHECK(cv2.spectral.lambda_per_step == Rational(11, 2));

    auto cvb = cross_validate(Schedule({{"B", 1}}), m1, zeros3);
    CHECK(cvb.agree);
    CHECK(cvb.empirical.lambda_per_step == 3);

    auto too_short = cross_validate(Schedule({{"B", 1}, {"A", 1}}), m1, zeros3, 5);
    CHECK_FALSE(too_short.agree);
    CHECK(too_short.diagnostics.find("horizon") != std::string::npos);

    MatrixMap m3{{"A1", a1}, {"A2", a2}};
    CHECK_THROWS_AS(cross_validate(Schedule({{"A1", 1}, {"A2", 1}}), m3, zeros3), NotIrreducible);
}

TEST_CASE("cross validation on random composed systems") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> phases(1, 3);
    std::uniform_int_distribution<unsigned long> length(1, 3);
    RandomMatrixOptions opts;
    opts.finite_diagonal = true;
    for (int trial = 0; trial < 60; ++trial) {
        opts.n = 1 + trial % 4;
        MatrixMap m;
        std::vector<Phase> ph;
        for (int p = phases(rng); p > 0; --p) {
            auto name = "M" + std::to_string(p);
            m.emplace(name, random_irreducible_matrix(rng, opts));
            ph.push_back({name, length(rng)});
        }
        auto cv = cross_validate(Schedule(ph), m, Vector(opts.n, Scalar(0)));
        INFO(cv.diagnostics);
        REQUIRE(cv.agree);
        REQUIRE(cv.spectral.period % cv.empirical.period == 0);
    }
}

TEST_CASE("nonnegative systems with finite diagonals never decrease") {
    std::mt19937_64 rng(9);
    RandomMatrixOptions opts;
    opts.min_entry = 0;
    opts.finite_diagonal = true;
    for (int trial = 0; trial < 50; ++trial) {
        opts.n = 1 + trial % 5;
        MatrixMap m{{"A", random_irreducible_matrix(rng, opts)}, {"B", random_irreducible_matrix(rng, opts)}};
        auto t = simulate(Schedule({{"A", 2}, {"B", 1}}), m, Vector(opts.n, Scalar(0)), 20);
        for (unsigned long k = 0; k < t.horizon(); ++k)
            for (std::size_t i = 0; i < opts.n; ++i) REQUIRE(t.states[k][i] <= t.states[k + 1][i]);
    }
}

TEST_CASE("epsilon components in trajectories of irreducible systems") {
    auto all_finite = [](const Vector& x) {
        return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_finite(); });
    };
    std::mt19937_64 rng(10);
    RandomMatrixOptions opts;
    for (int trial = 0; trial < 100; ++trial) {
        opts.n = 2 + trial % 5;
        opts.finite_diagonal = false;
        auto a = random_irreducible_matrix(rng, opts);
        // A fully finite state stays fully finite: every node has an in-arc.
        auto full = simulate(Schedule({{"A", 1}}), {{"A", a}}, Vector(opts.n, Scalar(0)), 10);
        for (const auto& x : full.states) REQUIRE(all_finite(x));

        // With self-loops everywhere a single seed spreads to all nodes within n - 1 steps.
        opts.finite_diagonal = true;
        auto b = random_irreducible_matrix(rng, opts);
        Vector seed(opts.n);
        seed[trial % opts.n] = Scalar(0);
        auto spread = simulate(Schedule({{"B", 1}}), {{"B", b}}, seed, 2 * opts.n);
        for (std::size_t k = opts.n - 1; k < spread.states.size(); ++k) REQUIRE(all_finite(spread.states[k]));
    }

    // Without self-loops a single seed can circulate forever.
    auto rotating = simulate(Schedule({{"A", 1}}), {{"A", a1}}, Vector{0, eps, eps}, 18);
    for (const auto& x : rotating.states) CHECK_FALSE(all_finite(x));
    auto report = detect_periodicity(rotating);
    CHECK(report.detected);
    CHECK(report.period == 3);
    CHECK(report.lambda_per_step == 1);
}
