#include "doctest.h"

#include <random>

#include "maxplus/errors.hpp"
#include "maxplus/random.hpp"
#include "maxplus/switched.hpp"
#include "oracles.hpp"

using namespace maxplus;

namespace {

const Scalar eps = Scalar::epsilon();

const Matrix a1{{eps, 1, eps}, {eps, eps, 1}, {1, eps, eps}};
const Matrix a2{{eps, eps, 1}, {1, eps, eps}, {eps, 1, eps}};
const Matrix super_a{{2, eps, 3}, {6, 2, eps}, {eps, 4, 3}};
const Matrix super_b{{eps, 3, eps}, {eps, eps, 2}, {4, eps, eps}};
const Matrix sub_a{{10, 1, eps}, {eps, 1, 1}, {1, eps, 1}};
const Matrix sub_b{{1, 1, eps}, {eps, 1, 1}, {1, eps, 10}};
const Matrix red_a{{eps, 1}, {eps, 1}};
const Matrix red_b{{eps, eps}, {1, 1}};

}  // namespace

TEST_CASE("schedule basics") {
    Schedule s({{"A", 2}, {"B", 1}, {"C", 3}});
    CHECK(s.cycle_length() == 6);
    std::vector<std::size_t> expected{0, 0, 1, 2, 2, 2, 0, 0, 1};
    for (unsigned long k = 0; k < expected.size(); ++k) CHECK(s.phase_at(k) == expected[k]);
    CHECK_THROWS_AS(Schedule({}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({{"A", 0}}), std::invalid_argument);

    // Even steps use phase 1, odd steps phase 2.
    Schedule two({{"A1", 1}, {"A2", 1}});
    CHECK(two.phase_at(0) == 0);
    CHECK(two.phase_at(1) == 1);
    CHECK(two.phase_at(10) == 0);
}

TEST_CASE("compose puts later phases on the left") {
    MatrixMap m{{"A1", a1}, {"A2", a2}, {"A", super_a}, {"B", super_b}};
    CHECK(compose(Schedule({{"A1", 1}, {"A2", 1}}), m) == Matrix{{2, eps, eps}, {eps, 2, eps}, {eps, eps, 2}});
    CHECK(compose(Schedule({{"A", 1}}), m) == super_a);
    CHECK(compose(Schedule({{"B", 1}, {"A", 1}}), m) == Matrix{{7, 5, eps}, {eps, 9, 4}, {7, eps, 6}});
    CHECK(compose(Schedule({{"A", 1}, {"B", 1}}), m) == otimes(super_b, super_a));
    CHECK(compose(Schedule({{"A", 2}, {"B", 3}}), m) == otimes(power(super_b, 3), power(super_a, 2)));

    CHECK_THROWS_AS(compose(Schedule({{"Z", 1}}), m), UnknownMatrixName);
    MatrixMap mixed{{"A", super_a}, {"S", red_a}};
    CHECK_THROWS_AS(compose(Schedule({{"A", 1}, {"S", 1}}), mixed), DimensionMismatch);
}

TEST_CASE("product irreducibility reports") {
    auto r_cyc = product_irreducibility_check({a1, a2}, {1, 1});
    CHECK_FALSE(r_cyc.irreducible);
    CHECK_FALSE(r_cyc.hypothesis_held);
    CHECK(r_cyc.product == Matrix{{2, eps, eps}, {eps, 2, eps}, {eps, eps, 2}});

    auto r2 = product_irreducibility_check({sub_b, sub_a}, {1, 1});
    CHECK(r2.irreducible);
    CHECK(r2.hypothesis_held);

    auto r_red = product_irreducibility_check({red_b, red_a}, {1, 1});
    CHECK(r_red.product == Matrix{{2, 2}, {2, 2}});
    CHECK(r_red.irreducible);
    CHECK_FALSE(r_red.hypothesis_held);

    // One factor with finite diagonal is enough for two plain factors.
    auto r1 = product_irreducibility_check({super_b, super_a}, {1, 1});
    CHECK(r1.hypothesis_held);
    CHECK(r1.irreducible);
    // With powers every factor needs a finite diagonal.
    CHECK_FALSE(product_irreducibility_check({super_b, super_a}, {2, 1}).hypothesis_held);
    // The cube of the cyclic matrix is reducible; no hypothesis claimed.
    auto cube = product_irreducibility_check({a1}, {3});
    CHECK_FALSE(cube.irreducible);
    CHECK_FALSE(cube.hypothesis_held);

    CHECK_THROWS_AS(product_irreducibility_check({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(product_irreducibility_check({a1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("two-factor products with one finite diagonal stay irreducible") {
    std::mt19937_64 rng(1);
    RandomMatrixOptions with_diag, any;
    with_diag.finite_diagonal = true;
    for (int trial = 0; trial < 300; ++trial) {
        with_diag.n = any.n = 1 + trial % 6;
        auto a = random_irreducible_matrix(rng, with_diag);
        auto b = random_irreducible_matrix(rng, any);
        REQUIRE(is_irreducible(otimes(a, b)));
        REQUIRE(is_irreducible(otimes(b, a)));
        REQUIRE(product_irreducibility_check({a, b}, {1, 1}).irreducible);
    }
}

TEST_CASE("powered products of finite-diagonal matrices stay irreducible") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<unsigned long> pw(1, 3);
    RandomMatrixOptions opts;
    opts.finite_diagonal = true;
    for (int trial = 0; trial < 200; ++trial) {
        opts.n = 1 + trial % 6;
        std::vector<Matrix> factors;
        std::vector<unsigned long> powers;
        for (int i = count(rng); i > 0; --i) {
            factors.push_back(random_irreducible_matrix(rng, opts));
            powers.push_back(pw(rng));
        }
        auto r = product_irreducibility_check(factors, powers);
        REQUIRE(r.hypothesis_held);
        REQUIRE(r.irreducible);
        REQUIRE(oracle::strongly_connected(r.product));
    }
}

TEST_CASE("switched analysis scales the composed spectrum by the cycle length") {
    MatrixMap m{{"A", super_a}, {"B", super_b}};
    auto single = switched_analysis(Schedule({{"A", 1}}), m);
    CHECK(single.lambda_per_step == Rational(13, 3));
    CHECK(single.cycle_length == 1);

    auto two = switched_analysis(Schedule({{"B", 1}, {"A", 1}}), m);
    CHECK(two.composed_spectral.lambda == 9);
    CHECK(two.lambda_per_step == Rational(9, 2));
    CHECK(two.period == 2 * two.composed_spectral.period);
    CHECK(two.transient == 2 * two.composed_spectral.transient);
    CHECK(two.sufficient_condition);
    const auto& s = two.composed_spectral;
    CHECK(power(two.composed, s.transient + s.period) ==
          otimes(Scalar(Rational(s.lambda * static_cast<long>(s.period))), power(two.composed, s.transient)));

    MatrixMap m2{{"A", sub_a}, {"B", sub_b}};
    CHECK(switched_analysis(Schedule({{"B", 1}, {"A", 1}}), m2).lambda_per_step == Rational(11, 2));

    MatrixMap m3{{"A1", a1}, {"A2", a2}};
    CHECK_THROWS_AS(switched_analysis(Schedule({{"A1", 1}, {"A2", 1}}), m3), NotIrreducible);

    // Reducible factors, irreducible product: analysed, condition reported false.
    MatrixMap m5{{"A", red_a}, {"B", red_b}};
    auto five = switched_analysis(Schedule({{"B", 1}, {"A", 1}}), m5);
    CHECK(five.lambda_per_step == 1);
    CHECK_FALSE(five.sufficient_condition);
}

TEST_CASE("eigenvalue relation probe") {
    auto p1 = eigenvalue_relation_probe(super_a, super_b);
    CHECK(p1.lambda_a == Rational(13, 3));
    CHECK(p1.lambda_b == 3);
    CHECK(p1.lambda_ab == 9);
    CHECK(p1.comparison == Comparison::Greater);

    auto p2 = eigenvalue_relation_probe(sub_a, sub_b);
    CHECK(p2.lambda_a == 10);
    CHECK(p2.lambda_b == 10);
    CHECK(p2.lambda_ab == 11);
    CHECK(p2.comparison == Comparison::Less);

    auto p3 = eigenvalue_relation_probe(Matrix{{Scalar(Rational(7, 2))}}, Matrix{{Scalar(Rational(7, 2))}});
    CHECK(p3.lambda_ab == 7);
    CHECK(p3.comparison == Comparison::Equal);
    CHECK(std::string(to_symbol(p3.comparison)) == "=");

    CHECK_THROWS_AS(eigenvalue_relation_probe(a1, a2), NotIrreducible);
}
