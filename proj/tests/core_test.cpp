#include <doctest.h>

#include <numeric>
#include <random>

#include "singlab/singularity.hpp"

using namespace singlab;

namespace {

// independent check that A * d = degree * (1,..,1) exactly
void check_weight_equation(const InvertibleMatrixSingularity& s, const WeightSystem& ws) {
    const auto& m = s.matrix();
    for (std::size_t i = 0; i < m.size(); ++i) {
        BigInt lhs = 0;
        for (std::size_t j = 0; j < m.size(); ++j) lhs += BigInt(m[i][j]) * ws.weights[j];
        CHECK(lhs == ws.degree);
    }
    BigInt g = ws.degree;
    for (const auto& w : ws.weights) g = big_gcd(g, w);
    CHECK(g == 1);
    for (const auto& w : ws.weights) CHECK(w > 0);
}

}  // namespace

TEST_CASE("type invariants") {
    CHECK_THROWS_AS(DiagonalSingularity({}), InvalidInput);
    CHECK_THROWS_AS(DiagonalSingularity({2, 1}), InvalidInput);
    CHECK_THROWS_AS(InvertibleMatrixSingularity({{1, 1}, {1, 1}}), SingularMatrix);
    CHECK_THROWS_AS(InvertibleMatrixSingularity({{1, 2}, {2, 4}}), SingularMatrix);
    CHECK(DiagonalSingularity({2, 3, 4}).dimension() == 2);
}

TEST_CASE("solve_weights on the pinned examples") {
    auto s = InvertibleMatrixSingularity::diagonal(DiagonalSingularity({2, 2, 2, 4}));
    auto ws = solve_weights(s);
    CHECK(ws.weights == std::vector<BigInt>{2, 2, 2, 1});
    CHECK(ws.degree == 4);
    check_weight_equation(s, ws);

    auto one = InvertibleMatrixSingularity::diagonal(DiagonalSingularity({7}));
    auto ws1 = solve_weights(one);
    CHECK(ws1.weights == std::vector<BigInt>{1});
    CHECK(ws1.degree == 7);

    // w = x^2 + x y^3
    InvertibleMatrixSingularity mixed({{2, 0}, {1, 3}});
    auto ws2 = solve_weights(mixed);
    CHECK(ws2.weights == std::vector<BigInt>{3, 1});
    CHECK(ws2.degree == 6);
    check_weight_equation(mixed, ws2);
}

TEST_CASE("solve_weights rejects non-positive solutions") {
    CHECK_THROWS_AS(solve_weights(InvertibleMatrixSingularity({{2, 0}, {4, 1}})),
                    NonPositiveWeight);
}

TEST_CASE("amplitude classification") {
    auto amp = [](std::vector<std::int64_t> a) {
        return amplitude(
            solve_weights(InvertibleMatrixSingularity::diagonal(DiagonalSingularity(a))));
    };
    auto fano = amp({2, 2, 2, 4});
    CHECK(fano.value == -3);
    CHECK(fano.cls == AmplitudeClass::LogFano);
    auto cy = amp({3, 3, 3});
    CHECK(cy.value == 0);
    CHECK(cy.cls == AmplitudeClass::LogCalabiYau);
    auto gen = amp({2, 3, 7});
    CHECK(gen.value == 1);
    CHECK(gen.cls == AmplitudeClass::LogGeneral);
    // (2,3,7): weights (21,14,6), degree 42
    auto ws = solve_weights(InvertibleMatrixSingularity::diagonal(DiagonalSingularity({2, 3, 7})));
    CHECK(ws.weights == std::vector<BigInt>{21, 14, 6});
    CHECK(ws.degree == 42);
}

TEST_CASE("amplitude tag depends only on the sign, not the scale") {
    auto s = InvertibleMatrixSingularity::diagonal(DiagonalSingularity({2, 2, 2, 4}));
    auto ws = solve_weights(s);
    for (int lambda = 2; lambda <= 5; ++lambda) {
        WeightSystem scaled;  // a non-primitive positive solution of the same system
        for (const auto& w : ws.weights) scaled.weights.push_back(w * lambda);
        scaled.degree = ws.degree * lambda;
        CHECK(amplitude(scaled).cls == amplitude(ws).cls);
    }
}

TEST_CASE("milnor numbers") {
    for (std::int64_t k = 1; k <= 10; ++k)
        CHECK(milnor_number(DiagonalSingularity({2, 2, 2, 2 * k})) == 2 * k - 1);
    CHECK(milnor_number(DiagonalSingularity({2, 3})) == 2);
    CHECK(milnor_number(DiagonalSingularity({2, 2, 2, 2, 2})) == 1);
    CHECK(milnor_number(DiagonalSingularity({3, 4, 5})) == 24);
}

TEST_CASE("jacobian bases on the pinned examples") {
    auto all = [](const DiagonalSingularity& s) {
        std::vector<std::size_t> subset(s.variable_count());
        std::iota(subset.begin(), subset.end(), 0);
        return jacobian_basis(s, subset);
    };

    auto b1 = all(DiagonalSingularity({3}));
    REQUIRE(b1.size() == 2);  // 1 and x
    CHECK(b1[0].exponents == std::vector<std::int64_t>{0});
    CHECK(b1[1].exponents == std::vector<std::int64_t>{1});

    for (std::int64_t k = 1; k <= 4; ++k) {
        auto b = all(DiagonalSingularity({2, 2, 2, 2 * k}));
        REQUIRE(b.size() == static_cast<std::size_t>(2 * k - 1));
        for (std::int64_t l = 0; l <= 2 * k - 2; ++l)
            CHECK(b[static_cast<std::size_t>(l)].exponents ==
                  std::vector<std::int64_t>{0, 0, 0, l});
    }

    auto b2 = all(DiagonalSingularity({3, 3}));
    REQUIRE(b2.size() == 4);
    CHECK(b2[0].exponents == std::vector<std::int64_t>{0, 0});
    CHECK(b2[1].exponents == std::vector<std::int64_t>{0, 1});
    CHECK(b2[2].exponents == std::vector<std::int64_t>{1, 0});
    CHECK(b2[3].exponents == std::vector<std::int64_t>{1, 1});

    CHECK_THROWS_AS(jacobian_basis(DiagonalSingularity({3, 3}), {5}), IndexOutOfRange);
}

TEST_CASE("formula vs enumeration: mu equals the basis size") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> len(1, 4), expo(2, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> a;
        for (int i = len(rng); i > 0; --i) a.push_back(expo(rng));
        DiagonalSingularity s(a);
        std::vector<std::size_t> subset(a.size());
        std::iota(subset.begin(), subset.end(), 0);
        CHECK(milnor_number(s) == BigInt(jacobian_basis(s, subset).size()));
    }
}

TEST_CASE("diagonal weights are lcm/a_i reduced by the common gcd") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 5), expo(2, 12);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::int64_t> a;
        for (int i = len(rng); i > 0; --i) a.push_back(expo(rng));
        auto ws = solve_weights(
            InvertibleMatrixSingularity::diagonal(DiagonalSingularity(a)));
        std::int64_t l = 1;
        for (auto ai : a) l = std::lcm(l, ai);
        BigInt g = l;
        for (auto ai : a) g = big_gcd(g, BigInt(l / ai));
        REQUIRE(ws.weights.size() == a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(ws.weights[i] == BigInt(l / a[i]) / g);
        CHECK(ws.degree == BigInt(l) / g);
    }
}

TEST_CASE("random triangular systems solve exactly and primitively") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> n_dist(1, 5), diag(2, 9), off(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = n_dist(rng);
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i) {
            m[i][i] = diag(rng);
            for (int j = i + 1; j < n; ++j) m[i][j] = off(rng);
        }
        InvertibleMatrixSingularity s(m);
        auto ws = [&] {
            try {
                return solve_weights(s);
            } catch (const NonPositiveWeight&) {
                return WeightSystem{};  // legitimate outcome for some shapes
            }
        }();
        if (!ws.weights.empty()) check_weight_equation(s, ws);
    }
}
