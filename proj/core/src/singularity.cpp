#include "singlab/singularity.hpp"

#include <algorithm>

namespace singlab {

DiagonalSingularity::DiagonalSingularity(std::vector<std::int64_t> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.empty())
        throw InvalidInput("a diagonal singularity needs at least one exponent");
    for (auto a : exponents_)
        if (a < 2) throw InvalidInput("every exponent must be >= 2");
}

InvertibleMatrixSingularity::InvertibleMatrixSingularity(
    std::vector<std::vector<std::int64_t>> matrix)
    : matrix_(std::move(matrix)) {
    if (matrix_.empty()) throw InvalidInput("empty exponent matrix");
    const std::size_t n = matrix_.size();
    for (const auto& row : matrix_)
        if (row.size() != n) throw InvalidInput("exponent matrix must be square");

    // det != 0, checked exactly by fraction-free elimination.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = matrix_[i][j];
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) throw SingularMatrix("exponent matrix has determinant 0");
            std::swap(m[k], m[p]);
            for (auto& v : m[k]) v = -v;  // keep the Bareiss sign bookkeeping
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) throw SingularMatrix("exponent matrix has determinant 0");
}

InvertibleMatrixSingularity InvertibleMatrixSingularity::diagonal(
    const DiagonalSingularity& s) {
    const std::size_t n = s.variable_count();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = s.exponent(i);
    return InvertibleMatrixSingularity(std::move(m));
}

const char* to_string(AmplitudeClass c) {
    switch (c) {
        case AmplitudeClass::LogFano: return "log-Fano";
        case AmplitudeClass::LogCalabiYau: return "log-Calabi-Yau";
        case AmplitudeClass::LogGeneral: return "log-general";
    }
    return "?";
}

WeightSystem solve_weights(const InvertibleMatrixSingularity& s) {
    // Solve A x = (1,...,1)^T over Q by Gaussian elimination on rationals,
    // then clear denominators and divide by the common gcd.
    const std::size_t n = s.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = s.matrix()[i][j];
        m[i][n] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw SingularMatrix("exponent matrix has determinant 0");
        std::swap(m[k], m[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];

    BigInt den = 1;
    for (const auto& xi : x) den = big_lcm(den, boost::multiprecision::denominator(xi));
    std::vector<BigInt> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = x[i] * Rational(den);
        w[i] = boost::multiprecision::numerator(v);
    }
    BigInt d = den;
    BigInt g = d;
    for (const auto& wi : w) g = big_gcd(g, wi);
    for (auto& wi : w) wi /= g;
    d /= g;
    for (const auto& wi : w)
        if (wi <= 0)
            throw NonPositiveWeight("matrix does not define positive weights (d_i = " +
                                    wi.str() + ")");
    return WeightSystem{std::move(w), d};
}

Amplitude amplitude(const WeightSystem& ws) {
    BigInt a = ws.degree;
    for (const auto& w : ws.weights) a -= w;
    AmplitudeClass cls = a < 0   ? AmplitudeClass::LogFano
                         : a > 0 ? AmplitudeClass::LogGeneral
                                 : AmplitudeClass::LogCalabiYau;
    return Amplitude{a, cls};
}

BigInt milnor_number(const DiagonalSingularity& s) {
    BigInt mu = 1;
    for (auto a : s.exponents()) mu *= BigInt(a - 1);
    return mu;
}

std::vector<Monomial> jacobian_basis(const DiagonalSingularity& s,
                                     const std::vector<std::size_t>& fixed_subset,
                                     std::int64_t enumeration_cap) {
    for (auto j : fixed_subset)
        if (j >= s.variable_count())
            throw IndexOutOfRange("subset index " + std::to_string(j) + " out of range");

    BigInt count = 1;
    for (auto j : fixed_subset) count *= BigInt(s.exponent(j) - 1);
    if (count > enumeration_cap)
        throw SizeCapExceeded("jacobian basis has " + count.str() +
                              " elements, above the cap of " +
                              std::to_string(enumeration_cap));

    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::int64_t> exps(fixed_subset.size(), 0);
    while (true) {
        out.push_back(Monomial{exps});
        // lexicographic successor: increment from the rightmost position
        std::size_t i = exps.size();
        while (i > 0) {
            --i;
            if (exps[i] < s.exponent(fixed_subset[i]) - 2) {
                ++exps[i];
                std::fill(exps.begin() + static_cast<std::ptrdiff_t>(i) + 1, exps.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (exps.empty()) return out;  // empty subset: single constant monomial
    }
}

}  // namespace singlab
