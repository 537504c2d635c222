#pragma once

// Diagonal and invertible-matrix hypersurface singularities together with
// their elementary invariants: weight systems, amplitude, Milnor number and
// monomial bases of the Jacobian ring.

#include <cstdint>
#include <vector>

#include "singlab/numeric.hpp"

namespace singlab {

// w = x_1^{a_1} + ... + x_{m+1}^{a_{m+1}}, every a_i >= 2.
class DiagonalSingularity {
public:
    explicit DiagonalSingularity(std::vector<std::int64_t> exponents);

    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::int64_t exponent(std::size_t i) const { return exponents_[i]; }
    std::size_t variable_count() const { return exponents_.size(); }
    // Complex dimension m of the hypersurface germ.
    std::size_t dimension() const { return exponents_.size() - 1; }

private:
    std::vector<std::int64_t> exponents_;
};

// w_A = sum_k prod_j x_j^{a_{k,j}} for a square integer matrix A with
// det(A) != 0. Row k holds the exponent vector of the k-th monomial.
class InvertibleMatrixSingularity {
public:
    explicit InvertibleMatrixSingularity(std::vector<std::vector<std::int64_t>> matrix);
    static InvertibleMatrixSingularity diagonal(const DiagonalSingularity& s);

    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
    std::size_t size() const { return matrix_.size(); }

private:
    std::vector<std::vector<std::int64_t>> matrix_;
};

enum class AmplitudeClass { LogFano, LogCalabiYau, LogGeneral };

const char* to_string(AmplitudeClass c);

// The unique primitive positive integer solution of A d = d * (1,..,1)^T.
struct WeightSystem {
    std::vector<BigInt> weights;  // d_1 .. d_{m+1}, all > 0
    BigInt degree;                // d > 0, gcd(d_1,..,d_{m+1},d) = 1
};

WeightSystem solve_weights(const InvertibleMatrixSingularity& s);

struct Amplitude {
    BigInt value;  // d - sum d_j
    AmplitudeClass cls;
};

Amplitude amplitude(const WeightSystem& ws);

// mu = prod (a_i - 1).
BigInt milnor_number(const DiagonalSingularity& s);

// A monomial prod_{j in subset} x_j^{k_j}; exponents listed in subset order.
struct Monomial {
    std::vector<std::int64_t> exponents;
};

// All monomials with 0 <= k_j <= a_j - 2 for j in fixed_subset (0-based
// variable indices), in lexicographic order of exponent vectors. The count
// equals prod_{j in subset} (a_j - 1) and is capped to keep the
// materialized list sane.
std::vector<Monomial> jacobian_basis(const DiagonalSingularity& s,
                                     const std::vector<std::size_t>& fixed_subset,
                                     std::int64_t enumeration_cap = 1'000'000);

}  // namespace singlab
