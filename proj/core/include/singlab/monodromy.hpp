#pragma once

// Integral monodromy of diagonal (Brieskorn-Pham) Milnor fibers: the
// Kronecker-of-companions matrix model, the eigenvalue multiset as
// cyclotomic multiplicities, det(M - I), and the topological classification
// of the link.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singlab/matrix.hpp"
#include "singlab/singularity.hpp"
#include "singlab/smith.hpp"

namespace singlab {

struct SizeCaps {
    std::int64_t matrix_mu = 4096;          // cap for materialized mu x mu matrices
    std::int64_t enumeration_mu = 1'000'000;  // cap for eigenvalue tuple enumeration
};

// Eigenvalues of the monodromy recorded as order -> multiplicity e_n of the
// cyclotomic factor Phi_n. Sum of e_n * phi(n) equals the Milnor number.
class CyclotomicMultiset {
public:
    CyclotomicMultiset() = default;
    explicit CyclotomicMultiset(std::map<std::int64_t, std::int64_t> mult);

    const std::map<std::int64_t, std::int64_t>& multiplicities() const { return mult_; }
    std::int64_t multiplicity(std::int64_t order) const;
    BigInt weighted_degree() const;  // sum e_n * phi(n)

    bool operator==(const CyclotomicMultiset& o) const { return mult_ == o.mult_; }

private:
    std::map<std::int64_t, std::int64_t> mult_;
};

BigInt euler_phi(std::int64_t n);

// Coefficients of Phi_n, ascending. Degrees above the cap are rejected.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t n, std::int64_t degree_cap = 1'000'000);

// (a-1) x (a-1) companion matrix of Lambda_a(t) = 1 + t + ... + t^{a-1}:
// ones on the subdiagonal, last column all -1.
IntegerMatrix companion_lambda(std::int64_t a, const SizeCaps& caps = {});

// mu x mu Kronecker product of the per-variable companions.
IntegerMatrix integral_monodromy(const DiagonalSingularity& s, const SizeCaps& caps = {});

// Exact eigenvalue bookkeeping by enumerating all tuples of nontrivial
// roots of unity. `threads` may partition the enumeration; the result is
// identical for any partitioning.
CyclotomicMultiset char_poly(const DiagonalSingularity& s, const SizeCaps& caps = {},
                             unsigned threads = 1);

// det(M - I) = (-1)^mu * prod_n Phi_n(1)^{e_n}, exact with sign.
BigInt det_h_minus_id(const DiagonalSingularity& s, const SizeCaps& caps = {});

// Expands prod Phi_n(t)^{e_n} into an integer polynomial (ascending).
std::vector<BigInt> expand_char_poly(const CyclotomicMultiset& cm,
                                     std::int64_t degree_cap = 4096);

struct LinkClassification {
    enum class Kind { Sphere, ConnectedSumS2xS3, FreePlusTorsion, Unsupported };
    Kind kind;
    int sphere_dim = 0;                  // Sphere
    std::int64_t connected_sum_count = 0;  // ConnectedSumS2xS3: number of copies
    std::int64_t free_rank = 0;            // FreePlusTorsion
    std::vector<BigInt> torsion;           // FreePlusTorsion: divisors of T, H_2 = F + (T+T)
    std::string reason;                    // Unsupported
};

std::string to_string(const LinkClassification& c);

// Smale-type classification of the link. Requires complex dimension m >= 3;
// for m > 3 only the sphere test is decided, everything else is reported as
// Unsupported with the Betti data.
LinkClassification classify_link(const DiagonalSingularity& s, const SizeCaps& caps = {});

}  // namespace singlab
