#pragma once

// Small-resolution criteria for threefold cDV singularities: Coxeter
// divisibility for t^m-substituted families, branch counting for the
// cA_n criterion, the Fermat gcd rule, and a three-way topological
// cross-check against the monodromy computations.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "singlab/monodromy.hpp"
#include "singlab/singularity.hpp"

namespace singlab {

// A(n >= 1), D(n >= 4), E6, E7, E8.
struct DuValType {
    char family;     // 'A', 'D' or 'E'
    std::int64_t n;  // subscript

    static DuValType parse(const std::string& text);
    std::string name() const;
};

DuValType make_du_val(char family, std::int64_t n);

std::int64_t coxeter_number(const DuValType& t);

enum class SmallResVerdict { SmallResolution, NoSmallResolution, SmoothTotalSpace };

const char* to_string(SmallResVerdict v);

// Substituting t -> t^m in the one-parameter smoothing: m = 1 keeps the
// total space smooth; otherwise a small resolution exists exactly when the
// Coxeter number divides m.
SmallResVerdict brieskorn_small_res(const DuValType& t, std::int64_t m);

// Factors of the plane curve g(t,z): the variables themselves or a binomial
// z^p + c t^q with generic nonzero c.
struct FactorVarT {
    bool operator==(const FactorVarT&) const = default;
};
struct FactorVarZ {
    bool operator==(const FactorVarZ&) const = default;
};
struct FactorBinomial {
    std::int64_t p, q;  // both >= 1
    bool operator==(const FactorBinomial&) const = default;
};
using CurveFactor = std::variant<FactorVarT, FactorVarZ, FactorBinomial>;

class PlaneCurveFactorization {
public:
    explicit PlaneCurveFactorization(std::vector<CurveFactor> factors);
    const std::vector<CurveFactor>& factors() const { return factors_; }

private:
    std::vector<CurveFactor> factors_;
};

// Number of analytic branches at the origin: one per variable factor,
// gcd(p, q) per binomial.
std::int64_t katz_branch_count(const PlaneCurveFactorization& f);

struct KatzSmallRes {
    bool admits;                      // a chain of >= 1 exceptional curves exists
    std::int64_t exceptional_curves;  // branch count - 1
};

// For x^2 + y^2 + g(t,z) = 0 with b distinct branches: a small resolution
// with a chain of b - 1 smooth rational curves.
KatzSmallRes katz_small_res(const PlaneCurveFactorization& f);

// Link of x_1^2 + x_2^2 + x_3^m + x_4^n: S^5 when gcd(m,n) = 1, otherwise
// the connected sum of gcd(m,n) - 1 copies of S^2 x S^3.
LinkClassification fermat_link(std::int64_t m, std::int64_t n);

struct CrossCheckReport {
    std::int64_t m = 0, n = 0;
    std::int64_t ell_gcd = 0;    // gcd(m,n) - 1
    std::int64_t ell_eigen = 0;  // multiplicity of the eigenvalue 1
    std::int64_t ell_snf = 0;    // free rank of the Smith form of M - I
    bool agree = false;
    bool sphere = false;  // |det(M - I)| = 1
};

// Computes the number of exceptional curves three independent ways for a
// singularity of shape (2,2,m,n) and reports agreement. A discrepancy is a
// bug signal and is surfaced, never resolved silently.
CrossCheckReport cross_check(const DiagonalSingularity& s, const SizeCaps& caps = {});

}  // namespace singlab
