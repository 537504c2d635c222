#include "singlab/resolutions.hpp"

#include <algorithm>
#include <numeric>

namespace singlab {

DuValType make_du_val(char family, std::int64_t n) {
    switch (family) {
        case 'A':
            if (n < 1) throw InvalidInput("A(n) needs n >= 1");
            break;
        case 'D':
            if (n < 4) throw InvalidInput("D(n) needs n >= 4");
            break;
        case 'E':
            if (n != 6 && n != 7 && n != 8) throw InvalidInput("E(n) needs n in {6,7,8}");
            break;
        default:
            throw InvalidInput("du Val family must be A, D or E");
    }
    return DuValType{family, n};
}

DuValType DuValType::parse(const std::string& text) {
    if (text.size() < 2) throw InvalidInput("bad du Val type '" + text + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    std::int64_t n;
    try {
        n = std::stoll(text.substr(1));
    } catch (const std::exception&) {
        throw InvalidInput("bad du Val type '" + text + "'");
    }
    return make_du_val(fam, n);
}

std::string DuValType::name() const { return family + std::to_string(n); }

std::int64_t coxeter_number(const DuValType& t) {
    switch (t.family) {
        case 'A': return t.n + 1;
        case 'D': return 2 * t.n - 2;
        case 'E': return t.n == 6 ? 12 : (t.n == 7 ? 18 : 30);
    }
    throw InvalidInput("bad du Val type");
}

const char* to_string(SmallResVerdict v) {
    switch (v) {
        case SmallResVerdict::SmallResolution: return "small resolution";
        case SmallResVerdict::NoSmallResolution: return "no small resolution";
        case SmallResVerdict::SmoothTotalSpace: return "smooth total space";
    }
    return "?";
}

SmallResVerdict brieskorn_small_res(const DuValType& t, std::int64_t m) {
    if (m < 1) throw InvalidInput("substitution power must be >= 1");
    if (m == 1) return SmallResVerdict::SmoothTotalSpace;
    return m % coxeter_number(t) == 0 ? SmallResVerdict::SmallResolution
                                      : SmallResVerdict::NoSmallResolution;
}

PlaneCurveFactorization::PlaneCurveFactorization(std::vector<CurveFactor> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidInput("empty factorization");
    for (const auto& f : factors_)
        if (const auto* b = std::get_if<FactorBinomial>(&f))
            if (b->p < 1 || b->q < 1)
                throw InvalidInput("binomial factor needs p >= 1 and q >= 1");
    // A repeated factor shape gives a non-reduced, hence non-isolated, curve.
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = i + 1; j < factors_.size(); ++j)
            if (factors_[i] == factors_[j])
                throw NonIsolated("repeated factor: the curve is not reduced");
}

std::int64_t katz_branch_count(const PlaneCurveFactorization& f) {
    std::int64_t branches = 0;
    for (const auto& factor : f.factors()) {
        if (std::holds_alternative<FactorVarT>(factor) ||
            std::holds_alternative<FactorVarZ>(factor)) {
            ++branches;
        } else {
            const auto& b = std::get<FactorBinomial>(factor);
            branches += std::gcd(b.p, b.q);
        }
    }
    return branches;
}

KatzSmallRes katz_small_res(const PlaneCurveFactorization& f) {
    std::int64_t ell = katz_branch_count(f) - 1;
    return KatzSmallRes{ell >= 1, ell};
}

LinkClassification fermat_link(std::int64_t m, std::int64_t n) {
    if (m < 2 || n < 2) throw InvalidInput("fermat_link needs m, n >= 2");
    std::int64_t ell = std::gcd(m, n) - 1;
    LinkClassification out;
    if (ell == 0) {
        out.kind = LinkClassification::Kind::Sphere;
        out.sphere_dim = 5;
    } else {
        out.kind = LinkClassification::Kind::ConnectedSumS2xS3;
        out.connected_sum_count = ell;
    }
    return out;
}

CrossCheckReport cross_check(const DiagonalSingularity& s, const SizeCaps& caps) {
    const auto& a = s.exponents();
    if (a.size() != 4 || a[0] != 2 || a[1] != 2)
        throw InvalidInput("cross_check expects exponents of shape (2,2,m,n)");
    CrossCheckReport r;
    r.m = a[2];
    r.n = a[3];
    r.ell_gcd = std::gcd(r.m, r.n) - 1;

    CyclotomicMultiset cm = char_poly(s, caps);
    r.ell_eigen = cm.multiplicity(1);

    IntegerMatrix mm = integral_monodromy(s, caps);
    SmithForm f = smith_normal_form(mm - IntegerMatrix::identity(mm.rows()),
                                    SnfOptions{/*transforms=*/false});
    r.ell_snf = static_cast<std::int64_t>(f.free_rank());

    r.agree = r.ell_gcd == r.ell_eigen && r.ell_eigen == r.ell_snf;
    r.sphere = r.ell_snf == 0 && big_abs(det_h_minus_id(s, caps)) == 1;
    return r;
}

}  // namespace singlab
