#pragma once

// Test-only brute-force enumerator for the equivariant Hochschild tables.
// It walks the whole exponent box and applies the raw membership rules,
// staying independent of the congruence-solving fast path it checks.

#include <algorithm>
#include <vector>

#include "singlab/hochschild.hpp"

namespace singlab::testing {

// All compatible pairs with reduced x0 exponent in [-1, b0_red_max] and the
// other reduced exponents in the uniform box [-1, max_i(a_i - 2)].
inline std::vector<GammaMonomial> oracle_pairs(const DiagonalSingularity& s,
                                               std::int64_t b0_red_max) {
    const std::size_t nv = s.variable_count();
    std::int64_t box_hi = 0;
    for (auto a : s.exponents()) box_hi = std::max(box_hi, a - 2);

    std::vector<GammaMonomial> out;
    for (const auto& gamma : group_elements(s)) {
        FixedData fd = fixed_data(s, gamma);
        for (int star0 = 0; star0 <= 1; ++star0) {
            for (std::int64_t b0 = star0 ? -1 : 0; b0 <= b0_red_max; ++b0) {
                MonomialType type;
                if (star0 && b0 == -1 && !fd.x0_fixed) type = MonomialType::C;
                else if (fd.x0_fixed && star0) type = MonomialType::B;
                else if (fd.x0_fixed && !star0) type = MonomialType::A;
                else continue;

                std::vector<std::int64_t> b(nv, -1);
                while (true) {
                    bool valid = true;
                    std::int64_t msum = 0;
                    for (std::size_t i = 0; i < nv && valid; ++i) {
                        const std::int64_t ai = s.exponent(i);
                        const bool moved = gamma.residues[i] != 0;
                        if (moved ? b[i] != -1 : (b[i] < 0 || b[i] > ai - 2))
                            valid = false;
                        else if ((b0 - b[i]) % ai != 0)
                            valid = false;
                        else
                            msum += (b0 - b[i]) / ai;
                    }
                    if (valid) {
                        GammaMonomial m;
                        m.gamma = gamma;
                        m.type = type;
                        m.exponents = b;
                        m.b0 = b0;
                        m.x0_raw = type == MonomialType::A
                                       ? b0
                                       : (type == MonomialType::B ? b0 + 1 : 0);
                        m.weight = b0 - msum;
                        m.negativity = static_cast<int>(fd.moved.size()) +
                                       (type == MonomialType::A ? 0 : 1);
                        m.degree = 2 * m.weight + m.negativity;
                        out.push_back(std::move(m));
                    }
                    // odometer over the box
                    std::size_t i = nv;
                    bool rolled = false;
                    while (i-- > 0) {
                        if (b[i] < box_hi) {
                            ++b[i];
                            std::fill(b.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                      b.end(), -1);
                            rolled = true;
                            break;
                        }
                    }
                    if (!rolled) break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The fast path restricted to the same reduced range, for comparison.
inline std::vector<GammaMonomial> fast_pairs(const DiagonalSingularity& s,
                                             std::int64_t b0_red_max) {
    std::vector<GammaMonomial> out;
    for (const auto& gamma : group_elements(s))
        for (auto& m : gamma_monomials(s, gamma, b0_red_max + 1))
            if (m.b0 <= b0_red_max) out.push_back(std::move(m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace singlab::testing
