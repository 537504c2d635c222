#pragma once

// Equivariant Hochschild cohomology of diagonal singularities by
// gamma-monomial enumeration: compatible pairs, weights, negativity,
// cohomological degree 2u + h, the x0-exponent bigrading, windowed
// dimension tables, contact comparison and the relabeling as symplectic
// cohomology when the bridge hypotheses hold.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singlab/numeric.hpp"
#include "singlab/singularity.hpp"

namespace singlab {

// gamma = (t_1,..,t_{n+1}) with t_i = exp(2*pi*i*r_i/a_i); t_0 is forced to
// (t_1...t_{n+1})^{-1}.
struct GroupElement {
    std::vector<std::int64_t> residues;  // 0 <= r_i < a_i

    bool operator==(const GroupElement& o) const { return residues == o.residues; }
    bool operator<(const GroupElement& o) const { return residues < o.residues; }
};

struct FixedData {
    std::vector<std::size_t> fixed;  // I^gamma: indices with r_i = 0 (0-based)
    std::vector<std::size_t> moved;  // I_gamma
    bool x0_fixed;                   // sum r_i / a_i integral
};

enum class MonomialType { A, B, C };

const char* to_string(MonomialType t);

struct GammaMonomial {
    GroupElement gamma;
    MonomialType type;
    std::vector<std::int64_t> exponents;  // reduced b_1..b_{n+1}
    std::int64_t b0;                      // reduced x0 exponent (= -1 forced for C)
    std::int64_t x0_raw;                  // raw x0 power before the star
    std::int64_t weight;                  // u = b0 - sum m_i
    int negativity;                       // h = |I_gamma| + (1 for B/C)
    std::int64_t degree;                  // 2u + h

    // deterministic table order: (residues, type, raw b0)
    bool operator<(const GammaMonomial& o) const;
    bool operator==(const GammaMonomial& o) const;
};

BigInt group_order(const DiagonalSingularity& s);

// All prod(a_i) elements in lexicographic residue order.
std::vector<GroupElement> group_elements(const DiagonalSingularity& s,
                                         std::int64_t cap = 1'000'000);
void for_each_group_element(const DiagonalSingularity& s, std::int64_t cap,
                            const std::function<void(const GroupElement&)>& fn);

FixedData fixed_data(const DiagonalSingularity& s, const GroupElement& gamma);

// The compatible monomials attached to gamma with raw x0 power in
// [0, b0_max_raw]: per raw power at most one A-type (reduced b0 = raw) and
// one B-type (reduced b0 = raw - 1) for x0-fixing gamma, and for the other
// elements the single C-type candidate, which exists exactly when gamma
// moves every variable.
std::vector<GammaMonomial> gamma_monomials(const DiagonalSingularity& s,
                                           const GroupElement& gamma,
                                           std::int64_t b0_max_raw);

struct DegreeWindow {
    std::int64_t lo, hi;  // inclusive
};

struct HHTable {
    DegreeWindow window{0, 0};
    bool complete = false;
    std::int64_t b0_raw_bound = 0;  // raw powers enumerated in [0, bound]
    Rational sigma;                 // sum 1/a_i
    std::optional<std::int64_t> derived_raw_bound;  // present when sigma > 1
    std::map<std::int64_t, std::vector<GammaMonomial>> generators;

    std::int64_t dimension(std::int64_t degree) const;
};

// Smallest raw bound whose enumeration provably captures every generator of
// degree >= d_min; empty when sigma <= 1 (degrees do not decrease in b0).
std::optional<std::int64_t> complete_raw_bound(const DiagonalSingularity& s,
                                               std::int64_t d_min);

// Aggregates gamma_monomials over the whole group, bucketed by degree and
// restricted to the window. Counts compatible pairs: the same monomial under
// distinct group elements counts once per element. When b0_max_raw is absent
// the bound is derived (requires sigma > 1, else MissingB0Bound).
HHTable hh_dimensions(const DiagonalSingularity& s, DegreeWindow window,
                      std::optional<std::int64_t> b0_max_raw = std::nullopt,
                      unsigned threads = 1, std::int64_t group_cap = 1'000'000);

struct BigradedEntry {
    Rational first;   // degree - scale * b0
    Rational second;  // scale * b0
    std::int64_t b0;  // reduced x0 exponent
};

struct BigradedTable {
    Rational scale;
    bool complete = false;
    std::map<std::int64_t, std::vector<BigradedEntry>> by_degree;
};

// Default scale is n (the complex dimension of the singularity).
BigradedTable bigraded_table(const DiagonalSingularity& s,
                             const std::vector<std::int64_t>& degrees,
                             std::optional<Rational> scale = std::nullopt,
                             std::optional<std::int64_t> b0_max_raw = std::nullopt,
                             unsigned threads = 1);

struct DistinguishVerdict {
    bool distinct = false;
    std::optional<std::int64_t> witness_degree;
    std::optional<Rational> lambda;  // the rescale tried on the first table
    bool complete = true;
    std::string license;
};

// Compares, per negative degree in the window, the multisets of reduced x0
// exponents up to one global positive rational rescale applied to the first
// singularity's side.
DistinguishVerdict contact_distinguish(const DiagonalSingularity& s1,
                                       const DiagonalSingularity& s2, DegreeWindow window,
                                       std::optional<std::int64_t> b0_max_raw = std::nullopt,
                                       unsigned threads = 1);

struct ShResult {
    bool accepted = false;
    std::string refusal;     // names the failed hypothesis when not accepted
    std::string provenance;  // what licenses the relabeling
    std::optional<HHTable> table;
};

// Relabels the Hochschild table as symplectic cohomology of the Milnor
// fiber when (i) the amplitude is nonzero and (ii) hh^2 vanishes across the
// enumerated range; refuses otherwise.
ShResult sh_via_hh(const DiagonalSingularity& s, DegreeWindow window,
                   std::optional<std::int64_t> b0_max_raw = std::nullopt,
                   unsigned threads = 1);

}  // namespace singlab
