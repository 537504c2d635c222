#include "singlab/hochschild.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

namespace singlab {

const char* to_string(MonomialType t) {
    switch (t) {
        case MonomialType::A: return "A";
        case MonomialType::B: return "B";
        case MonomialType::C: return "C";
    }
    return "?";
}

bool GammaMonomial::operator<(const GammaMonomial& o) const {
    if (gamma.residues != o.gamma.residues) return gamma.residues < o.gamma.residues;
    if (type != o.type) return static_cast<int>(type) < static_cast<int>(o.type);
    return x0_raw < o.x0_raw;
}

bool GammaMonomial::operator==(const GammaMonomial& o) const {
    return gamma == o.gamma && type == o.type && exponents == o.exponents && b0 == o.b0 &&
           x0_raw == o.x0_raw && weight == o.weight && negativity == o.negativity &&
           degree == o.degree;
}

BigInt group_order(const DiagonalSingularity& s) {
    BigInt n = 1;
    for (auto a : s.exponents()) n *= a;
    return n;
}

void for_each_group_element(const DiagonalSingularity& s, std::int64_t cap,
                            const std::function<void(const GroupElement&)>& fn) {
    BigInt order = group_order(s);
    if (order > cap)
        throw SizeCapExceeded("group order " + order.str() + " above the cap of " +
                              std::to_string(cap));
    GroupElement g;
    g.residues.assign(s.variable_count(), 0);
    while (true) {
        fn(g);
        std::size_t i = g.residues.size();
        while (i-- > 0) {
            if (g.residues[i] < s.exponent(i) - 1) {
                ++g.residues[i];
                std::fill(g.residues.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          g.residues.end(), 0);
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<GroupElement> group_elements(const DiagonalSingularity& s, std::int64_t cap) {
    std::vector<GroupElement> out;
    for_each_group_element(s, cap, [&](const GroupElement& g) { out.push_back(g); });
    return out;
}

FixedData fixed_data(const DiagonalSingularity& s, const GroupElement& gamma) {
    if (gamma.residues.size() != s.variable_count())
        throw InvalidInput("group element has the wrong number of residues");
    FixedData fd;
    Rational sum = 0;
    for (std::size_t i = 0; i < gamma.residues.size(); ++i) {
        std::int64_t r = gamma.residues[i];
        if (r < 0 || r >= s.exponent(i))
            throw InvalidInput("residue out of range at index " + std::to_string(i));
        (r == 0 ? fd.fixed : fd.moved).push_back(i);
        if (r != 0) sum += Rational(r, s.exponent(i));
    }
    fd.x0_fixed = is_integer(sum);
    return fd;
}

namespace {

// One candidate monomial for (gamma, reduced b0, type); empty when the
// congruences b_i = b0 (mod a_i) cannot be met within the per-index ranges.
std::optional<GammaMonomial> try_monomial(const DiagonalSingularity& s,
                                          const GroupElement& gamma, const FixedData& fd,
                                          std::int64_t b0, MonomialType type) {
    const std::size_t nv = s.variable_count();
    GammaMonomial m;
    m.exponents.resize(nv);
    std::int64_t msum = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        const std::int64_t ai = s.exponent(i);
        if (gamma.residues[i] != 0) {
            // moved variable: x_i^* forces b_i = -1, so a_i must divide b0+1
            if ((b0 + 1) % ai != 0) return std::nullopt;
            m.exponents[i] = -1;
            msum += (b0 + 1) / ai;
        } else {
            std::int64_t r = b0 % ai;
            if (r < 0) r += ai;
            if (r > ai - 2) return std::nullopt;  // outside the Jacobian range
            m.exponents[i] = r;
            msum += (b0 - r) / ai;
        }
    }
    m.gamma = gamma;
    m.type = type;
    m.b0 = b0;
    m.x0_raw = type == MonomialType::A ? b0 : (type == MonomialType::B ? b0 + 1 : 0);
    m.weight = b0 - msum;
    m.negativity =
        static_cast<int>(fd.moved.size()) + (type == MonomialType::A ? 0 : 1);
    m.degree = 2 * m.weight + m.negativity;
    assert((m.degree - m.negativity) % 2 == 0);
    return m;
}

void emit_for_gamma(const DiagonalSingularity& s, const GroupElement& gamma,
                    std::int64_t b0_max_raw, std::vector<GammaMonomial>& out) {
    FixedData fd = fixed_data(s, gamma);
    if (fd.x0_fixed) {
        for (std::int64_t raw = 0; raw <= b0_max_raw; ++raw) {
            if (auto a = try_monomial(s, gamma, fd, raw, MonomialType::A)) out.push_back(*a);
            if (auto b = try_monomial(s, gamma, fd, raw - 1, MonomialType::B))
                out.push_back(*b);
        }
    } else if (fd.fixed.empty()) {
        // C-type: on a fixed index the forced b_i = -1 never fits the
        // Jacobian range, so candidates exist only when every x_i moves.
        if (auto c = try_monomial(s, gamma, fd, -1, MonomialType::C)) out.push_back(*c);
    }
}

}  // namespace

std::vector<GammaMonomial> gamma_monomials(const DiagonalSingularity& s,
                                           const GroupElement& gamma,
                                           std::int64_t b0_max_raw) {
    if (b0_max_raw < 0) throw InvalidInput("b0 bound must be >= 0");
    std::vector<GammaMonomial> out;
    emit_for_gamma(s, gamma, b0_max_raw, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t HHTable::dimension(std::int64_t degree) const {
    auto it = generators.find(degree);
    return it == generators.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

std::optional<std::int64_t> complete_raw_bound(const DiagonalSingularity& s,
                                               std::int64_t d_min) {
    Rational sigma = 0;
    for (auto a : s.exponents()) sigma += Rational(1, a);
    if (sigma <= 1) return std::nullopt;
    const auto n = static_cast<std::int64_t>(s.dimension());
    // largest possible degree of a generator with reduced exponent beta:
    // 2*(beta*(1-sigma) + (n+1) - 2*sigma) + (n+2), strictly decreasing.
    auto max_degree = [&](std::int64_t beta) {
        return 2 * (Rational(beta) * (1 - sigma) + Rational(n + 1) - 2 * sigma) +
               Rational(n + 2);
    };
    std::int64_t b = -1;
    while (max_degree(b + 1) >= d_min) ++b;
    return b + 1;  // raw bound: covers A up to reduced b and B down to reduced b
}

HHTable hh_dimensions(const DiagonalSingularity& s, DegreeWindow window,
                      std::optional<std::int64_t> b0_max_raw, unsigned threads,
                      std::int64_t group_cap) {
    if (window.lo > window.hi) throw InvalidInput("empty degree window");
    HHTable table;
    table.window = window;
    Rational sigma = 0;
    for (auto a : s.exponents()) sigma += Rational(1, a);
    table.sigma = sigma;
    table.derived_raw_bound = complete_raw_bound(s, window.lo);

    if (b0_max_raw) {
        if (*b0_max_raw < 0) throw InvalidInput("b0 bound must be >= 0");
        table.b0_raw_bound = *b0_max_raw;
        table.complete = table.derived_raw_bound && *b0_max_raw >= *table.derived_raw_bound;
    } else {
        if (!table.derived_raw_bound)
            throw MissingB0Bound(
                "sum of 1/a_i is <= 1, so degrees do not decrease in the x0 power; "
                "supply an explicit b0 bound");
        table.b0_raw_bound = *table.derived_raw_bound;
        table.complete = true;
    }

    BigInt order = group_order(s);
    if (order > group_cap)
        throw SizeCapExceeded("group order " + order.str() + " above the cap of " +
                              std::to_string(group_cap));
    const auto order64 = static_cast<std::int64_t>(order);

    auto run_range = [&](std::int64_t lo, std::int64_t hi, std::vector<GammaMonomial>& out) {
        // unrank the mixed-radix element lo, then step the odometer
        GroupElement g;
        g.residues.assign(s.variable_count(), 0);
        std::int64_t rest = lo;
        for (std::size_t i = s.variable_count(); i-- > 0;) {
            g.residues[i] = rest % s.exponent(i);
            rest /= s.exponent(i);
        }
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            emit_for_gamma(s, g, table.b0_raw_bound, out);
            std::size_t i = g.residues.size();
            while (i-- > 0) {
                if (g.residues[i] < s.exponent(i) - 1) {
                    ++g.residues[i];
                    std::fill(g.residues.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                              g.residues.end(), 0);
                    break;
                }
                if (i == 0) break;
            }
        }
    };

    std::vector<GammaMonomial> all;
    if (threads <= 1 || order64 < 2) {
        run_range(0, order64, all);
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(order64));
        std::vector<std::vector<GammaMonomial>> parts(nt);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                run_range(order64 * t / nt, order64 * (t + 1) / nt, parts[t]);
            });
        for (auto& th : pool) th.join();
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    }

    for (auto& m : all) {
        if (m.degree < window.lo || m.degree > window.hi) continue;
        table.generators[m.degree].push_back(std::move(m));
    }
    // sorted buckets make the output independent of the enumeration split
    for (auto& [deg, gens] : table.generators) std::sort(gens.begin(), gens.end());
    return table;
}

BigradedTable bigraded_table(const DiagonalSingularity& s,
                             const std::vector<std::int64_t>& degrees,
                             std::optional<Rational> scale,
                             std::optional<std::int64_t> b0_max_raw, unsigned threads) {
    if (degrees.empty()) throw InvalidInput("no degrees requested");
    Rational sc = scale.value_or(Rational(static_cast<std::int64_t>(s.dimension())));
    if (sc <= 0) throw InvalidInput("scale must be positive");
    auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    HHTable t = hh_dimensions(s, DegreeWindow{*lo, *hi}, b0_max_raw, threads);

    BigradedTable out;
    out.scale = sc;
    out.complete = t.complete;
    for (auto d : degrees) {
        auto& entries = out.by_degree[d];
        auto it = t.generators.find(d);
        if (it == t.generators.end()) continue;
        for (const auto& g : it->second) {
            Rational second = sc * Rational(g.b0);
            entries.push_back(BigradedEntry{Rational(d) - second, second, g.b0});
        }
    }
    return out;
}

DistinguishVerdict contact_distinguish(const DiagonalSingularity& s1,
                                       const DiagonalSingularity& s2, DegreeWindow window,
                                       std::optional<std::int64_t> b0_max_raw,
                                       unsigned threads) {
    HHTable t1 = hh_dimensions(s1, window, b0_max_raw, threads);
    HHTable t2 = hh_dimensions(s2, window, b0_max_raw, threads);

    DistinguishVerdict v;
    v.complete = t1.complete && t2.complete;
    v.license =
        "negative-degree bigraded dimensions are contact data of the link for "
        "index-positive (terminal) germs; combinatorial comparison only";

    auto b0s_at = [](const HHTable& t, std::int64_t d) {
        std::vector<std::int64_t> out;
        auto it = t.generators.find(d);
        if (it != t.generators.end())
            for (const auto& g : it->second) out.push_back(g.b0);
        std::sort(out.begin(), out.end());
        return out;
    };

    std::optional<Rational> lambda;
    for (std::int64_t d = std::min<std::int64_t>(-1, window.hi); d >= window.lo; --d) {
        auto a = b0s_at(t1, d);
        auto b = b0s_at(t2, d);
        if (a.size() != b.size()) {
            v.distinct = true;
            v.witness_degree = d;
            v.lambda = lambda;
            return v;
        }
        if (a.empty()) continue;
        if (!lambda) {
            if (a[0] == 0 || b[0] == 0) {
                if (a != b) {
                    v.distinct = true;
                    v.witness_degree = d;
                    return v;
                }
                continue;
            }
            lambda = Rational(b[0]) / Rational(a[0]);
            if (*lambda <= 0) {
                v.distinct = true;
                v.witness_degree = d;
                return v;
            }
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (*lambda * Rational(a[i]) != Rational(b[i])) {
                v.distinct = true;
                v.witness_degree = d;
                v.lambda = lambda;
                return v;
            }
        }
    }
    v.lambda = lambda;
    return v;  // indistinguishable in this window
}

ShResult sh_via_hh(const DiagonalSingularity& s, DegreeWindow window,
                   std::optional<std::int64_t> b0_max_raw, unsigned threads) {
    ShResult out;
    WeightSystem ws = solve_weights(InvertibleMatrixSingularity::diagonal(s));
    Amplitude amp = amplitude(ws);
    if (amp.value == 0) {
        out.refusal = "amplitude = 0 (log-Calabi-Yau): the identification needs "
                      "nonzero amplitude";
        return out;
    }
    // hh^2 must vanish; check over an enumeration that includes degree 2.
    DegreeWindow probe{std::min<std::int64_t>(window.lo, 2),
                       std::max<std::int64_t>(window.hi, 2)};
    HHTable probe_table = hh_dimensions(s, probe, b0_max_raw, threads);
    if (probe_table.dimension(2) != 0) {
        out.refusal = "hh^2 != 0 (dimension " + std::to_string(probe_table.dimension(2)) +
                      " in the enumerated range)";
        return out;
    }
    out.accepted = true;
    out.provenance =
        "amplitude = " + amp.value.str() + " != 0 and hh^2 = 0 over the enumerated "
        "range; the exponent matrix is diagonal, hence equal to its transpose, so the "
        "table computes the symplectic cohomology of its own Milnor fiber";
    HHTable t = hh_dimensions(s, window, b0_max_raw, threads);
    out.table = std::move(t);
    return out;
}

}  // namespace singlab
