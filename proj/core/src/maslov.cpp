#include "singlab/maslov.hpp"

#include <algorithm>

namespace singlab {

AnglePath::AnglePath(std::vector<Breakpoints> coordinates) : coords_(std::move(coordinates)) {
    if (coords_.empty()) throw InvalidInput("an angle path needs at least one coordinate");
    for (const auto& bps : coords_) {
        if (bps.size() < 2) throw InvalidInput("each coordinate needs >= 2 breakpoints");
        if (bps.front().first != 0 || bps.back().first != 1)
            throw InvalidInput("breakpoint times must start at 0 and end at 1");
        for (std::size_t i = 1; i < bps.size(); ++i)
            if (!(bps[i - 1].first < bps[i].first))
                throw InvalidInput("breakpoint times must be strictly increasing");
    }
}

AnglePath AnglePath::linear(const Rational& value) {
    return linear(std::vector<Rational>{value});
}

AnglePath AnglePath::linear(const std::vector<Rational>& values) {
    std::vector<Breakpoints> coords;
    coords.reserve(values.size());
    for (const auto& v : values)
        coords.push_back(Breakpoints{{Rational(0), Rational(0)}, {Rational(1), v}});
    return AnglePath(std::move(coords));
}

AnglePath AnglePath::concatenate(const AnglePath& other) const {
    if (coords_.size() != other.coords_.size())
        throw InvalidInput("concatenation needs equal coordinate counts");
    std::vector<Breakpoints> joined(coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        if (coords_[c].back().second != other.coords_[c].front().second)
            throw InvalidInput("paths are not composable at coordinate " + std::to_string(c));
        Breakpoints bps;
        for (const auto& [t, v] : coords_[c]) bps.emplace_back(t / 2, v);
        for (const auto& [t, v] : other.coords_[c]) {
            if (t == 0) continue;  // shared junction point
            bps.emplace_back(Rational(1, 2) + t / 2, v);
        }
        joined[c] = std::move(bps);
    }
    return AnglePath(std::move(joined));
}

AnglePath AnglePath::refined(const std::vector<Rational>& extra_times) const {
    std::vector<Breakpoints> out(coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c) {
        Breakpoints bps = coords_[c];
        for (const auto& t : extra_times) {
            if (t <= 0 || t >= 1) continue;
            auto it = std::lower_bound(
                bps.begin(), bps.end(), t,
                [](const auto& bp, const Rational& x) { return bp.first < x; });
            if (it != bps.end() && it->first == t) continue;
            // interpolate on the containing segment
            const auto& right = *it;
            const auto& left = *(it - 1);
            Rational v = left.second + (right.second - left.second) * (t - left.first) /
                                           (right.first - left.first);
            bps.insert(it, {t, v});
        }
        out[c] = std::move(bps);
    }
    return AnglePath(std::move(out));
}

namespace {

int slope_sign_or_throw(const Rational& slope, const std::string& where) {
    int s = sign_of(slope);
    if (s == 0) throw DegenerateCrossing("zero slope at a crossing (" + where + ")");
    return s;
}

}  // namespace

CrossingReport crossing_report(const AnglePath& p) {
    std::vector<Crossing> crossings;
    Rational index = 0;
    for (std::size_t c = 0; c < p.coordinate_count(); ++c) {
        const auto& bps = p.coordinates()[c];
        const std::size_t segs = bps.size() - 1;
        std::vector<Rational> slope(segs);
        for (std::size_t s = 0; s < segs; ++s)
            slope[s] = (bps[s + 1].second - bps[s].second) / (bps[s + 1].first - bps[s].first);

        // crossings at breakpoints (including both endpoints)
        for (std::size_t b = 0; b < bps.size(); ++b) {
            if (!is_integer(bps[b].second)) continue;
            const std::string where =
                "coordinate " + std::to_string(c) + ", t = " + rational_to_string(bps[b].first);
            if (b == 0) {
                int sg = slope_sign_or_throw(slope[0], where);
                crossings.push_back({bps[b].first, c, sg, true});
                index += sg;
            } else if (b + 1 == bps.size()) {
                int sg = slope_sign_or_throw(slope[segs - 1], where);
                crossings.push_back({bps[b].first, c, sg, true});
                index += sg;
            } else {
                int sl = slope_sign_or_throw(slope[b - 1], where);
                int sr = slope_sign_or_throw(slope[b], where);
                if (sl != sr)
                    throw DegenerateCrossing("one-sided slopes disagree at a crossing (" +
                                             where + ")");
                crossings.push_back({bps[b].first, c, sl, false});
                index += 2 * sl;
            }
        }

        // crossings strictly inside a segment: integers strictly between the
        // endpoint values (endpoint values themselves are breakpoint cases)
        for (std::size_t s = 0; s < segs; ++s) {
            if (slope[s] == 0) {
                if (is_integer(bps[s].second))
                    throw DegenerateCrossing("path rests on the Maslov cycle (coordinate " +
                                             std::to_string(c) + ")");
                continue;
            }
            Rational lo = std::min(bps[s].second, bps[s + 1].second);
            Rational hi = std::max(bps[s].second, bps[s + 1].second);
            BigInt first = rational_floor(lo) + 1;              // smallest integer > lo
            BigInt last = rational_floor(hi);                   // largest integer <= hi
            if (Rational(last) == hi) --last;                   // strict
            int sg = sign_of(slope[s]);
            for (BigInt v = first; v <= last; ++v) {
                Rational t = bps[s].first + (Rational(v) - bps[s].second) / slope[s];
                crossings.push_back({t, c, sg, false});
                index += 2 * sg;
            }
        }
    }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.coordinate < b.coordinate;
    });
    return CrossingReport{std::move(crossings), std::move(index)};
}

Rational crossing_index(const AnglePath& p) { return crossing_report(p).index; }

BigInt loop_maslov(const AnglePath& p) {
    BigInt winding = 0;
    for (std::size_t c = 0; c < p.coordinate_count(); ++c) {
        const auto& bps = p.coordinates()[c];
        Rational delta = bps.back().second - bps.front().second;
        if (!is_integer(delta))
            throw NotALoop("coordinate " + std::to_string(c) +
                           " winds by the non-integer " + rational_to_string(delta));
        winding += boost::multiprecision::numerator(delta);
    }
    return winding;
}

BigInt cz_ellipsoid_orbit(const std::vector<Rational>& a, std::size_t orbit_index) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("empty ellipsoid parameter list");
    if (orbit_index < 1 || orbit_index > n)
        throw IndexOutOfRange("orbit index must be in 1..n");
    for (const auto& v : a)
        if (v <= 0) throw InvalidInput("ellipsoid parameters must be positive");
    const Rational& aj = a[orbit_index - 1];
    BigInt total = static_cast<std::int64_t>(n) - 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k + 1 == orbit_index) continue;
        Rational ratio = aj / a[k];
        if (is_integer(ratio))
            throw DegenerateRatio("a_" + std::to_string(orbit_index) + "/a_" +
                                  std::to_string(k + 1) + " = " + rational_to_string(ratio) +
                                  " is an integer");
        total += 2 * rational_floor(ratio);
    }
    return total;
}

BigInt cz_round_sphere(std::int64_t n) {
    if (n < 1) throw InvalidInput("cz_round_sphere needs n >= 1");
    return BigInt(2) * (n - 1);
}

MinimalIndex minimal_index(const std::vector<Rational>& a) {
    const std::size_t n = a.size();
    std::optional<BigInt> best;
    for (std::size_t j = 1; j <= n; ++j) {
        BigInt cz = cz_ellipsoid_orbit(a, j);
        if (!best || cz < *best) best = cz;
    }
    BigInt mi = *best + (static_cast<std::int64_t>(n) - 3);
    return MinimalIndex{mi, mi > 0};
}

HmiBridge hmi_md_bridge(const Rational& minimal_discrepancy) {
    HmiBridge out;
    if (minimal_discrepancy < 0) {
        out.negative = true;
        return out;
    }
    out.hmi = 2 * minimal_discrepancy;
    out.cz_lower_bound = LinearFormInN{*out.hmi + 3, Rational(-1)};
    return out;
}

}  // namespace singlab
