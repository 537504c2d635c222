#pragma once

// Crossing-form Maslov indices for paths of diagonal unitary symplectic
// matrices, Conley-Zehnder indices of ellipsoid Reeb orbits, and the
// bridge between minimal discrepancy and the highest minimal index.
//
// Angles are kept in turn units (value v means angle 2*pi*v) so every
// crossing is located by exact rational arithmetic.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "singlab/numeric.hpp"

namespace singlab {

// Piecewise-linear angle functions theta_j : [0,1] -> R, one per coordinate,
// each given by breakpoints (time, turns) with strictly increasing times
// starting at 0 and ending at 1.
class AnglePath {
public:
    using Breakpoints = std::vector<std::pair<Rational, Rational>>;

    explicit AnglePath(std::vector<Breakpoints> coordinates);

    // theta(t) = value * t on a single coordinate.
    static AnglePath linear(const Rational& value);
    // theta_k(t) = values[k] * t.
    static AnglePath linear(const std::vector<Rational>& values);

    const std::vector<Breakpoints>& coordinates() const { return coords_; }
    std::size_t coordinate_count() const { return coords_.size(); }

    // Concatenation: other must start where this path ends (per coordinate,
    // in turns). Times are compressed into [0,1/2] and [1/2,1].
    AnglePath concatenate(const AnglePath& other) const;

    // Inserts extra breakpoints without altering the functions.
    AnglePath refined(const std::vector<Rational>& extra_times) const;

private:
    std::vector<Breakpoints> coords_;
};

struct Crossing {
    Rational time;
    std::size_t coordinate;
    int slope_sign;  // +1 or -1
    bool boundary;   // crossing at t = 0 or t = 1
};

struct CrossingReport {
    std::vector<Crossing> crossings;  // sorted by (time, coordinate)
    Rational index;                   // the crossing-form index
};

// Maslov index of a non-degenerate path: interior crossings contribute
// 2*sign(slope), boundary crossings contribute sign(slope). Throws
// DegenerateCrossing when a crossing has zero slope or sits at a breakpoint
// whose one-sided slopes disagree in sign.
Rational crossing_index(const AnglePath& p);
CrossingReport crossing_report(const AnglePath& p);

// Winding number of det along a loop: sum of theta_j(1) - theta_j(0),
// each required to be an integer.
BigInt loop_maslov(const AnglePath& p);

// CZ index of the j-th simple Reeb orbit on the ellipsoid with parameters a
// (1-based j): (n-1) + 2 * sum_{k != j} floor(a_j / a_k). Requires
// a_j / a_k to be non-integer for all k != j.
BigInt cz_ellipsoid_orbit(const std::vector<Rational>& a, std::size_t orbit_index);

// CZ index of the simple Reeb orbit on the round S^{2n-1}: 2(n-1).
BigInt cz_round_sphere(std::int64_t n);

struct MinimalIndex {
    BigInt mi;            // min_j cz_j + (n - 3)
    bool index_positive;  // mi > 0
};

// Only simple orbits are examined: iterated orbits have indices at least as
// large because each floor term is monotone in the iteration multiple.
MinimalIndex minimal_index(const std::vector<Rational>& a);

// cz lower bound reported as bound(n) = constant + n_coefficient * n.
struct LinearFormInN {
    Rational constant;
    Rational n_coefficient;
};

struct HmiBridge {
    std::optional<Rational> hmi;  // 2*md when md >= 0
    bool negative = false;        // md < 0: hmi is negative, value unquantified
    std::optional<LinearFormInN> cz_lower_bound;  // hmi + 3 - n
};

HmiBridge hmi_md_bridge(const Rational& minimal_discrepancy);

}  // namespace singlab
