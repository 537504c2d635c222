#include "singlab/monodromy.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

namespace singlab {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> fs;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fs.emplace_back(p, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

// Phi_n(1): 0 for n = 1, p for prime powers p^k, 1 otherwise.
BigInt cyclotomic_at_one(std::int64_t n) {
    if (n == 1) return 0;
    auto fs = factorize(n);
    if (fs.size() == 1) return BigInt(fs[0].first);
    return 1;
}

// det(M - I) = (-1)^mu * prod Phi_n(1)^{e_n}.
BigInt det_from_multiset(const CyclotomicMultiset& cm, const BigInt& mu) {
    BigInt det = mu % 2 == 0 ? 1 : -1;
    for (const auto& [n, e] : cm.multiplicities()) {
        BigInt v = cyclotomic_at_one(n);
        if (v == 0) return 0;
        for (std::int64_t i = 0; i < e; ++i) det *= v;
    }
    return det;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// a / b for monic-leading b, remainder must vanish.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    assert(b.back() == 1 || b.back() == -1);
    std::vector<BigInt> q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        BigInt f = a[i] / b.back();
        q[i - db] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    for (const auto& c : a) assert(c == 0);
    return q;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

CyclotomicMultiset::CyclotomicMultiset(std::map<std::int64_t, std::int64_t> mult)
    : mult_(std::move(mult)) {
    for (auto it = mult_.begin(); it != mult_.end();) {
        if (it->second < 0) throw InvalidInput("negative cyclotomic multiplicity");
        it = it->second == 0 ? mult_.erase(it) : std::next(it);
    }
}

std::int64_t CyclotomicMultiset::multiplicity(std::int64_t order) const {
    auto it = mult_.find(order);
    return it == mult_.end() ? 0 : it->second;
}

BigInt CyclotomicMultiset::weighted_degree() const {
    BigInt d = 0;
    for (const auto& [n, e] : mult_) d += BigInt(e) * euler_phi(n);
    return d;
}

BigInt euler_phi(std::int64_t n) {
    if (n <= 0) throw InvalidInput("euler_phi needs n >= 1");
    BigInt phi = 1;
    for (auto [p, e] : factorize(n)) {
        BigInt pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::vector<BigInt> cyclotomic_polynomial(std::int64_t n, std::int64_t degree_cap) {
    if (n < 1) throw InvalidInput("cyclotomic order must be >= 1");
    if (n > degree_cap)
        throw SizeCapExceeded("cyclotomic order " + std::to_string(n) + " above cap");
    // Phi_d for every divisor d of n, in ascending order of d, each obtained
    // by dividing t^d - 1 by the product of the earlier Phi_{d'}, d' | d.
    std::map<std::int64_t, std::vector<BigInt>> phi;
    for (auto d : divisors_of(n)) {
        std::vector<BigInt> num(static_cast<std::size_t>(d) + 1);
        num[0] = -1;
        num.back() = 1;  // t^d - 1
        for (auto dd : divisors_of(d))
            if (dd != d) num = poly_divide_exact(std::move(num), phi[dd]);
        phi[d] = std::move(num);
    }
    return phi[n];
}

IntegerMatrix companion_lambda(std::int64_t a, const SizeCaps& caps) {
    if (a < 2) throw InvalidInput("companion_lambda needs a >= 2");
    if (a - 1 > caps.matrix_mu)
        throw SizeCapExceeded("companion matrix size " + std::to_string(a - 1) +
                              " above cap " + std::to_string(caps.matrix_mu));
    const std::size_t n = static_cast<std::size_t>(a - 1);
    IntegerMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -1;
    return m;
}

IntegerMatrix integral_monodromy(const DiagonalSingularity& s, const SizeCaps& caps) {
    BigInt mu = milnor_number(s);
    if (mu > caps.matrix_mu)
        throw SizeCapExceeded("mu = " + mu.str() + " exceeds the matrix cap of " +
                              std::to_string(caps.matrix_mu));
    IntegerMatrix m = companion_lambda(s.exponent(0), caps);
    for (std::size_t i = 1; i < s.variable_count(); ++i)
        m = kronecker(m, companion_lambda(s.exponent(i), caps));
    return m;
}

namespace {

// Enumerates tuples (j_1..j_k), 1 <= j_i <= a_i - 1, restricted to
// first-index values [first_lo, first_hi), and tallies eigenvalue orders.
void tally_orders(const std::vector<std::int64_t>& a, std::int64_t lcm_all,
                  std::int64_t first_lo, std::int64_t first_hi,
                  std::map<std::int64_t, std::int64_t>& order_count) {
    const std::size_t k = a.size();
    std::vector<std::int64_t> w(k), j(k, 1);
    for (std::size_t i = 0; i < k; ++i) w[i] = lcm_all / a[i];
    if (first_lo >= first_hi) return;
    j[0] = first_lo;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum = (sum + j[i] * w[i]) % lcm_all;
    while (true) {
        std::int64_t order = sum == 0 ? 1 : lcm_all / std::gcd(sum, lcm_all);
        ++order_count[order];
        // odometer step on the last coordinate, carrying leftwards
        std::size_t i = k;
        while (i-- > 0) {
            std::int64_t hi = (i == 0) ? first_hi - 1 : a[i] - 1;
            if (j[i] < hi) {
                ++j[i];
                sum = (sum + w[i]) % lcm_all;
                break;
            }
            if (i == 0) return;
            sum = (sum - (j[i] - 1) * w[i]) % lcm_all;
            if (sum < 0) sum += lcm_all;
            j[i] = 1;
        }
    }
}

}  // namespace

CyclotomicMultiset char_poly(const DiagonalSingularity& s, const SizeCaps& caps,
                             unsigned threads) {
    BigInt mu = milnor_number(s);
    if (mu > caps.enumeration_mu)
        throw SizeCapExceeded("mu = " + mu.str() + " exceeds the enumeration cap of " +
                              std::to_string(caps.enumeration_mu));
    const auto& a = s.exponents();
    std::int64_t lcm_all = 1;
    try {
        for (auto ai : a) lcm_all = checked_lcm(lcm_all, ai);
    } catch (const ArithmeticOverflow&) {
        throw SizeCapExceeded("lcm of the exponents does not fit 64 bits");
    }

    std::map<std::int64_t, std::int64_t> order_count;
    const std::int64_t first_max = a[0];  // j_1 in [1, a_1 - 1]
    if (threads <= 1 || first_max - 1 < 2) {
        tally_orders(a, lcm_all, 1, first_max, order_count);
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(first_max - 1));
        std::vector<std::map<std::int64_t, std::int64_t>> parts(nt);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) {
            std::int64_t lo = 1 + (first_max - 1) * t / nt;
            std::int64_t hi = 1 + (first_max - 1) * (t + 1) / nt;
            pool.emplace_back(tally_orders, std::cref(a), lcm_all, lo, hi,
                              std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts)
            for (const auto& [n, c] : p) order_count[n] += c;
    }

    std::map<std::int64_t, std::int64_t> mult;
    for (const auto& [n, c] : order_count) {
        BigInt phi = euler_phi(n);
        BigInt e = BigInt(c) / phi;
        if (e * phi != c)
            throw Error("Internal", "order " + std::to_string(n) +
                                        " count not divisible by phi(n)");
        mult[n] = static_cast<std::int64_t>(e);
    }
    CyclotomicMultiset cm(std::move(mult));
    if (cm.weighted_degree() != mu)
        throw Error("Internal", "cyclotomic degree mismatch");
    return cm;
}

BigInt det_h_minus_id(const DiagonalSingularity& s, const SizeCaps& caps) {
    return det_from_multiset(char_poly(s, caps), milnor_number(s));
}

std::vector<BigInt> expand_char_poly(const CyclotomicMultiset& cm, std::int64_t degree_cap) {
    if (cm.weighted_degree() > degree_cap)
        throw SizeCapExceeded("expanded characteristic polynomial degree above cap");
    std::vector<BigInt> poly{1};
    for (const auto& [n, e] : cm.multiplicities()) {
        auto phi_n = cyclotomic_polynomial(n, degree_cap);
        for (std::int64_t i = 0; i < e; ++i) poly = poly_mul(poly, phi_n);
    }
    return poly;
}

std::string to_string(const LinkClassification& c) {
    switch (c.kind) {
        case LinkClassification::Kind::Sphere:
            return "S^" + std::to_string(c.sphere_dim);
        case LinkClassification::Kind::ConnectedSumS2xS3:
            return c.connected_sum_count == 1
                       ? "S^2 x S^3"
                       : "#_" + std::to_string(c.connected_sum_count) + " (S^2 x S^3)";
        case LinkClassification::Kind::FreePlusTorsion: {
            std::string s = "free rank " + std::to_string(c.free_rank) + ", torsion (";
            for (std::size_t i = 0; i < c.torsion.size(); ++i)
                s += (i ? "," : "") + c.torsion[i].str();
            return s + ") doubled";
        }
        case LinkClassification::Kind::Unsupported:
            return "unsupported: " + c.reason;
    }
    return "?";
}

LinkClassification classify_link(const DiagonalSingularity& s, const SizeCaps& caps) {
    const std::size_t m = s.dimension();
    if (m < 3)
        throw DimensionTooLow("link classification needs complex dimension >= 3, got " +
                              std::to_string(m));
    CyclotomicMultiset cm = char_poly(s, caps);
    BigInt det = det_from_multiset(cm, milnor_number(s));

    LinkClassification out;
    if (det == 1 || det == -1) {
        out.kind = LinkClassification::Kind::Sphere;
        out.sphere_dim = static_cast<int>(2 * m - 1);
        return out;
    }
    if (m > 3) {
        out.kind = LinkClassification::Kind::Unsupported;
        out.reason = "only the sphere test is decided for links of dimension " +
                     std::to_string(2 * m - 1) + "; betti b_" + std::to_string(m - 1) +
                     " = b_" + std::to_string(m) + " = " +
                     std::to_string(cm.multiplicity(1));
        return out;
    }

    IntegerMatrix mm = integral_monodromy(s, caps);
    SmithForm f = smith_normal_form(mm - IntegerMatrix::identity(mm.rows()),
                                    SnfOptions{/*transforms=*/false});
    const std::int64_t free_rank = static_cast<std::int64_t>(f.free_rank());
    std::vector<BigInt> torsion = f.torsion();
    if (torsion.empty()) {
        out.kind = LinkClassification::Kind::ConnectedSumS2xS3;
        out.connected_sum_count = free_rank;
        return out;
    }
    // H_2 = F + (T + T): the elementary divisors must pair up exactly.
    bool doubled = torsion.size() % 2 == 0;
    std::vector<BigInt> halved;
    for (std::size_t i = 0; doubled && i < torsion.size(); i += 2) {
        if (torsion[i] != torsion[i + 1]) doubled = false;
        else halved.push_back(torsion[i]);
    }
    if (!doubled) {
        out.kind = LinkClassification::Kind::Unsupported;
        std::string list;
        for (std::size_t i = 0; i < torsion.size(); ++i)
            list += (i ? "," : "") + torsion[i].str();
        out.reason = "torsion divisors (" + list + ") do not split as T+T";
        return out;
    }
    out.kind = LinkClassification::Kind::FreePlusTorsion;
    out.free_rank = free_rank;
    out.torsion = std::move(halved);
    return out;
}

}  // namespace singlab
