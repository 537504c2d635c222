#include "singlab/matrix.hpp"

#include <algorithm>

namespace singlab {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix difference shape mismatch");
    IntegerMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const BigInt& f = a.at(i1, j1);
            if (f == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * b.at(i2, j2);
        }
    return r;
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Arithmetic shims for the Faddeev-LeVerrier kernel. The integer
// instantiations throw ArithmeticOverflow so the caller can escalate.
struct Int64Ops {
    using T = std::int64_t;
    static T from(const BigInt& v) {
        if (v < INT64_MIN || v > INT64_MAX) throw ArithmeticOverflow{};
        return static_cast<T>(v);
    }
    static T add(T a, T b) { return checked_add(a, b); }
    static T mul(T a, T b) { return checked_mul(a, b); }
    static T neg(T a) {
        if (a == INT64_MIN) throw ArithmeticOverflow{};
        return -a;
    }
    static T div_exact(T a, std::int64_t k) { return a / k; }
    static bool is_zero(T a) { return a == 0; }
    static BigInt to_big(T a) { return BigInt(a); }
};

struct Int128Ops {
    using T = __int128;
    static T from(const BigInt& v) {
        if (v < INT64_MIN || v > INT64_MAX) throw ArithmeticOverflow{};
        return static_cast<T>(static_cast<std::int64_t>(v));
    }
    static T add(T a, T b) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static T mul(T a, T b) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static T neg(T a) { return mul(a, T(-1)); }
    static T div_exact(T a, std::int64_t k) { return a / k; }
    static bool is_zero(T a) { return a == 0; }
    static BigInt to_big(T v) {
        bool negv = v < 0;
        unsigned __int128 u =
            negv ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        BigInt b = static_cast<std::uint64_t>(u >> 64);
        b <<= 64;
        b += static_cast<std::uint64_t>(u);
        return negv ? -b : b;
    }
};

struct BigOps {
    using T = BigInt;
    static T from(const BigInt& v) { return v; }
    static T add(const T& a, const T& b) { return a + b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T div_exact(const T& a, std::int64_t k) { return a / k; }
    static bool is_zero(const T& a) { return a == 0; }
    static BigInt to_big(const T& a) { return a; }
};

// det(tI - A) coefficients, descending (c_0 = 1 first).
template <typename Ops>
std::vector<BigInt> faddeev_leverrier(const IntegerMatrix& m) {
    using T = typename Ops::T;
    const std::size_t n = m.rows();
    std::vector<T> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Ops::from(m.at(i, j));

    std::vector<T> mk = a;  // M_1 = A
    std::vector<BigInt> coeffs(n + 1);
    coeffs[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        T tr = T(0);
        for (std::size_t i = 0; i < n; ++i) tr = Ops::add(tr, mk[i * n + i]);
        T ck = Ops::neg(Ops::div_exact(tr, static_cast<std::int64_t>(k)));
        coeffs[k] = Ops::to_big(ck);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = Ops::add(mk[i * n + i], ck);
        std::vector<T> next(n * n, T(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const T& f = a[i * n + l];
                if (Ops::is_zero(f)) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] = Ops::add(next[i * n + j], Ops::mul(f, mk[l * n + j]));
            }
        mk = std::move(next);
    }
    return coeffs;
}

}  // namespace

std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& m) {
    if (m.rows() != m.cols())
        throw InvalidInput("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<BigInt> desc;
    try {
        desc = faddeev_leverrier<Int64Ops>(m);
    } catch (const ArithmeticOverflow&) {
        try {
            desc = faddeev_leverrier<Int128Ops>(m);
        } catch (const ArithmeticOverflow&) {
            desc = faddeev_leverrier<BigOps>(m);
        }
    }
    std::vector<BigInt> asc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) asc[n - i] = desc[i];
    return asc;
}

}  // namespace singlab
