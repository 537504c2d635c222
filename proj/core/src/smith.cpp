#include "singlab/smith.hpp"

#include <algorithm>
#include <cassert>

namespace singlab {

std::vector<BigInt> SmithForm::torsion() const {
    std::vector<BigInt> t;
    for (const auto& d : diagonal)
        if (d > 1) t.push_back(d);
    return t;
}

namespace {

struct I64 {
    using T = std::int64_t;
    static T from(const BigInt& v) {
        if (v < INT64_MIN || v > INT64_MAX) throw ArithmeticOverflow{};
        return static_cast<T>(v);
    }
    static T sub_mul(T a, T q, T b) {  // a - q*b, checked
        return checked_sub(a, checked_mul(q, b));
    }
    static T add(T a, T b) { return checked_add(a, b); }
    static T neg(T a) {
        if (a == INT64_MIN) throw ArithmeticOverflow{};
        return -a;
    }
    static T quot(T a, T b) {  // truncated; a/-1 can overflow on INT64_MIN
        if (b == -1) return neg(a);
        return a / b;
    }
    static bool abs_less(T a, T b) {
        // |a| < |b| without overflow on INT64_MIN
        unsigned long long ua = a < 0 ? 0ull - static_cast<unsigned long long>(a)
                                      : static_cast<unsigned long long>(a);
        unsigned long long ub = b < 0 ? 0ull - static_cast<unsigned long long>(b)
                                      : static_cast<unsigned long long>(b);
        return ua < ub;
    }
    static bool is_unit(T a) { return a == 1 || a == -1; }
    static bool divides(T d, T a) { return a % d == 0; }
    static BigInt to_big(T a) { return BigInt(a); }
};

struct IBig {
    using T = BigInt;
    static T from(const BigInt& v) { return v; }
    static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
    static T add(const T& a, const T& b) { return a + b; }
    static T neg(const T& a) { return -a; }
    static T quot(const T& a, const T& b) { return a / b; }
    static bool abs_less(const T& a, const T& b) { return big_abs(a) < big_abs(b); }
    static bool is_unit(const T& a) { return a == 1 || a == -1; }
    static bool divides(const T& d, const T& a) { return a % d == 0; }
    static BigInt to_big(const T& a) { return a; }
};

template <typename Ops>
class SnfKernel {
    using T = typename Ops::T;

public:
    SnfKernel(const IntegerMatrix& m, bool transforms)
        : r_(m.rows()), c_(m.cols()), want_uv_(transforms), a_(r_ * c_) {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) a_[i * c_ + j] = Ops::from(m.at(i, j));
        if (want_uv_) {
            u_.assign(r_ * r_, T(0));
            v_.assign(c_ * c_, T(0));
            for (std::size_t i = 0; i < r_; ++i) u_[i * r_ + i] = T(1);
            for (std::size_t j = 0; j < c_; ++j) v_[j * c_ + j] = T(1);
        }
    }

    SmithForm run() {
        const std::size_t nmin = std::min(r_, c_);
        for (std::size_t s = 0; s < nmin; ++s)
            if (!reduce_step(s)) break;
        SmithForm f;
        f.diagonal.resize(nmin);
        for (std::size_t s = 0; s < nmin; ++s) {
            f.diagonal[s] = Ops::to_big(a_[s * c_ + s]);
            if (f.diagonal[s] != 0) ++f.rank;
        }
        if (want_uv_) {
            IntegerMatrix U(r_, r_), V(c_, c_);
            for (std::size_t i = 0; i < r_; ++i)
                for (std::size_t j = 0; j < r_; ++j) U.at(i, j) = Ops::to_big(u_[i * r_ + j]);
            for (std::size_t i = 0; i < c_; ++i)
                for (std::size_t j = 0; j < c_; ++j) V.at(i, j) = Ops::to_big(v_[i * c_ + j]);
            f.left = std::move(U);
            f.right = std::move(V);
        }
        return f;
    }

private:
    T& a(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        for (std::size_t i = s; i < r_; ++i) {
            const T* row = &a_[i * c_];
            for (std::size_t j = s; j < c_; ++j) {
                const T& x = row[j];
                if (x == T(0)) continue;
                if (Ops::is_unit(x)) {
                    pi = i;
                    pj = j;
                    return true;
                }
                if (!found || Ops::abs_less(x, a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        return found;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap(a_[i * c_ + j], a_[k * c_ + j]);
        if (want_uv_)
            for (std::size_t j = 0; j < r_; ++j) std::swap(u_[i * r_ + j], u_[k * r_ + j]);
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap(a_[i * c_ + j], a_[i * c_ + k]);
        if (want_uv_)
            for (std::size_t i = 0; i < c_; ++i) std::swap(v_[i * c_ + j], v_[i * c_ + k]);
    }

    // row_i -= q * row_s (on A and U)
    void row_op(std::size_t i, std::size_t s, const T& q, std::size_t from_col) {
        T* ri = &a_[i * c_];
        const T* rs = &a_[s * c_];
        for (std::size_t j = from_col; j < c_; ++j)
            if (rs[j] != T(0)) ri[j] = Ops::sub_mul(ri[j], q, rs[j]);
        if (want_uv_) {
            T* ui = &u_[i * r_];
            const T* us = &u_[s * r_];
            for (std::size_t j = 0; j < r_; ++j)
                if (us[j] != T(0)) ui[j] = Ops::sub_mul(ui[j], q, us[j]);
        }
    }

    // col_j -= q * col_s (on A and V)
    void col_op(std::size_t j, std::size_t s, const T& q, std::size_t from_row) {
        for (std::size_t i = from_row; i < r_; ++i)
            if (a_[i * c_ + s] != T(0))
                a_[i * c_ + j] = Ops::sub_mul(a_[i * c_ + j], q, a_[i * c_ + s]);
        if (want_uv_)
            for (std::size_t i = 0; i < c_; ++i)
                if (v_[i * c_ + s] != T(0))
                    v_[i * c_ + j] = Ops::sub_mul(v_[i * c_ + j], q, v_[i * c_ + s]);
    }

    // Brings position (s,s) to a pivot dividing the rest of the submatrix and
    // clears its row and column. Returns false when the submatrix is zero.
    bool reduce_step(std::size_t s) {
        while (true) {
            std::size_t pi, pj;
            if (!find_pivot(s, pi, pj)) return false;
            swap_rows(s, pi);
            swap_cols(s, pj);

            bool leftover = false;
            for (std::size_t i = s + 1; i < r_; ++i) {
                T& x = a(i, s);
                if (x == T(0)) continue;
                T q = Ops::quot(x, a(s, s));
                if (q != T(0)) row_op(i, s, q, s);
                if (a(i, s) != T(0)) leftover = true;  // remainder, smaller pivot exists
            }
            if (leftover) continue;
            for (std::size_t j = s + 1; j < c_; ++j) {
                T& x = a(s, j);
                if (x == T(0)) continue;
                T q = Ops::quot(x, a(s, s));
                if (q != T(0)) col_op(j, s, q, s);
                if (a(s, j) != T(0)) leftover = true;
            }
            if (leftover) continue;

            if (!Ops::is_unit(a(s, s))) {
                // the pivot must divide everything that remains
                bool fixed = true;
                for (std::size_t i = s + 1; i < r_ && fixed; ++i)
                    for (std::size_t j = s + 1; j < c_; ++j)
                        if (!Ops::divides(a(s, s), a(i, j))) {
                            row_op(s, i, Ops::neg(T(1)), s);  // row_s += row_i
                            fixed = false;
                            break;
                        }
                if (!fixed) continue;
            }
            break;
        }
        if (a(s, s) < T(0)) {
            for (std::size_t j = s; j < c_; ++j) a(s, j) = Ops::neg(a(s, j));
            if (want_uv_)
                for (std::size_t j = 0; j < r_; ++j) u_[s * r_ + j] = Ops::neg(u_[s * r_ + j]);
        }
        return true;
    }

    std::size_t r_, c_;
    bool want_uv_;
    std::vector<T> a_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a, const SnfOptions& opts) {
    if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("empty matrix");
    SmithForm f = [&] {
        try {
            return SnfKernel<I64>(a, opts.transforms).run();
        } catch (const ArithmeticOverflow&) {
            return SnfKernel<IBig>(a, opts.transforms).run();
        }
    }();
    assert(!opts.transforms || smith_form_is_valid(a, f));
    return f;
}

bool smith_form_is_valid(const IntegerMatrix& a, const SmithForm& f) {
    for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
        if (f.diagonal[i] < 0) return false;
        if (i + 1 < f.diagonal.size() && f.diagonal[i] == 0 && f.diagonal[i + 1] != 0)
            return false;
        if (i + 1 < f.diagonal.size() && f.diagonal[i] != 0 && f.diagonal[i + 1] != 0 &&
            f.diagonal[i + 1] % f.diagonal[i] != 0)
            return false;
    }
    if (!f.left || !f.right) return false;
    if (big_abs(determinant(*f.left)) != 1) return false;
    if (big_abs(determinant(*f.right)) != 1) return false;
    IntegerMatrix prod = (*f.left) * a * (*f.right);
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            BigInt expect = (i == j && i < f.diagonal.size()) ? f.diagonal[i] : BigInt(0);
            if (prod.at(i, j) != expect) return false;
        }
    return true;
}

}  // namespace singlab
