#pragma once

// Smith normal form of integer matrices by unimodular row/column operations.
// Pivots are chosen as the nonzero entry of smallest absolute value, which
// keeps intermediate growth tame; arithmetic is exact throughout (checked
// int64 fast path, unbounded integers as fallback).

#include <optional>
#include <vector>

#include "singlab/matrix.hpp"

namespace singlab {

struct SmithForm {
    // d_1 | d_2 | ... | d_r followed by zeros; all entries >= 0.
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;  // rank over Q = number of nonzero entries
    // Unimodular U (rows x rows) and V (cols x cols) with U * A * V = D,
    // present when requested.
    std::optional<IntegerMatrix> left, right;

    std::size_t free_rank() const { return diagonal.size() - rank; }
    std::vector<BigInt> torsion() const;  // entries > 1
};

struct SnfOptions {
    bool transforms = true;
};

SmithForm smith_normal_form(const IntegerMatrix& a, const SnfOptions& opts = {});

// Recomputes U*A*V and compares against the diagonal; also checks
// |det U| = |det V| = 1 and the divisibility chain. For test harnesses.
bool smith_form_is_valid(const IntegerMatrix& a, const SmithForm& f);

}  // namespace singlab
