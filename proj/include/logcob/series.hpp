#pragma once

// Truncated power series over the rationals, the MacMahon generating
// function for plane partitions, and the degree-zero log DT series
//   Z(X, D) = M(-q)^nu(X, D)
// together with a brute-force plane-partition counter used as an
// independent check on the generating function.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "logcob/error.hpp"
#include "logcob/logchern.hpp"
#include "logcob/rational.hpp"
#include "logcob/varieties.hpp"

namespace logcob {

// Coefficients of q^0..q^order inclusive. Arithmetic truncates to the
// smaller order of the two operands.
struct RationalSeries {
    std::uint32_t order = 0;
    std::vector<Rational> coeffs; // size order + 1

    static RationalSeries zero(std::uint32_t order) {
        return RationalSeries{order, std::vector<Rational>(order + 1, 0)};
    }

    static RationalSeries constant(const Rational& c, std::uint32_t order) {
        auto s = zero(order);
        s.coeffs[0] = c;
        return s;
    }

    const Rational& operator[](std::uint32_t k) const { return coeffs.at(k); }

    RationalSeries truncated(std::uint32_t new_order) const {
        if (new_order >= order) return *this;
        return RationalSeries{new_order, {coeffs.begin(), coeffs.begin() + new_order + 1}};
    }

    bool operator==(const RationalSeries& o) const {
        return order == o.order && coeffs == o.coeffs;
    }
};

inline RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    std::uint32_t n = std::min(a.order, b.order);
    auto s = RationalSeries::zero(n);
    for (std::uint32_t k = 0; k <= n; ++k) s.coeffs[k] = a.coeffs[k] + b.coeffs[k];
    return s;
}

inline RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    std::uint32_t n = std::min(a.order, b.order);
    auto s = RationalSeries::zero(n);
    for (std::uint32_t k = 0; k <= n; ++k) s.coeffs[k] = a.coeffs[k] - b.coeffs[k];
    return s;
}

inline RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    std::uint32_t n = std::min(a.order, b.order);
    auto s = RationalSeries::zero(n);
    for (std::uint32_t i = 0; i <= n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; i + j <= n; ++j) s.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return s;
}

inline RationalSeries operator*(const Rational& c, const RationalSeries& a) {
    auto s = a;
    for (auto& x : s.coeffs) x *= c;
    return s;
}

inline RationalSeries exp_series(const RationalSeries& a) {
    if (a.coeffs.at(0) != 0)
        raise(errc::bad_constant_term, "series", "exp needs constant term 0");
    auto s = RationalSeries::constant(1, a.order);
    auto term = RationalSeries::constant(1, a.order);
    for (std::uint32_t k = 1; k <= a.order; ++k) {
        term = Rational(1, k) * (term * a);
        s = s + term;
    }
    return s;
}

inline RationalSeries log_series(const RationalSeries& a) {
    if (a.coeffs.at(0) != 1)
        raise(errc::bad_constant_term, "series", "log needs constant term 1");
    auto u = a - RationalSeries::constant(1, a.order); // a = 1 + u
    auto s = RationalSeries::zero(a.order);
    auto power = RationalSeries::constant(1, a.order);
    Rational sign = 1;
    for (std::uint32_t k = 1; k <= a.order; ++k) {
        power = power * u;
        s = s + (sign / k) * power;
        sign = -sign;
    }
    return s;
}

// f^r for rational r, defined as exp(r log f); needs constant term 1.
inline RationalSeries pow_rational(const RationalSeries& f, const Rational& r) {
    return exp_series(r * log_series(f));
}

// MacMahon's generating function prod_{n>=1} (1 - q^n)^{-n} for plane
// partitions, truncated at q^order.
inline RationalSeries macmahon(std::uint32_t order) {
    auto s = RationalSeries::constant(1, order);
    for (std::uint32_t n = 1; n <= order; ++n) {
        // multiply by (1 - q^n)^{-n}: n passes of the geometric accumulation
        // c[k] += c[k - n]
        for (std::uint32_t pass = 0; pass < n; ++pass)
            for (std::uint32_t k = n; k <= order; ++k) s.coeffs[k] += s.coeffs[k - n];
    }
    return s;
}

namespace detail {

// Ways to stack rows of total weight `remaining` strictly below `above`,
// every row weakly decreasing and dominated entrywise by the row above it.
inline std::uint64_t plane_partition_tail(const std::vector<std::uint32_t>& above,
                                          std::uint32_t remaining) {
    if (remaining == 0) return 1;
    std::uint64_t ways = 0;
    std::vector<std::uint32_t> row;
    auto dfs = [&](auto&& self, std::size_t col, std::uint32_t used) -> void {
        if (col > 0) ways += plane_partition_tail(row, remaining - used);
        if (col >= above.size() || used == remaining) return;
        std::uint32_t cap = std::min(above[col], remaining - used);
        if (col > 0) cap = std::min(cap, row[col - 1]);
        for (std::uint32_t v = cap; v >= 1; --v) {
            row.push_back(v);
            self(self, col + 1, used + v);
            row.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return ways;
}

} // namespace detail

// Number of plane partitions of n by direct enumeration over rows. Exact and
// deliberately simple; n is capped to keep it fast.
inline std::uint64_t plane_partition_count(std::uint32_t n) {
    if (n > 12)
        raise(errc::out_of_range, "series", "plane partition counter is capped at n = 12");
    if (n == 0) return 1;
    std::vector<std::uint32_t> unconstrained(n, n);
    return detail::plane_partition_tail(unconstrained, n);
}

// Whether Z is expanded in M(-q) (the default) or in M(q).
enum class SignConvention { minus_q, plus_q };

// Z(X, D) = M(-q)^{nu(X, D)} up to q^order. Only defined for threefold pairs,
// as nu is.
inline RationalSeries z_series(const SncPair& p, std::uint32_t order,
                               SignConvention sign = SignConvention::minus_q) {
    Rational exponent = nu(p);
    auto m = macmahon(order);
    if (sign == SignConvention::minus_q)
        for (std::uint32_t k = 1; k <= order; k += 2) m.coeffs[k] = -m.coeffs[k];
    return pow_rational(m, exponent);
}

} // namespace logcob
