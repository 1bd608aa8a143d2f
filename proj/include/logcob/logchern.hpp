#pragma once

// Chern invariants of the log tangent bundle of an snc pair:
//   c(T^log) = c(T_X) * prod_i (1 + [D_i])^(-1)
// plus the tensor-by-line-bundle expansion, the threefold invariant
// nu = integral of c3(T^log tensor K^log) = integral of (c3 - c1 c2)(T^log),
// the c_lambda family, and the stratum sums alpha_{i,lambda,k}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "logcob/chow.hpp"
#include "logcob/error.hpp"
#include "logcob/varieties.hpp"

namespace logcob {

struct Partition {
    std::vector<std::uint32_t> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == 0)
                raise(errc::parse_error, "logchern", "partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                raise(errc::parse_error, "logchern", "partition parts must be weakly decreasing");
        }
    }

    std::uint32_t weight() const {
        return std::accumulate(parts.begin(), parts.end(), std::uint32_t(0));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }

    // "2,1" -> (2,1); empty string -> empty partition
    static Partition parse(const std::string& text) {
        std::vector<std::uint32_t> parts;
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) raise(errc::parse_error, "logchern", "bad partition '" + text + "'");
            parts.push_back(static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start))));
            if (i < text.size()) {
                if (text[i] != ',') raise(errc::parse_error, "logchern", "bad partition '" + text + "'");
                ++i;
                if (i == text.size()) raise(errc::parse_error, "logchern", "bad partition '" + text + "'");
            }
        }
        return Partition(std::move(parts));
    }

    // all partitions of n, descending lexicographic
    static std::vector<Partition> all_of(std::uint32_t n) {
        std::vector<Partition> out;
        std::vector<std::uint32_t> cur;
        auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
            if (remaining == 0) {
                out.push_back(Partition(cur));
                return;
            }
            for (std::uint32_t p = std::min(max_part, remaining); p >= 1; --p) {
                cur.push_back(p);
                self(self, remaining - p, p);
                cur.pop_back();
            }
        };
        rec(rec, n, n == 0 ? 1 : n);
        return out;
    }
};

// Inverse of a class with constant term 1, by the finite geometric series.
inline ChowClass inverse_unit(const ChowClass& u) {
    const auto& ring = u.ring();
    if (u.graded_part(0) != ChowClass::one(ring))
        raise(errc::bad_constant_term, "logchern", "inverse requires constant term 1");
    ChowClass w = ChowClass::one(ring) - u; // no constant term
    ChowClass acc = ChowClass::one(ring);
    ChowClass p = ChowClass::one(ring);
    for (std::uint32_t k = 1; k <= ring->dimension(); ++k) {
        p = p * w;
        if (p.is_zero()) break;
        acc = acc + p;
    }
    return acc;
}

struct LogChernData {
    ChowClass total;
    ChowClass component(std::uint32_t k) const { return total.graded_part(k); }
};

inline LogChernData log_tangent_chern(const SncPair& p) {
    ChowClass c = tangent_chern(p.ambient());
    for (const auto& comp : p.boundary())
        c = c * inverse_unit(ChowClass::one(p.ambient()->ring()) + comp.cls);
    return LogChernData{std::move(c)};
}

// c_k(E tensor L) for E of rank r with Chern classes chern[0..r] (chern[0] = 1)
// and L a line with c1 = l:  c_k = sum_i C(r-i, k-i) c_i l^(k-i).
inline std::vector<ChowClass> tensor_line_chern(const std::vector<ChowClass>& chern,
                                                std::uint32_t rank,
                                                const ChowClass& l) {
    const std::string mod = "logchern";
    if (chern.size() != static_cast<std::size_t>(rank) + 1)
        raise(errc::rank_mismatch, mod,
              "expected " + std::to_string(rank + 1) + " classes for rank " + std::to_string(rank));
    for (const auto& c : chern) require_same_ring(c.ring(), l.ring(), mod);
    const auto& ring = l.ring();
    std::vector<ChowClass> out;
    out.reserve(rank + 1);
    for (std::uint32_t k = 0; k <= rank; ++k) {
        ChowClass acc = ChowClass::zero(ring);
        for (std::uint32_t i = 0; i <= k; ++i) {
            Rational b(binomial(rank - i, k - i));
            if (b == 0) continue;
            acc = acc + b * (chern[i] * l.pow(k - i));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

inline Rational c_lambda(const SncPair& p, const Partition& lambda) {
    if (lambda.weight() != p.dim())
        raise(errc::weight_mismatch, "logchern",
              "partition " + lambda.to_string() + " has weight " + std::to_string(lambda.weight()) +
                  ", pair has dimension " + std::to_string(p.dim()));
    LogChernData data = log_tangent_chern(p);
    ChowClass prod = ChowClass::one(p.ambient()->ring());
    for (auto part : lambda.parts) prod = prod * data.component(part);
    return integrate(prod);
}

// Computed along two independent routes; they must agree identically.
inline Rational nu(const SncPair& p) {
    if (p.dim() != 3)
        raise(errc::wrong_dimension, "logchern",
              "nu is defined for threefold pairs, got dimension " + std::to_string(p.dim()));
    LogChernData data = log_tangent_chern(p);
    ChowClass c1 = data.component(1), c2 = data.component(2), c3 = data.component(3);
    Rational direct = integrate(c3 - c1 * c2);
    std::vector<ChowClass> twisted =
        tensor_line_chern({ChowClass::one(p.ambient()->ring()), c1, c2, c3}, 3, -c1);
    Rational via_twist = integrate(twisted[3]);
    if (direct != via_twist)
        raise(errc::inconsistent, "logchern",
              "tensor route " + to_string(via_twist) + " disagrees with closed form " + to_string(direct));
    return direct;
}

// Sum over the size-k boundary strata of the integral of [V]^(i+1) * c_lambda(T^log).
inline Rational alpha(const SncPair& p, std::uint32_t i, std::uint32_t k, const Partition& lambda) {
    const std::string mod = "logchern";
    if (i % 2 == 0 || i == 0)
        raise(errc::even_exponent, mod, "alpha requires odd positive i, got " + std::to_string(i));
    if (k == 0) raise(errc::degree_infeasible, mod, "alpha requires k >= 1");
    std::int64_t want = static_cast<std::int64_t>(p.dim()) - static_cast<std::int64_t>((i + 1) * k);
    if (want < 0 || lambda.weight() != static_cast<std::uint64_t>(want))
        raise(errc::degree_infeasible, mod,
              "need |lambda| = dim - (i+1)k = " + std::to_string(want) + ", got partition " +
                  lambda.to_string());
    LogChernData data = log_tangent_chern(p);
    ChowClass clam = ChowClass::one(p.ambient()->ring());
    for (auto part : lambda.parts) clam = clam * data.component(part);

    Rational total = 0;
    std::size_t m = p.boundary().size();
    if (k > m) return total; // no strata of that codimension
    std::vector<std::size_t> pick(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            ChowClass v = ChowClass::one(p.ambient()->ring());
            for (std::size_t t = 0; t < k; ++t) v = v * p.boundary()[pick[t]].cls;
            total += integrate(v.pow(i + 1) * clam);
            return;
        }
        for (std::size_t j = start; j + (k - depth) <= m; ++j) {
            pick[depth] = j;
            self(self, j + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

// A numerical invariant of pairs; the full set in a given dimension is the
// c_lambda family, the admissible alphas, and (for threefolds) nu.
struct Invariant {
    enum class Kind { c_lambda, alpha, nu };
    Kind kind = Kind::c_lambda;
    Partition lambda;
    std::uint32_t i = 0, k = 0;

    std::string name() const {
        switch (kind) {
            case Kind::c_lambda:
                return "c" + lambda.to_string();
            case Kind::alpha:
                return "alpha[i=" + std::to_string(i) + ",k=" + std::to_string(k) + ",l=" +
                       lambda.to_string() + "]";
            case Kind::nu:
                return "nu";
        }
        return "?";
    }

    Rational eval(const SncPair& p) const {
        switch (kind) {
            case Kind::c_lambda:
                return c_lambda(p, lambda);
            case Kind::alpha:
                return alpha(p, i, k, lambda);
            case Kind::nu:
                return nu(p);
        }
        raise(errc::parse_error, "logchern", "corrupt invariant");
    }

    static std::vector<Invariant> admissible_alphas(std::uint32_t dim) {
        std::vector<Invariant> out;
        for (std::uint32_t k = 1; 2 * k <= dim; ++k) {
            for (std::uint32_t i = 1; (i + 1) * k <= dim; i += 2) {
                std::uint32_t w = dim - (i + 1) * k;
                for (const auto& lam : Partition::all_of(w))
                    out.push_back(Invariant{Kind::alpha, lam, i, k});
            }
        }
        return out;
    }

    static std::vector<Invariant> full_set(std::uint32_t dim) {
        std::vector<Invariant> out;
        for (const auto& lam : Partition::all_of(dim))
            out.push_back(Invariant{Kind::c_lambda, lam, 0, 0});
        for (auto& a : admissible_alphas(dim)) out.push_back(a);
        if (dim == 3) out.push_back(Invariant{Kind::nu, Partition{}, 0, 0});
        return out;
    }
};

} // namespace logcob
