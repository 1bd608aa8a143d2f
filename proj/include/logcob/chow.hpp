#pragma once

// Graded quotient rings presented by one rewrite rule per degree-1 generator:
//   g_i^{e_i} = p_i   with p_i homogeneous of degree e_i and strictly smaller
// in the monomial order, plus the implicit rule that any monomial of degree
// above the ring dimension is zero. Rewriting therefore terminates; confluence
// of the finite rule set is checked once at construction by reducing all rule
// overlaps both ways.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcob/error.hpp"
#include "logcob/rational.hpp"

namespace logcob {

struct Monomial {
    std::vector<std::uint32_t> exps;

    static Monomial unit(std::size_t width) { return Monomial{std::vector<std::uint32_t>(width, 0)}; }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }
};

// Graded order; ties broken lexicographically with the last declared generator
// most significant, so a projective-bundle rule xi^2 = l*xi (xi declared after
// the base generators) rewrites toward smaller monomials.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.exps.size(); i-- > 0;) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        }
        return false;
    }
};

using Poly = std::map<Monomial, Rational, GradedLexLess>;

inline void poly_add_term(Poly& p, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

struct RewriteRule {
    std::uint32_t exponent = 0; // lhs is generator^exponent
    Poly rhs;
};

class ChowRing {
public:
    // rules[i] governs generator i; every generator carries exactly one rule.
    static std::shared_ptr<const ChowRing> make(std::vector<std::string> names,
                                                std::uint32_t dimension,
                                                std::vector<RewriteRule> rules,
                                                Monomial canonical_point) {
        auto ring = std::shared_ptr<ChowRing>(new ChowRing());
        ring->names_ = std::move(names);
        ring->dim_ = dimension;
        ring->rules_ = std::move(rules);
        ring->point_ = std::move(canonical_point);
        ring->validate();
        return ring;
    }

    std::size_t generator_count() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    std::uint32_t dimension() const { return dim_; }
    const Monomial& canonical_point() const { return point_; }
    const RewriteRule& rule(std::size_t i) const { return rules_[i]; }

    std::size_t generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        raise(errc::unknown_generator, "chowring", "no generator named '" + name + "'");
    }

    bool has_generator(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    // Full normal form: worklist, always popping the largest monomial. Every
    // replacement strictly decreases under the monomial order, so this stops.
    Poly reduce(Poly p) const {
        Poly out;
        while (!p.empty()) {
            auto it = std::prev(p.end());
            Monomial m = it->first;
            Rational c = it->second;
            p.erase(it);
            if (c == 0) continue;
            if (m.degree() > dim_) continue;
            std::optional<std::size_t> hit;
            for (std::size_t i = 0; i < rules_.size(); ++i) {
                if (rules_[i].exponent > 0 && m.exps[i] >= rules_[i].exponent) {
                    hit = i;
                    break;
                }
            }
            if (!hit) {
                poly_add_term(out, m, c);
                continue;
            }
            Monomial rest = m;
            rest.exps[*hit] -= rules_[*hit].exponent;
            for (const auto& [rm, rc] : rules_[*hit].rhs)
                poly_add_term(p, rm.times(rest), c * rc);
        }
        return out;
    }

    bool monomial_irreducible(const Monomial& m) const {
        if (m.degree() > dim_) return false;
        for (std::size_t i = 0; i < rules_.size(); ++i)
            if (m.exps[i] >= rules_[i].exponent) return false;
        return true;
    }

    std::vector<Monomial> irreducible_monomials(std::uint32_t degree) const {
        std::vector<Monomial> out;
        Monomial cur = Monomial::unit(names_.size());
        enumerate(0, degree, cur, out);
        return out;
    }

    bool operator==(const ChowRing& o) const {
        if (names_ != o.names_ || dim_ != o.dim_ || !(point_ == o.point_)) return false;
        if (rules_.size() != o.rules_.size()) return false;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (rules_[i].exponent != o.rules_[i].exponent) return false;
            if (rules_[i].rhs != o.rules_[i].rhs) return false;
        }
        return true;
    }
    bool operator!=(const ChowRing& o) const { return !(*this == o); }

private:
    ChowRing() = default;

    void enumerate(std::size_t i, std::uint32_t remaining, Monomial& cur, std::vector<Monomial>& out) const {
        if (i == names_.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        std::uint32_t cap = rules_[i].exponent == 0 ? 0 : rules_[i].exponent - 1;
        cap = std::min<std::uint32_t>(cap, remaining);
        for (std::uint32_t e = 0; e <= cap; ++e) {
            cur.exps[i] = e;
            enumerate(i + 1, remaining - e, cur, out);
        }
        cur.exps[i] = 0;
    }

    void validate() const {
        const std::string mod = "chowring";
        if (rules_.size() != names_.size())
            raise(errc::degree_mismatch, mod, "expected exactly one rewrite rule per generator");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    raise(errc::parse_error, mod, "duplicate generator name '" + names_[i] + "'");
        }
        GradedLexLess less;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const auto& r = rules_[i];
            if (r.exponent == 0)
                raise(errc::degree_mismatch, mod, "rule for '" + names_[i] + "' has zero exponent");
            Monomial lhs = Monomial::unit(names_.size());
            lhs.exps[i] = r.exponent;
            for (const auto& [m, c] : r.rhs) {
                if (m.exps.size() != names_.size())
                    raise(errc::degree_mismatch, mod, "rule rhs monomial has wrong width");
                if (c == 0) continue;
                if (m.degree() != r.exponent)
                    raise(errc::degree_mismatch, mod,
                          "rule for '" + names_[i] + "' has rhs of degree " + std::to_string(m.degree()) +
                              ", expected " + std::to_string(r.exponent));
                if (!less(m, lhs))
                    raise(errc::non_confluent, mod,
                          "rule for '" + names_[i] + "' rewrites toward a non-smaller monomial");
            }
        }
        // Overlap of rule i and rule j on g_i^{e_i} g_j^{e_j}: the two one-step
        // reducts must share a normal form.
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = i + 1; j < rules_.size(); ++j) {
                Monomial gi = Monomial::unit(names_.size());
                gi.exps[i] = rules_[i].exponent;
                Monomial gj = Monomial::unit(names_.size());
                gj.exps[j] = rules_[j].exponent;
                Poly via_i, via_j;
                for (const auto& [m, c] : rules_[i].rhs) poly_add_term(via_i, m.times(gj), c);
                for (const auto& [m, c] : rules_[j].rhs) poly_add_term(via_j, m.times(gi), c);
                if (reduce(via_i) != reduce(via_j))
                    raise(errc::non_confluent, mod,
                          "rules for '" + names_[i] + "' and '" + names_[j] + "' reduce an overlap differently");
            }
        }
        if (point_.exps.size() != names_.size())
            raise(errc::bad_point_class, mod, "canonical point has wrong width");
        if (point_.degree() != dim_)
            raise(errc::bad_point_class, mod,
                  "canonical point has degree " + std::to_string(point_.degree()) + ", expected " +
                      std::to_string(dim_));
        if (!monomial_irreducible(point_))
            raise(errc::bad_point_class, mod, "canonical point is reducible");
    }

    std::vector<std::string> names_;
    std::uint32_t dim_ = 0;
    std::vector<RewriteRule> rules_;
    Monomial point_;
};

using RingPtr = std::shared_ptr<const ChowRing>;

inline void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view module) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    raise(errc::ring_mismatch, module, "operands live in different rings");
}

// A ring element kept in normal form at all times.
class ChowClass {
public:
    ChowClass() = default;

    static ChowClass zero(RingPtr ring) { return ChowClass(std::move(ring), Poly{}); }

    static ChowClass constant(RingPtr ring, const Rational& c) {
        Poly p;
        poly_add_term(p, Monomial::unit(ring->generator_count()), c);
        return ChowClass(std::move(ring), std::move(p));
    }

    static ChowClass one(RingPtr ring) { return constant(std::move(ring), 1); }

    static ChowClass generator(RingPtr ring, std::size_t index) {
        Monomial m = Monomial::unit(ring->generator_count());
        m.exps[index] = 1;
        Poly p;
        poly_add_term(p, m, 1);
        return from_poly(std::move(ring), std::move(p));
    }

    static ChowClass generator(const RingPtr& ring, const std::string& name) {
        return generator(ring, ring->generator_index(name));
    }

    static ChowClass from_poly(RingPtr ring, Poly p) {
        Poly reduced = ring->reduce(std::move(p));
        return ChowClass(std::move(ring), std::move(reduced));
    }

    const RingPtr& ring() const { return ring_; }
    const Poly& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous(std::uint32_t d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    ChowClass graded_part(std::uint32_t d) const {
        Poly p;
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) p.emplace(m, c);
        return ChowClass(ring_, std::move(p));
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    ChowClass operator+(const ChowClass& o) const {
        require_same_ring(ring_, o.ring_, "chowring");
        Poly p = terms_;
        for (const auto& [m, c] : o.terms_) poly_add_term(p, m, c);
        return ChowClass(ring_, std::move(p));
    }

    ChowClass operator-(const ChowClass& o) const {
        require_same_ring(ring_, o.ring_, "chowring");
        Poly p = terms_;
        for (const auto& [m, c] : o.terms_) poly_add_term(p, m, -c);
        return ChowClass(ring_, std::move(p));
    }

    ChowClass operator-() const {
        Poly p;
        for (const auto& [m, c] : terms_) p.emplace(m, -c);
        return ChowClass(ring_, std::move(p));
    }

    ChowClass operator*(const ChowClass& o) const {
        require_same_ring(ring_, o.ring_, "chowring");
        Poly p;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) poly_add_term(p, ma.times(mb), ca * cb);
        return from_poly(ring_, std::move(p));
    }

    ChowClass scaled(const Rational& c) const {
        Poly p;
        if (c != 0)
            for (const auto& [m, q] : terms_) p.emplace(m, q * c);
        return ChowClass(ring_, std::move(p));
    }

    ChowClass pow(std::uint32_t e) const {
        ChowClass acc = one(ring_);
        for (std::uint32_t i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const ChowClass& o) const {
        if (!ring_ || !o.ring_) return terms_ == o.terms_ && ring_ == o.ring_;
        if (ring_ != o.ring_ && *ring_ != *o.ring_) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

private:
    ChowClass(RingPtr ring, Poly terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    Poly terms_; // invariant: equal to ring_->reduce(terms_)
};

inline ChowClass operator*(const Rational& c, const ChowClass& x) { return x.scaled(c); }

// Degree-n coefficient of the canonical point class.
inline Rational integrate(const ChowClass& c) {
    return c.coefficient(c.ring()->canonical_point());
}

// --- polynomial string parsing / printing ------------------------------------

namespace detail {

struct ClassLexer {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') ++pos;
        if (pos == start) raise(errc::parse_error, "chowring", "expected integer in class expression");
        return std::string(src.substr(start, pos - start));
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        auto body = [&](char c) {
            return head(c) || (c >= '0' && c <= '9') || c == '.';
        };
        if (pos < src.size() && head(src[pos])) {
            ++pos;
            while (pos < src.size() && body(src[pos])) ++pos;
        }
        if (pos == start) raise(errc::parse_error, "chowring", "expected name in class expression");
        return std::string(src.substr(start, pos - start));
    }
};

class ClassParser {
public:
    ClassParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), lex_{text} {}

    ChowClass parse() {
        ChowClass v = expr();
        if (!lex_.eof())
            raise(errc::parse_error, "chowring",
                  "trailing input in class expression at offset " + std::to_string(lex_.pos));
        return v;
    }

private:
    ChowClass expr() {
        bool neg = false;
        if (lex_.accept('-'))
            neg = true;
        else
            lex_.accept('+');
        ChowClass v = term();
        if (neg) v = -v;
        for (;;) {
            if (lex_.accept('+'))
                v = v + term();
            else if (lex_.accept('-'))
                v = v - term();
            else
                break;
        }
        return v;
    }

    ChowClass term() {
        ChowClass v = factor();
        while (lex_.accept('*')) v = v * factor();
        return v;
    }

    ChowClass factor() {
        ChowClass v = primary();
        if (lex_.accept('^')) {
            std::string e = lex_.integer();
            unsigned long ev = std::stoul(e);
            if (ev > 64) raise(errc::parse_error, "chowring", "exponent too large: " + e);
            v = v.pow(static_cast<std::uint32_t>(ev));
        }
        return v;
    }

    ChowClass primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.accept('(');
            ChowClass v = expr();
            if (!lex_.accept(')')) raise(errc::parse_error, "chowring", "missing ')' in class expression");
            return v;
        }
        if (c >= '0' && c <= '9') {
            std::string num = lex_.integer();
            if (lex_.accept('/')) {
                std::string den = lex_.integer();
                return ChowClass::constant(ring_, rational_from_string(num + "/" + den));
            }
            return ChowClass::constant(ring_, rational_from_string(num));
        }
        std::string n = lex_.name();
        return ChowClass::generator(ring_, n);
    }

    RingPtr ring_;
    ClassLexer lex_;
};

} // namespace detail

inline ChowClass parse_class(const RingPtr& ring, std::string_view text) {
    return detail::ClassParser(ring, text).parse();
}

inline std::string format_monomial(const ChowRing& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.generator_names()[i];
        if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

inline std::string format_class(const ChowClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    // largest monomial first
    const auto& terms = c.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rational& q = it->second;
        bool neg = q < 0;
        Rational aq = neg ? Rational(-q) : q;
        std::string mono = format_monomial(*c.ring(), it->first);
        std::string body;
        if (mono.empty())
            body = to_string(aq);
        else if (aq == 1)
            body = mono;
        else
            body = to_string(aq) + "*" + mono;
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace logcob
