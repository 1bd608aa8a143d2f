#pragma once

// Double-point calculus on snc pairs. Degenerating an ambient variety to the
// normal cone of a boundary component D_k produces the relation
//   (X, D - D_k) = (X, D) + (P(N + O), P(N)-section u preimages of the other
//                            components restricted to D_k)
// with N the normal bundle of D_k. FormalSum bookkeeping, the product of
// pairs, invariant-additivity checking, and decomposition over the five
// threefold generators live here too.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcob/chow.hpp"
#include "logcob/error.hpp"
#include "logcob/linalg.hpp"
#include "logcob/logchern.hpp"
#include "logcob/varieties.hpp"

namespace logcob {

class FormalSum {
public:
    struct Term {
        Rational coeff;
        SncPair pair;
    };

    FormalSum() = default;

    static FormalSum of(const SncPair& p, const Rational& c = 1) {
        FormalSum s;
        s.add(c, p);
        return s;
    }

    FormalSum& add(const Rational& c, const SncPair& p) {
        if (c == 0) return *this;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (pair_equal(it->pair, p)) {
                it->coeff += c;
                if (it->coeff == 0) terms_.erase(it);
                return *this;
            }
        }
        terms_.push_back(Term{c, p});
        return *this;
    }

    FormalSum& add(const FormalSum& o) {
        for (const auto& t : o.terms_) add(t.coeff, t.pair);
        return *this;
    }

    FormalSum scaled(const Rational& c) const {
        FormalSum s;
        if (c != 0)
            for (const auto& t : terms_) s.terms_.push_back(Term{t.coeff * c, t.pair});
        return s;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

private:
    std::vector<Term> terms_;
};

struct Provenance {
    enum class Kind { normal_cone, labeled };
    Kind kind = Kind::labeled;
    std::string detail;

    std::string to_string() const {
        return (kind == Kind::normal_cone ? "normal-cone:" : "labeled:") + detail;
    }
};

struct Relation {
    SncPair lhs;
    FormalSum rhs;
    Provenance provenance;
};

namespace detail {

inline std::string fresh_component_name(std::string want, const std::vector<DivisorComponent>& taken) {
    auto used = [&](const std::string& n) {
        for (const auto& c : taken)
            if (c.name == n) return true;
        return false;
    };
    if (!used(want)) return want;
    for (std::uint32_t k = 2;; ++k) {
        std::string n = want + std::to_string(k);
        if (!used(n)) return n;
    }
}

// The P(N + O) side of a normal-cone degeneration over `base`, with twist
// l = c1(N), the gluing section named `section_name`, and the remaining
// boundary pulled back from `base_comps` (classes on base's ring; components
// carrying their own descriptor data are lifted to bundles over it).
// A zero-dimensional base collapses to P^1 with the section a point.
inline SncPair bundle_side(const DescPtr& base,
                           const std::vector<DivisorComponent>& base_comps,
                           const ChowClass& l,
                           const std::string& section_name) {
    using VD = VarietyDescriptor;
    if (base->dim() == 0) {
        auto p1 = VD::proj(1);
        RestrictionMap r{p1->ring(), base->ring(), {ChowClass::zero(base->ring())}};
        DivisorComponent section{section_name, ChowClass::generator(p1->ring(), 0), base, std::move(r)};
        // every degree-1 class on a point is zero, so nothing pulls back
        return SncPair(p1, {std::move(section)});
    }

    auto bundle = VD::projbundle(base, l);
    std::vector<DivisorComponent> comps;
    comps.push_back(DivisorComponent{section_name, section_classes(bundle).sub, base,
                                     identity_base_restriction(bundle, base)});
    for (const auto& z : base_comps) {
        if (z.cls.is_zero()) continue; // empty intersection
        ChowClass lifted = lift_bundle_base(z.cls, bundle);
        DivisorComponent out{fresh_component_name(z.name, comps), std::move(lifted), nullptr, std::nullopt};
        if (z.has_restriction()) {
            // the preimage of z is the induced bundle over it
            const auto& rz = *z.restriction;
            ChowClass twist = rz.apply(l);
            if (z.self_desc->dim() == 0) {
                auto fiber = VD::proj(1);
                std::vector<ChowClass> images(base->ring()->generator_count() + 1,
                                              ChowClass::zero(fiber->ring()));
                images.back() = ChowClass::generator(fiber->ring(), 0);
                out.self_desc = fiber;
                out.restriction = RestrictionMap{bundle->ring(), fiber->ring(), std::move(images)};
            } else {
                auto sub = VD::projbundle(z.self_desc, twist);
                std::vector<ChowClass> images;
                images.reserve(base->ring()->generator_count() + 1);
                for (std::size_t i = 0; i < base->ring()->generator_count(); ++i)
                    images.push_back(lift_bundle_base(rz.images[i], sub));
                images.push_back(ChowClass::generator(sub->ring(), sub->fiber_generator_index()));
                out.self_desc = sub;
                out.restriction = RestrictionMap{bundle->ring(), sub->ring(), std::move(images)};
            }
        }
        comps.push_back(std::move(out));
    }
    return SncPair(bundle, std::move(comps));
}

} // namespace detail

inline Relation normal_cone_relation(const SncPair& p, const std::string& component_name) {
    const std::string mod = "cobordism";
    std::size_t idx = p.component_index(component_name);
    const DivisorComponent& comp = p.boundary()[idx];
    if (!comp.has_self())
        raise(errc::missing_self_descriptor, mod,
              "component '" + component_name + "' carries no descriptor of itself");
    if (!comp.has_restriction())
        raise(errc::missing_restriction, mod,
              "component '" + component_name + "' carries no restriction map");

    ChowClass l = comp.restriction->apply(comp.cls); // c1 of the normal bundle
    std::vector<DivisorComponent> traces;
    for (std::size_t j = 0; j < p.boundary().size(); ++j) {
        if (j == idx) continue;
        const auto& other = p.boundary()[j];
        traces.push_back(DivisorComponent{other.name, comp.restriction->apply(other.cls), nullptr,
                                          std::nullopt});
    }
    SncPair bundle = detail::bundle_side(comp.self_desc, traces, l, comp.name);

    FormalSum rhs;
    rhs.add(1, p);
    rhs.add(1, bundle);
    return Relation{p.without_component(idx), std::move(rhs),
                    Provenance{Provenance::Kind::normal_cone, component_name}};
}

// (P(L + O) over the ambient of `base_pair`, gluing section u pulled-back boundary).
inline SncPair bundle_pair(const SncPair& base_pair, const ChowClass& l) {
    require_same_ring(l.ring(), base_pair.ambient()->ring(), "cobordism");
    ChowClass lf = ChowClass::from_poly(base_pair.ambient()->ring(), l.terms());
    std::string name = detail::fresh_component_name("section", base_pair.boundary());
    return detail::bundle_side(base_pair.ambient(), base_pair.boundary(), lf, name);
}

struct RelationCheckRow {
    std::string invariant;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheckRow> rows;
    bool all_pass = true;
};

inline RelationReport check_relation(const Relation& r, const std::vector<Invariant>& invariants) {
    RelationReport rep;
    for (const auto& inv : invariants) {
        Rational lhs = inv.eval(r.lhs);
        Rational rhs = 0;
        for (const auto& t : r.rhs.terms()) rhs += t.coeff * inv.eval(t.pair);
        bool pass = lhs == rhs;
        rep.all_pass = rep.all_pass && pass;
        rep.rows.push_back(RelationCheckRow{inv.name(), std::move(lhs), std::move(rhs), pass});
    }
    return rep;
}

inline RelationReport check_relation(const Relation& r) {
    return check_relation(r, Invariant::full_set(r.lhs.dim()));
}

// (X,D) x (Y,E) = (X x Y, D x Y u X x E), boundary names prefixed l./r.
inline SncPair product_pair(const SncPair& a, const SncPair& b) {
    using VD = VarietyDescriptor;
    auto amb = VD::product(a.ambient(), b.ambient());
    std::size_t nl = a.ambient()->ring()->generator_count();
    std::size_t nr = b.ambient()->ring()->generator_count();
    std::vector<DivisorComponent> comps;

    auto extend = [&](const DivisorComponent& c, bool from_left) {
        DivisorComponent out;
        out.name = (from_left ? "l." : "r.") + c.name;
        out.cls = from_left ? lift_product_left(c.cls, amb) : lift_product_right(c.cls, amb);
        if (c.has_self()) {
            DescPtr self = from_left ? VD::product(c.self_desc, b.ambient())
                                     : VD::product(a.ambient(), c.self_desc);
            out.self_desc = self;
            if (c.has_restriction()) {
                const auto& r = *c.restriction;
                std::vector<ChowClass> images;
                images.reserve(nl + nr);
                if (from_left) {
                    for (std::size_t i = 0; i < nl; ++i)
                        images.push_back(lift_product_left(r.images[i], self));
                    for (std::size_t j = 0; j < nr; ++j)
                        images.push_back(lift_product_right(
                            ChowClass::generator(b.ambient()->ring(), j), self));
                } else {
                    for (std::size_t i = 0; i < nl; ++i)
                        images.push_back(lift_product_left(
                            ChowClass::generator(a.ambient()->ring(), i), self));
                    for (std::size_t j = 0; j < nr; ++j)
                        images.push_back(lift_product_right(r.images[j], self));
                }
                out.restriction = RestrictionMap{amb->ring(), self->ring(), std::move(images)};
            }
        }
        comps.push_back(std::move(out));
    };

    for (const auto& c : a.boundary()) extend(c, true);
    for (const auto& c : b.boundary()) extend(c, false);
    return SncPair(amb, std::move(comps));
}

inline const std::vector<std::string>& decompose3_generator_names() {
    static const std::vector<std::string> names{"p3", "p2xp1", "p1cubed", "p3_h", "f1xp1"};
    return names;
}

struct Decomposition {
    std::vector<std::string> generator_names;
    std::vector<std::string> invariant_names;
    Matrix matrix;                       // rows: invariants, columns: generators
    std::vector<Rational> target;        // invariant vector of the input pair
    std::vector<Rational> coefficients;  // canonical minimal-support solution
    std::size_t rank = 0;
    std::vector<Rational> residuals;     // matrix * coefficients - target
};

// Solves the extended invariant system over the five generators exactly. The
// system can be rank-deficient; among exact solutions the one with minimal
// support is returned, ties broken by subset order (size, then index order).
inline Decomposition decompose3(const SncPair& p) {
    const std::string mod = "cobordism";
    if (p.dim() != 3)
        raise(errc::wrong_dimension, mod,
              "decomposition over the threefold generators needs a threefold pair");

    const auto& names = decompose3_generator_names();
    std::vector<const SncPair*> gens;
    for (const auto& n : names) gens.push_back(&builtin_pair(n));
    std::vector<Invariant> invs = Invariant::full_set(3);

    Decomposition d;
    d.generator_names = names;
    for (const auto& inv : invs) d.invariant_names.push_back(inv.name());
    d.matrix.assign(invs.size(), std::vector<Rational>(gens.size(), 0));
    d.target.resize(invs.size());
    for (std::size_t r = 0; r < invs.size(); ++r) {
        for (std::size_t c = 0; c < gens.size(); ++c) d.matrix[r][c] = invs[r].eval(*gens[c]);
        d.target[r] = invs[r].eval(p);
    }
    d.rank = matrix_rank(d.matrix);

    std::size_t n = gens.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        auto try_subsets = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
            if (depth == size) {
                Matrix sub(invs.size(), std::vector<Rational>(size, 0));
                for (std::size_t r = 0; r < invs.size(); ++r)
                    for (std::size_t c = 0; c < size; ++c) sub[r][c] = d.matrix[r][pick[c]];
                auto x = solve_exact(sub, d.target);
                if (!x) return false;
                d.coefficients.assign(n, 0);
                for (std::size_t c = 0; c < size; ++c) d.coefficients[pick[c]] = (*x)[c];
                return true;
            }
            for (std::size_t j = start; j + (size - depth) <= n; ++j) {
                pick[depth] = j;
                if (self(self, j + 1, depth + 1)) return true;
            }
            return false;
        };
        if (try_subsets(try_subsets, 0, 0)) {
            d.residuals.assign(invs.size(), 0);
            for (std::size_t r = 0; r < invs.size(); ++r) {
                Rational acc = 0;
                for (std::size_t c = 0; c < n; ++c) acc += d.matrix[r][c] * d.coefficients[c];
                d.residuals[r] = acc - d.target[r];
            }
            return d;
        }
    }
    raise(errc::inconsistent, mod, "invariant vector is outside the span of the generators");
}

} // namespace logcob
