#pragma once

// Ambient varieties are built from three constructors — projective space,
// product, and P(O + L) for a line bundle L on the base — and each descriptor
// eagerly carries its intersection ring. Boundary divisors are recorded by
// class, optionally with a descriptor of the component itself and the
// restriction map from ambient degree-1 classes.
//
// Conventions for P(O + L) with l = c1(L): xi = c1(O(1)), relation
// xi^2 = l*xi; the section P(L) has class xi - l and normal bundle dual to L;
// the section P(O) has class xi and normal bundle L.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "logcob/chow.hpp"
#include "logcob/error.hpp"

namespace logcob {

class VarietyDescriptor;
using DescPtr = std::shared_ptr<const VarietyDescriptor>;

class VarietyDescriptor {
public:
    enum class Kind { proj, product, projbundle };

    static DescPtr proj(std::uint32_t n) {
        auto d = std::shared_ptr<VarietyDescriptor>(new VarietyDescriptor());
        d->kind_ = Kind::proj;
        d->proj_n_ = n;
        d->dim_ = n;
        Poly zero;
        d->ring_ = ChowRing::make({"H"}, n, {RewriteRule{n + 1, zero}}, point_monomial_proj(n));
        return d;
    }

    static DescPtr product(DescPtr left, DescPtr right) {
        auto d = std::shared_ptr<VarietyDescriptor>(new VarietyDescriptor());
        d->kind_ = Kind::product;
        d->left_ = std::move(left);
        d->right_ = std::move(right);
        d->dim_ = d->left_->dim() + d->right_->dim();
        const auto& lr = *d->left_->ring();
        const auto& rr = *d->right_->ring();
        std::size_t nl = lr.generator_count(), nr = rr.generator_count();
        std::vector<std::string> names;
        names.reserve(nl + nr);
        for (const auto& n : lr.generator_names()) names.push_back("l." + n);
        for (const auto& n : rr.generator_names()) names.push_back("r." + n);
        std::vector<RewriteRule> rules;
        rules.reserve(nl + nr);
        for (std::size_t i = 0; i < nl; ++i)
            rules.push_back(RewriteRule{lr.rule(i).exponent, reindex(lr.rule(i).rhs, nl + nr, 0)});
        for (std::size_t i = 0; i < nr; ++i)
            rules.push_back(RewriteRule{rr.rule(i).exponent, reindex(rr.rule(i).rhs, nl + nr, nl)});
        Monomial pt = Monomial::unit(nl + nr);
        for (std::size_t i = 0; i < nl; ++i) pt.exps[i] = lr.canonical_point().exps[i];
        for (std::size_t i = 0; i < nr; ++i) pt.exps[nl + i] = rr.canonical_point().exps[i];
        d->ring_ = ChowRing::make(std::move(names), d->dim_, std::move(rules), std::move(pt));
        return d;
    }

    // twist = c1(L), a degree-1 class (or zero) on base's ring.
    static DescPtr projbundle(DescPtr base, const ChowClass& twist) {
        auto d = std::shared_ptr<VarietyDescriptor>(new VarietyDescriptor());
        d->kind_ = Kind::projbundle;
        d->base_ = std::move(base);
        const auto& br = *d->base_->ring();
        require_same_ring(twist.ring(), d->base_->ring(), "varieties");
        ChowClass tw = ChowClass::from_poly(d->base_->ring(), twist.terms());
        if (!tw.is_homogeneous(1))
            raise(errc::degree_mismatch, "varieties", "bundle twist must be a degree-1 class");
        d->twist_ = tw;
        d->dim_ = d->base_->dim() + 1;
        std::size_t nb = br.generator_count();
        std::vector<std::string> names = br.generator_names();
        names.push_back(fresh_fiber_name(names));
        std::vector<RewriteRule> rules;
        rules.reserve(nb + 1);
        for (std::size_t i = 0; i < nb; ++i)
            rules.push_back(RewriteRule{br.rule(i).exponent, reindex(br.rule(i).rhs, nb + 1, 0)});
        // xi^2 = l*xi
        Poly link;
        for (const auto& [m, c] : tw.terms()) {
            Monomial mm = Monomial::unit(nb + 1);
            for (std::size_t i = 0; i < nb; ++i) mm.exps[i] = m.exps[i];
            mm.exps[nb] = 1;
            poly_add_term(link, mm, c);
        }
        rules.push_back(RewriteRule{2, std::move(link)});
        Monomial pt = Monomial::unit(nb + 1);
        for (std::size_t i = 0; i < nb; ++i) pt.exps[i] = br.canonical_point().exps[i];
        pt.exps[nb] = 1;
        d->ring_ = ChowRing::make(std::move(names), d->dim_, std::move(rules), std::move(pt));
        return d;
    }

    Kind kind() const { return kind_; }
    std::uint32_t dim() const { return dim_; }
    const RingPtr& ring() const { return ring_; }
    std::uint32_t proj_n() const { return proj_n_; }
    const DescPtr& left() const { return left_; }
    const DescPtr& right() const { return right_; }
    const DescPtr& base() const { return base_; }
    const ChowClass& twist() const { return twist_; }
    std::size_t fiber_generator_index() const { return ring_->generator_count() - 1; }

private:
    VarietyDescriptor() = default;

    static Monomial point_monomial_proj(std::uint32_t n) {
        Monomial m = Monomial::unit(1);
        m.exps[0] = n;
        return m;
    }

    static Poly reindex(const Poly& p, std::size_t width, std::size_t offset) {
        Poly out;
        for (const auto& [m, c] : p) {
            Monomial mm = Monomial::unit(width);
            for (std::size_t i = 0; i < m.exps.size(); ++i) mm.exps[offset + i] = m.exps[i];
            out.emplace(std::move(mm), c);
        }
        return out;
    }

    static std::string fresh_fiber_name(const std::vector<std::string>& names) {
        auto used = [&](const std::string& n) {
            for (const auto& x : names)
                if (x == n) return true;
            return false;
        };
        if (!used("xi")) return "xi";
        for (std::uint32_t k = 2;; ++k) {
            std::string n = "xi" + std::to_string(k);
            if (!used(n)) return n;
        }
    }

    Kind kind_ = Kind::proj;
    std::uint32_t proj_n_ = 0;
    DescPtr left_, right_, base_;
    ChowClass twist_;
    RingPtr ring_;
    std::uint32_t dim_ = 0;
};

inline bool descriptor_equal(const DescPtr& a, const DescPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case VarietyDescriptor::Kind::proj:
            return a->proj_n() == b->proj_n();
        case VarietyDescriptor::Kind::product:
            return descriptor_equal(a->left(), b->left()) && descriptor_equal(a->right(), b->right());
        case VarietyDescriptor::Kind::projbundle:
            return descriptor_equal(a->base(), b->base()) && a->twist().terms() == b->twist().terms();
    }
    return false;
}

inline RingPtr build_chow(const DescPtr& d) { return d->ring(); }

// --- lifts along the structure maps ------------------------------------------

namespace detail {

inline ChowClass lift_terms(const ChowClass& c, const RingPtr& target, std::size_t offset) {
    std::size_t width = target->generator_count();
    Poly out;
    for (const auto& [m, q] : c.terms()) {
        Monomial mm = Monomial::unit(width);
        for (std::size_t i = 0; i < m.exps.size(); ++i) mm.exps[offset + i] = m.exps[i];
        poly_add_term(out, std::move(mm), q);
    }
    return ChowClass::from_poly(target, std::move(out));
}

} // namespace detail

inline ChowClass lift_product_left(const ChowClass& c, const DescPtr& prod) {
    require_same_ring(c.ring(), prod->left()->ring(), "varieties");
    return detail::lift_terms(c, prod->ring(), 0);
}

inline ChowClass lift_product_right(const ChowClass& c, const DescPtr& prod) {
    require_same_ring(c.ring(), prod->right()->ring(), "varieties");
    return detail::lift_terms(c, prod->ring(), prod->left()->ring()->generator_count());
}

inline ChowClass lift_bundle_base(const ChowClass& c, const DescPtr& bundle) {
    require_same_ring(c.ring(), bundle->base()->ring(), "varieties");
    return detail::lift_terms(c, bundle->ring(), 0);
}

// --- tangent classes and sections ---------------------------------------------

inline ChowClass tangent_chern(const DescPtr& d) {
    switch (d->kind()) {
        case VarietyDescriptor::Kind::proj: {
            ChowClass H = ChowClass::generator(d->ring(), 0);
            return (ChowClass::one(d->ring()) + H).pow(d->proj_n() + 1);
        }
        case VarietyDescriptor::Kind::product:
            return lift_product_left(tangent_chern(d->left()), d) *
                   lift_product_right(tangent_chern(d->right()), d);
        case VarietyDescriptor::Kind::projbundle: {
            ChowClass xi = ChowClass::generator(d->ring(), d->fiber_generator_index());
            ChowClass rel = ChowClass::one(d->ring()) + Rational(2) * xi - lift_bundle_base(d->twist(), d);
            return lift_bundle_base(tangent_chern(d->base()), d) * rel;
        }
    }
    raise(errc::parse_error, "varieties", "corrupt descriptor");
}

struct SectionClasses {
    ChowClass sub;  // P(L): xi - l, normal bundle dual to L
    ChowClass triv; // P(O): xi, normal bundle L
};

inline SectionClasses section_classes(const DescPtr& d) {
    if (d->kind() != VarietyDescriptor::Kind::projbundle)
        raise(errc::not_a_bundle, "varieties", "section classes exist only on projective bundles");
    ChowClass xi = ChowClass::generator(d->ring(), d->fiber_generator_index());
    return SectionClasses{xi - lift_bundle_base(d->twist(), d), xi};
}

// --- snc pairs -----------------------------------------------------------------

// Ring map determined by images of the ambient generators.
struct RestrictionMap {
    RingPtr domain;
    RingPtr target;
    std::vector<ChowClass> images; // one per domain generator, classes on target

    ChowClass apply(const ChowClass& c) const {
        require_same_ring(c.ring(), domain, "varieties");
        ChowClass out = ChowClass::zero(target);
        for (const auto& [m, q] : c.terms()) {
            ChowClass term = ChowClass::constant(target, q);
            for (std::size_t i = 0; i < m.exps.size(); ++i)
                if (m.exps[i] > 0) term = term * images[i].pow(m.exps[i]);
            out = out + term;
        }
        return out;
    }

    bool operator==(const RestrictionMap& o) const {
        if (images.size() != o.images.size()) return false;
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i].terms() != o.images[i].terms()) return false;
        return true;
    }
};

struct DivisorComponent {
    std::string name;
    ChowClass cls;                           // degree-1 class on the ambient ring
    DescPtr self_desc;                       // optional descriptor of the component
    std::optional<RestrictionMap> restriction; // requires self_desc

    bool has_self() const { return self_desc != nullptr; }
    bool has_restriction() const { return restriction.has_value(); }
};

inline bool component_equal(const DivisorComponent& a, const DivisorComponent& b) {
    if (a.name != b.name || a.cls.terms() != b.cls.terms()) return false;
    if (a.has_self() != b.has_self()) return false;
    if (a.has_self() && !descriptor_equal(a.self_desc, b.self_desc)) return false;
    if (a.has_restriction() != b.has_restriction()) return false;
    if (a.has_restriction() && !(*a.restriction == *b.restriction)) return false;
    return true;
}

class SncPair {
public:
    SncPair(DescPtr ambient, std::vector<DivisorComponent> boundary)
        : ambient_(std::move(ambient)), boundary_(std::move(boundary)) {
        const std::string mod = "varieties";
        for (std::size_t i = 0; i < boundary_.size(); ++i) {
            auto& c = boundary_[i];
            if (c.name.empty()) raise(errc::parse_error, mod, "boundary component with empty name");
            for (std::size_t j = i + 1; j < boundary_.size(); ++j)
                if (boundary_[j].name == c.name)
                    raise(errc::parse_error, mod, "duplicate boundary component name '" + c.name + "'");
            require_same_ring(c.cls.ring(), ambient_->ring(), mod);
            c.cls = ChowClass::from_poly(ambient_->ring(), c.cls.terms());
            if (!c.cls.is_homogeneous(1))
                raise(errc::degree_mismatch, mod,
                      "boundary component '" + c.name + "' is not a degree-1 class");
            if (c.has_restriction()) {
                if (!c.has_self())
                    raise(errc::missing_self_descriptor, mod,
                          "component '" + c.name + "' has a restriction map but no self descriptor");
                auto& r = *c.restriction;
                require_same_ring(r.domain, ambient_->ring(), mod);
                require_same_ring(r.target, c.self_desc->ring(), mod);
                if (r.images.size() != ambient_->ring()->generator_count())
                    raise(errc::degree_mismatch, mod,
                          "restriction of '" + c.name + "' must map every ambient generator");
            }
        }
    }

    const DescPtr& ambient() const { return ambient_; }
    const std::vector<DivisorComponent>& boundary() const { return boundary_; }
    std::uint32_t dim() const { return ambient_->dim(); }

    std::size_t component_index(const std::string& name) const {
        for (std::size_t i = 0; i < boundary_.size(); ++i)
            if (boundary_[i].name == name) return i;
        raise(errc::unknown_component, "varieties", "no boundary component named '" + name + "'");
    }

    SncPair without_component(std::size_t idx) const {
        std::vector<DivisorComponent> b;
        for (std::size_t i = 0; i < boundary_.size(); ++i)
            if (i != idx) b.push_back(boundary_[i]);
        return SncPair(ambient_, std::move(b));
    }

private:
    DescPtr ambient_;
    std::vector<DivisorComponent> boundary_;
};

inline bool pair_equal(const SncPair& a, const SncPair& b) {
    if (!descriptor_equal(a.ambient(), b.ambient())) return false;
    if (a.boundary().size() != b.boundary().size()) return false;
    for (std::size_t i = 0; i < a.boundary().size(); ++i)
        if (!component_equal(a.boundary()[i], b.boundary()[i])) return false;
    return true;
}

struct CheckResult {
    std::string component;
    std::string check;
    bool pass = false;
    std::string detail;
};

// Consistency checks on the recorded restriction data:
//   degree: every generator image is zero or homogeneous of degree 1;
//   rules: the map respects every ambient rewrite rule;
//   pushforward: integral of r(b) over the component equals the ambient
//   integral of b*[D] for every irreducible monomial b of degree dim-1.
inline std::vector<CheckResult> validate_pair(const SncPair& p) {
    std::vector<CheckResult> out;
    const auto& ring = p.ambient()->ring();
    for (const auto& comp : p.boundary()) {
        if (!comp.has_restriction()) continue;
        const auto& r = *comp.restriction;

        bool deg_ok = true;
        std::string deg_detail;
        for (std::size_t i = 0; i < r.images.size(); ++i) {
            if (!r.images[i].is_homogeneous(1)) {
                deg_ok = false;
                deg_detail = "image of " + ring->generator_names()[i] + " is not degree 1";
                break;
            }
        }
        out.push_back({comp.name, "degree", deg_ok, deg_detail});

        bool rules_ok = true;
        std::string rules_detail;
        for (std::size_t i = 0; i < ring->generator_count() && rules_ok; ++i) {
            const auto& rule = ring->rule(i);
            ChowClass lhs = r.images[i].pow(rule.exponent);
            ChowClass rhs = r.apply(ChowClass::from_poly(ring, rule.rhs));
            if (lhs != rhs) {
                rules_ok = false;
                rules_detail = "rule for " + ring->generator_names()[i] + " not respected";
            }
        }
        out.push_back({comp.name, "rules", rules_ok, rules_detail});

        bool push_ok = true;
        std::string push_detail;
        if (p.dim() >= 1) {
            for (const auto& m : ring->irreducible_monomials(p.dim() - 1)) {
                Poly mono;
                poly_add_term(mono, m, 1);
                ChowClass beta = ChowClass::from_poly(ring, std::move(mono));
                Rational lhs = integrate(r.apply(beta));
                Rational rhs = integrate(beta * comp.cls);
                if (lhs != rhs) {
                    push_ok = false;
                    push_detail = "monomial " + format_monomial(*ring, m) + ": " + to_string(lhs) +
                                  " vs " + to_string(rhs);
                    break;
                }
            }
        }
        out.push_back({comp.name, "pushforward", push_ok, push_detail});
    }
    return out;
}

// --- builtin pairs ---------------------------------------------------------------

namespace detail {

inline RestrictionMap identity_base_restriction(const DescPtr& bundle, const DescPtr& base) {
    // Restriction to the P(L) section: base generators map to themselves, xi to 0.
    std::vector<ChowClass> images;
    for (std::size_t i = 0; i < base->ring()->generator_count(); ++i)
        images.push_back(ChowClass::generator(base->ring(), i));
    images.push_back(ChowClass::zero(base->ring()));
    return RestrictionMap{bundle->ring(), base->ring(), std::move(images)};
}

} // namespace detail

inline const std::map<std::string, SncPair>& builtin_pairs() {
    static const std::map<std::string, SncPair> table = [] {
        std::map<std::string, SncPair> t;
        using VD = VarietyDescriptor;

        auto p3 = VD::proj(3);
        t.emplace("p3", SncPair(p3, {}));

        t.emplace("p2xp1", SncPair(VD::product(VD::proj(2), VD::proj(1)), {}));

        t.emplace("p1cubed",
                  SncPair(VD::product(VD::proj(1), VD::product(VD::proj(1), VD::proj(1))), {}));

        {
            auto p2 = VD::proj(2);
            RestrictionMap r{p3->ring(), p2->ring(), {ChowClass::generator(p2->ring(), 0)}};
            DivisorComponent comp{"H", ChowClass::generator(p3->ring(), 0), p2, std::move(r)};
            t.emplace("p3_h", SncPair(p3, {std::move(comp)}));
        }

        {
            auto p2 = VD::proj(2);
            auto bundle = VD::projbundle(p2, ChowClass::generator(p2->ring(), 0));
            DivisorComponent comp{"section", section_classes(bundle).sub, p2,
                                  detail::identity_base_restriction(bundle, p2)};
            t.emplace("op2_1", SncPair(bundle, {std::move(comp)}));
        }

        {
            auto p1 = VD::proj(1);
            auto f1 = VD::projbundle(p1, ChowClass::generator(p1->ring(), 0));
            auto amb = VD::product(f1, VD::proj(1));
            auto self = VD::product(VD::proj(1), VD::proj(1));
            // l.H -> l.H, l.xi -> 0, r.H -> r.H
            std::vector<ChowClass> images{ChowClass::generator(self->ring(), 0),
                                          ChowClass::zero(self->ring()),
                                          ChowClass::generator(self->ring(), 1)};
            RestrictionMap r{amb->ring(), self->ring(), std::move(images)};
            ChowClass cls = ChowClass::generator(amb->ring(), 1) - ChowClass::generator(amb->ring(), 0);
            DivisorComponent comp{"section", std::move(cls), self, std::move(r)};
            t.emplace("f1xp1", SncPair(amb, {std::move(comp)}));
        }

        {
            auto p1 = VD::proj(1);
            auto pt = VD::proj(0);
            RestrictionMap r{p1->ring(), pt->ring(), {ChowClass::zero(pt->ring())}};
            DivisorComponent comp{"pt", ChowClass::generator(p1->ring(), 0), pt, std::move(r)};
            t.emplace("p1_pt", SncPair(p1, {std::move(comp)}));
        }

        return t;
    }();
    return table;
}

inline const SncPair& builtin_pair(const std::string& name) {
    const auto& t = builtin_pairs();
    auto it = t.find(name);
    if (it == t.end()) raise(errc::unknown_builtin, "varieties", "no builtin pair named '" + name + "'");
    return it->second;
}

} // namespace logcob
