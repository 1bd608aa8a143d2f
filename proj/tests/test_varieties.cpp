#include <catch2/catch_amalgamated.hpp>

#include "logcob/varieties.hpp"

using namespace logcob;
using VD = VarietyDescriptor;

namespace {

template <typename F>
errc thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::parse_error;
}

Rational euler(const DescPtr& d) {
    return integrate(tangent_chern(d).graded_part(d->dim()));
}

} // namespace

TEST_CASE("descriptor construction") {
    SECTION("projective space") {
        auto p3 = VD::proj(3);
        REQUIRE(p3->dim() == 3);
        REQUIRE(p3->ring()->generator_names() == std::vector<std::string>{"H"});
    }

    SECTION("products prefix generator names") {
        auto cube = VD::product(VD::proj(1), VD::product(VD::proj(1), VD::proj(1)));
        REQUIRE(cube->dim() == 3);
        REQUIRE(cube->ring()->generator_names() ==
                std::vector<std::string>{"l.H", "r.l.H", "r.r.H"});
        REQUIRE(integrate(ChowClass::generator(cube->ring(), "l.H") *
                          ChowClass::generator(cube->ring(), "r.l.H") *
                          ChowClass::generator(cube->ring(), "r.r.H")) == 1);
    }

    SECTION("bundles append a fresh fiber generator") {
        auto p2 = VD::proj(2);
        auto b = VD::projbundle(p2, ChowClass::generator(p2->ring(), 0));
        REQUIRE(b->dim() == 3);
        REQUIRE(b->ring()->generator_names() == std::vector<std::string>{"H", "xi"});
        REQUIRE(b->fiber_generator_index() == 1);

        // stacking bundles never reuses the fiber name
        auto bb = VD::projbundle(b, ChowClass::generator(b->ring(), "xi"));
        REQUIRE(bb->ring()->generator_names() == std::vector<std::string>{"H", "xi", "xi2"});
    }

    SECTION("twist must be a degree-1 class on the base") {
        auto p2 = VD::proj(2);
        REQUIRE(thrown_code([&] { VD::projbundle(p2, ChowClass::one(p2->ring())); }) ==
                errc::degree_mismatch);
        auto h = ChowClass::generator(p2->ring(), 0);
        REQUIRE(thrown_code([&] { VD::projbundle(p2, h * h); }) == errc::degree_mismatch);
        REQUIRE_NOTHROW(VD::projbundle(p2, ChowClass::zero(p2->ring())));
    }

    SECTION("structural equality") {
        auto a = VD::product(VD::proj(2), VD::proj(1));
        auto b = VD::product(VD::proj(2), VD::proj(1));
        auto c = VD::product(VD::proj(1), VD::proj(2));
        REQUIRE(descriptor_equal(a, b));
        REQUIRE(!descriptor_equal(a, c));
        auto p1 = VD::proj(1);
        auto h = ChowClass::generator(p1->ring(), 0);
        REQUIRE(descriptor_equal(VD::projbundle(p1, h), VD::projbundle(p1, h)));
        REQUIRE(!descriptor_equal(VD::projbundle(p1, h), VD::projbundle(p1, ChowClass::zero(p1->ring()))));
    }
}

TEST_CASE("tangent chern classes and euler numbers") {
    SECTION("projective spaces") {
        auto p3 = VD::proj(3);
        auto H = ChowClass::generator(p3->ring(), 0);
        auto c = tangent_chern(p3);
        REQUIRE(c.graded_part(1) == 4 * H);
        REQUIRE(c.graded_part(2) == 6 * H.pow(2));
        REQUIRE(c.graded_part(3) == 4 * H.pow(3));
        REQUIRE(euler(p3) == 4);
        REQUIRE(euler(VD::proj(1)) == 2);
        REQUIRE(euler(VD::proj(0)) == 1);
    }

    SECTION("products multiply") {
        auto cube = VD::product(VD::proj(1), VD::product(VD::proj(1), VD::proj(1)));
        REQUIRE(euler(cube) == 8);
        REQUIRE(euler(VD::product(VD::proj(2), VD::proj(1))) == 6);
    }

    SECTION("a P1 bundle doubles the base euler number") {
        auto p1 = VD::proj(1);
        auto f1 = VD::projbundle(p1, ChowClass::generator(p1->ring(), 0));
        REQUIRE(euler(f1) == 4);
        auto p2 = VD::proj(2);
        auto b = VD::projbundle(p2, ChowClass::generator(p2->ring(), 0));
        REQUIRE(euler(b) == 6);
    }
}

TEST_CASE("projective bundle relations") {
    auto p2 = VD::proj(2);
    auto h = ChowClass::generator(p2->ring(), 0);
    auto b = VD::projbundle(p2, h);
    auto ring = b->ring();
    auto H = ChowClass::generator(ring, "H");
    auto xi = ChowClass::generator(ring, "xi");

    SECTION("defining relation") {
        REQUIRE(xi * xi == H * xi);
        REQUIRE(xi.pow(3) == H.pow(2) * xi);
    }

    SECTION("fiber over the base point integrates to 1") {
        auto base_pt = lift_bundle_base(h.pow(2), b);
        REQUIRE(integrate(xi * base_pt) == 1);
        REQUIRE(integrate(base_pt) == 0);
    }

    SECTION("the two disjoint sections") {
        auto s = section_classes(b);
        REQUIRE(s.sub == xi - H);
        REQUIRE(s.triv == xi);
        REQUIRE(s.sub * s.triv == ChowClass::zero(ring)); // (xi - H) xi = 0
    }

    SECTION("only bundles have sections") {
        REQUIRE(thrown_code([&] { section_classes(p2); }) == errc::not_a_bundle);
    }
}

TEST_CASE("pair construction and validation") {
    auto p3 = VD::proj(3);
    auto p2 = VD::proj(2);
    auto H = ChowClass::generator(p3->ring(), 0);
    auto h2 = ChowClass::generator(p2->ring(), 0);

    SECTION("restriction data is checked three ways") {
        RestrictionMap good{p3->ring(), p2->ring(), {h2}};
        SncPair pair(p3, {DivisorComponent{"H", H, p2, good}});
        auto rows = validate_pair(pair);
        REQUIRE(rows.size() == 3);
        for (const auto& r : rows) {
            INFO(r.component << "/" << r.check << ": " << r.detail);
            REQUIRE(r.pass);
        }
    }

    SECTION("a scaled restriction fails the pushforward check") {
        RestrictionMap doubled{p3->ring(), p2->ring(), {2 * h2}};
        SncPair pair(p3, {DivisorComponent{"H", H, p2, doubled}});
        auto rows = validate_pair(pair);
        REQUIRE(rows.size() == 3);
        REQUIRE(rows[0].pass);  // degree
        REQUIRE(rows[1].pass);  // rules: (2h)^4 still reduces to zero
        REQUIRE(!rows[2].pass); // pushforward mismatch
        REQUIRE(rows[2].check == "pushforward");
    }

    SECTION("a restriction violating a ring rule fails the rules check") {
        // H^2 = 0 holds on the Hirzebruch surface but h^2 is nonzero on P2,
        // so sending both generators to h breaks the rules row
        auto p1 = VD::proj(1);
        auto f1 = VD::projbundle(p1, ChowClass::generator(p1->ring(), 0));
        auto s = section_classes(f1).sub;
        RestrictionMap bad{f1->ring(), p2->ring(), {h2, h2}};
        SncPair pair(f1, {DivisorComponent{"section", s, p2, bad}});
        auto rows = validate_pair(pair);
        bool rules_row_failed = false;
        for (const auto& r : rows)
            if (r.check == "rules") rules_row_failed = !r.pass;
        REQUIRE(rules_row_failed);
    }

    SECTION("components without restrictions are vacuously fine") {
        SncPair pair(p3, {DivisorComponent{"H", H, nullptr, std::nullopt}});
        REQUIRE(validate_pair(pair).empty());
    }

    SECTION("construction errors") {
        REQUIRE(thrown_code([&] {
                    SncPair(p3, {DivisorComponent{"H", H, nullptr, std::nullopt},
                                 DivisorComponent{"H", H, nullptr, std::nullopt}});
                }) == errc::parse_error);
        REQUIRE(thrown_code([&] {
                    SncPair(p3, {DivisorComponent{"Q", H * H, nullptr, std::nullopt}});
                }) == errc::degree_mismatch);
        RestrictionMap r{p3->ring(), p2->ring(), {h2}};
        REQUIRE(thrown_code([&] {
                    SncPair(p3, {DivisorComponent{"H", H, nullptr, r}});
                }) == errc::missing_self_descriptor);
        SncPair ok(p3, {DivisorComponent{"H", H, p2, r}});
        REQUIRE(thrown_code([&] { ok.component_index("missing"); }) == errc::unknown_component);
    }
}

TEST_CASE("builtin pair catalog") {
    SECTION("catalog contents") {
        std::vector<std::string> names;
        for (const auto& [n, p] : builtin_pairs()) {
            (void)p;
            names.push_back(n);
        }
        REQUIRE(names == std::vector<std::string>{"f1xp1", "op2_1", "p1_pt", "p1cubed", "p2xp1",
                                                  "p3", "p3_h"});
        REQUIRE(thrown_code([&] { builtin_pair("nope"); }) == errc::unknown_builtin);
    }

    SECTION("dimensions and boundary sizes") {
        REQUIRE(builtin_pair("p3").dim() == 3);
        REQUIRE(builtin_pair("p3").boundary().empty());
        REQUIRE(builtin_pair("p2xp1").dim() == 3);
        REQUIRE(builtin_pair("p1cubed").dim() == 3);
        REQUIRE(builtin_pair("p3_h").boundary().size() == 1);
        REQUIRE(builtin_pair("op2_1").boundary().size() == 1);
        REQUIRE(builtin_pair("f1xp1").boundary().size() == 1);
        REQUIRE(builtin_pair("p1_pt").dim() == 1);
    }

    SECTION("every builtin passes validation") {
        for (const auto& [name, pair] : builtin_pairs()) {
            for (const auto& row : validate_pair(pair)) {
                INFO(name << " " << row.component << "/" << row.check << ": " << row.detail);
                REQUIRE(row.pass);
            }
        }
    }

    SECTION("f1xp1 section squares to -1 on the surface factor") {
        const auto& pair = builtin_pair("f1xp1");
        const auto& cls = pair.boundary()[0].cls;
        auto ring = pair.ambient()->ring();
        // section^2 * (fiber of the P1 factor) = -1
        auto fiber = ChowClass::generator(ring, "r.H");
        REQUIRE(integrate(cls * cls * fiber) == -1);
    }
}

TEST_CASE("lifts commute with multiplication") {
    auto p2 = VD::proj(2);
    auto p1 = VD::proj(1);
    auto prod = VD::product(p2, p1);
    auto a = ChowClass::generator(p2->ring(), 0);
    auto b = ChowClass::generator(p1->ring(), 0);
    REQUIRE(lift_product_left(a * a, prod) ==
            lift_product_left(a, prod) * lift_product_left(a, prod));
    REQUIRE(lift_product_right(b, prod) * lift_product_left(a * a, prod) ==
            lift_product_left(a * a, prod) * lift_product_right(b, prod));
    REQUIRE(integrate(lift_product_left(a * a, prod) * lift_product_right(b, prod)) == 1);

    auto bundle = VD::projbundle(p2, a);
    REQUIRE(lift_bundle_base(a * a, bundle) ==
            lift_bundle_base(a, bundle) * lift_bundle_base(a, bundle));
}
