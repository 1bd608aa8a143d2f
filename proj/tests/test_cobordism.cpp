#include <catch2/catch_amalgamated.hpp>

#include "logcob/cobordism.hpp"

#include "corpus.hpp"

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

std::vector<Rational> invariant_vector(const SncPair& p) {
    std::vector<Rational> v;
    for (const auto& inv : Invariant::full_set(p.dim())) v.push_back(inv.eval(p));
    return v;
}

} // namespace

TEST_CASE("formal sums merge structurally equal pairs") {
    FormalSum s;
    s.add(1, builtin_pair("p3"));
    s.add(Rational(1, 2), builtin_pair("p3_h"));
    s.add(2, builtin_pair("p3"));
    REQUIRE(s.terms().size() == 2);
    REQUIRE(s.terms()[0].coeff == 3);

    s.add(-3, builtin_pair("p3"));
    REQUIRE(s.terms().size() == 1);
    REQUIRE(pair_equal(s.terms()[0].pair, builtin_pair("p3_h")));

    auto scaled = s.scaled(4);
    REQUIRE(scaled.terms()[0].coeff == 2);
    REQUIRE(s.scaled(0).empty());
}

TEST_CASE("degenerating a point on a line folds to one doubled term") {
    auto rel = normal_cone_relation(builtin_pair("p1_pt"), "pt");
    REQUIRE(rel.provenance.kind == Provenance::Kind::normal_cone);
    REQUIRE(rel.provenance.detail == "pt");
    REQUIRE(rel.lhs.boundary().empty());
    REQUIRE(rel.rhs.terms().size() == 1);
    REQUIRE(rel.rhs.terms()[0].coeff == 2);
    REQUIRE(pair_equal(rel.rhs.terms()[0].pair, builtin_pair("p1_pt")));
    REQUIRE(check_relation(rel).all_pass);
}

TEST_CASE("two planes degeneration emits the expected bundle side") {
    auto rel = normal_cone_relation(corpus::p3_planes(2), "H2");
    REQUIRE(rel.rhs.terms().size() == 2);

    auto side = corpus::two_planes_bundle_side();
    REQUIRE(side.ambient()->kind() == VD::Kind::projbundle);
    REQUIRE(descriptor_equal(side.ambient()->base(), VD::proj(2)));
    REQUIRE(side.boundary().size() == 2);
    REQUIRE(side.boundary()[0].name == "H2"); // the gluing section keeps the name
    REQUIRE(side.boundary()[1].name == "H1"); // the pulled back plane trace
    REQUIRE(side.boundary()[0].has_restriction());
    REQUIRE(!side.boundary()[1].has_self());

    REQUIRE(invariant_vector(side) == std::vector<Rational>{1, 7, 19, -1, -6});
    REQUIRE(check_relation(rel).all_pass);
}

TEST_CASE("every corpus degeneration is invariant additive") {
    auto entries = corpus::relation_corpus();
    REQUIRE(entries.size() >= 10);
    std::size_t multi = 0;
    for (const auto& e : entries)
        if (e.pair.boundary().size() >= 2) ++multi;
    REQUIRE(multi >= 2);

    for (const auto& e : entries) {
        auto rel = normal_cone_relation(e.pair, e.component);
        auto rep = check_relation(rel);
        for (const auto& row : rep.rows) {
            INFO(e.name << " / " << row.invariant << ": " << to_string(row.lhs) << " vs "
                        << to_string(row.rhs));
            REQUIRE(row.pass);
        }
        REQUIRE(rep.all_pass);
    }
}

TEST_CASE("check_relation reports per invariant rows") {
    auto rel = normal_cone_relation(builtin_pair("p3_h"), "H");
    auto rep = check_relation(rel);
    REQUIRE(rep.rows.size() == 5);
    REQUIRE(rep.rows[0].invariant == "c(3)");
    REQUIRE(rep.rows[4].invariant == "nu");

    // a deliberately wrong relation fails and says where
    Relation bogus{builtin_pair("p3"), FormalSum::of(builtin_pair("p2xp1")),
                   Provenance{Provenance::Kind::labeled, "bogus"}};
    auto bad = check_relation(bogus);
    REQUIRE(!bad.all_pass);
    REQUIRE(!bad.rows[0].pass);
    REQUIRE(bad.rows[0].lhs == 4);
    REQUIRE(bad.rows[0].rhs == 6);
}

TEST_CASE("normal cone preconditions") {
    auto p3 = VD::proj(3);
    auto p2 = VD::proj(2);
    auto H = ChowClass::generator(p3->ring(), 0);

    SncPair bare(p3, {DivisorComponent{"H", H, nullptr, std::nullopt}});
    REQUIRE(thrown_code([&] { normal_cone_relation(bare, "H"); }) ==
            errc::missing_self_descriptor);

    SncPair no_restriction(p3, {DivisorComponent{"H", H, p2, std::nullopt}});
    REQUIRE(thrown_code([&] { normal_cone_relation(no_restriction, "H"); }) ==
            errc::missing_restriction);

    REQUIRE(thrown_code([&] { normal_cone_relation(bare, "Q"); }) == errc::unknown_component);
}

TEST_CASE("bundle pair construction") {
    SECTION("over a boundaryless base with zero twist: half of p2xp1") {
        auto p2 = VD::proj(2);
        auto pair = bundle_pair(SncPair(p2, {}), ChowClass::zero(p2->ring()));
        REQUIRE(pair.boundary().size() == 1);
        REQUIRE(pair.boundary()[0].name == "section");
        auto v = invariant_vector(pair);
        auto w = invariant_vector(builtin_pair("p2xp1"));
        for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(2 * v[i] == w[i]);
    }

    SECTION("boundary components ride along as enriched bundles") {
        const auto& base = builtin_pair("op2_1");
        auto l = ChowClass::generator(base.ambient()->ring(), "H");
        auto pair = bundle_pair(base, l);
        REQUIRE(pair.dim() == 4);
        REQUIRE(pair.boundary().size() == 2);
        // the fresh section dodges the existing name, the pullback keeps it
        REQUIRE(pair.boundary()[0].name == "section2");
        REQUIRE(pair.boundary()[1].name == "section");
        REQUIRE(pair.boundary()[1].has_self());
        REQUIRE(pair.boundary()[1].self_desc->kind() == VD::Kind::projbundle);
        REQUIRE(descriptor_equal(pair.boundary()[1].self_desc->base(), VD::proj(2)));
        for (const auto& row : validate_pair(pair)) {
            INFO(row.component << "/" << row.check << ": " << row.detail);
            REQUIRE(row.pass);
        }
    }

    SECTION("zero pullback classes are dropped") {
        // (P^1, {p, q}) degenerated along q: the trace of p on a point is zero,
        // so the bundle side carries only the gluing section
        auto rel = normal_cone_relation(corpus::p1_two_points(), "q");
        REQUIRE(rel.rhs.terms().size() == 2);
        for (const auto& t : rel.rhs.terms())
            if (t.pair.boundary().size() == 1)
                REQUIRE(t.pair.boundary()[0].name == "q");
        REQUIRE(check_relation(rel).all_pass);
    }
}

TEST_CASE("products of pairs") {
    auto square = product_pair(builtin_pair("p1_pt"), builtin_pair("p1_pt"));
    REQUIRE(square.dim() == 2);
    REQUIRE(square.boundary().size() == 2);
    REQUIRE(square.boundary()[0].name == "l.pt");
    REQUIRE(square.boundary()[1].name == "r.pt");
    for (const auto& row : validate_pair(square)) {
        INFO(row.component << "/" << row.check << ": " << row.detail);
        REQUIRE(row.pass);
    }

    SECTION("triple product matches one eighth of p1cubed") {
        auto cube = product_pair(builtin_pair("p1_pt"), square);
        REQUIRE(descriptor_equal(cube.ambient(), builtin_pair("p1cubed").ambient()));
        REQUIRE(cube.boundary().size() == 3);
        auto v = invariant_vector(cube);
        auto w = invariant_vector(builtin_pair("p1cubed"));
        REQUIRE(v == std::vector<Rational>{1, 3, 6, 0, -2});
        for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(8 * v[i] == w[i]);
        for (const auto& row : validate_pair(cube)) REQUIRE(row.pass);
    }

    SECTION("product restrictions restrict correctly") {
        // the left section of f1 x p1 is exactly the builtin's component
        const auto& built = builtin_pair("f1xp1");
        auto left = corpus::f1_section();
        auto p1 = VD::proj(1);
        auto prod = product_pair(left, SncPair(p1, {}));
        REQUIRE(descriptor_equal(prod.ambient(), built.ambient()));
        REQUIRE(prod.boundary()[0].cls == built.boundary()[0].cls);
        REQUIRE(invariant_vector(prod) == invariant_vector(built));
    }
}

TEST_CASE("decompose3") {
    SECTION("identity decompositions of the generators") {
        const auto& names = decompose3_generator_names();
        for (std::size_t g = 0; g < names.size(); ++g) {
            auto d = decompose3(builtin_pair(names[g]));
            INFO(names[g]);
            REQUIRE(d.rank == 4);
            for (std::size_t i = 0; i < names.size(); ++i)
                REQUIRE(d.coefficients[i] == (i == g ? 1 : 0));
            for (const auto& r : d.residuals) REQUIRE(r == 0);
        }
    }

    SECTION("two planes in space") {
        auto d = decompose3(corpus::p3_planes(2));
        REQUIRE(d.rank == 4);
        REQUIRE(d.coefficients ==
                std::vector<Rational>{Rational(-1, 2), 0, Rational(1, 12), Rational(4, 3), 0});
        REQUIRE(d.target == std::vector<Rational>{0, 2, 8, 4, -2});
        for (const auto& r : d.residuals) REQUIRE(r == 0);
    }

    SECTION("the hyperplane complement combination") {
        // op2_1 carries the same invariants as p3 minus p3_h
        auto d = decompose3(builtin_pair("op2_1"));
        REQUIRE(d.coefficients == std::vector<Rational>{1, 0, 0, -1, 0});
    }

    SECTION("matrix annihilates the known null combination") {
        auto d = decompose3(builtin_pair("p3"));
        std::vector<Rational> null{3, 0, 2, -4, -6};
        for (const auto& row : d.matrix) {
            Rational acc = 0;
            for (std::size_t c = 0; c < null.size(); ++c) acc += row[c] * null[c];
            REQUIRE(acc == 0);
        }
    }

    SECTION("generator labels and invariant labels are reported") {
        auto d = decompose3(builtin_pair("p1cubed"));
        REQUIRE(d.generator_names ==
                std::vector<std::string>{"p3", "p2xp1", "p1cubed", "p3_h", "f1xp1"});
        REQUIRE(d.invariant_names ==
                std::vector<std::string>{"c(3)", "c(2,1)", "c(1,1,1)", "alpha[i=1,k=1,l=(1)]",
                                         "nu"});
    }

    SECTION("dimension guard") {
        REQUIRE(thrown_code([] { decompose3(builtin_pair("p1_pt")); }) == errc::wrong_dimension);
    }
}
