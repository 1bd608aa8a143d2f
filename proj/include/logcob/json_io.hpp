#pragma once

// JSON (de)serialization for descriptors, snc pairs, and relations. Rationals
// travel as strings so nothing is ever rounded. Product descriptors serialize
// with their right spine flattened into a "factors" array and parse back by
// folding that array from the right, so round-trips are structurally exact.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "logcob/chow.hpp"
#include "logcob/cobordism.hpp"
#include "logcob/error.hpp"
#include "logcob/varieties.hpp"

namespace logcob {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, "json", e.what());
    }
}

inline Json descriptor_to_json(const DescPtr& d) {
    using VD = VarietyDescriptor;
    Json j;
    switch (d->kind()) {
    case VD::Kind::proj:
        j["kind"] = "proj";
        j["n"] = d->proj_n();
        break;
    case VD::Kind::product: {
        j["kind"] = "product";
        Json factors = Json::array();
        DescPtr cur = d;
        while (cur->kind() == VD::Kind::product) {
            factors.push_back(descriptor_to_json(cur->left()));
            cur = cur->right();
        }
        factors.push_back(descriptor_to_json(cur));
        j["factors"] = std::move(factors);
        break;
    }
    case VD::Kind::projbundle:
        j["kind"] = "projbundle";
        j["base"] = descriptor_to_json(d->base());
        j["twist"] = format_class(d->twist());
        break;
    }
    return j;
}

inline DescPtr descriptor_from_json(const Json& j) {
    using VD = VarietyDescriptor;
    const std::string mod = "json";
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        raise(errc::parse_error, mod, "descriptor needs a string 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "proj") {
        if (!j.contains("n") || !j["n"].is_number_unsigned())
            raise(errc::parse_error, mod, "proj descriptor needs a nonnegative integer 'n'");
        return VD::proj(j["n"].get<std::uint32_t>());
    }
    if (kind == "product") {
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() < 2)
            raise(errc::parse_error, mod, "product descriptor needs at least two 'factors'");
        const auto& f = j["factors"];
        DescPtr acc = descriptor_from_json(f.back());
        for (std::size_t i = f.size() - 1; i-- > 0;)
            acc = VD::product(descriptor_from_json(f[i]), acc);
        return acc;
    }
    if (kind == "projbundle") {
        if (!j.contains("base"))
            raise(errc::parse_error, mod, "projbundle descriptor needs a 'base'");
        if (!j.contains("twist") || !j["twist"].is_string())
            raise(errc::parse_error, mod, "projbundle descriptor needs a string 'twist'");
        DescPtr base = descriptor_from_json(j["base"]);
        return VD::projbundle(base, parse_class(base->ring(), j["twist"].get<std::string>()));
    }
    raise(errc::parse_error, mod, "unknown descriptor kind '" + kind + "'");
}

inline Json pair_to_json(const SncPair& p) {
    Json j;
    j["ambient"] = descriptor_to_json(p.ambient());
    Json divs = Json::array();
    const auto& names = p.ambient()->ring()->generator_names();
    for (const auto& c : p.boundary()) {
        Json d;
        d["name"] = c.name;
        d["class"] = format_class(c.cls);
        if (c.has_self()) d["self"] = descriptor_to_json(c.self_desc);
        if (c.has_restriction()) {
            Json r = Json::object();
            for (std::size_t i = 0; i < names.size(); ++i)
                r[names[i]] = format_class(c.restriction->images[i]);
            d["restriction"] = std::move(r);
        }
        divs.push_back(std::move(d));
    }
    j["divisors"] = std::move(divs);
    return j;
}

inline SncPair pair_from_json(const Json& j) {
    const std::string mod = "json";
    if (!j.is_object()) raise(errc::parse_error, mod, "pair must be a JSON object");
    DescPtr amb = descriptor_from_json(j.contains("ambient") ? j["ambient"] : j);
    std::vector<DivisorComponent> comps;
    if (j.contains("divisors")) {
        if (!j["divisors"].is_array())
            raise(errc::parse_error, mod, "'divisors' must be an array");
        for (const auto& d : j["divisors"]) {
            if (!d.is_object() || !d.contains("name") || !d["name"].is_string())
                raise(errc::parse_error, mod, "divisor needs a string 'name'");
            if (!d.contains("class") || !d["class"].is_string())
                raise(errc::parse_error, mod, "divisor needs a string 'class'");
            DivisorComponent c;
            c.name = d["name"].get<std::string>();
            c.cls = parse_class(amb->ring(), d["class"].get<std::string>());
            if (d.contains("self")) c.self_desc = descriptor_from_json(d["self"]);
            if (d.contains("restriction")) {
                if (!c.self_desc)
                    raise(errc::missing_self_descriptor, mod,
                          "divisor '" + c.name + "' has a restriction but no 'self'");
                if (!d["restriction"].is_object())
                    raise(errc::parse_error, mod, "'restriction' must be an object");
                std::vector<ChowClass> images;
                for (const auto& g : amb->ring()->generator_names()) {
                    if (!d["restriction"].contains(g) || !d["restriction"][g].is_string())
                        raise(errc::parse_error, mod,
                              "restriction of '" + c.name + "' misses generator '" + g + "'");
                    images.push_back(
                        parse_class(c.self_desc->ring(), d["restriction"][g].get<std::string>()));
                }
                c.restriction = RestrictionMap{amb->ring(), c.self_desc->ring(), std::move(images)};
            }
            comps.push_back(std::move(c));
        }
    }
    return SncPair(amb, std::move(comps));
}

inline Json relation_to_json(const Relation& r) {
    Json j;
    j["lhs"] = pair_to_json(r.lhs);
    Json rhs = Json::array();
    for (const auto& t : r.rhs.terms()) {
        Json term;
        term["coeff"] = to_string(t.coeff);
        term["pair"] = pair_to_json(t.pair);
        rhs.push_back(std::move(term));
    }
    j["rhs"] = std::move(rhs);
    Json prov;
    prov["kind"] = r.provenance.kind == Provenance::Kind::normal_cone ? "normal-cone" : "labeled";
    prov["detail"] = r.provenance.detail;
    j["provenance"] = std::move(prov);
    return j;
}

inline Relation relation_from_json(const Json& j) {
    const std::string mod = "json";
    if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs") || !j["rhs"].is_array())
        raise(errc::parse_error, mod, "relation needs 'lhs' and an array 'rhs'");
    FormalSum rhs;
    for (const auto& term : j["rhs"]) {
        if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() ||
            !term.contains("pair"))
            raise(errc::parse_error, mod, "relation term needs a string 'coeff' and a 'pair'");
        rhs.add(rational_from_string(term["coeff"].get<std::string>()),
                pair_from_json(term["pair"]));
    }
    Provenance prov;
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const auto& pj = j["provenance"];
        if (pj.contains("kind") && pj["kind"].is_string() &&
            pj["kind"].get<std::string>() == "normal-cone")
            prov.kind = Provenance::Kind::normal_cone;
        if (pj.contains("detail") && pj["detail"].is_string())
            prov.detail = pj["detail"].get<std::string>();
    }
    return Relation{pair_from_json(j["lhs"]), std::move(rhs), std::move(prov)};
}

} // namespace logcob
