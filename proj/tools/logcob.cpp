// Command line front end. Pairs are addressed either as builtin:NAME or as a
// path to a JSON pair file; every numeric answer is exact, rationals print as
// p/q, and output is byte-for-byte deterministic for a fixed invocation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "logcob/logcob.hpp"

using namespace logcob;

namespace {

SncPair load_pair(const std::string& ref) {
    const std::string prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0) return builtin_pair(ref.substr(prefix.size()));
    std::ifstream in(ref);
    if (!in) raise(errc::parse_error, "cli", "cannot open pair file '" + ref + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return pair_from_json(parse_json_text(buf.str()));
}

std::string descriptor_to_string(const DescPtr& d) {
    using VD = VarietyDescriptor;
    switch (d->kind()) {
    case VD::Kind::proj:
        return "Proj(" + std::to_string(d->proj_n()) + ")";
    case VD::Kind::product:
        return "Product(" + descriptor_to_string(d->left()) + ", " +
               descriptor_to_string(d->right()) + ")";
    case VD::Kind::projbundle:
        return "ProjBundle(" + descriptor_to_string(d->base()) + ", " +
               format_class(d->twist()) + ")";
    }
    return {};
}

std::string pair_to_string(const SncPair& p) {
    std::string s = "(" + descriptor_to_string(p.ambient()) + ", {";
    bool first = true;
    for (const auto& c : p.boundary()) {
        if (!first) s += ", ";
        first = false;
        s += c.name + " = " + format_class(c.cls);
    }
    return s + "})";
}

Json series_coeffs_json(const RationalSeries& s) {
    Json a = Json::array();
    for (const auto& c : s.coeffs) a.push_back(to_string(c));
    return a;
}

void print_series(const RationalSeries& s) {
    for (std::uint32_t k = 0; k <= s.order; ++k)
        std::cout << "q^" << k << ": " << to_string(s.coeffs[k]) << "\n";
}

Json report_to_json(const RelationReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json r;
        r["invariant"] = row.invariant;
        r["lhs"] = to_string(row.lhs);
        r["rhs"] = to_string(row.rhs);
        r["pass"] = row.pass;
        rows.push_back(std::move(r));
    }
    Json j;
    j["rows"] = std::move(rows);
    j["all_pass"] = rep.all_pass;
    return j;
}

void print_value(bool as_json, const std::string& name, const Rational& v) {
    if (as_json) {
        Json j;
        j["invariant"] = name;
        j["value"] = to_string(v);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << name << " = " << to_string(v) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log Chern invariants, double point relations, and the "
                 "degree zero log DT series for snc pairs"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string pair_ref, lambda_text, component, sign_text = "minus-q";
    std::uint32_t order = 10;
    std::uint32_t opt_i = 1, opt_k = 1;
    bool do_check = false, verify_oracle = false;
    int rc = 0;

    auto add_pair_option = [&](CLI::App* cmd) {
        cmd->add_option("--pair", pair_ref, "builtin:NAME or path to a pair JSON file")
            ->required();
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
    };

    auto* cmd_list = app.add_subcommand("list-builtins", "list the built-in pairs");
    add_json_flag(cmd_list);
    cmd_list->callback([&] {
        if (as_json) {
            Json a = Json::array();
            for (const auto& [name, pair] : builtin_pairs()) {
                (void)pair;
                a.push_back(name);
            }
            std::cout << a.dump(2) << "\n";
        } else {
            for (const auto& [name, pair] : builtin_pairs())
                std::cout << name << ": " << pair_to_string(pair) << "\n";
        }
    });

    auto* cmd_nu = app.add_subcommand("nu", "nu of a threefold pair");
    add_pair_option(cmd_nu);
    add_json_flag(cmd_nu);
    cmd_nu->callback([&] { print_value(as_json, "nu", nu(load_pair(pair_ref))); });

    auto* cmd_cl = app.add_subcommand("clambda", "log Chern number c_lambda");
    add_pair_option(cmd_cl);
    add_json_flag(cmd_cl);
    cmd_cl->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    cmd_cl->callback([&] {
        Invariant inv{Invariant::Kind::c_lambda, Partition::parse(lambda_text), 0, 0};
        print_value(as_json, inv.name(), inv.eval(load_pair(pair_ref)));
    });

    auto* cmd_alpha = app.add_subcommand("alpha", "boundary invariant alpha_{i,lambda,k}");
    add_pair_option(cmd_alpha);
    add_json_flag(cmd_alpha);
    cmd_alpha->add_option("--i", opt_i, "odd positive exponent offset")->required();
    cmd_alpha->add_option("--k", opt_k, "number of boundary components in each stratum")
        ->required();
    cmd_alpha->add_option("--lambda", lambda_text,
                          "partition, e.g. 1 (omit for the empty partition)");
    cmd_alpha->callback([&] {
        Invariant inv{Invariant::Kind::alpha, Partition::parse(lambda_text), opt_i, opt_k};
        print_value(as_json, inv.name(), inv.eval(load_pair(pair_ref)));
    });

    auto* cmd_z = app.add_subcommand("zseries", "degree zero log DT series M(-q)^nu");
    add_pair_option(cmd_z);
    add_json_flag(cmd_z);
    cmd_z->add_option("--order", order, "truncation order (default 10)");
    cmd_z->add_option("--sign-convention", sign_text, "minus-q (default) or plus-q")
        ->check(CLI::IsMember({"minus-q", "plus-q"}));
    cmd_z->callback([&] {
        auto pair = load_pair(pair_ref);
        auto sign = sign_text == "plus-q" ? SignConvention::plus_q : SignConvention::minus_q;
        auto z = z_series(pair, order, sign);
        if (as_json) {
            Json j;
            j["nu"] = to_string(nu(pair));
            j["sign_convention"] = sign_text;
            j["order"] = order;
            j["coefficients"] = series_coeffs_json(z);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "nu = " << to_string(nu(pair)) << "\n";
            print_series(z);
        }
    });

    auto* cmd_mac = app.add_subcommand("macmahon", "plane partition generating function");
    add_json_flag(cmd_mac);
    cmd_mac->add_option("--order", order, "truncation order (default 10)");
    cmd_mac->add_flag("--verify-oracle", verify_oracle,
                      "cross-check coefficients against direct enumeration (n <= 12)");
    cmd_mac->callback([&] {
        auto m = macmahon(order);
        std::uint32_t checked = 0;
        bool ok = true;
        if (verify_oracle) {
            checked = std::min<std::uint32_t>(order, 12);
            for (std::uint32_t n = 0; n <= checked; ++n)
                ok = ok && m.coeffs[n] == Rational(Integer(plane_partition_count(n)));
        }
        if (as_json) {
            Json j;
            j["order"] = order;
            j["coefficients"] = series_coeffs_json(m);
            if (verify_oracle) {
                j["oracle_checked_through"] = checked;
                j["oracle_ok"] = ok;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            print_series(m);
            if (verify_oracle)
                std::cout << (ok ? "oracle ok" : "ORACLE MISMATCH")
                          << " (enumerated through n = " << checked << ")\n";
        }
        if (verify_oracle && !ok) rc = 1;
    });

    auto* cmd_rel = app.add_subcommand("relation",
                                       "normal cone relation along a boundary component");
    add_pair_option(cmd_rel);
    add_json_flag(cmd_rel);
    cmd_rel->add_option("--component", component, "boundary component to degenerate along")
        ->required();
    cmd_rel->add_flag("--check", do_check, "verify additivity of every invariant");
    cmd_rel->callback([&] {
        auto rel = normal_cone_relation(load_pair(pair_ref), component);
        if (as_json) {
            Json j = relation_to_json(rel);
            if (do_check) {
                auto rep = check_relation(rel);
                j["check"] = report_to_json(rep);
                if (!rep.all_pass) rc = 1;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "lhs: " << pair_to_string(rel.lhs) << "\n";
            for (const auto& t : rel.rhs.terms())
                std::cout << "rhs: " << to_string(t.coeff) << " * " << pair_to_string(t.pair)
                          << "\n";
            if (do_check) {
                auto rep = check_relation(rel);
                for (const auto& row : rep.rows)
                    std::cout << row.invariant << ": " << to_string(row.lhs) << " = "
                              << to_string(row.rhs) << (row.pass ? " ok" : " MISMATCH") << "\n";
                std::cout << (rep.all_pass ? "all checks passed" : "RELATION CHECK FAILED")
                          << "\n";
                if (!rep.all_pass) rc = 1;
            }
        }
    });

    auto* cmd_dec = app.add_subcommand("decompose",
                                       "decompose a threefold pair over the five generators");
    add_pair_option(cmd_dec);
    add_json_flag(cmd_dec);
    cmd_dec->callback([&] {
        auto d = decompose3(load_pair(pair_ref));
        if (as_json) {
            Json j;
            j["generators"] = d.generator_names;
            j["invariants"] = d.invariant_names;
            Json m = Json::array();
            for (const auto& row : d.matrix) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(to_string(x));
                m.push_back(std::move(r));
            }
            j["matrix"] = std::move(m);
            Json t = Json::array();
            for (const auto& x : d.target) t.push_back(to_string(x));
            j["target"] = std::move(t);
            Json c = Json::array();
            for (const auto& x : d.coefficients) c.push_back(to_string(x));
            j["coefficients"] = std::move(c);
            j["rank"] = d.rank;
            Json res = Json::array();
            for (const auto& x : d.residuals) res.push_back(to_string(x));
            j["residuals"] = std::move(res);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "rank: " << d.rank << "\n";
            for (std::size_t i = 0; i < d.generator_names.size(); ++i)
                std::cout << d.generator_names[i] << ": " << to_string(d.coefficients[i])
                          << "\n";
        }
    });

    auto* cmd_val = app.add_subcommand("validate", "consistency checks on a pair's restriction data");
    add_pair_option(cmd_val);
    add_json_flag(cmd_val);
    cmd_val->callback([&] {
        auto pair = load_pair(pair_ref);
        auto rows = validate_pair(pair);
        bool all = true;
        for (const auto& r : rows) all = all && r.pass;
        if (as_json) {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["component"] = r.component;
                row["check"] = r.check;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                arr.push_back(std::move(row));
            }
            Json j;
            j["rows"] = std::move(arr);
            j["all_pass"] = all;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& r : rows)
                std::cout << r.component << "/" << r.check << ": "
                          << (r.pass ? "ok" : "FAIL " + r.detail) << "\n";
            std::cout << (all ? "pair valid" : "PAIR INVALID") << "\n";
        }
        if (!all) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        if (as_json) {
            Json j;
            j["error"]["code"] = errc_name(e.code());
            j["error"]["module"] = e.module();
            j["error"]["message"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.module() << "/" << errc_name(e.code()) << "]: "
                      << e.what() << "\n";
        }
        return 1;
    }
    return rc;
}
