// gk: exact number theory, maximal-torus catalogs and prime graphs of the
// exceptional groups E7(q) and E8(q), plus the claims verifier.

#include "gk/gk.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using gk::Integer;
using nlohmann::json;

struct Output {
    bool as_json = false;
    bool raw_numbers = false;

    json num(const Integer& v) const {
        if (raw_numbers && v >= std::numeric_limits<std::int64_t>::min() &&
            v <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(v);
        return v.str();
    }
    void emit(const json& j) const { std::cout << j.dump(2) << "\n"; }
};

Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw std::domain_error("not an integer: " + s);
    }
}

gk::Sign resolve_eps(const std::string& flag, const Integer& q) {
    if (!flag.empty()) return gk::sign_from_char(flag[0]);
    if (gk::mod(q, 2) == 0)
        throw std::domain_error("--eps is required for even q (the canonical choice applies to odd q only)");
    return gk::canonical_sign(q);
}

std::string poly_to_string(const gk::CycloPolynomial& c) {
    std::string out;
    for (std::size_t k = c.coefficients.size(); k-- > 0;) {
        const Integer& a = c.coefficients[k];
        if (a == 0) continue;
        const Integer mag = gk::abs(a);
        if (out.empty())
            out += a < 0 ? "-" : "";
        else
            out += a < 0 ? " - " : " + ";
        if (mag != 1 || k == 0) out += mag.str();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

json shape_record(const gk::TorusShape& s, const Output& out) {
    json factors = json::array();
    json plain = json::array();
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        factors.push_back(s.factors[i].cyclo_indices);
        if (!s.factors[i].uses_eps) plain.push_back(i);
    }
    json j{{"group", gk::group_name(s.group)},
           {"row_id", s.row_id},
           {"display", s.display},
           {"factors", factors},
           {"arg_sign_convention", s.arg_sign_convention()},
           {"status", s.status == gk::RowStatus::valid ? "valid" : "flagged"}};
    if (s.arg_sign_convention() == "mixed") j["plain_q_factors"] = plain;
    if (!s.note.empty()) j["note"] = s.note;
    (void)out;
    return j;
}

int cmd_verify(const std::string& filter, const Output& out) {
    const auto records = gk::run_claims(filter);
    if (out.as_json)
        out.emit(gk::report_json(records));
    else
        std::cout << gk::report_text(records);
    return gk::exit_status(records);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic of the E7/E8 torus catalogs, prime graphs and the claims verifier"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--json", out.as_json, "emit one JSON document on stdout");
    app.add_flag("--raw-numbers", out.raw_numbers,
                 "emit JSON numbers instead of decimal strings where they fit in 64 bits");

    int exit_code = 0;

    // order r a
    std::string ord_r, ord_a;
    auto* order = app.add_subcommand("order", "multiplicative order e(r, a)");
    order->add_option("r", ord_r, "prime modulus")->required();
    order->add_option("a", ord_a, "base")->required();
    order->callback([&] {
        const Integer e = gk::mult_order(parse_integer(ord_r), parse_integer(ord_a));
        if (out.as_json)
            out.emit(json{{"op", "order"}, {"r", ord_r}, {"a", ord_a}, {"result", out.num(e)}});
        else
            std::cout << e << "\n";
    });

    // factor n
    std::string fac_n;
    auto* factor = app.add_subcommand("factor", "complete factorization of n");
    factor->add_option("n", fac_n, "nonzero integer")->required();
    factor->callback([&] {
        const Integer n = parse_integer(fac_n);
        const gk::Factorization f = gk::factorize(n);
        if (out.as_json) {
            json fj = json::object();
            for (const auto& [p, e] : f.factors) fj[p.str()] = e;
            out.emit(json{{"op", "factor"}, {"n", out.num(n)}, {"factors", fj}});
            return;
        }
        std::cout << n << " = ";
        if (n < 0) std::cout << "-1";
        if (f.factors.empty())
            std::cout << (n < 0 ? "" : "1");
        else {
            bool first = n >= 0;
            for (const auto& [p, e] : f.factors) {
                if (!first) std::cout << " * ";
                first = false;
                std::cout << p;
                if (e > 1) std::cout << "^" << e;
            }
        }
        std::cout << "\n";
    });

    // cyclo m [a]
    unsigned cyc_m = 0;
    std::string cyc_a;
    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic polynomial Phi_m, optionally evaluated at a");
    cyclo->add_option("m", cyc_m, "index")->required()->check(CLI::PositiveNumber);
    cyclo->add_option("a", cyc_a, "evaluation point");
    cyclo->callback([&] {
        const gk::CycloPolynomial c = gk::cyclotomic(cyc_m);
        std::optional<Integer> value;
        if (!cyc_a.empty()) value = c(parse_integer(cyc_a));
        if (out.as_json) {
            json coeffs = json::array();
            for (const auto& x : c.coefficients) coeffs.push_back(out.num(x));
            json j{{"op", "cyclo"}, {"m", cyc_m}, {"coefficients", coeffs}, {"polynomial", poly_to_string(c)}};
            if (value) j["value"] = out.num(*value);
            out.emit(j);
        } else if (value) {
            std::cout << *value << "\n";
        } else {
            std::cout << poly_to_string(c) << "\n";
        }
    });

    // kprim a i
    std::string kp_a;
    unsigned kp_i = 0;
    auto* kprim = app.add_subcommand("kprim", "greatest primitive divisor k_i(a)");
    kprim->add_option("a", kp_a, "base, |a| > 1")->required();
    kprim->add_option("i", kp_i, "index")->required()->check(CLI::PositiveNumber);
    kprim->callback([&] {
        const Integer k = gk::greatest_primitive_divisor(parse_integer(kp_a), kp_i);
        if (out.as_json)
            out.emit(json{{"op", "kprim"}, {"a", kp_a}, {"i", kp_i}, {"result", out.num(k)}});
        else
            std::cout << k << "\n";
    });

    // rset a i
    std::string rs_a;
    unsigned rs_i = 0;
    auto* rset = app.add_subcommand("rset", "primitive prime divisors R_i(a)");
    rset->add_option("a", rs_a, "base, |a| > 1")->required();
    rset->add_option("i", rs_i, "index")->required()->check(CLI::PositiveNumber);
    rset->callback([&] {
        const gk::PrimeSet s = gk::primitive_divisors(parse_integer(rs_a), rs_i);
        if (out.as_json) {
            json arr = json::array();
            for (const auto& r : s) arr.push_back(out.num(r));
            out.emit(json{{"op", "rset"}, {"a", rs_a}, {"i", rs_i}, {"result", arr}});
            return;
        }
        if (s.empty()) std::cout << "(empty)\n";
        else {
            bool first = true;
            for (const auto& r : s) {
                if (!first) std::cout << " ";
                first = false;
                std::cout << r;
            }
            std::cout << "\n";
        }
    });

    // zsig a i
    std::string zs_a;
    unsigned zs_i = 0;
    auto* zsig = app.add_subcommand("zsig", "is (a, i) a Zsigmondy exception?");
    zsig->add_option("a", zs_a, "base, |a| > 1")->required();
    zsig->add_option("i", zs_i, "index")->required()->check(CLI::PositiveNumber);
    zsig->callback([&] {
        const bool ex = gk::zsigmondy_exceptional(parse_integer(zs_a), zs_i);
        if (out.as_json)
            out.emit(json{{"op", "zsig"}, {"a", zs_a}, {"i", zs_i}, {"result", ex}});
        else
            std::cout << (ex ? "true" : "false") << "\n";
    });

    // tori GROUP q [--eps +|-] [--validate]
    std::string tori_group, tori_q, tori_eps;
    bool tori_validate = false;
    auto* tori = app.add_subcommand("tori", "torus catalog evaluated at q");
    tori->add_option("group", tori_group, "E7 or E8")->required();
    tori->add_option("q", tori_q, "prime power")->required();
    tori->add_option("--eps", tori_eps, "sign choice (+ or -); canonical for odd q when omitted");
    tori->add_flag("--validate", tori_validate, "print the catalog validation report instead");
    tori->callback([&] {
        const gk::Group g = gk::group_from_name(tori_group);
        const Integer q = parse_integer(tori_q);
        gk::FieldParam::of(q);
        if (tori_validate) {
            const gk::CatalogValidation v = gk::validate_catalog(g);
            if (out.as_json) {
                json flagged = json::array();
                for (const auto& i : v.flagged) flagged.push_back({{"row_id", i.row_id}, {"reason", i.reason}});
                out.emit(json{{"op", "validate"},
                              {"group", gk::group_name(g)},
                              {"flagged", flagged},
                              {"agreement_failures", v.agreement_failures}});
                return;
            }
            std::cout << "flagged rows (" << v.flagged.size() << "):\n";
            for (const auto& i : v.flagged) std::cout << "  " << i.row_id << ": " << i.reason << "\n";
            if (v.agreement_failures.empty())
                std::cout << "display/parsed agreement: ok\n";
            else
                for (const auto& f : v.agreement_failures) std::cout << "agreement failure: " << f << "\n";
            return;
        }
        const gk::Sign eps = resolve_eps(tori_eps, q);
        if (out.as_json) {
            json rows = json::array();
            for (const auto& s : gk::torus_catalog(g)) {
                json rec = shape_record(s, out);
                if (s.status == gk::RowStatus::valid) {
                    json orders = json::array();
                    for (const auto& v : gk::eval_torus(s, q, eps)) orders.push_back(out.num(v));
                    rec["orders"] = orders;
                    rec["order"] = out.num(gk::torus_order(s, q, eps));
                    rec["exponent"] = out.num(gk::torus_exponent(s, q, eps));
                }
                rows.push_back(std::move(rec));
            }
            out.emit(json{{"op", "tori"},
                          {"group", gk::group_name(g)},
                          {"q", out.num(q)},
                          {"eps", std::string(1, gk::sign_char(eps))},
                          {"rows", rows}});
            return;
        }
        for (const auto& s : gk::torus_catalog(g)) {
            if (s.status == gk::RowStatus::flagged) {
                std::cout << s.row_id << "  FLAGGED  " << s.note << "\n";
                continue;
            }
            std::cout << s.row_id << "  " << gk::torus_order(s, q, eps) << "  =";
            for (const auto& v : gk::eval_torus(s, q, eps)) std::cout << " " << v;
            std::cout << "   " << s.display << "\n";
        }
    });

    // pi GROUP q r
    std::string pi_group, pi_q, pi_r;
    auto* pi = app.add_subcommand("pi", "is the prime r in pi(GROUP(q))?");
    pi->add_option("group", pi_group, "E7 or E8")->required();
    pi->add_option("q", pi_q, "prime power")->required();
    pi->add_option("r", pi_r, "prime")->required();
    pi->callback([&] {
        const bool in = gk::is_in_pi(gk::group_from_name(pi_group), parse_integer(pi_q), parse_integer(pi_r));
        if (out.as_json)
            out.emit(json{{"op", "pi"}, {"group", pi_group}, {"q", pi_q}, {"r", pi_r}, {"result", in}});
        else
            std::cout << (in ? "true" : "false") << "\n";
    });

    // graph GROUP q [--mode ...] [--dot]
    std::string gr_group, gr_q, gr_mode;
    bool gr_dot = false;
    auto* graph = app.add_subcommand("graph", "prime graph built from the torus catalog");
    graph->add_option("group", gr_group, "E7 or E8")->required();
    graph->add_option("q", gr_q, "prime power")->required();
    graph->add_option("--mode", gr_mode, "semisimple or with-two (default: with-two for odd q)");
    graph->add_flag("--dot", gr_dot, "emit DOT instead of a text summary");
    graph->callback([&] {
        const gk::Group g = gk::group_from_name(gr_group);
        const Integer q = parse_integer(gr_q);
        gk::GraphMode mode;
        if (!gr_mode.empty())
            mode = gk::mode_from_name(gr_mode);
        else
            mode = gk::mod(q, 2) == 1 ? gk::GraphMode::with_two : gk::GraphMode::semisimple_odd;
        const gk::PrimeGraph pg = gk::build_graph(g, q, mode);
        for (const auto& w : pg.warnings) std::cerr << "warning: " << w << "\n";
        if (gr_dot) {
            std::cout << gk::to_dot(pg);
            return;
        }
        if (out.as_json) {
            out.emit(gk::to_json(pg, out.raw_numbers));
            return;
        }
        std::size_t edges = 0;
        for (std::size_t i = 0; i < pg.size(); ++i)
            for (std::size_t j = i + 1; j < pg.size(); ++j)
                if (pg.adjacent(i, j)) ++edges;
        std::cout << "GK(" << gk::group_name(g) << "(" << q << ")), mode " << gk::mode_name(mode) << ": "
                  << pg.size() << " vertices, " << edges << " edges\n";
        for (const auto& v : pg.vertices) std::cout << "  " << v.prime << " (e=" << v.cls << ")\n";
    });

    // coclique [GROUP q] [--anchor r] [--from FILE]
    std::string cq_group, cq_q, cq_anchor, cq_from;
    auto* coclique = app.add_subcommand("coclique", "exact maximum coclique of the prime graph");
    coclique->add_option("group", cq_group, "E7 or E8");
    coclique->add_option("q", cq_q, "prime power");
    coclique->add_option("--anchor", cq_anchor, "prime the coclique must contain");
    coclique->add_option("--from", cq_from, "read the graph from a JSON export instead of building it");
    coclique->callback([&] {
        gk::PrimeGraph pg;
        if (!cq_from.empty()) {
            std::ifstream in(cq_from);
            if (!in) throw std::domain_error("cannot open " + cq_from);
            json j;
            in >> j;
            pg = gk::graph_from_json(j);
        } else {
            if (cq_group.empty() || cq_q.empty())
                throw std::domain_error("coclique needs GROUP and q (or --from FILE)");
            const Integer q = parse_integer(cq_q);
            const auto mode = gk::mod(q, 2) == 1 ? gk::GraphMode::with_two : gk::GraphMode::semisimple_odd;
            pg = gk::build_graph(gk::group_from_name(cq_group), q, mode);
        }
        const gk::CocliqueResult r = cq_anchor.empty() ? gk::independence_number(pg)
                                                       : gk::local_coclique(pg, parse_integer(cq_anchor));
        if (out.as_json) {
            json w = json::array();
            for (const auto& p : r.witness) w.push_back(out.num(p));
            json j{{"op", "coclique"}, {"size", r.size}, {"witness", w}};
            if (r.anchored_vertex) j["anchor"] = out.num(*r.anchored_vertex);
            out.emit(j);
            return;
        }
        std::cout << "size " << r.size << ", witness {";
        for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << (i ? ", " : "") << r.witness[i];
        std::cout << "}\n";
    });

    // verify [--filter PREFIX]
    std::string vf_filter;
    auto* verify = app.add_subcommand("verify", "run the claims registry");
    verify->add_option("--filter", vf_filter, "claim id prefix");
    verify->callback([&] { exit_code = cmd_verify(vf_filter, out); });

    // claims list
    auto* claims = app.add_subcommand("claims", "claims registry");
    claims->require_subcommand(1);
    auto* claims_list = claims->add_subcommand("list", "list claim ids with their citation anchors");
    claims_list->callback([&] {
        if (out.as_json) {
            json arr = json::array();
            for (const auto& c : gk::claim_registry())
                arr.push_back({{"id", c.id},
                               {"paper_ref", c.paper_ref},
                               {"quote", c.quote},
                               {"description", c.description},
                               {"expected", gk::status_name(c.expected)}});
            out.emit(arr);
            return;
        }
        for (const auto& c : gk::claim_registry()) std::cout << c.id << "  [" << c.paper_ref << "] " << c.quote << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
