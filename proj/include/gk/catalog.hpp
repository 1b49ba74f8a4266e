#pragma once

#include "gk/cyclo.hpp"
#include "gk/expr.hpp"
#include "gk/numtheory.hpp"

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

enum class Group { E7, E8 };

inline unsigned group_rank(Group g) { return g == Group::E7 ? 7 : 8; }
inline std::string group_name(Group g) { return g == Group::E7 ? "E7" : "E8"; }

inline Group group_from_name(std::string_view s) {
    if (s == "E7" || s == "e7") return Group::E7;
    if (s == "E8" || s == "e8") return Group::E8;
    throw std::domain_error("unknown group: " + std::string(s));
}

/// A prime power q = p^m.
struct FieldParam {
    Integer q;
    Integer p;
    unsigned m = 0;

    static FieldParam of(const Integer& q) {
        if (q < 2) throw std::domain_error("field order must be at least 2");
        Factorization f = factorize(q);
        if (f.factors.size() != 1) throw std::domain_error("field order must be a prime power");
        const auto& [p, m] = *f.factors.begin();
        return FieldParam{q, p, m};
    }
};

/// The canonical sign for odd q: the eps with q = -eps*1 (mod 4).
inline Sign canonical_sign(const Integer& q) {
    if (mod(q, 2) == 0) throw std::domain_error("canonical sign is defined for odd q only");
    return mod(q, 4) == 1 ? Sign::minus : Sign::plus;
}

/// Index d' with Phi_d(-x) = +-Phi_{d'}(x).
inline unsigned negated_index(unsigned d) {
    if (d == 1) return 2;
    if (d == 2) return 1;
    if (d % 2 == 1) return 2 * d;
    if (d % 4 == 2) return d / 2;
    return d;
}

/// One cyclic factor of a torus: an order polynomial written as a product of
/// cyclotomic polynomials, evaluated at eps*q (or at plain q for the table
/// cells printed without eps).
struct CyclicFactorExpr {
    std::vector<unsigned> cyclo_indices;
    bool uses_eps = true;
    std::string display;

    unsigned degree() const {
        unsigned s = 0;
        for (unsigned d : cyclo_indices) s += detail::totient(d);
        return s;
    }
    Integer eval(const Integer& q, Sign eps) const {
        const Integer arg = uses_eps ? Integer(sign_value(eps) * q) : q;
        Integer v = 1;
        for (unsigned d : cyclo_indices) v *= eval_cyclotomic(d, arg);
        return v;
    }
};

enum class RowStatus { valid, flagged };

/// One row of the torus tables: verbatim display plus parsed factors.
struct TorusShape {
    Group group = Group::E7;
    std::string row_id;
    std::string display;
    std::vector<CyclicFactorExpr> factors;
    RowStatus status = RowStatus::valid;
    std::string note;

    unsigned total_degree() const {
        unsigned s = 0;
        for (const auto& f : factors) s += f.degree();
        return s;
    }
    std::string arg_sign_convention() const {
        bool any_eps = false, any_plain = false;
        for (const auto& f : factors) (f.uses_eps ? any_eps : any_plain) = true;
        if (any_eps && any_plain) return "mixed";
        return any_plain ? "plain-q" : "epsilon-q";
    }
};

namespace detail {

struct RawRow {
    const char* id;
    const char* display;
    const char* factors;  // factors separated by spaces, indices by dots; "-" = untranscribable
    const char* note = "";
};

inline TorusShape make_shape(Group g, const RawRow& raw) {
    TorusShape shape;
    shape.group = g;
    shape.row_id = raw.id;
    shape.display = raw.display;
    shape.note = raw.note;

    std::vector<std::vector<unsigned>> lists;
    if (std::string_view(raw.factors) != "-") {
        std::istringstream in(raw.factors);
        std::string tok;
        while (in >> tok) {
            std::vector<unsigned> ids;
            std::size_t pos = 0;
            while (pos < tok.size()) {
                std::size_t dot = tok.find('.', pos);
                if (dot == std::string::npos) dot = tok.size();
                ids.push_back(static_cast<unsigned>(std::stoul(tok.substr(pos, dot - pos))));
                pos = dot + 1;
            }
            lists.push_back(std::move(ids));
        }
    }

    const std::vector<std::string> cells = expr::split_cell(shape.display);
    if (lists.size() != cells.size()) {
        shape.status = RowStatus::flagged;
        if (shape.note.empty()) shape.note = "factor count does not match the printed cell";
        for (const auto& c : cells) shape.factors.push_back({{}, c.find("\xce\xb5") != std::string::npos, c});
        return shape;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CyclicFactorExpr f;
        f.cyclo_indices = lists[i];
        f.display = cells[i];
        f.uses_eps = cells[i].find("\xce\xb5") != std::string::npos;
        shape.factors.push_back(std::move(f));
    }
    if (shape.total_degree() != group_rank(g)) {
        shape.status = RowStatus::flagged;
        if (shape.note.empty())
            shape.note = "total degree " + std::to_string(shape.total_degree()) + " != " +
                         std::to_string(group_rank(g)) + " as printed";
    }
    return shape;
}

// Table of maximal tori of (2,q-1).E7(q); one record per printed cell,
// row-major. Three cells do not pass the rank-7 degree check as printed and
// ship flagged; they are excluded from every computation.
inline const RawRow kE7Rows[] = {
    {"t2-r1c1", "(Z_{\xce\xb5q-1})^7", "1 1 1 1 1 1 1"},
    {"t2-r1c2", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^6+(\xce\xb5q)^3+1}", "1 9"},
    {"t2-r2c1", "(Z_{\xce\xb5q-1})^5\xc3\x97Z_{q^2-1}", "1 1 1 1 1 1.2"},
    {"t2-r2c2", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2-\xce\xb5q+1}\xc3\x97Z_{q^4+q^2+1}", "1 6 3.6"},
    {"t2-r3c1", "(Z_{\xce\xb5q-1})^3\xc3\x97(Z_{q^2-1})^2", "1 1 1 1.2 1.2"},
    {"t2-r3c2", "Z_{\xce\xb5q-1}\xc3\x97(Z_{\xce\xb5q+1})^2\xc3\x97(Z_{q^2-1})^2", "1 2 2 1.2 1.2"},
    {"t2-r4c1", "(Z_{\xce\xb5q-1})^4\xc3\x97(Z_{(\xce\xb5q)^3-1})", "1 1 1 1 1.3"},
    {"t2-r4c2", "(Z_{\xce\xb5q-1})\xc3\x97(Z_{(\xce\xb5q)^3-1})^2", "1 1.3 1.3"},
    {"t2-r5c1", "Z_{\xce\xb5q-1}\xc3\x97(Z_{q^2-1})^3", "1 1.2 1.2 1.2"},
    {"t2-r5c2", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2-1}\xc3\x97Z_{q^4-1}", "1 1.2 1.2.4"},
    {"t2-r6c1", "(Z_{\xce\xb5q-1})^2\xc3\x97Z_{q^2-1}\xc3\x97Z_{(\xce\xb5q)^3-1}", "1 1 1.2 1.3"},
    {"t2-r6c2", "Z_{(\xce\xb5q)^3-1}\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^3-1)}", "1.3 2.1.3"},
    {"t2-r7c1", "(Z_{\xce\xb5q-1})^3\xc3\x97Z_{q^4-1}", "1 1 1 1.2.4"},
    {"t2-r7c2", "Z_{\xce\xb5q-1}\xc3\x97(Z_{\xce\xb5q+1})^2\xc3\x97Z_{q^4-1}", "1 2 2 1.2.4"},
    {"t2-r8c1", "Z_{\xce\xb5q-1}\xc3\x97(Z_{\xce\xb5q+1})^2\xc3\x97(Z_{q^2-1})^2", "1 2 2 1.2 1.2"},
    {"t2-r8c2", "Z_{\xce\xb5q-1}\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^5-1)}", "1 2.1.5"},
    {"t2-r9c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2-1}\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^3-1)}", "1 1.2 2.1.3"},
    {"t2-r9c2", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^6-1}", "1 1.2.3.6"},
    {"t2-r10c1", "(Z_{\xce\xb5q-1})^2\xc3\x97Z_{q^2+\xce\xb5q+1}\xc3\x97Z_{(\xce\xb5q)^3-1}", "1 1 3 1.3"},
    {"t2-r10c2", "(Z_{\xce\xb5q-1})\xc3\x97Z_{(q^2-1)(q^4+1)}", "1 1.2.8"},
    {"t2-r11c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2-1}\xc3\x97Z_{q^4-1}", "1 1.2 1.2.4"},
    {"t2-r11c2", "(Z_{q^2+\xce\xb5q+1})^2\xc3\x97Z_{(\xce\xb5q)^3-1}", "3 3 1.3"},
    {"t2-r12c1", "(Z_{\xce\xb5q-1})^2\xc3\x97Z_{(\xce\xb5q)^5-1}", "1 1 1.5"},
    {"t2-r12c2", "Z_{(\xce\xb5q)^3+1}\xc3\x97Z_{(\xce\xb5q)^3-1}\xc3\x97Z_{\xce\xb5q+1}", "2.6 1.3 2"},
    {"t2-r13c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2-1}\xc3\x97Z_{(\xce\xb5q-1)((\xce\xb5q)^3+1)}", "1 1.2 1.2.6"},
    {"t2-r13c2", "Z_{((\xce\xb5q)^3-1)(q^4-q^2+1)}", "1.3.12"},
    {"t2-r14c1", "(Z_{\xce\xb5q-1})^2\xc3\x97(Z_{(\xce\xb5q-1)(q^2+1)})^2", "1 1 1.4 1.4"},
    {"t2-r14c2", "Z_{(\xce\xb5q-1)(q^6+\xce\xb5q+1)}", "-",
     "q^6+\xce\xb5q+1 is not a product of cyclotomic polynomials as printed (braces also corrupted in the "
     "source); needs reconciliation against the source table"},
    {"t2-r15c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{q^2+\xce\xb5q+1}\xc3\x97Z_{(\xce\xb5q+1)(\xce\xb5q-1)}", "1 3 2.1"},
    {"t2-r15c2", "Z_{q^2-\xce\xb5q+1}\xc3\x97Z_{(\xce\xb5q-1)(q^4+q^2+1)}", "6 1.3.6"},
    {"t2-r16c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{(q^2-1)(q^4+1)}", "1 1.2.8"},
    {"t2-r16c2", "Z_{(\xce\xb5q)^3-1}\xc3\x97Z_{q^4-1}", "1.3 1.2.4"},
    {"t2-r17c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{(\xce\xb5q-1)(q^2+1)((\xce\xb5q)^3+1)}", "1 1.4.2.6"},
    {"t2-r17c2", "Z_{((\xce\xb5q)^5-1)(q^2+\xce\xb5q+1)}", "1.5.3"},
    {"t2-r18c1", "Z_{\xce\xb5q-1}\xc3\x97(Z_{q^2+\xce\xb5q+1})^3", "1 3 3 3"},
    {"t2-r18c2", "Z_{(\xce\xb5q-1)(q^2+1)}\xc3\x97Z_{q^2-1}\xc3\x97Z_{q^2+1}", "1.4 1.2 4"},
    {"t2-r19c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{\xce\xb5q+1}\xc3\x97Z_{(\xce\xb5q)^5+q^4+(\xce\xb5q)^3+q^2+\xce\xb5q+1}",
     "1 2 2.3.6"},
    {"t2-r19c2", "Z_{(\xce\xb5q)^7-1}", "1.7"},
    {"t2-r20c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{(q^2+\xce\xb5q+1)(q^4-q^2+1)}", "1 3.12"},
    {"t2-r20c2", "Z_{q^4+1}\xc3\x97Z_{(\xce\xb5q-1)(q^2+1)}", "8 1.4"},
};

// Table of maximal tori of E8(q), without the first cell ("Z_{eps q-1} x any
// torus of (2,q-1).E7(q)"), which is expanded over the E7 table at load.
// Cells r10c1 and r18c1 print plain q with no sign; they are kept as printed.
inline const RawRow kE8Rows[] = {
    {"t3-r1c2", "Z_{q^8-1}", "1.2.4.8"},
    {"t3-r2c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{(\xce\xb5q)^3-1}\xc3\x97Z_{q^4-1}", "1 1.3 1.2.4"},
    {"t3-r2c2", "Z_{q^2-1}\xc3\x97Z_{q^2+1}\xc3\x97Z_{q^4+1}", "1.2 4 8"},
    {"t3-r3c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{((\xce\xb5q)^5-1)(q^2+\xce\xb5q+1)}", "1 1.5.3"},
    {"t3-r3c2", "(Z_{q^2+1})^2\xc3\x97Z_{q^4-1}", "4 4 1.2.4"},
    {"t3-r4c1", "Z_{q^2-1}\xc3\x97(Z_{(q^2+1)((\xce\xb5q)-1)})^2", "1.2 4.1 4.1"},
    {"t3-r4c2", "Z_{((\xce\xb5q)+1)((\xce\xb5q)^3-1)(q^4+1)}", "2.1.3.8"},
    {"t3-r5c1", "Z_{\xce\xb5q-1}\xc3\x97Z_{(\xce\xb5q)^7-1}", "1 1.7"},
    {"t3-r5c2", "Z_{(q^2+1)(q^6-1)}", "4.1.2.3.6"},
    {"t3-r6c1", "Z_{(\xce\xb5q-1)(q^4+1)}\xc3\x97Z_{(\xce\xb5q-1)(q^2+1)}", "1.8 1.4"},
    {"t3-r6c2", "Z_{(q^2-1)(q^2+\xce\xb5q+1)(q^4-q^2+1)}", "1.2.3.12"},
    {"t3-r7c1", "(Z_{q^2-1})^4", "1.2 1.2 1.2 1.2"},
    {"t3-r7c2", "Z_{(q^2-1)(q^6+(\xce\xb5q)^3+1)}", "1.2.9"},
    {"t3-r8c1", "(Z_{q^2-1})^2\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^3-1)}", "1.2 1.2 2.1.3"},
    {"t3-r8c2", "(Z_{(q^2-(\xce\xb5q)+1)})^2\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^3-1)}", "6 6 2.1.3"},
    {"t3-r9c1", "(Z_{q^2-1})^2\xc3\x97Z_{q^4-1}", "1.2 1.2 1.2.4"},
    {"t3-r9c2", "Z_{(q^2-1)(q^6+1)}", "1.2.4.12"},
    {"t3-r10c1", "(Z_{(q+1)(q^3-1)})^2", "2.1.3 2.1.3",
     "printed with plain q, no sign; braces corrupted in the source"},
    {"t3-r10c2", "(Z_{q^2+\xce\xb5q+1})^4", "3 3 3 3"},
    {"t3-r11c1", "Z_{(\xce\xb5q+1)((\xce\xb5q)^3-1)}\xc3\x97Z_{q^4-1}", "2.1.3 1.2.4"},
    {"t3-r11c2", "(Z_{q^4+(\xce\xb5q)^3+q^2+\xce\xb5q+1})^2", "5 5"},
    {"t3-r12c1", "(Z_{q^4-1})^2", "1.2.4 1.2.4"},
    {"t3-r12c2", "Z_{q^2+\xce\xb5q+1}\xc3\x97Z_{q^6+(\xce\xb5q)^3+1}", "3 9"},
    {"t3-r13c1", "(Z_{q^2-1})^2\xc3\x97(Z_{q^2+1})^2", "1.2 1.2 4 4"},
    {"t3-r13c2", "(Z_{q^2+1})^4", "4 4 4 4"},
    {"t3-r14c1", "Z_{q^2-1}\xc3\x97Z_{(\xce\xb5q+1)((\xce\xb5q)^5-1)}", "1.2 2.1.5"},
    {"t3-r14c2", "Z_{q^2+1}\xc3\x97Z_{q^6+1}", "4 4.12"},
    {"t3-r15c1", "Z_{q^2-1}\xc3\x97Z_{q^6-1}", "1.2 1.2.3.6"},
    {"t3-r15c2", "(Z_{q^4+1})^2", "8 8"},
    {"t3-r16c1", "Z_{(\xce\xb5q-1)(q^2+1)}\xc3\x97Z_{(q^2+1)((\xce\xb5q)^3-1)}", "1.4 4.1.3"},
    {"t3-r16c2", "Z_{(q^4-q^2+1)(q^2+\xce\xb5q+1)}\xc3\x97Z_{q^2+\xce\xb5q+1}", "12.3 3"},
    {"t3-r17c1", "Z_{q^2-1}\xc3\x97Z_{(q^2-1)(q^4+1)}", "1.2 1.2.8"},
    {"t3-r17c2", "Z_{q^4+q^2+1}\xc3\x97Z_{q^2+\xce\xb5q+1}\xc3\x97Z_{q^2-\xce\xb5q+1}", "3.6 3 6"},
    {"t3-r18c1", "(Z_{q^2+\xce\xb5q+1})^2\xc3\x97Z_{(q+1)(q^3-1)}", "3 3 2.1.3",
     "last factor printed with plain q, no sign"},
    {"t3-r18c2", "Z_{q^8+(\xce\xb5q)^7-(\xce\xb5q)^5-q^4-(\xce\xb5q)^3+\xce\xb5q+1}", "30"},
    {"t3-r19c1", "Z_{(\xce\xb5q+1)(q^2+\xce\xb5q+1)((\xce\xb5q)^5-1)}", "2.3.1.5"},
    {"t3-r19c2", "Z_{q^8-q^4+1}", "24"},
    {"t3-r20c1", "Z_{((\xce\xb5q)+1)(q^2+1)((\xce\xb5q)^5-1)}", "2.4.1.5"},
    {"t3-r20c2", "Z_{q^8-q^6+q^4-q^2+1}", "20"},
    {"t3-r21c1", "Z_{((\xce\xb5q)+1)((\xce\xb5q)^7-1)}", "2.1.7"},
    {"t3-r21c2", "(Z_{q^4-q^2+1})^2", "12 12"},
};

}  // namespace detail

/// Full torus catalog of a group. For E8 the first table cell is expanded by
/// prefixing Z_{eps q-1} to every E7 shape; expansions of flagged E7 rows
/// stay flagged. Built once, immutable afterwards.
inline const std::vector<TorusShape>& torus_catalog(Group g) {
    static const std::vector<TorusShape> e7 = [] {
        std::vector<TorusShape> rows;
        for (const auto& raw : detail::kE7Rows) rows.push_back(detail::make_shape(Group::E7, raw));
        return rows;
    }();
    static const std::vector<TorusShape> e8 = [] {
        std::vector<TorusShape> rows;
        for (const TorusShape& base : e7) {
            TorusShape shape;
            shape.group = Group::E8;
            shape.row_id = "t3-r1c1+" + base.row_id;
            shape.display = "Z_{\xce\xb5q-1}\xc3\x97" + base.display;
            shape.factors.push_back({{1}, true, "\xce\xb5q-1"});
            shape.factors.insert(shape.factors.end(), base.factors.begin(), base.factors.end());
            shape.status = base.status;
            if (base.status == RowStatus::flagged) shape.note = "inherits flag of " + base.row_id;
            rows.push_back(std::move(shape));
        }
        for (const auto& raw : detail::kE8Rows) rows.push_back(detail::make_shape(Group::E8, raw));
        return rows;
    }();
    return g == Group::E7 ? e7 : e8;
}

/// Orders of the cyclic factors at (q, eps). Flagged rows are never evaluated.
inline std::vector<Integer> eval_torus(const TorusShape& shape, const Integer& q, Sign eps) {
    if (shape.status != RowStatus::valid)
        throw std::domain_error("eval_torus: row " + shape.row_id + " is flagged: " + shape.note);
    if (q < 2) throw std::domain_error("eval_torus: q must be at least 2");
    std::vector<Integer> orders;
    orders.reserve(shape.factors.size());
    for (const auto& f : shape.factors) orders.push_back(abs(f.eval(q, eps)));
    return orders;
}

/// |T| = product of the cyclic factor orders.
inline Integer torus_order(const TorusShape& shape, const Integer& q, Sign eps) {
    Integer o = 1;
    for (const Integer& v : eval_torus(shape, q, eps)) o *= v;
    return o;
}

/// exp(T) = lcm of the cyclic factor orders.
inline Integer torus_exponent(const TorusShape& shape, const Integer& q, Sign eps) {
    Integer e = 1;
    for (const Integer& v : eval_torus(shape, q, eps)) e = lcm(e, v);
    return e;
}

/// The set of d with Phi_d(q) dividing some valid torus order for generic q,
/// both signs normalized to argument +q.
inline const std::set<unsigned>& degree_set(Group g) {
    static const auto build = [](Group grp) {
        std::set<unsigned> s;
        for (const TorusShape& shape : torus_catalog(grp)) {
            if (shape.status != RowStatus::valid) continue;
            for (const auto& f : shape.factors) {
                for (unsigned d : f.cyclo_indices) {
                    s.insert(d);
                    if (f.uses_eps) s.insert(negated_index(d));
                }
            }
        }
        return s;
    };
    static const std::set<unsigned> e7 = build(Group::E7);
    static const std::set<unsigned> e8 = build(Group::E8);
    return g == Group::E7 ? e7 : e8;
}

/// Membership of a prime r in pi(G(q)): r = p, or e(r, q) lies in the degree
/// set. The equivalent torus-divisibility criterion is evaluated as well and
/// the two must agree.
inline bool is_in_pi(Group g, const Integer& q, const Integer& r) {
    if (!is_prime(r)) throw std::domain_error("is_in_pi: r must be prime");
    const FieldParam fp = FieldParam::of(q);
    if (r == fp.p) return true;

    const Integer e = mult_order(r, q);
    const bool by_order = e <= 30 && degree_set(g).count(static_cast<unsigned>(e)) > 0;

    bool by_divisibility = false;
    for (const TorusShape& shape : torus_catalog(g)) {
        if (shape.status != RowStatus::valid) continue;
        for (Sign eps : {Sign::plus, Sign::minus}) {
            if (torus_order(shape, q, eps) % r == 0) {
                by_divisibility = true;
                break;
            }
        }
        if (by_divisibility) break;
    }
    if (by_order != by_divisibility)
        throw std::logic_error("is_in_pi: order and divisibility criteria disagree for r = " + r.str());
    return by_order;
}

/// Exponent of a Sylow p-subgroup: the least p-power exceeding the height of
/// the highest root, 17 for E7. The E8 height 29 is not used by the torus
/// tables; it comes from the E8 root system.
inline Integer unipotent_exponent(Group g, const Integer& p) {
    if (!is_prime(p)) throw std::domain_error("unipotent_exponent: p must be prime");
    const unsigned height = g == Group::E7 ? 17 : 29;
    Integer e = p;
    while (e <= height) e *= p;
    return e;
}

/// One row of the table of simple groups S with t(S) >= 7 and t(2,S) >= 3.
/// Only the E7/E8 rows carry machine-checked class data; the rest is kept as
/// display text.
struct FamilyRow {
    std::string family;
    std::string condition;
    int t2 = 0;
    std::string rho2_display;
    std::vector<unsigned> rho2_classes;  // structured rows only
    std::string t_display;
    int t = 0;      // structured rows only
    bool structured = false;
};

inline const std::vector<FamilyRow>& family_table() {
    static const std::vector<FamilyRow> rows = {
        {"J4", "", 6, "{23,29,31,37,43}", {}, "7", 0, false},
        {"F1", "none", 5, "{29,41,59,71}", {}, "11", 0, false},
        {"F2", "", 3, "{31,47}", {}, "8", 0, false},
        {"Alt_n, n>=47", "n, n-2 are prime", 3, "{n, n-2}", {}, "", 0, false},
        {"Alt_n, n>=47", "n-1, n-3 are prime", 3, "{n-1, n-3}", {}, "", 0, false},
        {"A^tau_{n-1}(u), n>=13", "2 < (u-tau1)_{2} = n_{2}", 3, "{r_{n-1}(tau u), r_n(tau u)}", {}, "[(n+1)/2]", 0, false},
        {"A^tau_{n-1}(u), n>=13", "u = 0 (mod 2)", 3, "{r_{n-1}(tau u), r_n(tau u)}", {}, "[(n+1)/2]", 0, false},
        {"B_n(u), n>=9", "u = 0 (mod 2), n = 1 (mod 2)", 3, "{r_n, r_{2n}}", {}, "[(3n+5)/4]", 0, false},
        {"D_n(u), n>=9", "u = 5 (mod 8), n = 1 (mod 2)", 3, "{r_n, r_{2n-2}}", {}, "[(3n+1)/4]", 0, false},
        {"D_n(u), n>=9", "u = 0 (mod 2), n = 0 (mod 2)", 3, "{r_{n-1}, r_{2n-2}}", {}, "[(3n+1)/4]", 0, false},
        {"D_n(u), n>=9", "u = 0 (mod 2), n = 1 (mod 2)", 3, "{r_n, r_{2n-2}}", {}, "[(3n+1)/4]", 0, false},
        {"2D_n(u), n>=8", "u = 3 (mod 8), n = 1 (mod 2)", 3, "{r_{2n-2}, r_{2n}}", {}, "[(3n+4)/4]", 0, false},
        {"2D_n(u), n>=8", "u = 0 (mod 2), n = 0 (mod 2)", 4, "{r_{n-1}, r_{2n-2}, r_{2n}}", {}, "[(3n+4)/4]", 0, false},
        {"2D_n(u), n>=8", "u = 0 (mod 2), n = 1 (mod 2)", 3, "{r_{2n-2}, r_{2n}}", {}, "[(3n+4)/4]", 0, false},
        {"E7(u)", "u = 1 (mod 4)", 3, "{r_14, r_18}", {14, 18}, "8", 8, true},
        {"E7(u)", "u = 3 (mod 4)", 3, "{r_7, r_9}", {7, 9}, "8", 8, true},
        {"E7(u)", "u = 0 (mod 2)", 5, "{r_7, r_9, r_14, r_18}", {7, 9, 14, 18}, "8", 8, true},
        {"E8(u)", "none", 5, "{r_15, r_20, r_24, r_30}", {15, 20, 24, 30}, "12", 12, true},
    };
    return rows;
}

/// Classes non-adjacent to 2 (at argument +q) for an odd field order.
inline std::vector<unsigned> two_row_nonadjacent_classes(Group g, const Integer& q) {
    if (mod(q, 2) == 0) throw std::domain_error("the 2-row rule requires odd q");
    if (g == Group::E8) return {15, 20, 24, 30};
    return mod(q, 4) == 1 ? std::vector<unsigned>{14, 18} : std::vector<unsigned>{7, 9};
}

struct CatalogIssue {
    std::string row_id;
    std::string reason;
};

struct CatalogValidation {
    std::vector<CatalogIssue> flagged;
    std::vector<std::string> agreement_failures;  // empty when displays match parses
};

/// Degree invariant plus display/parse functional agreement, sampled over
/// 20 points (q, eps) per valid row.
inline CatalogValidation validate_catalog(Group g) {
    CatalogValidation report;
    for (const TorusShape& shape : torus_catalog(g)) {
        if (shape.status == RowStatus::flagged) {
            report.flagged.push_back({shape.row_id, shape.note});
            continue;
        }
        for (int qi = 2; qi <= 11; ++qi) {
            const Integer q = qi;
            for (Sign eps : {Sign::plus, Sign::minus}) {
                for (const auto& f : shape.factors) {
                    if (abs(f.eval(q, eps)) != abs(expr::eval(f.display, q, eps)))
                        report.agreement_failures.push_back(shape.row_id + ": factor '" + f.display +
                                                            "' at q=" + std::to_string(qi) + sign_char(eps));
                }
            }
        }
    }
    return report;
}

}  // namespace gk
