#pragma once

#include "gk/catalog.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gk {

enum class GraphMode { semisimple_odd, with_two };

inline std::string mode_name(GraphMode m) { return m == GraphMode::semisimple_odd ? "semisimple" : "with-two"; }

inline GraphMode mode_from_name(std::string_view s) {
    if (s == "semisimple" || s == "semisimple-odd") return GraphMode::semisimple_odd;
    if (s == "with-two") return GraphMode::with_two;
    throw std::domain_error("unknown graph mode: " + std::string(s));
}

struct VertexInfo {
    Integer prime;
    unsigned cls = 0;  // e(prime, q)
    bool is_two = false;
};

/// Prime graph on the odd primes dividing valid torus orders (the
/// characteristic is never a vertex), plus the rule-based vertex 2 in
/// with-two mode. Vertices are sorted by prime.
struct PrimeGraph {
    Group group = Group::E7;
    Integer q;
    GraphMode mode = GraphMode::semisimple_odd;
    std::vector<VertexInfo> vertices;
    std::vector<std::vector<bool>> adj;
    std::map<std::pair<std::size_t, std::size_t>, std::string> edge_provenance;
    std::vector<std::string> warnings;

    std::size_t size() const { return vertices.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adj[i][j]; }

    std::optional<std::size_t> find(const Integer& r) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].prime == r) return i;
        return std::nullopt;
    }
    void add_edge(std::size_t i, std::size_t j, const std::string& provenance) {
        if (i == j) return;
        if (!adj[i][j]) {
            adj[i][j] = adj[j][i] = true;
            edge_provenance.emplace(std::minmax(i, j), provenance);
        }
    }
};

namespace detail {

class BitVec {
  public:
    explicit BitVec(std::size_t n = 0) : bits_((n + 63) / 64, 0), n_(n) {}
    void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }
    std::size_t first() const {
        for (std::size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(bits_[k]));
        return n_;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
        return *this;
    }
    BitVec& and_not(const BitVec& o) {
        for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= ~o.bits_[k];
        return *this;
    }

  private:
    std::vector<std::uint64_t> bits_;
    std::size_t n_ = 0;
};

/// Exact maximum independent set: branch and bound as a maximum clique
/// search on the complement, with a greedy coloring bound.
class MisSolver {
  public:
    explicit MisSolver(const PrimeGraph& g) : n_(g.size()), comp_(n_, BitVec(n_)) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && !g.adjacent(i, j)) comp_[i].set(j);
    }

    std::size_t max_independent(const BitVec& allowed) {
        best_ = 0;
        expand(allowed, 0);
        return best_;
    }

    BitVec all(const PrimeGraph& g) const {
        BitVec v(n_);
        for (std::size_t i = 0; i < n_; ++i) v.set(i);
        (void)g;
        return v;
    }
    const BitVec& nonneighbors(std::size_t v) const { return comp_[v]; }

  private:
    std::size_t n_;
    std::vector<BitVec> comp_;
    std::size_t best_ = 0;

    void expand(BitVec candidates, std::size_t current) {
        if (candidates.empty()) {
            if (current > best_) best_ = current;
            return;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        BitVec uncolored = candidates;
        std::size_t color = 0;
        while (!uncolored.empty()) {
            ++color;
            BitVec available = uncolored;
            while (!available.empty()) {
                std::size_t v = available.first();
                available.reset(v);
                uncolored.reset(v);
                available.and_not(comp_[v]);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current + bound[i] <= best_) return;
            std::size_t v = order[i];
            BitVec next = candidates;
            next &= comp_[v];
            expand(next, current + 1);
            candidates.reset(v);
        }
    }
};

}  // namespace detail

/// Builds GK(group(q)) from the torus catalog. Odd vertices are adjacent iff
/// their product divides some valid torus order (both signs); the 2-row is
/// the rule from the coclique table, never derived from raw orders.
inline PrimeGraph build_graph(Group g, const Integer& q, GraphMode mode) {
    const FieldParam fp = FieldParam::of(q);
    if (mode == GraphMode::with_two && fp.p == 2)
        throw std::domain_error("with-two mode requires odd q");

    struct EvaluatedOrder {
        Integer order;
        std::string provenance;
        PrimeSet primes;
    };
    std::vector<EvaluatedOrder> orders;
    for (const TorusShape& shape : torus_catalog(g)) {
        if (shape.status != RowStatus::valid) continue;
        for (Sign eps : {Sign::plus, Sign::minus}) {
            Integer o = torus_order(shape, q, eps);
            orders.push_back({o, shape.row_id + "@" + sign_char(eps), factorize(o).prime_set()});
        }
    }

    PrimeSet primes;
    for (const auto& eo : orders) primes.insert(eo.primes.begin(), eo.primes.end());
    primes.erase(Integer(2));
    primes.erase(fp.p);

    PrimeGraph graph;
    graph.group = g;
    graph.q = q;
    graph.mode = mode;
    if (mode == GraphMode::with_two) graph.vertices.push_back({2, static_cast<unsigned>(mult_order(2, q)), true});
    for (const Integer& r : primes)
        graph.vertices.push_back({r, static_cast<unsigned>(mult_order(r, q)), false});
    graph.adj.assign(graph.size(), std::vector<bool>(graph.size(), false));

    for (const auto& eo : orders) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < graph.size(); ++i) {
            if (graph.vertices[i].is_two) continue;
            if (eo.primes.count(graph.vertices[i].prime)) members.push_back(i);
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                graph.add_edge(members[a], members[b], eo.provenance);
    }

    if (mode == GraphMode::with_two) {
        const auto nonadj = two_row_nonadjacent_classes(g, q);
        for (std::size_t i = 1; i < graph.size(); ++i) {
            const unsigned cls = graph.vertices[i].cls;
            if (std::find(nonadj.begin(), nonadj.end(), cls) == nonadj.end())
                graph.add_edge(0, i, "2-row rule");
        }
    }

    // Primes that occur only in flagged rows are not vertices; surface them.
    PrimeSet flagged_only;
    for (const TorusShape& shape : torus_catalog(g)) {
        if (shape.status != RowStatus::flagged) continue;
        for (Sign eps : {Sign::plus, Sign::minus}) {
            Integer v = 1;
            for (const auto& f : shape.factors) v *= expr::eval(f.display, q, eps);
            if (v == 0) continue;
            for (const Integer& r : factorize(v).prime_set()) {
                if (r == 2 || r == fp.p || primes.count(r)) continue;
                flagged_only.insert(r);
            }
        }
    }
    for (const Integer& r : flagged_only)
        graph.warnings.push_back("prime " + r.str() + " divides only flagged torus orders; excluded");
    return graph;
}

struct CocliqueResult {
    std::size_t size = 0;
    std::vector<Integer> witness;
    std::optional<Integer> anchored_vertex;
};

namespace detail {

inline CocliqueResult canonical_coclique(const PrimeGraph& g, std::optional<std::size_t> anchor) {
    MisSolver solver(g);
    BitVec allowed = solver.all(g);
    std::vector<std::size_t> chosen;
    if (anchor) {
        chosen.push_back(*anchor);
        allowed &= solver.nonneighbors(*anchor);
    }
    const std::size_t target = chosen.size() + solver.max_independent(allowed);
    // Vertices are sorted by prime; accepting the first vertex that keeps the
    // maximum attainable yields the smallest-prime-first witness.
    while (chosen.size() < target) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!allowed.test(v)) continue;
            BitVec next = allowed;
            next &= solver.nonneighbors(v);
            next.reset(v);
            if (chosen.size() + 1 + solver.max_independent(next) == target) {
                chosen.push_back(v);
                allowed = next;
                break;
            }
            allowed.reset(v);
        }
    }
    CocliqueResult res;
    res.size = target;
    for (std::size_t v : chosen) res.witness.push_back(g.vertices[v].prime);
    std::sort(res.witness.begin(), res.witness.end());
    if (anchor) res.anchored_vertex = g.vertices[*anchor].prime;
    return res;
}

}  // namespace detail

/// t(G): exact maximum coclique with deterministic smallest-prime witness.
inline CocliqueResult independence_number(const PrimeGraph& g) {
    return detail::canonical_coclique(g, std::nullopt);
}

/// t(r, G): maximum coclique constrained to contain r.
inline CocliqueResult local_coclique(const PrimeGraph& g, const Integer& r) {
    auto idx = g.find(r);
    if (!idx) throw std::domain_error("local_coclique: " + r.str() + " is not a vertex");
    return detail::canonical_coclique(g, idx);
}

struct NonUniformClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompactNode {
    std::string label;
    unsigned cls = 0;
    bool is_two = false;
    std::vector<Integer> primes;
};

struct CompactGraph {
    std::vector<CompactNode> nodes;
    std::vector<std::vector<bool>> adj;
};

/// Quotient by e-classes. Every class must be a clique with one neighborhood;
/// otherwise the compact form is not well defined and the witness pair is
/// reported. Vertex 2 stays its own node.
inline CompactGraph compact_projection(const PrimeGraph& g) {
    std::map<unsigned, std::vector<std::size_t>> classes;
    std::optional<std::size_t> two;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.vertices[i].is_two)
            two = i;
        else
            classes[g.vertices[i].cls].push_back(i);
    }
    for (const auto& [cls, members] : classes) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const std::size_t u = members[a], v = members[b];
                if (!g.adjacent(u, v))
                    throw NonUniformClassError("class e=" + std::to_string(cls) + " is not a clique: " +
                                               g.vertices[u].prime.str() + ", " + g.vertices[v].prime.str());
                for (std::size_t w = 0; w < g.size(); ++w) {
                    if (w == u || w == v) continue;
                    if (g.vertices[w].is_two || g.vertices[w].cls != cls) {
                        if (g.adjacent(u, w) != g.adjacent(v, w))
                            throw NonUniformClassError(
                                "class e=" + std::to_string(cls) + " has non-uniform neighborhoods: " +
                                g.vertices[u].prime.str() + " vs " + g.vertices[v].prime.str() + " at " +
                                g.vertices[w].prime.str());
                    }
                }
            }
        }
    }
    CompactGraph cg;
    std::vector<std::size_t> reps;
    if (two) {
        cg.nodes.push_back({"2", g.vertices[*two].cls, true, {2}});
        reps.push_back(*two);
    }
    for (const auto& [cls, members] : classes) {
        CompactNode node;
        node.label = "R" + std::to_string(cls);
        node.cls = cls;
        for (std::size_t i : members) node.primes.push_back(g.vertices[i].prime);
        cg.nodes.push_back(std::move(node));
        reps.push_back(members.front());
    }
    cg.adj.assign(cg.nodes.size(), std::vector<bool>(cg.nodes.size(), false));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            cg.adj[i][j] = cg.adj[j][i] = g.adjacent(reps[i], reps[j]);
    return cg;
}

/// Row ids of the valid tori whose order at (q, eps) is divisible by n.
inline std::vector<std::string> divisibility_witnesses(Group g, const Integer& q, Sign eps, const Integer& n) {
    if (n == 0) throw std::domain_error("divisibility_witnesses: n must be nonzero");
    std::vector<std::string> out;
    for (const TorusShape& shape : torus_catalog(g)) {
        if (shape.status != RowStatus::valid) continue;
        if (torus_order(shape, q, eps) % n == 0) out.push_back(shape.row_id);
    }
    return out;
}

inline std::string to_dot(const PrimeGraph& g) {
    std::ostringstream out;
    out << "graph gk_" << (g.group == Group::E7 ? "e7" : "e8") << "_q" << g.q << " {\n";
    out << "  layout=neato;\n  node [shape=ellipse];\n";
    std::map<unsigned, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g.vertices[i].is_two) classes[g.vertices[i].cls].push_back(i);
    const auto label = [&](std::size_t i) {
        return "\"" + g.vertices[i].prime.str() + " (e=" + std::to_string(g.vertices[i].cls) + ")\"";
    };
    for (const auto& [cls, members] : classes) {
        out << "  subgraph cluster_e" << cls << " {\n    style=dashed;\n    label=\"R" << cls << "\";\n";
        for (std::size_t i : members) out << "    " << label(i) << ";\n";
        out << "  }\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertices[i].is_two) out << "  " << label(i) << ";\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j)) out << "  " << label(i) << " -- " << label(j) << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json to_json(const PrimeGraph& g, bool raw_numbers = false) {
    const auto num = [&](const Integer& v) -> nlohmann::json {
        if (raw_numbers && v <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(v);
        return v.str();
    };
    nlohmann::json j;
    j["group"] = group_name(g.group);
    j["q"] = num(g.q);
    j["mode"] = mode_name(g.mode);
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"prime", num(v.prime)}, {"class", v.cls}});
    j["edges"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t k = i + 1; k < g.size(); ++k)
            if (g.adjacent(i, k)) j["edges"].push_back({num(g.vertices[i].prime), num(g.vertices[k].prime)});
    return j;
}

inline PrimeGraph graph_from_json(const nlohmann::json& j) {
    const auto num = [](const nlohmann::json& v) {
        return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>());
    };
    PrimeGraph g;
    g.group = group_from_name(j.at("group").get<std::string>());
    g.q = num(j.at("q"));
    g.mode = mode_from_name(j.at("mode").get<std::string>());
    for (const auto& v : j.at("vertices")) {
        Integer p = num(v.at("prime"));
        g.vertices.push_back({p, v.at("class").get<unsigned>(), p == 2});
    }
    g.adj.assign(g.size(), std::vector<bool>(g.size(), false));
    for (const auto& e : j.at("edges")) {
        auto a = g.find(num(e.at(0))), b = g.find(num(e.at(1)));
        if (!a || !b) throw std::domain_error("graph_from_json: edge endpoint is not a vertex");
        g.add_edge(*a, *b, "imported");
    }
    return g;
}

}  // namespace gk
