#include "gk/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace gk;

namespace {

unsigned cls_of(const PrimeGraph& g, const Integer& r) {
    auto i = g.find(r);
    REQUIRE(i.has_value());
    return g.vertices[*i].cls;
}

bool adj(const PrimeGraph& g, const Integer& a, const Integer& b) {
    auto i = g.find(a), j = g.find(b);
    REQUIRE(i.has_value());
    REQUIRE(j.has_value());
    return g.adjacent(*i, *j);
}

}  // namespace

TEST_CASE("build_graph basics at E7, q=5") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    REQUIRE(g.size() >= 10);
    CHECK(g.vertices.front().prime == 2);
    CHECK(g.vertices.front().is_two);
    CHECK_FALSE(g.find(5).has_value());  // the characteristic is never a vertex

    // 2 is non-adjacent exactly to the classes {14, 18} (q = 1 mod 4)
    for (std::size_t i = 1; i < g.size(); ++i) {
        const bool expected = g.vertices[i].cls != 14 && g.vertices[i].cls != 18;
        CHECK(g.adjacent(0, i) == expected);
    }

    // 29 lies in R_14(5); no vertex of class 18 is adjacent to it
    CHECK(cls_of(g, 29) == 14);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertices[i].cls == 18) CHECK_FALSE(g.adjacent(*g.find(29), i));

    CHECK(adj(g, 2, 3));
    CHECK(adj(g, 3, 13));  // both divide q^4-1, a common torus order

    // every odd vertex divides some valid torus order
    for (const auto& v : g.vertices) {
        if (v.is_two) continue;
        bool divides = false;
        for (const TorusShape& s : torus_catalog(Group::E7)) {
            if (s.status != RowStatus::valid) continue;
            for (Sign eps : {Sign::plus, Sign::minus})
                if (torus_order(s, 5, eps) % v.prime == 0) divides = true;
        }
        CHECK(divides);
    }
}

TEST_CASE("with-two mode rejects even q") {
    CHECK_THROWS_AS(build_graph(Group::E7, 8, GraphMode::with_two), std::domain_error);
    CHECK_NOTHROW(build_graph(Group::E7, 8, GraphMode::semisimple_odd));
}

TEST_CASE("semisimple mode has neither 2 nor p") {
    const PrimeGraph g = build_graph(Group::E7, 9, GraphMode::semisimple_odd);
    CHECK_FALSE(g.find(2).has_value());
    CHECK_FALSE(g.find(3).has_value());
}

TEST_CASE("independence number and local coclique targets at q=5") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    const CocliqueResult t = independence_number(g);
    CHECK(t.size == 8);
    REQUIRE(t.witness.size() == 8);
    std::set<unsigned> classes;
    for (const auto& p : t.witness) classes.insert(cls_of(g, p));
    CHECK(classes.size() == 8);  // one prime from each of 8 distinct e-classes

    const CocliqueResult t2 = local_coclique(g, 2);
    CHECK(t2.size == 3);
    REQUIRE(t2.anchored_vertex.has_value());
    CHECK(*t2.anchored_vertex == 2);
    std::set<unsigned> c2;
    for (const auto& p : t2.witness)
        if (p != 2) c2.insert(cls_of(g, p));
    CHECK(c2 == std::set<unsigned>{14, 18});

    CHECK_THROWS_AS(local_coclique(g, 5), std::domain_error);
}

TEST_CASE("local coclique classes at q=7") {
    const PrimeGraph g = build_graph(Group::E7, 7, GraphMode::with_two);
    const CocliqueResult t2 = local_coclique(g, 2);
    CHECK(t2.size == 3);
    std::set<unsigned> classes;
    for (const auto& p : t2.witness)
        if (p != 2) classes.insert(cls_of(g, p));
    CHECK(classes == std::set<unsigned>{7, 9});
}

TEST_CASE("solver corner cases") {
    PrimeGraph empty;
    empty.q = 5;
    CHECK(independence_number(empty).size == 0);

    PrimeGraph single;
    single.q = 5;
    single.vertices.push_back({3, 2, false});
    single.adj.assign(1, std::vector<bool>(1, false));
    const CocliqueResult r = local_coclique(single, 3);
    CHECK(r.size == 1);
    CHECK(r.witness == std::vector<Integer>{3});
}

TEST_CASE("deterministic construction and witnesses") {
    const PrimeGraph a = build_graph(Group::E7, 13, GraphMode::with_two);
    const PrimeGraph b = build_graph(Group::E7, 13, GraphMode::with_two);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.vertices[i].prime == b.vertices[i].prime);
        CHECK(a.adj[i] == b.adj[i]);
    }
    CHECK(independence_number(a).witness == independence_number(b).witness);
    CHECK(local_coclique(a, 2).witness == local_coclique(b, 2).witness);
}

TEST_CASE("degree argument: large classes are pairwise non-adjacent") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    for (std::size_t i = 1; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const unsigned ci = g.vertices[i].cls, cj = g.vertices[j].cls;
            if (ci == cj) continue;
            if (detail::totient(ci) + detail::totient(cj) > 7) CHECK_FALSE(g.adjacent(i, j));
        }
    }
}

TEST_CASE("compact projection at E7, q=5") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    const CompactGraph cg = compact_projection(g);
    CHECK(cg.nodes.size() <= 14);  // at most 13 classes plus the vertex 2
    CHECK(cg.nodes.front().is_two);
    std::size_t total = 0;
    for (const auto& n : cg.nodes) total += n.primes.size();
    CHECK(total == g.size());
}

TEST_CASE("compact projection flags the E8 class-4 irregularity") {
    // For q = +-2 (mod 5), 5 lies in R_4(q) and divides Phi_20(q), so 5 gains
    // an edge towards class 20 that the other class-4 primes lack. At q=13
    // the class is {5, 17}, exposing the pair.
    const PrimeGraph g = build_graph(Group::E8, 13, GraphMode::with_two);
    bool has_class4_partner = false;
    for (const auto& v : g.vertices) has_class4_partner = has_class4_partner || (v.cls == 4 && v.prime != 5);
    REQUIRE(has_class4_partner);
    CHECK_THROWS_AS(compact_projection(g), NonUniformClassError);

    // q = 1 (mod 5) keeps every class uniform
    const PrimeGraph clean = build_graph(Group::E8, 11, GraphMode::with_two);
    CHECK_NOTHROW(compact_projection(clean));
}

TEST_CASE("divisibility witnesses") {
    const Sign eps = canonical_sign(5);
    const Integer k7 = greatest_primitive_divisor(sign_value(eps) * Integer(5), 7);
    const Integer k9 = greatest_primitive_divisor(sign_value(eps) * Integer(5), 9);
    CHECK(divisibility_witnesses(Group::E7, 5, eps, k7) == std::vector<std::string>{"t2-r19c2"});
    CHECK(divisibility_witnesses(Group::E7, 5, eps, k9) == std::vector<std::string>{"t2-r1c2"});
    CHECK(divisibility_witnesses(Group::E7, 5, eps, 1).size() == 37);
    CHECK_THROWS_AS(divisibility_witnesses(Group::E7, 5, eps, 0), std::domain_error);
}

TEST_CASE("dot export shape") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    const std::string dot = to_dot(g);
    CHECK(dot.find("graph gk_e7_q5 {") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("\"29 (e=14)\"") != std::string::npos);
}

TEST_CASE("json round trip reproduces coclique results") {
    for (int q : {5, 7}) {
        const PrimeGraph g = build_graph(Group::E7, q, GraphMode::with_two);
        const PrimeGraph h = graph_from_json(to_json(g));
        REQUIRE(h.size() == g.size());
        CHECK(independence_number(h).size == independence_number(g).size);
        CHECK(independence_number(h).witness == independence_number(g).witness);
        CHECK(local_coclique(h, 2).witness == local_coclique(g, 2).witness);
    }
}

TEST_CASE("edge provenance present") {
    const PrimeGraph g = build_graph(Group::E7, 5, GraphMode::with_two);
    std::size_t edges = 0, with_note = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j)) {
                ++edges;
                if (g.edge_provenance.count({i, j})) ++with_note;
            }
    CHECK(edges == with_note);
    CHECK(g.edge_provenance.at(std::pair<std::size_t, std::size_t>(0, 1)) == "2-row rule");
}
