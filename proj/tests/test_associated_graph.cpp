#include <catch2/catch_amalgamated.hpp>

#include <mgspec/associated_graph.hpp>
#include <mgspec/mixed_graph.hpp>

#include <algorithm>

using namespace mgspec;

namespace {

MixedGraph mixed_two_path() {
    MixedGraph g(2);
    g.add_edge(0, 1);
    g.add_arc(0, 1);
    return g;
}

}  // namespace

TEST_CASE("associated graph of the mixed two-path is a path on four vertices") {
    auto g = mixed_two_path();
    auto a = build_associated(g);
    REQUIRE(a.order == 4);
    // vertices: 0=v1', 1=v2', 2=v1'', 3=v2''
    CHECK(a.at(0, 1) == 1);  // copy edge
    CHECK(a.at(2, 3) == 1);  // copy edge
    CHECK(a.at(0, 3) == 1);  // arc v1->v2
    CHECK(a.at(0, 2) == 0);
    CHECK(a.at(1, 2) == 0);
    CHECK(a.at(1, 3) == 0);
    auto deg = a.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<long long>{1, 1, 2, 2});

    auto rep = analyze_components(a);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].is_path);
    CHECK(rep.components[0].bipartite);
    CHECK_FALSE(rep.components[0].trivial);
}

TEST_CASE("associated graph of the complete mixed pair is a four-cycle") {
    auto g = family(FamilyKind::mixed_complete, {2});
    auto a = build_associated(g);
    auto deg = a.degrees();
    CHECK(std::all_of(deg.begin(), deg.end(), [](long long d) { return d == 2; }));
    auto rep = analyze_components(a);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].bipartite);
    CHECK_FALSE(rep.components[0].is_path);
}

TEST_CASE("associated graph of the undirected triangle is two triangles") {
    auto g = family(FamilyKind::cycle, {3});
    auto a = build_associated(g);
    auto rep = analyze_components(a);
    REQUIRE(rep.components.size() == 2);
    for (const auto& comp : rep.components) {
        CHECK(comp.vertices.size() == 3);
        CHECK_FALSE(comp.bipartite);
        CHECK_FALSE(comp.is_path);
    }
}

TEST_CASE("oriented cycle with a single direction splits into disjoint edges") {
    auto g = family(FamilyKind::oriented_cycle_same, {3});
    auto rep = analyze_components(build_associated(g));
    CHECK(rep.components.size() == 3);
    for (const auto& comp : rep.components) {
        CHECK(comp.vertices.size() == 2);
        CHECK(comp.is_path);
    }
}

TEST_CASE("loops and directed loops land on the diagonal blocks") {
    MixedGraph g(1);
    g.add_edge(0, 0);
    auto a = build_associated(g);
    CHECK(a.at(0, 0) == 2);
    CHECK(a.at(1, 1) == 2);
    CHECK(a.at(0, 1) == 0);

    MixedGraph h(1);
    h.add_arc(0, 0);
    auto b = build_associated(h);
    CHECK(b.at(0, 0) == 0);
    CHECK(b.at(0, 1) == 1);
}

TEST_CASE("directed loop complete graph on two vertices yields the complete associated graph") {
    MixedGraph g(2);
    g.add_edge(0, 1);
    g.add_arc(0, 1);
    g.add_arc(1, 0);
    g.add_arc(0, 0);
    g.add_arc(1, 1);
    auto a = build_associated(g);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(a.at(i, j) == 1);
    auto pred = predicates(g);
    CHECK(pred.directed_loop_complete);
    CHECK(pred.uniconnected);
}

TEST_CASE("trivial components are isolated associated vertices") {
    MixedGraph g(2);  // edgeless
    auto rep = analyze_components(build_associated(g));
    CHECK(rep.components.size() == 4);
    CHECK(rep.n_trivial == 4);
    for (const auto& comp : rep.components) CHECK(comp.trivial);

    MixedGraph h(2);
    h.add_arc(0, 1);  // v1'' and v2' stay isolated
    auto rep2 = analyze_components(build_associated(h));
    CHECK(rep2.n_trivial == 2);
    CHECK(rep2.components.size() == 3);
}

TEST_CASE("predicates") {
    auto g = mixed_two_path();
    auto pred = predicates(g);
    CHECK(pred.uniconnected);
    CHECK(pred.has_AB);
    CHECK(pred.ap_all_components);
    CHECK(pred.plain);
    CHECK(pred.loopless);
    CHECK(pred.simple);
    CHECK_FALSE(pred.directed_loop_complete);
    CHECK(pred.n_AB_nontrivial_components == 1);
    CHECK(pred.n_trivial_components == 0);

    auto c3 = family(FamilyKind::cycle, {3});
    auto pc = predicates(c3);
    CHECK_FALSE(pc.uniconnected);
    CHECK_FALSE(pc.has_AB);
    CHECK_FALSE(pc.ap_all_components);

    MixedGraph multi(2);
    multi.add_edge(0, 1, 2);
    auto pm = predicates(multi);
    CHECK_FALSE(pm.simple);
    CHECK_FALSE(pm.plain);

    MixedGraph looped(1);
    looped.add_edge(0, 0);
    auto pl = predicates(looped);
    CHECK(pl.plain);
    CHECK_FALSE(pl.loopless);
    CHECK_FALSE(pl.simple);
}

TEST_CASE("bipartite oracle agrees with component analysis") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_mixed(seed, 1 + static_cast<int>(seed % 6), 2, 2, 0.5);
        auto a = build_associated(g);
        auto rep = analyze_components(a);
        auto coloring = bipartite_oracle(a);
        bool all_bip = std::all_of(rep.components.begin(), rep.components.end(),
                                   [](const ComponentInfo& c) { return c.bipartite; });
        CHECK(coloring.has_value() == all_bip);
    }
}

TEST_CASE("mixed distances on the two-path") {
    auto g = mixed_two_path();
    auto d = mixed_distance(g, 0, 1);
    REQUIRE(d.d1.has_value());
    CHECK(*d.d1 == 1);
    REQUIRE(d.d2.has_value());
    CHECK(*d.d2 == 1);
    REQUIRE(d.d3.has_value());
    CHECK(*d.d3 == 3);
    REQUIRE(d.d4.has_value());
    CHECK(*d.d4 == 1);
    REQUIRE(d.d.has_value());
    CHECK(*d.d == 1);

    auto same = mixed_distance(g, 0, 0);
    REQUIRE(same.d.has_value());
    CHECK(*same.d == 0);
}

TEST_CASE("distances in a disconnected graph are unset") {
    MixedGraph g(3);
    g.add_edge(0, 1);
    auto d = mixed_distance(g, 0, 2);
    CHECK_FALSE(d.d1.has_value());
    CHECK_FALSE(d.d.has_value());
}

TEST_CASE("set distance") {
    auto p3 = family(FamilyKind::path, {3});
    CHECK(set_distance(p3, {0}, {2}) == 2);
    CHECK(set_distance(p3, {0, 1}, {2}) == 1);
    CHECK(set_distance(p3, {0}, {0}) == 0);
    CHECK_THROWS_AS(set_distance(p3, {}, {0}), std::invalid_argument);

    MixedGraph g(3);
    g.add_edge(0, 1);
    CHECK_FALSE(set_distance(g, {0}, {2}).has_value());
}

TEST_CASE("bfs_distances validates sources") {
    auto a = build_associated(mixed_two_path());
    CHECK_THROWS_AS(bfs_distances(a, {9}), std::out_of_range);
    auto dist = bfs_distances(a, {0});
    REQUIRE(dist[3].has_value());
    CHECK(*dist[3] == 1);
}
