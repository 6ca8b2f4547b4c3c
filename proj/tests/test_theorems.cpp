#include <catch2/catch_amalgamated.hpp>

#include <mgspec/theorems.hpp>

#include <algorithm>
#include <cmath>
#include <set>

using namespace mgspec;

namespace {

MixedGraph mixed_two_path() {
    MixedGraph g(2);
    g.add_edge(0, 1);
    g.add_arc(0, 1);
    return g;
}

void check_all_hold(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) {
        INFO(r.bound_id << " " << r.witness);
        CHECK(r.holds);
        if (r.slack.has_value()) CHECK(*r.slack > -1e-8);
        if (!r.applicable) {
            CHECK_FALSE(r.lhs.has_value());
            CHECK_FALSE(r.rhs.has_value());
        }
    }
}

}  // namespace

TEST_CASE("registries are disjoint and non-empty") {
    CHECK(identity_ids().size() == 9);
    CHECK(characterization_ids().size() == 8);
    CHECK(bound_ids().size() == 27);
    std::set<std::string> all;
    for (const auto& id : identity_ids()) all.insert(id);
    for (const auto& id : characterization_ids()) all.insert(id);
    for (const auto& id : bound_ids()) all.insert(id);
    CHECK(all.size() == 44);
}

TEST_CASE("everything holds on the mixed two-path") {
    EvalContext c(mixed_two_path());
    auto reports = run_all(c);
    CHECK(reports.size() == 44);
    check_all_hold(reports);
}

TEST_CASE("trace identities carry exact values in the witness") {
    EvalContext c(mixed_two_path());
    auto r = verify_identity(c, "trace_L");
    CHECK(r.applicable);
    CHECK(r.holds);
    CHECK(r.witness.find("6") != std::string::npos);
    auto q = verify_identity(c, "trace_Q");
    CHECK(q.witness.find("6") != std::string::npos);
}

TEST_CASE("averaged eigenvalue bound on the two-path") {
    EvalContext c(mixed_two_path());
    auto r = verify_bound(c, "L.avg");
    REQUIRE(r.applicable);
    CHECK(r.holds);
    // nu_{2n-1} <= 2 <= nu_1 with nu_3 = 2 - sqrt 2, nu_1 = 2 + sqrt 2
    CHECK(std::abs(c.nu(1) - (2.0 + std::sqrt(2.0))) < 1e-9);
    CHECK(std::abs(c.nu(3) - (2.0 - std::sqrt(2.0))) < 1e-9);
    REQUIRE(r.slack.has_value());
    CHECK(std::abs(*r.slack - std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("regular shift identities") {
    EvalContext c(family(FamilyKind::mixed_complete, {2}));
    for (const char* id : {"regular_shift_L", "regular_shift_Q", "regular_shift_N"}) {
        auto r = verify_identity(c, id);
        CHECK(r.applicable);
        CHECK(r.holds);
    }
    EvalContext p(mixed_two_path());
    auto r = verify_identity(p, "regular_shift_L");
    CHECK_FALSE(r.applicable);
    CHECK(r.holds);
}

TEST_CASE("characteristic polynomial identity needs every component bipartite") {
    EvalContext c(mixed_two_path());
    CHECK(verify_identity(c, "charpoly_LQ_equal_under_AB").holds);

    EvalContext tri(family(FamilyKind::cycle, {3}));
    auto r = verify_identity(tri, "charpoly_LQ_equal_under_AB");
    CHECK_FALSE(r.applicable);  // the identity is vacuous without the bipartite hypothesis
    auto chi = verify_characterization(tri, "q_zero_mult_eq_AB_components");
    CHECK(chi.holds);
}

TEST_CASE("rank and zero multiplicity characterizations") {
    MixedGraph g(3);
    g.add_edge(0, 1);  // one non-trivial component plus isolated associated vertices
    EvalContext c(g);
    CHECK(verify_identity(c, "rank_L").holds);
    CHECK(verify_characterization(c, "n_zero_mult_eq_components").holds);
    CHECK(verify_characterization(c, "q_zero_mult_eq_AB_components").holds);
}

TEST_CASE("signless extremes") {
    EvalContext empty(MixedGraph(2));
    CHECK(verify_characterization(empty, "xi1_zero_iff_edgeless").holds);
    auto n43 = verify_bound(empty, "N.43");
    CHECK(n43.applicable);
    CHECK(n43.holds);

    EvalContext km2(family(FamilyKind::mixed_complete, {2}));
    auto r = verify_characterization(km2, "xi1_eq4_iff_alt_cycle");
    CHECK(r.holds);  // associated graph is a 4-cycle and xi_1 = 4
    CHECK(std::abs(km2.xi(1) - 4.0) < 1e-9);

    EvalContext path(mixed_two_path());
    CHECK(verify_characterization(path, "xi1_lt4_iff_AP").holds);
    CHECK(path.xi(1) < 4.0);
}

TEST_CASE("signless range bound attains its lower end on path-like graphs") {
    EvalContext c(mixed_two_path());
    auto r = verify_bound(c, "Q.range");
    REQUIRE(r.applicable);
    CHECK(r.holds);
    CHECK(r.witness.find("equality") != std::string::npos);
    double expect = 2.0 + 2.0 * std::cos(3.14159265358979323846 / 4.0);
    CHECK(std::abs(c.xi(1) - expect) < 1e-9);
}

TEST_CASE("largest laplacian eigenvalue reaches twice the order only on the complete mixed graph") {
    EvalContext c(family(FamilyKind::mixed_complete, {3}));
    auto r = verify_bound(c, "L.2n");
    REQUIRE(r.applicable);
    CHECK(r.holds);
    CHECK(std::abs(c.nu(1) - 6.0) < 1e-9);
    CHECK(r.witness.find("equality") != std::string::npos);
}

TEST_CASE("normalized deviation bounds") {
    EvalContext c(mixed_two_path());
    auto avg = verify_bound(c, "N.avg");
    CHECK(avg.applicable);
    CHECK(avg.holds);
    auto n43 = verify_bound(c, "N.43");
    CHECK(n43.holds);
    CHECK(c.normalized_deviation() <= 1.0 + 1e-12);
}

TEST_CASE("distance bound regression") {
    // path on three vertices with a digon on the far edge; the two-sided
    // eigenvalue pairing must keep X = {v1}, Y = {v3} feasible at distance 2
    MixedGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_arc(1, 2);
    g.add_arc(2, 1);
    EvalContext c(g);
    auto r = verify_bound(c, "N.kdist");
    REQUIRE(r.applicable);
    CHECK(r.holds);
    auto d = verify_bound(c, "N.dist");
    CHECK(d.holds);
    auto disc = verify_bound(c, "N.disc");
    CHECK(disc.holds);
}

TEST_CASE("unknown identifiers are rejected") {
    EvalContext c(mixed_two_path());
    CHECK_THROWS_AS(verify_bound(c, "no_such_bound"), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(c, "no_such_identity"), std::invalid_argument);
    CHECK_THROWS_AS(verify_characterization(c, "nope"), std::invalid_argument);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    VerifyOptions opt;
    opt.seed = 1234;
    EvalContext a(mixed_two_path(), opt);
    EvalContext b(mixed_two_path(), opt);
    auto ra = run_all(a);
    auto rb = run_all(b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].bound_id == rb[i].bound_id);
        CHECK(ra[i].holds == rb[i].holds);
        CHECK(ra[i].applicable == rb[i].applicable);
        CHECK(ra[i].witness == rb[i].witness);
        CHECK(ra[i].slack == rb[i].slack);
    }
}

TEST_CASE("json and csv report serialization") {
    EvalContext c(mixed_two_path());
    auto reports = run_all(c);
    auto j = reports_to_json(reports);
    REQUIRE(j.is_array());
    CHECK(j.size() == reports.size());
    CHECK(j[0].contains("bound_id"));
    CHECK(j[0].contains("holds"));
    auto csv = reports_to_csv(reports);
    CHECK(csv.rfind("bound_id,applicable,holds,slack", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(reports.size()) + 1);
}

TEST_CASE("property sweep over a small random corpus") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 45; ++seed) {
        RandomFlags flags;
        if (seed % 3 == 1) flags.simple = true;
        if (seed % 3 == 2) flags.loopless = flags.plain = true;
        int cap = flags.simple ? 1 : 2;
        auto g = random_mixed(seed * 77 + 5, 1 + static_cast<int>(seed % 6), cap, cap, 0.55,
                              flags);
        VerifyOptions opt;
        opt.seed = seed;
        opt.instantiations = 6;
        EvalContext c(g, opt);
        check_all_hold(run_all(c));
        ++checked;
    }
    CHECK(checked == 45);
}
