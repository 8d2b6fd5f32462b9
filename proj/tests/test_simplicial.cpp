#include "hocolim/chains.hpp"
#include "hocolim/simplicial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hocolim;

TEST_CASE("standard models validate") {
    for (int n = 0; n <= 3; ++n) REQUIRE(delta(n).validate().ok);
    for (int n = 1; n <= 3; ++n) REQUIRE(sphere_min(n).validate().ok);
    REQUIRE(circle().validate().ok);
    REQUIRE(pinched().validate().ok);
    REQUIRE(wedge_circles().validate().ok);
    REQUIRE(wedge(circle(), sphere_min(2)).validate().ok);
}

TEST_CASE("generator counts") {
    auto d2 = delta(2);
    REQUIRE(d2.count(0) == 3);
    REQUIRE(d2.count(1) == 3);
    REQUIRE(d2.count(2) == 1);

    auto s2 = sphere_min(2);
    REQUIRE(s2.size() == 2);

    auto w = wedge_circles();
    REQUIRE(w.count(0) == 1);
    REQUIRE(w.count(1) == 2);
}

TEST_CASE("a broken face table is reported") {
    SimplicialSet k("broken");
    int v0 = k.add_generator("0", 0);
    int v1 = k.add_generator("1", 0);
    int v2 = k.add_generator("2", 0);
    int e01 = k.add_generator("01", 1);
    int e02 = k.add_generator("02", 1);
    int e12 = k.add_generator("12", 1);
    int t = k.add_generator("012", 2);
    auto edge = [&](int e, int a, int b) {
        k.set_face(e, 0, SimplexRef{b, {}});
        k.set_face(e, 1, SimplexRef{a, {}});
    };
    // d_0(xy) = y, d_1(xy) = x
    edge(e01, v0, v1);
    edge(e02, v0, v2);
    edge(e12, v1, v2);
    k.set_face(t, 0, SimplexRef{e12, {}});
    k.set_face(t, 1, SimplexRef{e12, {}});  // should be e02
    k.set_face(t, 2, SimplexRef{e01, {}});
    k.finish();
    auto rep = k.validate();
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.message.find("012") != std::string::npos);
}

TEST_CASE("normalize canonical forms") {
    auto s1 = circle();
    int v = s1.require("v");
    using Op = SimplicialSet::Op;
    SECTION("d0 s0 v = v") {
        auto r = s1.normalize(v, {Op{'d', 0}, Op{'s', 0}});
        REQUIRE(r == SimplexRef{v, {}});
    }
    SECTION("d1 s0 s0 v = (v, [0])") {
        auto r = s1.normalize(v, {Op{'d', 1}, Op{'s', 0}, Op{'s', 0}});
        REQUIRE(r == (SimplexRef{v, {0}}));
    }
    SECTION("d2 s1 sigma = sigma for a 2-simplex") {
        auto d2 = delta(2);
        int t = d2.require("012");
        auto r = d2.normalize(t, {Op{'d', 2}, Op{'s', 1}});
        REQUIRE(r == (SimplexRef{t, {}}));
    }
    SECTION("index out of range") {
        REQUIRE_THROWS_AS(s1.normalize(v, {Op{'d', 1}}), std::out_of_range);
        REQUIRE_THROWS_AS(s1.normalize(v, {Op{'s', 1}}), std::out_of_range);
    }
}

TEST_CASE("normalize is idempotent under random identity pairs") {
    auto k = pinched();
    int sg = k.require("sigma");
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        SimplexRef r{sg, {}};
        // random degeneracy walk up, then random faces back down to dim 2
        int ups = static_cast<int>(rng() % 4);
        for (int u = 0; u < ups; ++u) r = k.degenerate(r, static_cast<int>(rng() % (k.ref_dim(r) + 1)));
        while (k.ref_dim(r) > 2) r = k.face(r, static_cast<int>(rng() % (k.ref_dim(r) + 1)));
        // canonical form invariants
        for (std::size_t i = 0; i + 1 < r.word.size(); ++i) REQUIRE(r.word[i] > r.word[i + 1]);
        // s_j then d_j is the identity on any representative
        int m = k.ref_dim(r);
        for (int j = 0; j <= m; ++j) {
            REQUIRE(k.face(k.degenerate(r, j), j) == r);
            REQUIRE(k.face(k.degenerate(r, j), j + 1) == r);
        }
    }
}

TEST_CASE("min and max vertices") {
    auto d2 = delta(2);
    int t = d2.require("012");
    REQUIRE(d2.gen(t).min_vertex == d2.require("0"));
    REQUIRE(d2.gen(t).max_vertex == d2.require("2"));
    auto p = pinched();
    REQUIRE(p.gen(p.require("sigma")).min_vertex == p.require("v"));
}

namespace {

// oracle: nondegenerate m-simplices of delta(p) x delta(q) are strictly
// increasing chains of length m+1 in the grid poset [p] x [q]
int chain_count(int p, int q, int m) {
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) verts.push_back({i, j});
    int count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t last, int len) {
        if (len == m + 1) {
            ++count;
            return;
        }
        for (std::size_t nxt = 0; nxt < verts.size(); ++nxt) {
            if (verts[nxt].first >= verts[last].first && verts[nxt].second >= verts[last].second &&
                verts[nxt] != verts[last])
                rec(nxt, len + 1);
        }
    };
    for (std::size_t s = 0; s < verts.size(); ++s) rec(s, 1);
    return count;
}

}  // namespace

TEST_CASE("products") {
    SECTION("delta1 x delta1 counts [4,5,2]") {
        auto d1 = delta(1);
        ProductSet pr(d1, d1, 3);
        REQUIRE(pr.set().validate().ok);
        REQUIRE(pr.set().count(0) == 4);
        REQUIRE(pr.set().count(1) == 5);
        REQUIRE(pr.set().count(2) == 2);
        REQUIRE(pr.set().count(3) == 0);
        REQUIRE(pr.set().count(0) == chain_count(1, 1, 0));
        REQUIRE(pr.set().count(1) == chain_count(1, 1, 1));
        REQUIRE(pr.set().count(2) == chain_count(1, 1, 2));
    }
    SECTION("delta2 x delta1 counts match the chain oracle") {
        ProductSet pr(delta(2), delta(1), 4);
        REQUIRE(pr.set().validate().ok);
        for (int m = 0; m <= 4; ++m) REQUIRE(pr.set().count(m) == chain_count(2, 1, m));
    }
    SECTION("K x delta0 is isomorphic to K") {
        auto k = pinched();
        ProductSet pr(k, delta(0), 4);
        REQUIRE(pr.set().validate().ok);
        for (int m = 0; m <= 2; ++m) REQUIRE(pr.set().count(m) == k.count(m));
    }
    SECTION("circle x delta0 has 2 generators") {
        ProductSet pr(circle(), delta(0), 3);
        REQUIRE(pr.set().size() == 2);
    }
    SECTION("products of one-vertex models validate") {
        ProductSet pr(sphere_min(2), circle(), 4);
        REQUIRE(pr.set().validate().ok);
    }
}

TEST_CASE("normalized chains") {
    SECTION("sphere_min(2): sizes [1,0,1], d = 0, AW is primitive-free") {
        auto s2 = sphere_min(2);
        auto c = normalized_chains<Rational>(s2);
        REQUIRE(c.cx.dim(0) == 1);
        REQUIRE(c.cx.dim(1) == 0);
        REQUIRE(c.cx.dim(2) == 1);
        REQUIRE(c.cx.d(2).is_zero());
        auto cop = c.cop_of(BasisRef{2, 0});
        REQUIRE(cop.size() == 2);  // v (x) sigma + sigma (x) v
        for (const auto& [l, r, coeff] : cop) {
            REQUIRE(coeff == Rational(1));
            REQUIRE(l.deg + r.deg == 2);
            REQUIRE((l.deg == 0 || l.deg == 2));
        }
    }
    SECTION("delta(2) top simplex AW has three terms") {
        auto d2 = delta(2);
        auto c = normalized_chains<Rational>(d2);
        auto top = c.cx.find(2, "012");
        REQUIRE(top.has_value());
        auto cop = c.cop_of(*top);
        REQUIRE(cop.size() == 3);
        bool sawMid = false;
        for (const auto& [l, r, coeff] : cop) {
            REQUIRE(coeff == Rational(1));
            if (l.deg == 1) {
                sawMid = true;
                REQUIRE(c.cx.label(l) == "01");
                REQUIRE(c.cx.label(r) == "12");
            }
        }
        REQUIRE(sawMid);
    }
    SECTION("circle: sizes [1,1], d sigma = 0") {
        auto c = normalized_chains<Rational>(circle());
        REQUIRE(c.cx.dim(0) == 1);
        REQUIRE(c.cx.dim(1) == 1);
        REQUIRE(c.cx.d(1).is_zero());
    }
    SECTION("pinched: d sigma = a") {
        auto c = normalized_chains<Rational>(pinched());
        auto sg = *c.cx.find(2, "sigma");
        auto a = *c.cx.find(1, "a");
        REQUIRE(c.cx.d(2).at(a.idx, sg.idx) == Rational(1));
    }
}

TEST_CASE("chain coalgebra laws on fixtures and random products") {
    std::vector<SimplicialSet> fixtures;
    for (int n = 0; n <= 3; ++n) fixtures.push_back(delta(n));
    for (int n = 1; n <= 3; ++n) fixtures.push_back(sphere_min(n));
    fixtures.push_back(pinched());
    fixtures.push_back(wedge_circles());
    ProductSet sq(delta(1), delta(1), 3);
    fixtures.push_back(sq.set());
    ProductSet pc(pinched(), circle(), 3);
    fixtures.push_back(pc.set());
    for (const auto& k : fixtures) {
        INFO(k.name());
        auto c = normalized_chains<Rational>(k);
        c.cx.validate();                        // d^2 = 0
        REQUIRE_FALSE(c.coassoc_witness());     // (Delta (x) id) Delta = (id (x) Delta) Delta
        REQUIRE_FALSE(c.counit_witness());      // counit laws
        REQUIRE_FALSE(c.compat_witness());      // Delta is a chain map
    }
}
