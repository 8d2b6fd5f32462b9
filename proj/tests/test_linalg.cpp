#include "hocolim/complex.hpp"
#include "hocolim/field.hpp"
#include "hocolim/sparse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hocolim;

TEST_CASE("field arithmetic") {
    Rational a(3), b(-2);
    REQUIRE((a * b).str() == "-6");
    REQUIRE((a / b).str() == "-3/2");
    REQUIRE((a - a).is_zero());
    REQUIRE(a.inv().str() == "1/3");
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    Fp::set_modulus(5);
    REQUIRE(Fp(7) == Fp(2));
    REQUIRE((Fp(3) * Fp(4)).str() == "2");
    REQUIRE((Fp(2).inv() * Fp(2)) == Fp(1));
    REQUIRE((-Fp(1)) == Fp(4));
    REQUIRE_THROWS_AS(Fp::set_modulus(6), std::domain_error);
    Fp::set_modulus(5);
}

TEST_CASE("rank examples") {
    auto id3 = SparseMatrix<Rational>::identity(3);
    REQUIRE(id3.rank() == 3);

    SparseMatrix<Rational> z(3, 4);
    REQUIRE(z.rank() == 0);

    SparseMatrix<Rational> prop(2, 2);
    prop.set(0, 0, Rational(1));
    prop.set(0, 1, Rational(2));
    prop.set(1, 0, Rational(2));
    prop.set(1, 1, Rational(4));
    REQUIRE(prop.rank() == 1);
}

TEST_CASE("rank equals rank of transpose on random sparse samples") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8);
        int c = 1 + static_cast<int>(rng() % 8);
        SparseMatrix<Rational> m(r, c);
        int fill = static_cast<int>(rng() % (r * c + 1));
        for (int k = 0; k < fill; ++k)
            m.set(static_cast<int>(rng() % r), static_cast<int>(rng() % c),
                  Rational(static_cast<long long>(rng() % 7) - 3));
        REQUIRE(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("rank over Q bounds rank over Fp for integral matrices") {
    Fp::set_modulus(5);
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        SparseMatrix<Rational> mq(n, n);
        SparseMatrix<Fp> mp(n, n);
        for (int k = 0; k < 2 * n; ++k) {
            int r = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
            long long v = static_cast<long long>(rng() % 11) - 5;
            mq.set(r, c, Rational(v));
            mp.set(r, c, Fp(v));
        }
        REQUIRE(mq.rank() >= mp.rank());
    }
}

TEST_CASE("kernel and solve") {
    SparseMatrix<Rational> m(2, 3);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(1));
    m.set(1, 2, Rational(1));
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker) {
        auto img = m.apply(v);
        for (const auto& x : img) REQUIRE(x.is_zero());
    }
    auto sol = m.solve({Rational(3), Rational(5)});
    REQUIRE(sol.has_value());
    auto img = m.apply(*sol);
    REQUIRE(img[0] == Rational(3));
    REQUIRE(img[1] == Rational(5));

    SparseMatrix<Rational> bad(2, 1);
    bad.set(0, 0, Rational(1));
    REQUIRE_FALSE(bad.solve({Rational(0), Rational(1)}).has_value());
}

namespace {

BoundedComplex<Rational> two_term_identity() {
    BoundedComplex<Rational> c(0, 1);
    c.add_element(0, "a");
    c.add_element(1, "b");
    c.finalize_basis();
    c.set_diff_column(BasisRef{1, 0}, Lin<Rational>{{BasisRef{0, 0}, Rational(1)}});
    return c;
}

}  // namespace

TEST_CASE("homology ranks") {
    SECTION("zero differential, sizes [2,3]") {
        BoundedComplex<Rational> c(0, 1);
        c.add_element(0, "a0");
        c.add_element(0, "a1");
        c.add_element(1, "b0");
        c.add_element(1, "b1");
        c.add_element(1, "b2");
        c.finalize_basis();
        c.validate();
        REQUIRE(c.homology_rank(0) == 2);
        REQUIRE(c.homology_rank(1) == 3);
    }
    SECTION("identity differential") {
        auto c = two_term_identity();
        c.validate();
        REQUIRE(c.homology_rank(0) == 0);
        REQUIRE(c.homology_rank(1) == 0);
    }
    SECTION("minimal 2-sphere shape [1,0,1]") {
        BoundedComplex<Rational> c(0, 2);
        c.add_element(0, "v");
        c.add_element(2, "sigma");
        c.finalize_basis();
        c.validate();
        REQUIRE(c.homology_rank(0) == 1);
        REQUIRE(c.homology_rank(1) == 0);
        REQUIRE(c.homology_rank(2) == 1);
    }
    SECTION("out of range degree") {
        auto c = two_term_identity();
        REQUIRE_THROWS_AS(c.homology_rank(5), std::out_of_range);
    }
    SECTION("truncation flags the top degree") {
        auto c = two_term_identity();
        c.set_truncated(true);
        REQUIRE(c.homology_reliable(0));
        REQUIRE_FALSE(c.homology_reliable(1));
    }
}

TEST_CASE("d squared witness") {
    BoundedComplex<Rational> c(0, 2);
    c.add_element(0, "a");
    c.add_element(1, "b");
    c.add_element(2, "c");
    c.finalize_basis();
    c.set_diff_column(BasisRef{1, 0}, Lin<Rational>{{BasisRef{0, 0}, Rational(1)}});
    c.set_diff_column(BasisRef{2, 0}, Lin<Rational>{{BasisRef{1, 0}, Rational(1)}});
    auto w = c.d_squared_witness();
    REQUIRE(w.has_value());
    REQUIRE(c.label(*w) == "c");
}

TEST_CASE("induced homology map") {
    SECTION("identity chain map induces identity") {
        auto c = two_term_identity();
        ChainMap<Rational> f;
        f.src = &c;
        f.dst = &c;
        f.mats[0] = SparseMatrix<Rational>::identity(1);
        f.mats[1] = SparseMatrix<Rational>::identity(1);
        REQUIRE_FALSE(f.chain_map_witness().has_value());
        auto ind = f.induced_homology(0);
        REQUIRE(ind.isomorphism);
        REQUIRE(ind.matrix.rows() == 0);
    }
    SECTION("non chain map yields witness") {
        auto c = two_term_identity();
        BoundedComplex<Rational> z(0, 1);
        z.add_element(0, "a");
        z.add_element(1, "b");
        z.finalize_basis();  // zero differential
        ChainMap<Rational> f;
        f.src = &c;
        f.dst = &z;
        f.mats[0] = SparseMatrix<Rational>::identity(1);
        f.mats[1] = SparseMatrix<Rational>::identity(1);
        REQUIRE(f.chain_map_witness().has_value());
    }
    SECTION("homology dimensions go up under field reduction") {
        // integral complex with a multiplication-by-5 differential
        BoundedComplex<Rational> cq(0, 1);
        cq.add_element(0, "a");
        cq.add_element(1, "b");
        cq.finalize_basis();
        cq.set_diff_column(BasisRef{1, 0}, Lin<Rational>{{BasisRef{0, 0}, Rational(5)}});
        Fp::set_modulus(5);
        BoundedComplex<Fp> cp(0, 1);
        cp.add_element(0, "a");
        cp.add_element(1, "b");
        cp.finalize_basis();
        cp.set_diff_column(BasisRef{1, 0}, Lin<Fp>{{BasisRef{0, 0}, Fp(5)}});
        REQUIRE(cq.homology_rank(0) == 0);
        REQUIRE(cp.homology_rank(0) == 1);
        REQUIRE(cp.homology_rank(0) >= cq.homology_rank(0));
        REQUIRE(cp.homology_rank(1) >= cq.homology_rank(1));
    }
}
