#include <catch2/catch_amalgamated.hpp>

#include <z2coh/wring.hpp>

#include <random>

using namespace z2coh;

namespace {

WReduced random_reduced(std::mt19937_64& rng, const WRing& ring, int degree) {
    WReduced r{degree, f2::BitVec(ring.dim(degree))};
    for (int i = 0; i < ring.dim(degree); ++i)
        if (rng() & 1) r.coords.set(i);
    return r;
}

}  // namespace

TEST_CASE("monomial normalization", "[wring]") {
    CHECK(normalize({0, 2, 0}) == WMonomial{1, 1, 0});   // u^2 = xu
    CHECK(normalize({2, 3, 0}) == WMonomial{4, 1, 0});   // x^2 u^3 = x^4 u
    CHECK(normalize({5, 0, 2}) == WMonomial{5, 0, 2});   // already canonical
    CHECK(normalize(normalize({3, 4, 1})) == normalize({3, 4, 1}));
    CHECK(normalize({2, 5, 3}).degree() == WMonomial{2, 5, 3}.degree());
}

TEST_CASE("ambient products", "[wring]") {
    const WClass u = w_class(1, {{0, 1, 0}});
    const WClass uu = multiply_ambient(u, u);
    CHECK(uu == w_class(2, {{1, 1, 0}}));  // u.u = xu

    const WClass a = w_class(3, {{2, 1, 0}});
    const WClass b = w_class(3, {{0, 1, 1}});
    CHECK(multiply_ambient(a, b) == w_class(6, {{3, 1, 1}}));  // x^2 u . y u = x^3 y u

    const WClass one = w_class(0, {{0, 0, 0}});
    const WClass z = w_class(5, {{1, 0, 2}, {3, 1, 0}});
    CHECK(multiply_ambient(one, z) == z);
}

TEST_CASE("ring dimensions satisfy duality", "[wring]") {
    for (int n = 2; n <= 40; ++n) {
        WRing ring(n);
        for (int d = 0; d <= ring.top_degree(); ++d)
            REQUIRE(ring.dim(d) == ring.dim(ring.top_degree() - d));
    }
}

TEST_CASE("reduced multiplication is commutative and associative", "[wring]") {
    std::mt19937_64 rng(23);
    for (int n : {3, 5, 9, 16}) {
        WRing ring(n);
        for (int trial = 0; trial < 16; ++trial) {
            const int d1 = static_cast<int>(rng() % (ring.top_degree() + 1));
            const int d2 = static_cast<int>(rng() % (ring.top_degree() + 1));
            const int d3 = static_cast<int>(rng() % (ring.top_degree() + 1));
            const auto a = random_reduced(rng, ring, d1);
            const auto b = random_reduced(rng, ring, d2);
            const auto c = random_reduced(rng, ring, d3);
            CHECK(ring.multiply(a, b) == ring.multiply(b, a));
            CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
        }
    }
}

TEST_CASE("exhaustive small-degree products reduce consistently", "[wring]") {
    // reduce-then-multiply equals multiply-then-reduce on every monomial pair
    WRing ring(5);
    for (int d1 = 0; d1 <= 4; ++d1)
        for (int d2 = 0; d2 <= 4; ++d2)
            for (int i = 0; i < w_monomial_count(d1); ++i)
                for (int j = 0; j < w_monomial_count(d2); ++j) {
                    const WMonomial a = w_monomial_at(d1, i);
                    const WMonomial b = w_monomial_at(d2, j);
                    const WReduced via_ring =
                        ring.multiply(ring.reduce_monomial(a), ring.reduce_monomial(b));
                    const WReduced direct = ring.reduce_monomial(a * b);
                    REQUIRE(via_ring == direct);
                }
}

TEST_CASE("top class of the ring", "[wring]") {
    WRing r4(4);
    REQUIRE(r4.dim(r4.top_degree()) == 1);
    const auto uy3 = r4.reduce_monomial({0, 1, 3});
    const auto x2uy2 = r4.reduce_monomial({2, 1, 2});
    const auto x6u = r4.reduce_monomial({6, 1, 0});
    CHECK(uy3.coords.any());
    CHECK(uy3 == x2uy2);
    CHECK(uy3 == x6u);
    CHECK(r4.reduce_monomial({4, 1, 1}).is_zero());

    // the u^{2^t-1} y^{n-2^{t-1}} family, normalized
    for (const auto& m : r4.top_family()) {
        CHECK(r4.top_monomial_nonzero(m));
        CHECK(r4.reduce_monomial(m) == uy3);
    }
    CHECK_FALSE(r4.top_monomial_nonzero({4, 1, 1}));

    WRing r5(5);
    CHECK(r5.reduce_monomial({6, 1, 1}).coords.any());  // t = 3
    CHECK(r5.top_monomial_nonzero({6, 1, 1}));

    // predicate agrees with the oracle on every canonical top monomial
    for (int n : {2, 3, 4, 5, 6, 8, 11}) {
        WRing ring(n);
        const int top = ring.top_degree();
        for (int i = 0; i < w_monomial_count(top); ++i) {
            const WMonomial m = w_monomial_at(top, i);
            REQUIRE(ring.top_monomial_nonzero(m) == ring.reduce_monomial(m).coords.any());
        }
    }
}

TEST_CASE("total square on generators", "[wring]") {
    const auto sq_x = total_square_ambient(w_class(1, {{1, 0, 0}}));
    CHECK(sq_x[0] == w_class(1, {{1, 0, 0}}));
    CHECK(sq_x[1] == w_class(2, {{2, 0, 0}}));

    const auto sq_y = total_square_ambient(w_class(2, {{0, 0, 1}}));
    CHECK(sq_y[0] == w_class(2, {{0, 0, 1}}));
    CHECK(sq_y[1] == w_class(3, {{1, 0, 1}}));  // Sq^1 y = xy
    CHECK(sq_y[2] == w_class(4, {{0, 0, 2}}));

    const auto sq_u = total_square_ambient(w_class(1, {{0, 1, 0}}));
    CHECK(sq_u[1] == w_class(2, {{1, 1, 0}}));  // u^2 in canonical form
}

TEST_CASE("Sq^1 of the odd top-family monomials", "[wring]") {
    // Sq^1 (x^{2^{j+1}-3} y^{n-2^j} u) = n x^{2^{j+1}-2} y^{n-2^j} u
    for (int n : {4, 5, 7, 10}) {
        for (int j = 1; (1 << j) <= n; ++j) {
            const int a = (1 << (j + 1)) - 3;
            if (a < 0) continue;
            const WClass z = w_class(a + 1 + 2 * (n - (1 << j)), {{a, 1, n - (1 << j)}});
            const auto sq = total_square_ambient(z);
            WClass expected = w_zero(z.degree + 1);
            if (n % 2 == 1) expected = w_class(z.degree + 1, {{a + 1, 1, n - (1 << j)}});
            CAPTURE(n, j);
            CHECK(sq[1] == expected);
        }
    }
}

TEST_CASE("total square is multiplicative", "[wring]") {
    std::mt19937_64 rng(31);
    for (int n : {4, 9, 16}) {
        WRing ring(n);
        for (int trial = 0; trial < 10; ++trial) {
            const int d1 = 1 + static_cast<int>(rng() % (ring.top_degree() / 2));
            const int d2 = 1 + static_cast<int>(rng() % (ring.top_degree() / 2));
            const auto a = random_reduced(rng, ring, d1);
            const auto b = random_reduced(rng, ring, d2);
            const auto sq_a = ring.total_square(a);
            const auto sq_b = ring.total_square(b);
            const auto sq_ab = ring.total_square(ring.multiply(a, b));
            for (int k = 0; k <= d1 + d2 && d1 + d2 + k <= ring.top_degree(); ++k) {
                WReduced cartan{d1 + d2 + k, f2::BitVec(ring.dim(d1 + d2 + k))};
                for (int i = 0; i <= k; ++i) {
                    if (i > d1 || k - i > d2) continue;
                    const auto part = ring.multiply(sq_a[i], sq_b[k - i]);
                    cartan.coords ^= part.coords;
                }
                REQUIRE(sq_ab[k] == cartan);
            }
        }
    }
}

TEST_CASE("square axioms on all basis classes of small rings", "[wring]") {
    for (int n : {2, 3, 5, 8, 16}) {
        WRing ring(n);
        for (int d = 1; d <= ring.top_degree(); ++d) {
            for (int i = 0; i < ring.dim(d); ++i) {
                WReduced z{d, f2::BitVec(ring.dim(d))};
                z.coords.set(i);
                const auto sq = ring.total_square(z);
                REQUIRE(sq[0] == z);                       // Sq^0 = id
                REQUIRE(sq[d] == ring.multiply(z, z));      // Sq^{deg} = square
                // Sq^1 Sq^1 = 0
                if (d + 2 <= ring.top_degree()) {
                    const auto sq1 = ring.total_square(sq[1]);
                    REQUIRE(sq1[1].is_zero());
                }
            }
        }
    }
}

TEST_CASE("Wu check on the next-to-top degree", "[wring]") {
    CHECK(WRing(4).wu_top_check());   // n even: Sq^1 vanishes
    CHECK(WRing(5).wu_top_check());   // n odd: Sq^1 is multiplication by x
    CHECK(WRing(20).wu_top_check());
    for (int n = 2; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(WRing(n).wu_top_check());
    }
}
