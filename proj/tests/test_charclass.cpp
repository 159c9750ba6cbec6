#include <catch2/catch_amalgamated.hpp>

#include <z2coh/charclass.hpp>

using namespace z2coh;

TEST_CASE("every bundle series starts with 1", "[charclass]") {
    WRing ring(5);
    for (Bundle b : {Bundle::tangent_g, Bundle::tangent_w, Bundle::normal_w,
                     Bundle::tangent_c, Bundle::normal_c}) {
        const auto s = sw_series(ring, b, 4);
        CHECK(s.ambient[0] == w_class(0, {{0, 0, 0}}));
    }
}

TEST_CASE("degree-2 normal coefficient at n = 6", "[charclass]") {
    // w_2(eta C) = y + u^2 + C(n+2, 2) x^2, and C(8, 2) = 28 is even
    WRing ring(6);
    const auto s = sw_series(ring, Bundle::normal_c, 2);
    CHECK(s.ambient[2] == w_class(2, {{0, 0, 1}, {0, 2, 0}}));
    CHECK_FALSE(s.reduced[2].is_zero());
}

TEST_CASE("degree-3 normal coefficient at n = 2 is nonzero", "[charclass]") {
    WRing ring(2);
    const auto s = sw_series(ring, Bundle::normal_c, 3);
    CHECK_FALSE(s.reduced[3].is_zero());
    CHECK(top_sw_parity(2));
}

TEST_CASE("closed form equals the series route", "[charclass]") {
    for (int n = 2; n <= 24; ++n) {
        WRing ring(n);
        const auto s = sw_series(ring, Bundle::normal_c, ring.top_degree());
        CAPTURE(n);
        CHECK_NOTHROW(check_eta_routes(s));
        for (int d = 0; d <= ring.top_degree(); ++d)
            REQUIRE(eta_c_coeff(ring, d) == s.reduced[d]);
    }
}

TEST_CASE("a mislabeled series trips the route check", "[charclass]") {
    WRing ring(6);
    auto s = sw_series(ring, Bundle::normal_w, ring.top_degree());
    s.bundle = Bundle::normal_c;
    CHECK_THROWS_AS(check_eta_routes(s), RouteMismatchError);
}

TEST_CASE("pinned normal coefficients", "[charclass]") {
    WRing r2(2);
    CHECK_FALSE(eta_c_coeff(r2, 3).is_zero());
    WRing r3(3);
    CHECK(eta_c_coeff(r3, 5).is_zero());
    for (int n : {2, 5, 9}) {
        WRing ring(n);
        const auto w0 = eta_c_coeff(ring, 0);
        CHECK(w0.coords.count() == 1);  // the class 1
    }
}

TEST_CASE("top-class parity", "[charclass]") {
    CHECK(top_sw_parity(2));
    CHECK_FALSE(top_sw_parity(3));
    CHECK(top_sw_parity(64));
    for (int n = 2; n <= 128; ++n) {
        CAPTURE(n);
        REQUIRE(top_sw_parity(n) == is_two_power(n));
    }
    // parity matches the reduced coefficient
    for (int n = 2; n <= 20; ++n) {
        WRing ring(n);
        REQUIRE(top_sw_parity(n) == !eta_c_coeff(ring, 2 * n - 1).is_zero());
    }
}

TEST_CASE("tangent and normal series are inverse to each other", "[charclass]") {
    for (int n = 2; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(whitney_duality(n));
    }
}

TEST_CASE("normal-class search finds the three families", "[charclass]") {
    const auto hits = sw_search(20);
    auto at = [&](int n) -> const SearchHit& { return hits[n - 2]; };

    CHECK(at(5).family == "2^r+1");
    CHECK(at(5).family_degree == 5);
    CHECK(at(5).family_nonzero);
    CHECK(at(5).k == 5);  // 2n-5 is also the largest nonzero degree
    CHECK(at(5).implied_nonimmersion_dim == 14);

    CHECK(at(6).family == "2^r+2");
    CHECK(at(6).family_degree == 3);
    CHECK(at(6).family_nonzero);
    CHECK(at(6).implied_nonimmersion_dim == 14);

    CHECK(at(12).family == "2^r+4");
    CHECK(at(12).family_degree == 7);
    CHECK(at(12).family_nonzero);
    CHECK(at(12).implied_nonimmersion_dim == 30);  // matches n = 8

    CHECK(at(8).family == "2-power");
    CHECK(at(8).k == 15);
    CHECK(at(8).implied_nonimmersion_dim == 30);
}

TEST_CASE("indeterminacy witness for even non-2-powers", "[charclass]") {
    for (int n : {6, 10, 12}) {
        WRing ring(n);
        const auto w = sq2_indeterminacy_witness(ring);
        CAPTURE(n);
        CHECK(w.found);
    }
    // the witness properties, spelled out at n = 6
    WRing ring(6);
    const auto w = sq2_indeterminacy_witness(ring);
    REQUIRE(w.found);
    const auto z = ring.reduce_monomial(w.witness);
    REQUIRE_FALSE(z.is_zero());
    CHECK(ring.total_square(z)[2].is_zero());
    CHECK(ring.multiply_monomial(z, {0, 0, 1}).is_zero());
    CHECK(ring.multiply_monomial(z, {2, 0, 0}).is_zero());
    CHECK_FALSE(ring.multiply_monomial(z, {0, 2, 0}).is_zero());
    CHECK_THROWS_AS(sq2_indeterminacy_witness(WRing(8)), std::invalid_argument);
}

TEST_CASE("immersion reports", "[charclass]") {
    {
        const auto rep = immersion_report(WRing(4));
        CHECK(rep.two_power);
        CHECK(rep.top_normal_class_nonzero);
        CHECK(rep.nonimmersion_dim == 14);
        CHECK(rep.nonembedding_dim == 15);
        CHECK(rep.generic_immersion_dim == 15);
        CHECK(rep.generic_embedding_dim == 16);
        CHECK(rep.immersion_dim == -1);
    }
    {
        const auto rep = immersion_report(WRing(6));
        CHECK_FALSE(rep.two_power);
        CHECK(rep.immersion_dim == 21);
        CHECK(rep.next_normal_class_zero);
        REQUIRE(rep.w2_matches_expected.has_value());
        CHECK(*rep.w2_matches_expected);
        REQUIRE(rep.sq2.has_value());
        CHECK(rep.sq2->found);
    }
    {
        const auto rep = immersion_report(WRing(5));
        CHECK(rep.immersion_dim == 17);
        CHECK(rep.next_normal_class_zero);
        CHECK_FALSE(rep.sq2.has_value());  // odd n needs no indeterminacy step
    }
}
