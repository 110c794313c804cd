#include <random>

#include "catch_amalgamated.hpp"
#include "starcore/oracle.hpp"
#include "support.hpp"

using namespace starcore;
using testsupport::ideal_of;
using testsupport::pp;

TEST_CASE("oracle membership basics") {
    QuotientRing q = testsupport::poly_ring2(7);
    IdealHandle A = ideal_of(q, {"x^2"});
    CHECK(oracle_member(pp(q.ambient(), "x^2y"), A, 8));
    CHECK(!oracle_member(pp(q.ambient(), "y"), ideal_of(q, {"x"}), 8));
    CHECK_THROWS_AS(oracle_member(pp(q.ambient(), "x + x^2"), A, 8), UsageError);
}

TEST_CASE("oracle equality basics") {
    QuotientRing q = testsupport::poly_ring2(7);
    CHECK(oracle_equal_up_to(ideal_of(q, {"x", "y"}), ideal_of(q, {"y", "x + y"}), 4));
    CHECK(!oracle_equal_up_to(ideal_of(q, {"x"}), ideal_of(q, {"x^2"}), 2));
}

TEST_CASE("oracle replays the decic product membership") {
    QuotientRing q = testsupport::fermat_ring(7, 10);
    IdealHandle J = ideal_of(q, {"x^5", "y^7", "z^8"});
    IdealHandle I = sum(J, ideal_of(q, {"xy^3z^6"}));
    IdealHandle JJI = product(J, colon(J, I));
    std::uint64_t dmax = oracle_default_dmax(JJI, 16);
    CHECK(oracle_member(pp(q.ambient(), "x^5z^2"), JJI, dmax));
    // Hand-entered generator list for J(J:I); the oracle confirms equality
    // degree by degree.
    IdealHandle by_hand = ideal_of(q, {"x^9", "x^5y^4", "x^5z^2", "x^4y^7", "y^11",
                                       "y^7z^2", "x^4z^8", "y^4z^8", "z^10"});
    CHECK(oracle_equal_up_to(JJI, by_hand, 16));
    CHECK(JJI == by_hand);
}

TEST_CASE("oracle agrees with the Groebner kernel on random instances") {
    std::mt19937_64 rng(20240801);
    int instances = 0;
    for (std::uint32_t p : {3u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Ring r = (trial % 2 == 0) ? testsupport::ring3(p)
                                            : testsupport::ring2(p);
            QuotientRing q = QuotientRing::polynomial_ring(r);
            std::uniform_int_distribution<int> ngens(1, 3);
            std::uniform_int_distribution<std::uint64_t> deg(1, 6);
            std::vector<Polynomial> gens;
            int n = ngens(rng);
            for (int i = 0; i < n; ++i)
                gens.push_back(testsupport::random_homogeneous(rng, r, deg(rng)));
            IdealHandle A = q.ideal(gens);

            std::uniform_int_distribution<std::uint64_t> qdeg(1, 12);
            Polynomial f = testsupport::random_homogeneous(rng, r, qdeg(rng));
            bool gb_says = A.contains(f);
            bool oracle_says = oracle_member(f, A, 12);
            REQUIRE(gb_says == oracle_says);

            // Membership of a known combination must hold on both routes.
            Polynomial combo = Polynomial::zero(r);
            for (const Polynomial& g : gens)
                combo = combo + testsupport::random_poly(rng, r, 2, 2) * g;
            if (!combo.is_zero() && combo.is_homogeneous() &&
                combo.total_degree() <= 12) {
                REQUIRE(A.contains(combo));
                REQUIRE(oracle_member(combo, A, 12));
            }
            ++instances;
        }
    }
    REQUIRE(instances == 80);
}
