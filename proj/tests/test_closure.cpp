#include "catch_amalgamated.hpp"
#include "starcore/closure.hpp"
#include "support.hpp"

using namespace starcore;
using testsupport::fermat_ring;
using testsupport::ideal_of;
using testsupport::pp;
using testsupport::replay_verdict;
using testsupport::VerdictKind;

namespace {

TestIdealInput tau_m_pow(const QuotientRing& q, std::uint64_t k,
                         const std::string& prov) {
    return TestIdealInput(power(q.maximal_ideal(), k), prov);
}

}  // namespace

TEST_CASE("degree criterion examples") {
    QuotientRing decic = fermat_ring(7, 10);
    IdealHandle J = ideal_of(decic, {"x^5", "y^7", "z^8"});
    CHECK(degree_criterion(pp(decic.ambient(), "xy^3z^6"), J));
    CHECK(!degree_criterion(pp(decic.ambient(), "x"), J));

    QuotientRing quintic = fermat_ring(7, 5);
    IdealHandle D = ideal_of(quintic, {"x^5", "y^5", "z^5"});
    // d1+d2+d3 = 15 > 10 = 2k
    CHECK(!degree_criterion(pp(quintic.ambient(), "x^2y^2z^2"), D));

    // inapplicable shapes return false, never an error
    IdealHandle two_gens = ideal_of(decic, {"y", "z"});
    CHECK(!degree_criterion(pp(decic.ambient(), "x^2"), two_gens));
    QuotientRing xyz = testsupport::xyz_ring(7);
    CHECK(!degree_criterion(pp(xyz.ambient(), "x^2"),
                            ideal_of(xyz, {"x", "y", "z"})));
}

TEST_CASE("star membership: quintic colon rule with the flag") {
    QuotientRing q = fermat_ring(7, 5);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau = tau_m_pow(q, 3, "user assertion: tau = m^3");
    Polynomial u = pp(q.ambient(), "x^2");

    ClosureConfig flagged;
    flagged.gorenstein_parameter = true;
    ClosureVerdict v = star_member(u, J, tau, flagged);
    CHECK(v.status == MembershipStatus::ProvedIn);
    CHECK(v.rule == ClosureRule::GorensteinParameterColon);
    CHECK(replay_verdict(v, u, J, tau, VerdictKind::Star));

    // without the flag the engine cannot prove it either way
    ClosureVerdict unflagged = star_member(u, J, tau);
    CHECK(unflagged.status == MembershipStatus::Unknown);
    CHECK(!unflagged.evidence.empty());
}

TEST_CASE("star membership: element of the ideal") {
    QuotientRing q = fermat_ring(7, 5);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau = tau_m_pow(q, 3, "m^3");
    Polynomial f = pp(q.ambient(), "3y + z^2");
    ClosureVerdict v = star_member(f, J, tau);
    CHECK(v.status == MembershipStatus::ProvedIn);
    CHECK(v.rule == ClosureRule::AlreadyInIdeal);
    CHECK(replay_verdict(v, f, J, tau, VerdictKind::Star));
}

TEST_CASE("star membership: cubic refutation") {
    QuotientRing q = fermat_ring(7, 3);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau(q.maximal_ideal(), "tau = m for the cubic cone");
    Polynomial x = pp(q.ambient(), "x");
    ClosureVerdict v = star_member(x, J, tau);
    CHECK(v.status == MembershipStatus::ProvedOut);
    CHECK(v.rule == ClosureRule::TestIdealRefutation);
    REQUIRE(v.witness_multiplier.has_value());
    CHECK(*v.witness_multiplier == x);  // x*x = x^2 survives the normal form
    CHECK(replay_verdict(v, x, J, tau, VerdictKind::Star));
}

TEST_CASE("special membership: decic graded rule") {
    QuotientRing q = fermat_ring(7, 10);
    IdealHandle J = ideal_of(q, {"x^5", "y^7", "z^8"});
    TestIdealInput tau = tau_m_pow(q, 8, "by analogy with the quintic pattern");
    Polynomial u = pp(q.ambient(), "xy^3z^6");
    ClosureVerdict v = starsp_member(u, J, tau);
    CHECK(v.status == MembershipStatus::ProvedIn);
    CHECK(v.rule == ClosureRule::DegreeCriterion);
    CHECK(v.over_kbar_caveat);
    CHECK(replay_verdict(v, u, J, tau, VerdictKind::StarSpecial));
}

TEST_CASE("special membership: element of m*a") {
    QuotientRing q = fermat_ring(7, 5);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau = tau_m_pow(q, 3, "m^3");
    Polynomial f = pp(q.ambient(), "xy + z^2");
    ClosureVerdict v = starsp_member(f, J, tau);
    CHECK(v.status == MembershipStatus::ProvedIn);
    CHECK(v.rule == ClosureRule::AlreadyInIdeal);
    CHECK(replay_verdict(v, f, J, tau, VerdictKind::StarSpecial));
}

TEST_CASE("special membership: refutation inherited") {
    QuotientRing q = fermat_ring(7, 3);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau(q.maximal_ideal(), "m");
    ClosureVerdict v = starsp_member(pp(q.ambient(), "x"), J, tau);
    CHECK(v.status == MembershipStatus::ProvedOut);
}

TEST_CASE("star independence examples") {
    QuotientRing cubic = fermat_ring(7, 3);
    TestIdealInput tau(cubic.maximal_ideal(), "m");
    auto vs = star_independent({pp(cubic.ambient(), "y"), pp(cubic.ambient(), "z")},
                               tau);
    REQUIRE(vs.size() == 2);
    CHECK(all_proved_out(vs));

    auto vs2 = star_independent({pp(cubic.ambient(), "x"), pp(cubic.ambient(), "x^2")},
                                tau);
    CHECK(vs2[1].status == MembershipStatus::ProvedIn);
    CHECK(!all_proved_out(vs2));

    QuotientRing decic = fermat_ring(7, 10);
    TestIdealInput tau8 = tau_m_pow(decic, 8, "m^8");
    std::vector<std::string> gens = {"x^5", "y^7", "z^8"};
    std::vector<Polynomial> gen_polys;
    for (const auto& s : gens) gen_polys.push_back(pp(decic.ambient(), s));
    auto vs3 = star_independent(gen_polys, tau8);
    CHECK(all_proved_out(vs3));
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i) others.push_back(gen_polys[j]);
        CHECK(replay_verdict(vs3[i], gen_polys[i], decic.ideal(others), tau8,
                             VerdictKind::Star));
    }
}

TEST_CASE("every generator is proved inside the closure") {
    QuotientRing q = fermat_ring(7, 5);
    IdealHandle J = ideal_of(q, {"y", "z", "x^2"});
    TestIdealInput tau = tau_m_pow(q, 3, "m^3");
    for (const Polynomial& g : J.user_gens()) {
        ClosureVerdict v = star_member(g, J, tau);
        CHECK(v.status == MembershipStatus::ProvedIn);
        CHECK(v.rule == ClosureRule::AlreadyInIdeal);
    }
}

TEST_CASE("monotonicity on the bundled quintic pieces") {
    QuotientRing q = fermat_ring(7, 5);
    IdealHandle J = ideal_of(q, {"y", "z"});
    IdealHandle I = ideal_of(q, {"y", "z", "x^2"});
    TestIdealInput tau = tau_m_pow(q, 3, "m^3");
    ClosureConfig flagged;
    flagged.gorenstein_parameter = true;
    ClosureVerdict small = star_member(pp(q.ambient(), "x^2"), J, tau, flagged);
    REQUIRE(small.status == MembershipStatus::ProvedIn);
    ClosureVerdict big = star_member(pp(q.ambient(), "x^2"), I, tau, flagged);
    CHECK(big.status != MembershipStatus::ProvedOut);
}

TEST_CASE("no input fires both a membership and a refutation rule") {
    QuotientRing cubic = fermat_ring(7, 3);
    TestIdealInput tau(cubic.maximal_ideal(), "m");
    ClosureConfig flagged;
    flagged.gorenstein_parameter = true;
    std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"x^2", {"y", "z"}},
        {"x", {"y", "z"}},
        {"y", {"y", "z"}},
        {"x^2y", {"y^2", "z"}},
        {"xyz", {"x^2", "y^2", "z^2"}},
    };
    for (const auto& [fs, gens] : cases) {
        IdealHandle a = ideal_of(cubic, gens);
        RuleProbe probe = probe_all_rules(pp(cubic.ambient(), fs), a, tau, flagged);
        CAPTURE(fs);
        REQUIRE(!(probe.any_in() && probe.any_out()));
    }

    QuotientRing quintic = fermat_ring(7, 5);
    TestIdealInput tau3 = tau_m_pow(quintic, 3, "m^3");
    for (const auto& fs : {"x^2", "x^3", "x", "y^4"}) {
        IdealHandle a = ideal_of(quintic, {"y", "z"});
        RuleProbe probe = probe_all_rules(pp(quintic.ambient(), fs), a, tau3, flagged);
        CAPTURE(fs);
        REQUIRE(!(probe.any_in() && probe.any_out()));
    }
}

TEST_CASE("zero test ideal is rejected") {
    QuotientRing q = fermat_ring(7, 3);
    CHECK_THROWS_AS(TestIdealInput(q.zero_ideal(), "zero"), UsageError);
    // nonzero gens that all vanish in R count as zero too
    QuotientRing xyz = testsupport::xyz_ring(7);
    CHECK_THROWS_AS(TestIdealInput(xyz.ideal({pp(xyz.ambient(), "xyz")}), "rel"),
                    UsageError);
}

TEST_CASE("q_max validation") {
    QuotientRing q = fermat_ring(7, 3);
    IdealHandle J = ideal_of(q, {"y", "z"});
    TestIdealInput tau(q.maximal_ideal(), "m");
    ClosureConfig bad;
    bad.q_max = 10;  // not a power of 7
    CHECK_THROWS_AS(star_member(pp(q.ambient(), "x"), J, tau, bad), UsageError);
    ClosureConfig huge;
    huge.q_max = 16807;  // 7^5, above the supported exponent
    CHECK_THROWS_AS(star_member(pp(q.ambient(), "x"), J, tau, huge), UsageError);
    ClosureConfig one;
    one.q_max = 1;  // evidence only at q = 1
    ClosureVerdict v = star_member(pp(q.ambient(), "x^2"), J, tau, one);
    CHECK(v.q_max == 1);
}
