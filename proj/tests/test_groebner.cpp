#include <algorithm>
#include <random>

#include "catch_amalgamated.hpp"
#include "starcore/groebner.hpp"
#include "support.hpp"

using namespace starcore;
using testsupport::pp;

namespace {

std::vector<Polynomial> gb_of(const Ring& r, std::vector<std::string> srcs) {
    std::vector<Polynomial> gens;
    for (const auto& s : srcs) gens.push_back(pp(r, s));
    return buchberger(r, gens).elements;
}

}  // namespace

TEST_CASE("monomial ideals are their own basis") {
    Ring r = testsupport::ring2(7);
    auto gb = gb_of(r, {"x^2", "xy"});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pp(r, "xy"));
    CHECK(gb[1] == pp(r, "x^2"));
}

TEST_CASE("one reduction step") {
    Ring r = testsupport::ring2(7);
    auto gb = gb_of(r, {"x+y", "y"});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pp(r, "y"));
    CHECK(gb[1] == pp(r, "x"));
}

TEST_CASE("substitution kills variables") {
    Ring r = testsupport::ring3(7);
    auto gb = gb_of(r, {"x^5+y^5+z^5", "y", "z"});
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == pp(r, "z"));
    CHECK(gb[1] == pp(r, "y"));
    CHECK(gb[2] == pp(r, "x^5"));
}

TEST_CASE("empty generator list gives the zero ideal basis") {
    Ring r = testsupport::ring2(7);
    GroebnerBasis gb = buchberger(r, {});
    CHECK(gb.elements.empty());
    CHECK(gb.reduced);
    Polynomial f = pp(r, "x+1");
    CHECK(normal_form(f, gb) == f);
}

TEST_CASE("normal form drops relation terms") {
    Ring r = testsupport::ring3(7);
    GroebnerBasis gb = buchberger(r, {pp(r, "xyz")});
    CHECK(normal_form(pp(r, "x^2 + xyz"), gb) == pp(r, "x^2"));
}

TEST_CASE("basis elements have zero normal form") {
    Ring r = testsupport::ring3(7);
    GroebnerBasis gb = buchberger(r, {pp(r, "x^2+y"), pp(r, "xy+z"), pp(r, "yz+x")});
    for (const Polynomial& g : gb.elements) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("decic twisted basis does not absorb x^5z^2") {
    Ring r = testsupport::ring3(7);
    // gens (x^5+xu, y^7+yu, z^8+zu, x^10+y^10+z^10) with u = xy^3z^6
    GroebnerBasis gb = buchberger(
        r, {pp(r, "x^5 + x^2y^3z^6"), pp(r, "y^7 + xy^4z^6"),
            pp(r, "z^8 + xy^3z^7"), pp(r, "x^10 + y^10 + z^10")});
    CHECK(!normal_form(pp(r, "x^5z^2"), gb).is_zero());
}

TEST_CASE("eliminate: intersection of principal ideals") {
    Ring base = testsupport::ring2(7);
    Ring ext = base.extended_with_tags(1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial x = Polynomial::variable(ext, 1);
    Polynomial y = Polynomial::variable(ext, 2);
    Polynomial one = Polynomial::constant(ext, 1);
    auto out = eliminate(ext, {t * x, (one - t) * y}, 1, base);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == pp(base, "xy"));
}

TEST_CASE("eliminate: no relation without the tag") {
    Ring base = Ring::make({"x"}, PrimeChar(7));
    Ring ext = base.extended_with_tags(1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial x = Polynomial::variable(ext, 1);
    auto out = eliminate(ext, {t - x}, 1, base);
    CHECK(out.empty());
}

TEST_CASE("eliminate: inverse tag relation") {
    // y = t*x*y - y*(t*x - 1) lies in the ideal, so eliminating t leaves (y).
    Ring base = testsupport::ring2(7);
    Ring ext = base.extended_with_tags(1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial x = Polynomial::variable(ext, 1);
    Polynomial y = Polynomial::variable(ext, 2);
    Polynomial one = Polynomial::constant(ext, 1);
    auto out = eliminate(ext, {t * x - one, x * y}, 1, base);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == pp(base, "y"));
}

TEST_CASE("idempotence: buchberger of a reduced basis returns it") {
    std::mt19937_64 rng(101);
    Ring r = testsupport::ring3(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(testsupport::random_poly(rng, r, 3, 4));
        GroebnerBasis gb = buchberger(r, gens);
        GroebnerBasis again = buchberger(r, gb.elements);
        REQUIRE(gb.elements == again.elements);
    }
}

TEST_CASE("membership consistency for combinations of generators") {
    std::mt19937_64 rng(202);
    Ring r = testsupport::ring3(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(testsupport::random_poly(rng, r, 3, 4));
        GroebnerBasis gb = buchberger(r, gens);
        Polynomial combo = Polynomial::zero(r);
        for (const Polynomial& g : gens)
            combo = combo + testsupport::random_poly(rng, r, 2, 3) * g;
        REQUIRE(normal_form(combo, gb).is_zero());
    }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
    std::mt19937_64 rng(303);
    Ring r = testsupport::ring3(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 4; ++i)
            gens.push_back(testsupport::random_poly(rng, r, 3, 3));
        GroebnerBasis gb = buchberger(r, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis gb2 = buchberger(r, gens);
        REQUIRE(gb.elements == gb2.elements);
    }
}

TEST_CASE("degree cap aborts runaway computations") {
    GbLimits saved = gb_limits();
    gb_limits().max_degree = 8;
    Ring r = testsupport::ring2(7);
    // S-pair of x^9 against x*y forces a pair of lcm degree 10 > 8.
    CHECK_THROWS_AS(buchberger(r, {pp(r, "x^9 + y"), pp(r, "x*y + x")}),
                    ResourceError);
    gb_limits() = saved;
}
