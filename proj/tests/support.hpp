#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "starcore/closure.hpp"
#include "starcore/ideal.hpp"
#include "starcore/linalg.hpp"
#include "starcore/parse.hpp"
#include "starcore/polynomial.hpp"

namespace testsupport {

using namespace starcore;

inline Ring ring3(std::uint32_t p) {
    return Ring::make({"x", "y", "z"}, PrimeChar(p));
}

inline Ring ring2(std::uint32_t p) {
    return Ring::make({"x", "y"}, PrimeChar(p));
}

inline Polynomial pp(const Ring& r, const std::string& src) {
    return parse_poly(src, r);
}

// Random polynomial with term count <= max_terms and per-variable exponents
// <= max_exp. May be zero only when allow_zero.
inline Polynomial random_poly(std::mt19937_64& rng, const Ring& r,
                              std::uint32_t max_exp, std::size_t max_terms,
                              bool allow_zero = false) {
    std::uniform_int_distribution<std::uint32_t> exp_dist(0, max_exp);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(0, r.p() - 1);
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    for (;;) {
        std::vector<Term> terms;
        std::size_t n = nterms(rng);
        for (std::size_t t = 0; t < n; ++t) {
            std::vector<std::uint32_t> e(r.var_count());
            for (auto& x : e) x = exp_dist(rng);
            terms.push_back({Monomial(std::move(e)),
                             FieldElement(r.characteristic(), coeff_dist(rng))});
        }
        Polynomial f = Polynomial::from_terms(r, std::move(terms));
        if (allow_zero || !f.is_zero()) return f;
    }
}

// Fermat hypersurface F_p[x,y,z]/(x^k + y^k + z^k).
inline QuotientRing fermat_ring(std::uint32_t p, std::uint32_t k) {
    Ring r = ring3(p);
    std::string rel = "x^" + std::to_string(k) + " + y^" + std::to_string(k) +
                      " + z^" + std::to_string(k);
    return QuotientRing::make(r, {pp(r, rel)});
}

// F_p[x,y,z]/(xyz).
inline QuotientRing xyz_ring(std::uint32_t p) {
    Ring r = ring3(p);
    return QuotientRing::make(r, {pp(r, "xyz")});
}

inline QuotientRing poly_ring2(std::uint32_t p) {
    return QuotientRing::polynomial_ring(ring2(p));
}

inline QuotientRing poly_ring3(std::uint32_t p) {
    return QuotientRing::polynomial_ring(ring3(p));
}

inline IdealHandle ideal_of(const QuotientRing& q,
                            std::vector<std::string> gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(pp(q.ambient(), s));
    return q.ideal(std::move(ps));
}

// Random nonzero homogeneous polynomial of the exact degree.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const Ring& r,
                                     std::uint64_t degree) {
    std::vector<Monomial> basis = monomials_of_degree(r, degree);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(0, r.p() - 1);
    for (;;) {
        std::vector<Term> terms;
        for (const Monomial& m : basis) {
            std::uint32_t c = coeff_dist(rng);
            if (c) terms.push_back({m, FieldElement(r.characteristic(), c)});
        }
        Polynomial f = Polynomial::from_terms(r, std::move(terms));
        if (!f.is_zero()) return f;
    }
}

// ---------------------------------------------------------------------------
// Certificate replay. Re-verifies ProvedIn / ProvedOut closure verdicts using
// nothing but ideal-module operations (and syntactic inspection for the
// degree rule). Deliberately independent of the closure dispatch code.
// ---------------------------------------------------------------------------

// Shape check for the diagonal degree rule, reimplemented test-side.
inline bool replay_degree_rule_shape(const Polynomial& f, const IdealHandle& a) {
    const QuotientRing& q = a.ring();
    if (q.ambient().var_count() != 3 || q.relations().size() != 1) return false;
    const Polynomial& rel = q.relations()[0];
    if (rel.term_count() != 3) return false;
    std::uint64_t k = 0;
    std::vector<bool> seen(3, false);
    for (const Term& t : rel.terms()) {
        if (t.mono.degree() == 0) return false;
        std::size_t var = 99;
        for (std::size_t i = 0; i < 3; ++i)
            if (t.mono.exponent(i) == t.mono.degree() && t.mono.exponent(i) != 0)
                var = i;
        if (var == 99 || seen[var]) return false;
        // pure power: total degree concentrated in one variable
        std::uint64_t sum = t.mono.exponent(0) + t.mono.exponent(1) + t.mono.exponent(2);
        if (sum != t.mono.exponent(var)) return false;
        seen[var] = true;
        if (k == 0) k = t.mono.exponent(var);
        if (t.mono.exponent(var) != k) return false;
    }
    if (k == 0) return false;
    if (a.user_gens().size() != 3) return false;
    std::uint64_t dsum = 0;
    std::vector<bool> gv(3, false);
    for (const Polynomial& g : a.user_gens()) {
        if (g.term_count() != 1) return false;
        const Monomial& m = g.terms()[0].mono;
        std::size_t var = 99;
        for (std::size_t i = 0; i < 3; ++i)
            if (m.exponent(i) != 0) {
                if (var != 99) return false;
                var = i;
            }
        if (var == 99 || gv[var]) return false;
        gv[var] = true;
        if (m.exponent(var) > k) return false;
        dsum += m.exponent(var);
    }
    if (dsum > 2 * k) return false;
    if (q.p() != 0 && k % q.p() == 0) return false;
    return f.is_homogeneous() && !f.is_zero() &&
           static_cast<std::uint64_t>(f.total_degree()) >= k;
}

enum class VerdictKind { Star, StarSpecial };

inline bool replay_verdict(const ClosureVerdict& v, const Polynomial& f,
                           const IdealHandle& a, const TestIdealInput& tau,
                           VerdictKind kind) {
    auto tau_has_gen = [&](const Polynomial& c) {
        for (const Polynomial& g : tau.tau.user_gens())
            if (g == c) return true;
        return false;
    };
    switch (v.status) {
        case MembershipStatus::Unknown:
            return v.rule == ClosureRule::EvidenceOnly;
        case MembershipStatus::ProvedIn: {
            bool base = false;
            switch (v.rule) {
                case ClosureRule::AlreadyInIdeal:
                    base = v.claimed_container && v.claimed_container->contains(f);
                    if (base && kind == VerdictKind::Star)
                        base = a.contains(f);
                    break;
                case ClosureRule::DegreeCriterion:
                    base = replay_degree_rule_shape(f, a) && v.over_kbar_caveat;
                    break;
                case ClosureRule::GorensteinParameterColon:
                    base = colon(a, tau.tau).contains(f);
                    break;
                default:
                    return false;
            }
            if (!base) return false;
            if (kind == VerdictKind::StarSpecial &&
                v.rule != ClosureRule::AlreadyInIdeal) {
                // graded special rule: the degree gap must really be there
                std::int64_t max_deg = 0;
                for (const Polynomial& g : graded_min_gens(a))
                    max_deg = std::max(max_deg, g.total_degree());
                if (!(f.is_homogeneous() && f.total_degree() > max_deg)) return false;
            }
            return true;
        }
        case MembershipStatus::ProvedOut: {
            if (!v.witness_multiplier || !v.witness_q) return false;
            const Polynomial& c = *v.witness_multiplier;
            if (!tau_has_gen(c)) return false;
            if (normal_form(c, a.ring().relations_groebner()).is_zero()) return false;
            std::uint64_t q = *v.witness_q;
            if (v.rule == ClosureRule::TestIdealRefutation)
                return q == 1 && !a.contains(c * f);
            if (v.rule == ClosureRule::FrobeniusRefutation)
                return !bracket_power(a, q).contains(c * f.frobenius_power(q));
            return false;
        }
    }
    return false;
}

}  // namespace testsupport
