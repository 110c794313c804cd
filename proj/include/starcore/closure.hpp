#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/ideal.hpp"

namespace starcore {

// User-supplied test ideal. The engine trusts the assertion and records its
// provenance; everything proved from tau is only as good as tau itself.
struct TestIdealInput {
    IdealHandle tau;
    std::string provenance;

    TestIdealInput(IdealHandle t, std::string prov)
        : tau(std::move(t)), provenance(std::move(prov)) {
        if (tau.is_zero_in_ring())
            throw UsageError("test ideal must be nonzero in the ring");
    }
};

enum class MembershipStatus { ProvedIn, ProvedOut, Unknown };

enum class ClosureRule {
    AlreadyInIdeal,
    DegreeCriterion,
    GorensteinParameterColon,
    TestIdealRefutation,
    FrobeniusRefutation,
    EvidenceOnly,
};

inline const char* to_string(MembershipStatus s) {
    switch (s) {
        case MembershipStatus::ProvedIn: return "ProvedIn";
        case MembershipStatus::ProvedOut: return "ProvedOut";
        case MembershipStatus::Unknown: return "Unknown";
    }
    return "?";
}

inline const char* to_string(ClosureRule r) {
    switch (r) {
        case ClosureRule::AlreadyInIdeal: return "AlreadyInIdeal";
        case ClosureRule::DegreeCriterion: return "DegreeCriterion";
        case ClosureRule::GorensteinParameterColon: return "GorensteinParameterColon";
        case ClosureRule::TestIdealRefutation: return "TestIdealRefutation";
        case ClosureRule::FrobeniusRefutation: return "FrobeniusRefutation";
        case ClosureRule::EvidenceOnly: return "EvidenceOnly";
    }
    return "?";
}

struct EvidenceRow {
    std::uint64_t q;
    std::string check;
    bool holds;
    bool skipped = false;  // row hit a resource cap and was not decided
};

// Three-valued membership verdict. ProvedIn / ProvedOut carry enough data
// to replay the certificate with plain ideal operations; Unknown carries
// the evidence trace up to q_max.
struct ClosureVerdict {
    MembershipStatus status = MembershipStatus::Unknown;
    ClosureRule rule = ClosureRule::EvidenceOnly;
    std::vector<EvidenceRow> evidence;
    std::uint64_t q_max = 0;
    std::optional<Polynomial> witness_multiplier;  // c for refutations
    std::optional<std::uint64_t> witness_q;
    std::optional<IdealHandle> claimed_container;  // for membership rules
    bool over_kbar_caveat = false;  // certificate valid over the algebraic closure
    std::string note;
};

struct ClosureConfig {
    std::uint64_t q_max = 0;  // 0 selects the default p^2; must be p^e, e <= 4
    bool gorenstein_parameter = false;
};

inline std::uint64_t resolved_q_max(std::uint32_t p, const ClosureConfig& cfg) {
    if (cfg.q_max == 0) return static_cast<std::uint64_t>(p) * p;
    Polynomial::require_p_power(p, cfg.q_max);
    std::uint64_t q = 1;
    int e = 0;
    while (q < cfg.q_max) {
        q *= p;
        ++e;
    }
    if (e > 4) throw UsageError("q_max exceeds p^4");
    return cfg.q_max;
}

// Diagonal-hypersurface membership rule: in K[x,y,z]/(x^k+y^k+z^k) with the
// characteristic not dividing k, every homogeneous element of degree >= k
// lies in the tight closure of (x^d1, y^d2, z^d3) provided d_i <= k and
// d1+d2+d3 <= 2k. The hypothesis needs an algebraically closed field, so
// verdicts citing this rule carry a caveat. Inapplicable shapes return
// false, never an error.
inline bool degree_criterion(const Polynomial& f, const IdealHandle& a) {
    const QuotientRing& q = a.ring();
    const Ring& ring = q.ambient();
    if (ring.var_count() != 3) return false;
    if (q.relations().size() != 1) return false;

    const Polynomial& rel = q.relations()[0];
    if (rel.term_count() != 3) return false;
    std::uint64_t k = 0;
    bool var_seen[3] = {false, false, false};
    for (const Term& t : rel.terms()) {
        std::size_t var = 3;
        for (std::size_t i = 0; i < 3; ++i) {
            if (t.mono.exponent(i) != 0) {
                if (var != 3) return false;  // mixed monomial
                var = i;
            }
        }
        if (var == 3) return false;  // constant term
        if (var_seen[var]) return false;
        var_seen[var] = true;
        std::uint64_t e = t.mono.exponent(var);
        if (k == 0) k = e;
        if (e != k) return false;
    }
    if (!(var_seen[0] && var_seen[1] && var_seen[2]) || k == 0) return false;

    if (a.user_gens().size() != 3) return false;
    std::uint64_t d[3] = {0, 0, 0};
    bool gen_seen[3] = {false, false, false};
    for (const Polynomial& g : a.user_gens()) {
        if (g.term_count() != 1) return false;
        const Monomial& m = g.terms()[0].mono;
        std::size_t var = 3;
        for (std::size_t i = 0; i < 3; ++i) {
            if (m.exponent(i) != 0) {
                if (var != 3) return false;
                var = i;
            }
        }
        if (var == 3 || gen_seen[var]) return false;
        gen_seen[var] = true;
        d[var] = m.exponent(var);
        if (d[var] == 0) return false;
    }
    if (!(gen_seen[0] && gen_seen[1] && gen_seen[2])) return false;

    if (ring.p() != 0 && k % ring.p() == 0) return false;
    for (std::uint64_t di : d)
        if (di > k) return false;
    if (d[0] + d[1] + d[2] > 2 * k) return false;
    if (!f.is_homogeneous() || f.is_zero()) return false;
    return static_cast<std::uint64_t>(f.total_degree()) >= k;
}

namespace detail {

inline std::vector<Polynomial> nonzero_tau_gens(const TestIdealInput& tau) {
    const GroebnerBasis& rel = tau.tau.ring().relations_groebner();
    std::vector<Polynomial> out;
    for (const Polynomial& c : tau.tau.user_gens())
        if (!normal_form(c, rel).is_zero()) out.push_back(c);
    return out;
}

}  // namespace detail

// Tight-closure membership, three-valued. Proof rules in order:
//   (1) f already in the ideal;
//   (2) the diagonal degree rule;
//   (3) f in (a : tau), valid when the caller asserts the Gorenstein
//       parameter-ideal situation (a* = a : tau there);
//   (4) refutation: tau * f not inside a (tau multiplies the closure in);
//   (5) refutation at higher Frobenius levels: some tau-generator c, nonzero
//       in R, and q <= q_max with c*f^q outside a^[q]. Sound because
//       f in a* forces f^q in (a^[q])* and then tau*f^q inside a^[q].
//   (6) otherwise Unknown with the full (c, q) evidence trace.
inline ClosureVerdict star_member(const Polynomial& f, const IdealHandle& a,
                                  const TestIdealInput& tau,
                                  const ClosureConfig& cfg = {}) {
    if (f.ring() != a.ring().ambient())
        throw UsageError("star_member: element from a different ring");
    if (tau.tau.ring() != a.ring())
        throw UsageError("star_member: test ideal from a different ring");
    const std::uint32_t p = a.ring().p();
    const std::uint64_t q_max = resolved_q_max(p, cfg);

    ClosureVerdict v;
    v.q_max = q_max;

    if (a.contains(f)) {
        v.status = MembershipStatus::ProvedIn;
        v.rule = ClosureRule::AlreadyInIdeal;
        v.claimed_container = a;
        return v;
    }
    if (degree_criterion(f, a)) {
        v.status = MembershipStatus::ProvedIn;
        v.rule = ClosureRule::DegreeCriterion;
        v.over_kbar_caveat = true;
        v.note = "diagonal degree rule; certificate valid over the algebraic closure";
        return v;
    }
    if (cfg.gorenstein_parameter) {
        IdealHandle colon_tau = colon(a, tau.tau);
        if (colon_tau.contains(f)) {
            v.status = MembershipStatus::ProvedIn;
            v.rule = ClosureRule::GorensteinParameterColon;
            v.claimed_container = colon_tau;
            v.note = "membership in (ideal : tau); caller asserted the Gorenstein "
                     "parameter hypothesis";
            return v;
        }
    }

    std::vector<Polynomial> cs = detail::nonzero_tau_gens(tau);
    for (const Polynomial& c : cs) {
        bool in = a.contains(c * f);
        v.evidence.push_back({1, "(" + c.to_string() + ")*f in ideal", in});
        if (!in) {
            v.status = MembershipStatus::ProvedOut;
            v.rule = ClosureRule::TestIdealRefutation;
            v.witness_multiplier = c;
            v.witness_q = 1;
            v.note = "tau*f escapes the ideal";
            return v;
        }
    }
    for (std::uint64_t q = p; q <= q_max; q *= p) {
        try {
            IdealHandle aq = bracket_power(a, q);
            Polynomial fq = f.frobenius_power(q);
            for (const Polynomial& c : cs) {
                bool in = aq.contains(c * fq);
                v.evidence.push_back(
                    {q, "(" + c.to_string() + ")*f^" + std::to_string(q) +
                            " in ideal^[" + std::to_string(q) + "]",
                     in});
                if (!in) {
                    v.status = MembershipStatus::ProvedOut;
                    v.rule = ClosureRule::FrobeniusRefutation;
                    v.witness_multiplier = c;
                    v.witness_q = q;
                    v.note = "tau*f^q escapes the bracket power";
                    return v;
                }
            }
        } catch (const ResourceError& e) {
            v.evidence.push_back({q, std::string("resource cap: ") + e.what(),
                                  false, true});
            break;
        }
    }
    v.status = MembershipStatus::Unknown;
    v.rule = ClosureRule::EvidenceOnly;
    v.note = "no rule fired; evidence trace attached";
    return v;
}

// Special tight closure membership. Proof rules:
//   (1) f in m*a is trivially special (q0 = 1);
//   (2) graded rule: homogeneous f proved in a* with degree above every
//       minimal generator degree of a;
//   (3) ProvedOut inherited from a* (the special part sits inside it);
//   (4) otherwise Unknown with evidence rows c*f^q in m^[q]*a^[q0*q] for
//       q0 in {p, p^2}.
inline ClosureVerdict starsp_member(const Polynomial& f, const IdealHandle& a,
                                    const TestIdealInput& tau,
                                    const ClosureConfig& cfg = {}) {
    if (f.ring() != a.ring().ambient())
        throw UsageError("starsp_member: element from a different ring");
    const std::uint32_t p = a.ring().p();
    const std::uint64_t q_max = resolved_q_max(p, cfg);

    IdealHandle m = a.ring().maximal_ideal();
    IdealHandle ma = product(m, a);
    if (ma.contains(f)) {
        ClosureVerdict v;
        v.status = MembershipStatus::ProvedIn;
        v.rule = ClosureRule::AlreadyInIdeal;
        v.q_max = q_max;
        v.claimed_container = ma;
        v.note = "member of m*(ideal), special at q0 = 1";
        v.evidence.push_back({1, "f in m*(ideal)", true});
        return v;
    }

    ClosureVerdict sv = star_member(f, a, tau, cfg);
    if (sv.status == MembershipStatus::ProvedOut) {
        sv.note += "; inherited: the special part lies inside the tight closure";
        return sv;
    }
    if (sv.status == MembershipStatus::ProvedIn && f.is_homogeneous()) {
        bool homogeneous_ideal = true;
        for (const Polynomial& g : a.user_gens())
            if (!g.is_homogeneous()) homogeneous_ideal = false;
        for (const Polynomial& r : a.ring().relations())
            if (!r.is_homogeneous()) homogeneous_ideal = false;
        if (homogeneous_ideal) {
            std::int64_t max_deg = 0;
            for (const Polynomial& g : graded_min_gens(a))
                max_deg = std::max(max_deg, g.total_degree());
            if (f.total_degree() > max_deg) {
                ClosureVerdict v = sv;
                v.note = "graded rule: degree " + std::to_string(f.total_degree()) +
                         " exceeds every minimal generator degree (max " +
                         std::to_string(max_deg) + "); " + sv.note;
                v.evidence.push_back(
                    {1, "deg f > max generator degree of the ideal", true});
                return v;
            }
        }
    }

    ClosureVerdict v;
    v.status = MembershipStatus::Unknown;
    v.rule = ClosureRule::EvidenceOnly;
    v.q_max = q_max;
    std::vector<Polynomial> cs = detail::nonzero_tau_gens(tau);
    for (std::uint64_t q0 = p; q0 <= static_cast<std::uint64_t>(p) * p; q0 *= p) {
        bool capped = false;
        for (std::uint64_t q = 1; q <= q_max && !capped; q *= p) {
            try {
                IdealHandle target = product(bracket_power(m, q),
                                             bracket_power(a, q0 * q));
                Polynomial fq = f.frobenius_power(q);
                for (const Polynomial& c : cs) {
                    bool in = target.contains(c * fq);
                    v.evidence.push_back(
                        {q, "(" + c.to_string() + ")*f^" + std::to_string(q) +
                                " in m^[" + std::to_string(q) + "]*ideal^[" +
                                std::to_string(q0 * q) + "] (q0=" +
                                std::to_string(q0) + ")",
                         in});
                }
            } catch (const ResourceError& e) {
                v.evidence.push_back({q, std::string("resource cap: ") + e.what(),
                                      false, true});
                capped = true;
            }
            if (q == q_max) break;  // guard overflow on q *= p
        }
    }
    v.note = "no special-part rule fired; evidence trace attached";
    return v;
}

// Verdicts for each generator against the ideal of the remaining ones.
// The family is proved *-independent exactly when every verdict is ProvedOut.
inline std::vector<ClosureVerdict> star_independent(
    const std::vector<Polynomial>& gens, const TestIdealInput& tau,
    const ClosureConfig& cfg = {}) {
    if (gens.empty()) throw UsageError("star_independent: empty generator list");
    std::vector<ClosureVerdict> out;
    out.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        IdealHandle rest = tau.tau.ring().ideal(others);
        out.push_back(star_member(gens[i], rest, tau, cfg));
    }
    return out;
}

inline bool all_proved_out(const std::vector<ClosureVerdict>& vs) {
    for (const ClosureVerdict& v : vs)
        if (v.status != MembershipStatus::ProvedOut) return false;
    return true;
}

// Evaluates every rule predicate independently of the dispatch order, so
// tests can assert that no input fires both a membership and a refutation.
struct RuleProbe {
    bool already_in = false;
    bool degree_rule = false;
    bool gorenstein_colon = false;
    bool gorenstein_flag = false;
    bool tau_refutes = false;
    bool frobenius_refutes = false;

    bool any_in() const {
        return already_in || degree_rule || (gorenstein_flag && gorenstein_colon);
    }
    bool any_out() const { return tau_refutes || frobenius_refutes; }
};

inline RuleProbe probe_all_rules(const Polynomial& f, const IdealHandle& a,
                                 const TestIdealInput& tau,
                                 const ClosureConfig& cfg = {}) {
    RuleProbe probe;
    const std::uint32_t p = a.ring().p();
    const std::uint64_t q_max = resolved_q_max(p, cfg);
    probe.already_in = a.contains(f);
    probe.degree_rule = degree_criterion(f, a);
    probe.gorenstein_flag = cfg.gorenstein_parameter;
    probe.gorenstein_colon = colon(a, tau.tau).contains(f);
    std::vector<Polynomial> cs = detail::nonzero_tau_gens(tau);
    for (const Polynomial& c : cs)
        if (!a.contains(c * f)) probe.tau_refutes = true;
    for (std::uint64_t q = p; q <= q_max; q *= p) {
        try {
            IdealHandle aq = bracket_power(a, q);
            Polynomial fq = f.frobenius_power(q);
            for (const Polynomial& c : cs)
                if (!aq.contains(c * fq)) probe.frobenius_refutes = true;
        } catch (const ResourceError&) {
            break;
        }
    }
    return probe;
}

}  // namespace starcore
