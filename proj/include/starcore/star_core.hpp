#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "starcore/closure.hpp"
#include "starcore/common.hpp"
#include "starcore/ideal.hpp"

namespace starcore {

// Scenario input for the star-core machinery: a presumed minimal
// *-reduction J = (f_1..f_n) of I = J + (u_1..u_s), the u_j certified (or at
// least not refuted) as members of the special part of J's tight closure,
// and the trusted test ideal.
struct StarReductionInput {
    QuotientRing ring;
    std::vector<Polynomial> j_gens;  // minimal generators; n = *-spread
    std::vector<Polynomial> u_gens;
    TestIdealInput tau;
    ClosureConfig cfg;
    IdealHandle J;
    IdealHandle I;
    std::vector<ClosureVerdict> u_verdicts;  // special-part verdict per u_j
    std::vector<std::string> warnings;

    std::size_t n() const { return j_gens.size(); }
    std::size_t s() const { return u_gens.size(); }
};

// Builds and validates the input. Homogeneous J generators are replaced by
// their graded minimal generators (n must be the minimal generator count).
// A u_j proved outside the special part aborts construction; Unknown is
// accepted with a warning.
inline StarReductionInput make_star_reduction_input(
    const QuotientRing& ring, std::vector<Polynomial> j_gens,
    std::vector<Polynomial> u_gens, TestIdealInput tau,
    const ClosureConfig& cfg = {}) {
    if (tau.tau.ring() != ring)
        throw UsageError("test ideal from a different quotient ring");
    for (const Polynomial& f : j_gens)
        if (f.ring() != ring.ambient())
            throw UsageError("J generator from a different ring");
    for (const Polynomial& u : u_gens)
        if (u.ring() != ring.ambient())
            throw UsageError("u generator from a different ring");

    bool homogeneous = true;
    for (const Polynomial& f : j_gens)
        if (!f.is_homogeneous()) homogeneous = false;
    for (const Polynomial& r : ring.relations())
        if (!r.is_homogeneous()) homogeneous = false;
    if (homogeneous && !j_gens.empty())
        j_gens = graded_min_gens(ring.ideal(j_gens));

    IdealHandle J = ring.ideal(j_gens);
    IdealHandle I = sum(J, ring.ideal(u_gens));

    std::vector<ClosureVerdict> verdicts;
    std::vector<std::string> warnings;
    for (const Polynomial& u : u_gens) {
        ClosureVerdict v = starsp_member(u, J, tau, cfg);
        if (v.status == MembershipStatus::ProvedOut)
            throw UsageError("generator " + u.to_string() +
                             " proved outside the special part of J*: " + v.note);
        if (v.status == MembershipStatus::Unknown)
            warnings.push_back("special-part membership of " + u.to_string() +
                               " is unverified (evidence only)");
        verdicts.push_back(std::move(v));
    }

    return StarReductionInput{ring,
                              std::move(j_gens),
                              std::move(u_gens),
                              std::move(tau),
                              cfg,
                              std::move(J),
                              std::move(I),
                              std::move(verdicts),
                              std::move(warnings)};
}

enum class CriteriaConclusion {
    ConfirmedFormula,
    UpperBoundOnly,
    LowerBoundOnly,
    Inconclusive,
};

inline const char* to_string(CriteriaConclusion c) {
    switch (c) {
        case CriteriaConclusion::ConfirmedFormula: return "ConfirmedFormula";
        case CriteriaConclusion::UpperBoundOnly: return "UpperBoundOnly";
        case CriteriaConclusion::LowerBoundOnly: return "LowerBoundOnly";
        case CriteriaConclusion::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// Exact containment checks behind the star-core formula:
//   a1 (per i): (f_1..^f_i..f_n) : f_i  inside (J:I)
//   a2 (per j): u_j * (J : u_j)         inside J*(J:I)
//   b  (per j): u_j * (J : I)           inside m*J*(J:I)
// a1 and a2 together give the upper bound, b gives the lower bound, both
// give equality with the finite intersection.
struct CriteriaReport {
    std::vector<bool> hypothesis_a1;
    std::vector<bool> hypothesis_a2;
    std::vector<bool> hypothesis_b;
    CriteriaConclusion conclusion = CriteriaConclusion::Inconclusive;

    bool a1_holds() const {
        for (bool x : hypothesis_a1)
            if (!x) return false;
        return true;
    }
    bool a2_holds() const {
        for (bool x : hypothesis_a2)
            if (!x) return false;
        return true;
    }
    bool b_holds() const {
        for (bool x : hypothesis_b)
            if (!x) return false;
        return true;
    }
    bool upper() const { return a1_holds() && a2_holds(); }
    bool lower() const { return b_holds(); }

    friend bool operator==(const CriteriaReport& x, const CriteriaReport& y) {
        return x.hypothesis_a1 == y.hypothesis_a1 &&
               x.hypothesis_a2 == y.hypothesis_a2 &&
               x.hypothesis_b == y.hypothesis_b && x.conclusion == y.conclusion;
    }
};

inline CriteriaReport check_criteria(const StarReductionInput& inp) {
    CriteriaReport rep;
    IdealHandle ji = colon(inp.J, inp.I);
    IdealHandle jji = product(inp.J, ji);
    IdealHandle m_jji = product(inp.ring.maximal_ideal(), jji);

    for (std::size_t i = 0; i < inp.n(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t k = 0; k < inp.n(); ++k)
            if (k != i) others.push_back(inp.j_gens[k]);
        IdealHandle deleted = inp.ring.ideal(others);
        rep.hypothesis_a1.push_back(ji.contains(colon(deleted, inp.j_gens[i])));
    }
    for (const Polynomial& u : inp.u_gens) {
        IdealHandle u_colon = product(inp.ring.principal(u), colon(inp.J, u));
        rep.hypothesis_a2.push_back(jji.contains(u_colon));
        IdealHandle u_ji = product(inp.ring.principal(u), ji);
        rep.hypothesis_b.push_back(m_jji.contains(u_ji));
    }

    bool up = rep.upper(), low = rep.lower();
    if (up && low)
        rep.conclusion = CriteriaConclusion::ConfirmedFormula;
    else if (up)
        rep.conclusion = CriteriaConclusion::UpperBoundOnly;
    else if (low)
        rep.conclusion = CriteriaConclusion::LowerBoundOnly;
    else
        rep.conclusion = CriteriaConclusion::Inconclusive;
    return rep;
}

enum class FamilyKind { Canonical, FullField };

// Canonical family: J itself plus the n*s twisted reductions
// J_{i,j} = (f_1, .., f_{i-1}, f_i + u_j, f_{i+1}, .., f_n), ordered (i, j).
// Full-field family: every (f_i + sum_j a_ij u_j) with scalar matrices
// a over F_p; p^(n*s) members, capped.
inline std::vector<IdealHandle> reduction_family(const StarReductionInput& inp,
                                                 FamilyKind kind,
                                                 std::uint64_t cap = 10000) {
    std::vector<IdealHandle> out;
    if (kind == FamilyKind::Canonical) {
        out.push_back(inp.J);
        for (std::size_t i = 0; i < inp.n(); ++i) {
            for (std::size_t j = 0; j < inp.s(); ++j) {
                std::vector<Polynomial> gens = inp.j_gens;
                gens[i] = gens[i] + inp.u_gens[j];
                out.push_back(inp.ring.ideal(std::move(gens)));
            }
        }
        return out;
    }

    const std::uint64_t p = inp.ring.p();
    const std::size_t cells = inp.n() * inp.s();
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
        if (total > cap / p + 1) total = cap + 1;  // saturate
        else total *= p;
        if (total > cap)
            throw ResourceError("full-field family size p^(n*s) exceeds cap " +
                                std::to_string(cap));
    }
    std::vector<std::uint32_t> a(cells, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t c = 0; c < cells; ++c) {
            a[c] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        std::vector<Polynomial> gens = inp.j_gens;
        for (std::size_t i = 0; i < inp.n(); ++i) {
            for (std::size_t j = 0; j < inp.s(); ++j) {
                std::uint32_t c = a[i * inp.s() + j];
                if (c != 0)
                    gens[i] = gens[i] + inp.u_gens[j].scaled(FieldElement(
                                            inp.ring.characteristic(), c));
            }
        }
        out.push_back(inp.ring.ideal(std::move(gens)));
    }
    return out;
}

// The computable bracket around the star-core: tau*I below, the finite
// intersection of the canonical family above, the formula J(J:I) and its
// variant I(J:I) in between. The sandwich always holds; under a confirmed
// criteria report all three upper members agree.
struct CoreBracket {
    IdealHandle lower;                // tau * I
    IdealHandle formula;              // J * (J:I)
    IdealHandle alt_formula;          // I * (J:I)
    IdealHandle finite_intersection;  // J meet all J_{i,j}
    bool sandwich_holds = false;
    CriteriaConclusion criteria = CriteriaConclusion::Inconclusive;
    bool formula_eq_alt = false;
    bool formula_eq_intersection = false;

    bool confirmed_equalities_ok() const {
        if (criteria != CriteriaConclusion::ConfirmedFormula) return true;
        return formula_eq_alt && formula_eq_intersection;
    }
};

inline CoreBracket core_bracket(const StarReductionInput& inp) {
    std::vector<IdealHandle> family = reduction_family(inp, FamilyKind::Canonical);
    IdealHandle meet = family[0];
    for (std::size_t i = 1; i < family.size(); ++i)
        meet = intersect(meet, family[i]);

    IdealHandle ji = colon(inp.J, inp.I);
    CoreBracket out{product(inp.tau.tau, inp.I),
                    product(inp.J, ji),
                    product(inp.I, ji),
                    meet,
                    false,
                    check_criteria(inp).conclusion,
                    false,
                    false};
    out.sandwich_holds = out.finite_intersection.contains(out.lower);
    out.formula_eq_alt = out.formula == out.alt_formula;
    out.formula_eq_intersection = out.formula == out.finite_intersection;
    return out;
}

// r_J(I) = 1 exactly when I^2 = J*I.
inline bool reduction_number_one(const IdealHandle& J, const IdealHandle& I) {
    return power(I, 2) == product(J, I);
}

inline bool reduction_number_one(const StarReductionInput& inp) {
    return reduction_number_one(inp.J, inp.I);
}

// tau*I lies in every member of the canonical family.
inline std::vector<bool> tau_lower_bound_rows(const StarReductionInput& inp) {
    IdealHandle tau_i = product(inp.tau.tau, inp.I);
    std::vector<bool> rows;
    for (const IdealHandle& k : reduction_family(inp, FamilyKind::Canonical))
        rows.push_back(k.contains(tau_i));
    return rows;
}

inline bool tau_lower_bound_check(const StarReductionInput& inp) {
    for (bool row : tau_lower_bound_rows(inp))
        if (!row) return false;
    return true;
}

// Decidable surrogate for the minimal-*-reduction chain conditions, with
// (U) standing in for the certified part of the special tight closure:
//   (b) (U) meet K inside m*I, and (c) I = (U) + K.
struct ChainReport {
    bool b_holds = false;
    bool c_holds = false;
    std::string note = "relative to certified *sp generators";
};

inline ChainReport chain_conditions(const StarReductionInput& inp,
                                    const IdealHandle& K) {
    K.require_same_ring(inp.J);
    if (K.user_gens().size() != inp.n())
        throw UsageError("chain_conditions: K must have exactly n = " +
                         std::to_string(inp.n()) + " generators");
    if (!inp.I.contains(K))
        throw UsageError("chain_conditions: K is not contained in I");
    IdealHandle U = inp.ring.ideal(inp.u_gens);
    ChainReport rep;
    rep.b_holds = product(inp.ring.maximal_ideal(), inp.I)
                      .contains(intersect(U, K));
    rep.c_holds = sum(U, K) == inp.I;
    return rep;
}

// One Frobenius-scaled run: the bracketed input (J^[q], I^[q]), the scaled
// colon conditions, and the criteria/bracket results at that level.
struct ScalingRow {
    std::uint64_t e;
    std::uint64_t q;
    std::vector<bool> special_a;  // (f_1^q..^f_i^q..) : f_i^q inside tau
    std::vector<bool> special_b;  // u_k^q (J^[q]:u_k^q) inside m*tau*J^[q]
    CriteriaReport criteria;
    CoreBracket bracket;

    bool special_a_holds() const {
        for (bool x : special_a)
            if (!x) return false;
        return true;
    }
    bool special_b_holds() const {
        for (bool x : special_b)
            if (!x) return false;
        return true;
    }
};

struct ScalingReport {
    std::vector<ScalingRow> rows;  // ordered by e
    std::optional<std::uint64_t> least_confirmed_e;
};

inline ScalingReport frobenius_scaling(const StarReductionInput& inp,
                                       std::vector<std::uint64_t> e_list) {
    std::sort(e_list.begin(), e_list.end());
    e_list.erase(std::unique(e_list.begin(), e_list.end()), e_list.end());

    const std::uint64_t p = inp.ring.p();
    ScalingReport report;
    for (std::uint64_t e : e_list) {
        std::uint64_t q = 1;
        for (std::uint64_t i = 0; i < e; ++i) {
            if (q > (1ull << 40) / p)
                throw ResourceError("Frobenius level p^" + std::to_string(e) +
                                    " is out of range");
            q *= p;
        }

        std::vector<Polynomial> jq, uq;
        for (const Polynomial& f : inp.j_gens) jq.push_back(f.frobenius_power(q));
        for (const Polynomial& u : inp.u_gens) uq.push_back(u.frobenius_power(q));
        StarReductionInput scaled = make_star_reduction_input(
            inp.ring, jq, uq, inp.tau, inp.cfg);

        std::vector<bool> special_a, special_b;
        for (std::size_t i = 0; i < scaled.n(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t k = 0; k < scaled.n(); ++k)
                if (k != i) others.push_back(scaled.j_gens[k]);
            IdealHandle deleted = scaled.ring.ideal(others);
            special_a.push_back(
                inp.tau.tau.contains(colon(deleted, scaled.j_gens[i])));
        }
        IdealHandle m_tau_jq = product(product(inp.ring.maximal_ideal(),
                                               inp.tau.tau),
                                       scaled.J);
        for (const Polynomial& u : scaled.u_gens) {
            IdealHandle lhs = product(scaled.ring.principal(u),
                                      colon(scaled.J, u));
            special_b.push_back(m_tau_jq.contains(lhs));
        }
        report.rows.push_back(ScalingRow{e, q, std::move(special_a),
                                         std::move(special_b),
                                         check_criteria(scaled),
                                         core_bracket(scaled)});
    }

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        bool onward = true;
        for (std::size_t k = i; k < report.rows.size(); ++k)
            if (report.rows[k].criteria.conclusion !=
                CriteriaConclusion::ConfirmedFormula)
                onward = false;
        if (onward) {
            report.least_confirmed_e = report.rows[i].e;
            break;
        }
    }
    return report;
}

}  // namespace starcore
