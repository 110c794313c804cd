#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/ideal.hpp"
#include "starcore/linalg.hpp"

namespace starcore {

// Degree-d slice of a homogeneous ideal: the row space of all monomial
// multiples of the ambient generators that land in degree d, over the basis
// of degree-d monomials. Pure linear algebra; shares nothing with the
// Groebner kernel, which is the point.
class MacaulayPiece {
public:
    MacaulayPiece(const IdealHandle& a, std::uint64_t degree)
        : ring_(a.ring().ambient()),
          degree_(degree),
          basis_(monomials_of_degree(ring_, degree)),
          span_(ring_.p(), basis_.size()) {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            col_[basis_[i].exponents()] = i;
        for (const Polynomial& g : a.ambient_gens()) {
            if (!g.is_homogeneous())
                throw UsageError("Macaulay oracle needs homogeneous generators");
            std::uint64_t dg = static_cast<std::uint64_t>(g.total_degree());
            if (dg > degree) continue;
            FieldElement one = FieldElement::one(ring_.characteristic());
            for (const Monomial& m : monomials_of_degree(ring_, degree - dg))
                span_.insert(vectorize(g.times_term(m, one)));
        }
    }

    std::uint64_t degree() const { return degree_; }
    std::size_t rank() const { return span_.rank(); }
    std::size_t monomial_count() const { return basis_.size(); }

    bool contains(const Polynomial& f) const {
        if (f.is_zero()) return true;
        if (static_cast<std::uint64_t>(f.total_degree()) != degree_)
            throw UsageError("Macaulay piece queried at the wrong degree");
        return span_.contains(vectorize(f));
    }

    friend bool operator==(const MacaulayPiece& a, const MacaulayPiece& b) {
        return a.span_ == b.span_;
    }

private:
    std::vector<std::uint32_t> vectorize(const Polynomial& f) const {
        std::vector<std::uint32_t> v(basis_.size(), 0);
        for (const Term& t : f.terms()) v[col_.at(t.mono.exponents())] = t.coeff.value();
        return v;
    }

    Ring ring_;
    std::uint64_t degree_;
    std::vector<Monomial> basis_;
    std::map<std::vector<std::uint32_t>, std::size_t> col_;
    FpSpan span_;
};

// Membership of a homogeneous element by Gaussian elimination in its degree.
inline bool oracle_member(const Polynomial& f, const IdealHandle& a,
                          std::uint64_t d_max) {
    if (!f.is_homogeneous())
        throw UsageError("oracle_member: non-homogeneous query");
    if (f.is_zero()) return true;
    std::uint64_t d = static_cast<std::uint64_t>(f.total_degree());
    if (d > d_max) throw UsageError("oracle_member: query degree exceeds d_max");
    return MacaulayPiece(a, d).contains(f);
}

// Span equality in every degree <= d_max.
inline bool oracle_equal_up_to(const IdealHandle& a, const IdealHandle& b,
                               std::uint64_t d_max) {
    a.require_same_ring(b);
    for (std::uint64_t d = 0; d <= d_max; ++d)
        if (!(MacaulayPiece(a, d) == MacaulayPiece(b, d))) return false;
    return true;
}

// Default query bound: twice the largest generator degree or the query
// degree, whichever is larger, plus the largest relation degree.
inline std::uint64_t oracle_default_dmax(const IdealHandle& a,
                                         std::int64_t query_degree = 0) {
    std::int64_t max_gen = 0;
    for (const Polynomial& g : a.user_gens())
        max_gen = std::max(max_gen, g.total_degree());
    std::int64_t max_rel = 0;
    for (const Polynomial& r : a.ring().relations())
        max_rel = std::max(max_rel, r.total_degree());
    return static_cast<std::uint64_t>(std::max(2 * max_gen, query_degree) + max_rel);
}

}  // namespace starcore
