#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/groebner.hpp"
#include "starcore/linalg.hpp"
#include "starcore/polynomial.hpp"
#include "starcore/ring.hpp"

namespace starcore {

class IdealHandle;

// R = S/(F): ambient polynomial ring plus the defining relations F. Ideals
// of R are represented by ambient ideals containing (F), so every algorithm
// runs in S and the correspondence theorem carries the results back.
class QuotientRing {
public:
    static QuotientRing make(Ring ambient, std::vector<Polynomial> relations) {
        std::vector<Polynomial> rels;
        for (Polynomial& r : relations) {
            if (r.ring() != ambient)
                throw UsageError("relation from a different ambient ring");
            if (r.is_zero()) throw UsageError("zero polynomial as ring relation");
            rels.push_back(std::move(r));
        }
        return QuotientRing(
            std::make_shared<Data>(std::move(ambient), std::move(rels)));
    }

    static QuotientRing polynomial_ring(Ring ambient) {
        return make(std::move(ambient), {});
    }

    const Ring& ambient() const { return d_->ambient; }
    const std::vector<Polynomial>& relations() const { return d_->relations; }
    PrimeChar characteristic() const { return d_->ambient.characteristic(); }
    std::uint32_t p() const { return d_->ambient.p(); }
    std::size_t var_count() const { return d_->ambient.var_count(); }

    IdealHandle ideal(std::vector<Polynomial> user_gens) const;
    IdealHandle zero_ideal() const;
    IdealHandle unit_ideal() const;
    IdealHandle maximal_ideal() const;
    IdealHandle principal(const Polynomial& f) const;

    // Reduced basis of the relation ideal alone; cached.
    const GroebnerBasis& relations_groebner() const {
        std::lock_guard<std::mutex> lock(d_->mu);
        if (!d_->rel_gb)
            d_->rel_gb = std::make_shared<const GroebnerBasis>(
                buchberger(d_->ambient, d_->relations));
        return *d_->rel_gb;
    }

    friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
        if (a.d_ == b.d_) return true;
        return a.d_->ambient == b.d_->ambient && a.d_->relations == b.d_->relations;
    }
    friend bool operator!=(const QuotientRing& a, const QuotientRing& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string s = d_->ambient.to_string();
        if (!d_->relations.empty()) {
            s += "/(";
            for (std::size_t i = 0; i < d_->relations.size(); ++i) {
                if (i) s += ", ";
                s += d_->relations[i].to_string();
            }
            s += ")";
        }
        return s;
    }

private:
    struct Data {
        Data(Ring amb, std::vector<Polynomial> rels)
            : ambient(std::move(amb)), relations(std::move(rels)) {}
        Ring ambient;
        std::vector<Polynomial> relations;
        mutable std::mutex mu;
        mutable std::shared_ptr<const GroebnerBasis> rel_gb;
    };

    explicit QuotientRing(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    std::shared_ptr<Data> d_;
};

// Ideal of R presented by user generators; ambient generators are the user
// generators together with the ring relations. The reduced Groebner basis of
// the ambient ideal is the canonical form: equality of ideals is equality of
// bases. The cache cell is write-once and shared between copies.
class IdealHandle {
public:
    IdealHandle(QuotientRing ring, std::vector<Polynomial> user_gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        user_gens_.reserve(user_gens.size());
        for (Polynomial& g : user_gens) {
            if (g.ring() != ring_.ambient())
                throw UsageError("ideal generator from a different ring");
            if (!g.is_zero()) user_gens_.push_back(std::move(g));
        }
    }

    const QuotientRing& ring() const { return ring_; }
    const std::vector<Polynomial>& user_gens() const { return user_gens_; }

    std::vector<Polynomial> ambient_gens() const {
        std::vector<Polynomial> gens = user_gens_;
        gens.insert(gens.end(), ring_.relations().begin(), ring_.relations().end());
        return gens;
    }

    const GroebnerBasis& groebner() const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->gb)
            cache_->gb = std::make_shared<const GroebnerBasis>(
                buchberger(ring_.ambient(), ambient_gens()));
        return *cache_->gb;
    }

    bool contains(const Polynomial& f) const {
        if (f.ring() != ring_.ambient())
            throw UsageError("membership test across different rings");
        return normal_form(f, groebner()).is_zero();
    }

    bool contains(const IdealHandle& other) const {
        require_same_ring(other);
        for (const Polynomial& g : other.user_gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool is_unit() const {
        const GroebnerBasis& gb = groebner();
        return gb.elements.size() == 1 && gb.elements[0].is_constant() &&
               !gb.elements[0].is_zero();
    }

    // Zero as an ideal of R: every user generator lies in the relation ideal.
    bool is_zero_in_ring() const {
        const GroebnerBasis& rel = ring_.relations_groebner();
        for (const Polynomial& g : user_gens_)
            if (!normal_form(g, rel).is_zero()) return false;
        return true;
    }

    friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
        a.require_same_ring(b);
        return a.groebner().elements == b.groebner().elements;
    }
    friend bool operator!=(const IdealHandle& a, const IdealHandle& b) {
        return !(a == b);
    }

    void require_same_ring(const IdealHandle& other) const {
        if (ring_ != other.ring_)
            throw UsageError("ideal operation across different quotient rings");
    }

private:
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const GroebnerBasis> gb;
    };

    QuotientRing ring_;
    std::vector<Polynomial> user_gens_;
    std::shared_ptr<Cache> cache_;
};

inline IdealHandle QuotientRing::ideal(std::vector<Polynomial> user_gens) const {
    return IdealHandle(*this, std::move(user_gens));
}

inline IdealHandle QuotientRing::zero_ideal() const { return ideal({}); }

inline IdealHandle QuotientRing::unit_ideal() const {
    return ideal({Polynomial::constant(ambient(), 1)});
}

inline IdealHandle QuotientRing::maximal_ideal() const {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < var_count(); ++i)
        vars.push_back(Polynomial::variable(ambient(), i));
    return ideal(std::move(vars));
}

inline IdealHandle QuotientRing::principal(const Polynomial& f) const {
    return ideal({f});
}

inline IdealHandle sum(const IdealHandle& a, const IdealHandle& b) {
    a.require_same_ring(b);
    std::vector<Polynomial> gens = a.user_gens();
    for (const Polynomial& g : b.user_gens()) gens.push_back(g);
    return IdealHandle(a.ring(), std::move(gens));
}

inline IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
    a.require_same_ring(b);
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.user_gens()) {
        for (const Polynomial& g : b.user_gens()) {
            Polynomial fg = f * g;
            bool dup = false;
            for (const Polynomial& seen : gens)
                if (seen == fg) {
                    dup = true;
                    break;
                }
            if (!dup && !fg.is_zero()) gens.push_back(std::move(fg));
        }
    }
    return IdealHandle(a.ring(), std::move(gens));
}

inline IdealHandle power(const IdealHandle& a, std::uint64_t n) {
    if (n == 0) return a.ring().unit_ideal();
    IdealHandle acc = a;
    for (std::uint64_t i = 1; i < n; ++i) acc = product(acc, a);
    return acc;
}

// Frobenius bracket power: q-th powers of the user generators. The ring
// relations stay as they are; I^[q] is an ideal of R, not of a new ring.
inline IdealHandle bracket_power(const IdealHandle& a, std::uint64_t q) {
    Polynomial::require_p_power(a.ring().p(), q);
    std::vector<Polynomial> gens;
    gens.reserve(a.user_gens().size());
    for (const Polynomial& g : a.user_gens()) gens.push_back(g.frobenius_power(q));
    return IdealHandle(a.ring(), std::move(gens));
}

namespace detail {

// A cap B in the ambient ring via one tag variable:
// eliminate t from t*A + (1-t)*B.
inline std::vector<Polynomial> intersect_ambient(const Ring& ring,
                                                 const std::vector<Polynomial>& a,
                                                 const std::vector<Polynomial>& b) {
    Ring ext = ring.extended_with_tags(1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(a.size() + b.size());
    for (const Polynomial& f : a) gens.push_back(t * f.prepend_vars(ext, 1));
    for (const Polynomial& g : b) gens.push_back(one_minus_t * g.prepend_vars(ext, 1));
    return eliminate(ext, gens, 1, ring);
}

// Exact quotient f / g; f must be a polynomial multiple of g.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw UsageError("exact division by zero");
    Polynomial quotient = Polynomial::zero(f.ring());
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!g.leading_monomial().divides(lt.mono))
            throw UsageError("exact polynomial division failed");
        Monomial qm = g.leading_monomial().divide_into(lt.mono);
        FieldElement qc = lt.coeff / g.leading_coeff();
        quotient = quotient + Polynomial::term(f.ring(), qm, qc);
        rest = rest - g.times_term(qm, qc);
    }
    return quotient;
}

}  // namespace detail

inline IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
    a.require_same_ring(b);
    std::vector<Polynomial> gens = detail::intersect_ambient(
        a.ring().ambient(), a.ambient_gens(), b.ambient_gens());
    return IdealHandle(a.ring(), std::move(gens));
}

// Colon by a single ring element: (A : g) = generators of (A cap (g))
// divided exactly by g. The principal ideal (g) is taken in the ambient
// ring; because A contains the relations, the quotient-ring colon is
// recovered exactly.
inline IdealHandle colon(const IdealHandle& a, const Polynomial& g) {
    if (g.ring() != a.ring().ambient())
        throw UsageError("colon divisor from a different ring");
    if (normal_form(g, a.ring().relations_groebner()).is_zero())
        return a.ring().unit_ideal();
    std::vector<Polynomial> meet =
        detail::intersect_ambient(a.ring().ambient(), a.ambient_gens(), {g});
    std::vector<Polynomial> gens;
    gens.reserve(meet.size());
    for (const Polynomial& h : meet) gens.push_back(detail::divide_exact(h, g));
    return IdealHandle(a.ring(), std::move(gens));
}

// Colon by an ideal: intersection of the colons by its generators.
// Generators that vanish in R contribute the unit ideal; if every generator
// vanishes the result is R by convention (documented, not an error).
inline IdealHandle colon(const IdealHandle& a, const IdealHandle& b) {
    a.require_same_ring(b);
    const GroebnerBasis& rel = a.ring().relations_groebner();
    std::vector<Polynomial> divisors;
    for (const Polynomial& g : b.user_gens())
        if (!normal_form(g, rel).is_zero()) divisors.push_back(g);
    if (divisors.empty()) return a.ring().unit_ideal();
    IdealHandle acc = colon(a, divisors[0]);
    for (std::size_t i = 1; i < divisors.size(); ++i)
        acc = intersect(acc, colon(a, divisors[i]));
    return acc;
}

// Minimal homogeneous generators of the R-ideal, degree by degree: a
// candidate of degree d is redundant exactly when it lies in the span of
// (lower-degree kept generators and relations) times monomials together
// with the already kept degree-d generators.
inline std::vector<Polynomial> graded_min_gens(const IdealHandle& a) {
    const Ring& ring = a.ring().ambient();
    for (const Polynomial& g : a.user_gens())
        if (!g.is_homogeneous())
            throw UsageError("graded_min_gens: unsupported non-homogeneous generator '" +
                             g.to_string() + "'");
    for (const Polynomial& r : a.ring().relations())
        if (!r.is_homogeneous())
            throw UsageError("graded_min_gens: unsupported non-homogeneous relation '" +
                             r.to_string() + "'");

    std::vector<Polynomial> candidates = a.user_gens();
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Polynomial& x, const Polynomial& y) {
                         return x.total_degree() < y.total_degree();
                     });

    std::vector<Polynomial> chosen;
    std::size_t idx = 0;
    while (idx < candidates.size()) {
        std::uint64_t d = static_cast<std::uint64_t>(candidates[idx].total_degree());
        std::vector<Monomial> basis = monomials_of_degree(ring, d);
        std::map<std::vector<std::uint32_t>, std::size_t> col;
        for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i].exponents()] = i;

        auto vectorize = [&](const Polynomial& f) {
            std::vector<std::uint32_t> v(basis.size(), 0);
            for (const Term& t : f.terms()) v[col.at(t.mono.exponents())] = t.coeff.value();
            return v;
        };

        FpSpan span(ring.p(), basis.size());
        std::vector<Polynomial> producers = chosen;
        producers.insert(producers.end(), a.ring().relations().begin(),
                         a.ring().relations().end());
        for (const Polynomial& g : producers) {
            std::uint64_t dg = static_cast<std::uint64_t>(g.total_degree());
            if (dg > d) continue;
            for (const Monomial& m : monomials_of_degree(ring, d - dg))
                span.insert(vectorize(g.times_term(m, FieldElement::one(ring.characteristic()))));
        }

        while (idx < candidates.size() &&
               static_cast<std::uint64_t>(candidates[idx].total_degree()) == d) {
            std::vector<std::uint32_t> v = vectorize(candidates[idx]);
            if (!span.contains(v)) {
                chosen.push_back(candidates[idx]);
                span.insert(std::move(v));
            }
            ++idx;
        }
    }
    return chosen;
}

}  // namespace starcore
