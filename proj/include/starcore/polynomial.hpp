#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/field.hpp"
#include "starcore/monomial.hpp"
#include "starcore/ring.hpp"

namespace starcore {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Multivariate polynomial over F_p in canonical form: term list strictly
// descending in the ring's order, no zero coefficients, no duplicate
// monomials. Two equal polynomials have identical term lists.
class Polynomial {
public:
    static Polynomial zero(const Ring& ring) { return Polynomial(ring, {}); }

    static Polynomial constant(const Ring& ring, std::int64_t c) {
        return from_terms(ring, {{Monomial(ring.var_count()),
                                  FieldElement(ring.characteristic(), c)}});
    }

    static Polynomial variable(const Ring& ring, std::size_t index) {
        if (index >= ring.var_count()) throw UsageError("variable index out of range");
        std::vector<std::uint32_t> e(ring.var_count(), 0);
        e[index] = 1;
        return from_terms(ring, {{Monomial(std::move(e)),
                                  FieldElement::one(ring.characteristic())}});
    }

    static Polynomial term(const Ring& ring, Monomial m, FieldElement c) {
        return from_terms(ring, {{std::move(m), c}});
    }

    // Normalizing constructor: sorts, merges like monomials, drops zeros.
    static Polynomial from_terms(const Ring& ring, std::vector<Term> terms) {
        for (const Term& t : terms) {
            if (t.mono.var_count() != ring.var_count())
                throw UsageError("term arity does not match ring");
            if (t.coeff.characteristic() != ring.p())
                throw UsageError("term coefficient characteristic does not match ring");
        }
        MonomialOrder ord = ring.order();
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mono, b.mono);
        });
        std::vector<Term> merged;
        merged.reserve(terms.size());
        for (Term& t : terms) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff = merged.back().coeff + t.coeff;
                if (merged.back().coeff.is_zero()) merged.pop_back();
            } else if (!t.coeff.is_zero()) {
                merged.push_back(std::move(t));
            }
        }
        return Polynomial(ring, std::move(merged));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    FieldElement leading_coeff() const { return leading_term().coeff; }

    // Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const Term& t : terms_)
            d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.degree()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint64_t d = terms_.front().mono.degree();
        for (const Term& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        return merge(a, b, false);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        return merge(a, b, true);
    }

    Polynomial operator-() const {
        std::vector<Term> out = terms_;
        for (Term& t : out) t.coeff = -t.coeff;
        return Polynomial(ring_, std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        if (a.is_zero() || b.is_zero()) return zero(a.ring_);
        std::vector<Term> prods;
        prods.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_)
                prods.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
        return from_terms(a.ring_, std::move(prods));
    }

    Polynomial scaled(FieldElement c) const {
        if (c.is_zero()) return zero(ring_);
        std::vector<Term> out = terms_;
        for (Term& t : out) t.coeff = t.coeff * c;
        return Polynomial(ring_, std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    Polynomial times_term(const Monomial& m, FieldElement c) const {
        if (c.is_zero()) return zero(ring_);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) out.push_back({t.mono * m, t.coeff * c});
        // multiplying by one term preserves strict descending order
        return Polynomial(ring_, std::move(out));
    }

    Polynomial pow(std::uint64_t n) const {
        Polynomial acc = constant(ring_, 1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return acc;
    }

    // q-th power for q = p^e (e >= 0), computed by repeated squaring.
    Polynomial frobenius_power(std::uint64_t q) const {
        require_p_power(ring_.p(), q);
        if (q == 1) return *this;
        return pow(q);
    }

    static void require_p_power(std::uint32_t p, std::uint64_t q) {
        if (q == 0) throw UsageError("q must be a positive power of p");
        std::uint64_t r = q;
        while (r % p == 0) r /= p;
        if (r != 1)
            throw UsageError(std::to_string(q) + " is not a power of p = " +
                             std::to_string(p));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ != b.ring_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono) return false;
            if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    // Deterministic printing: descending terms, least non-negative residues,
    // explicit '*' between factors. Output re-parses to the same polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += term_to_string(terms_[i]);
        }
        return s;
    }

    // Embeds into a ring with k extra leading variables (tags).
    Polynomial prepend_vars(const Ring& target, std::uint32_t k) const {
        if (target.var_count() != ring_.var_count() + k)
            throw UsageError("target ring arity mismatch in prepend_vars");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) {
            std::vector<std::uint32_t> e(target.var_count(), 0);
            for (std::size_t i = 0; i < ring_.var_count(); ++i)
                e[k + i] = t.mono.exponent(i);
            out.push_back({Monomial(std::move(e)), t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    // Drops the first k (tag) variables; every term must be free of them.
    Polynomial drop_leading_vars(const Ring& target, std::uint32_t k) const {
        if (target.var_count() + k != ring_.var_count())
            throw UsageError("target ring arity mismatch in drop_leading_vars");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) {
            if (!t.mono.free_of(0, k))
                throw UsageError("polynomial still involves a tag variable");
            std::vector<std::uint32_t> e(target.var_count());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono.exponent(k + i);
            out.push_back({Monomial(std::move(e)), t.coeff});
        }
        return from_terms(target, std::move(out));
    }

private:
    Polynomial(Ring ring, std::vector<Term> canonical)
        : ring_(std::move(ring)), terms_(std::move(canonical)) {}

    void require_same_ring(const Polynomial& other) const {
        if (ring_ != other.ring_)
            throw UsageError("polynomials from different rings (or orders)");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        MonomialOrder ord = a.ring_.order();
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() &&
                 ord.greater(a.terms_[i].mono, b.terms_[j].mono))) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       ord.greater(b.terms_[j].mono, a.terms_[i].mono)) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                out.push_back(t);
            } else {
                FieldElement c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                          : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) out.push_back({a.terms_[i].mono, c});
                ++i;
                ++j;
            }
        }
        return Polynomial(a.ring_, std::move(out));
    }

    std::string term_to_string(const Term& t) const {
        std::string s;
        bool coeff_shown = t.coeff.value() != 1 || t.mono.is_one();
        if (coeff_shown) s += std::to_string(t.coeff.value());
        for (std::size_t i = 0; i < ring_.var_count(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_.var_name(i);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    Ring ring_;
    std::vector<Term> terms_;
};

}  // namespace starcore
