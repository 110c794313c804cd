#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/polynomial.hpp"

namespace starcore {

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading term of another, sorted ascending by leading monomial.
// Unique for a fixed ideal and order, so identical bases mean equal ideals.
struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> elements;
    bool reduced = false;
};

namespace detail {

// Complete remainder of f against a fixed list of reducers, scanned in list
// order. Leading monomials strictly decrease, so this always terminates.
inline Polynomial reduce_full(const Polynomial& f,
                              const std::vector<Polynomial>& reducers) {
    const Ring& ring = f.ring();
    Polynomial remainder = Polynomial::zero(ring);
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced_step = false;
        for (const Polynomial& g : reducers) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.mono)) {
                Monomial q = g.leading_monomial().divide_into(lt.mono);
                FieldElement c = lt.coeff / g.leading_coeff();
                work = work - g.times_term(q, c);
                reduced_step = true;
                break;
            }
        }
        if (!reduced_step) {
            remainder = remainder + Polynomial::term(ring, lt.mono, lt.coeff);
            work = work - Polynomial::term(ring, lt.mono, lt.coeff);
        }
    }
    return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
    Monomial qf = f.leading_monomial().divide_into(lcm);
    Monomial qg = g.leading_monomial().divide_into(lcm);
    return f.times_term(qf, f.leading_coeff().inverse()) -
           g.times_term(qg, g.leading_coeff().inverse());
}

}  // namespace detail

// Buchberger's algorithm with the product and chain criteria. Pairs are
// processed by minimal lcm degree, ties by index, so the output is
// deterministic for a fixed input sequence. Resource caps abort with a
// ResourceError rather than letting a computation run away.
inline GroebnerBasis buchberger(const Ring& ring,
                                const std::vector<Polynomial>& gens) {
    const GbLimits& limits = gb_limits();

    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.ring() != ring)
            throw UsageError("generator from a different ring in buchberger");
        if (!g.is_zero()) basis.push_back(g);
    }

    using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
    std::set<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_idx;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial lcm = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
            pending.emplace(lcm.degree(), i, j);
            pending_idx.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    auto treated = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending_idx.find({a, b}) == pending_idx.end();
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({i, j});

        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (li.coprime_with(lj)) continue;  // product criterion

        Monomial lcm = li.lcm(lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            if (basis[k].leading_monomial().divides(lcm) && treated(i, k) &&
                treated(j, k)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;  // chain criterion

        if (lcm.degree() > limits.max_degree)
            throw ResourceError("S-pair degree " + std::to_string(lcm.degree()) +
                                " exceeds cap " + std::to_string(limits.max_degree));

        Polynomial r = detail::reduce_full(detail::s_polynomial(basis[i], basis[j]),
                                           basis);
        if (r.is_zero()) continue;
        if (static_cast<std::uint64_t>(r.total_degree()) > limits.max_degree)
            throw ResourceError("basis element degree " +
                                std::to_string(r.total_degree()) + " exceeds cap " +
                                std::to_string(limits.max_degree));
        basis.push_back(r.monic());
        if (basis.size() > limits.max_basis)
            throw ResourceError("basis size exceeds cap " +
                                std::to_string(limits.max_basis));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading term another kept element divides.
    MonomialOrder ord = ring.order();
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t i = 0; i < by_lm.size(); ++i) by_lm[i] = i;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        int c = ord.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    for (std::size_t idx : by_lm) {
        bool redundant = false;
        for (const Polynomial& kept : minimal) {
            if (kept.leading_monomial().divides(basis[idx].leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[idx]);
    }

    // Interreduce tails; leading terms are already pairwise non-divisible.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        reduced.push_back(detail::reduce_full(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a,
                                                  const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{ring, std::move(reduced), true};
}

// Complete normal form modulo gb; zero exactly when f lies in the ideal.
// Linear over F_p for a fixed basis.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.ring() != gb.ring)
        throw UsageError("normal_form: polynomial and basis ring/order mismatch");
    return detail::reduce_full(f, gb.elements);
}

// Elimination ideal: the generators must live in a ring whose first k
// variables are the tags to remove. Computes a reduced basis under the
// block(k) order, keeps the tag-free elements, and maps them onto `target`
// (the ring without the tags).
inline std::vector<Polynomial> eliminate(const Ring& ring,
                                         const std::vector<Polynomial>& gens,
                                         std::uint32_t k, const Ring& target) {
    if (k > ring.var_count())
        throw UsageError("eliminate: more tags than ring variables");
    if (target.var_count() + k != ring.var_count())
        throw UsageError("eliminate: target ring has wrong variable count");

    Ring block_ring = ring;
    std::vector<Polynomial> block_gens = gens;
    if (ring.order() != MonomialOrder::block(k)) {
        block_ring = Ring::make(ring.variables(), ring.characteristic(),
                                MonomialOrder::block(k));
        block_gens.clear();
        block_gens.reserve(gens.size());
        for (const Polynomial& g : gens) {
            std::vector<Term> ts(g.terms().begin(), g.terms().end());
            block_gens.push_back(Polynomial::from_terms(block_ring, std::move(ts)));
        }
    }

    GroebnerBasis gb = buchberger(block_ring, block_gens);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements) {
        bool tag_free = true;
        for (const Term& t : g.terms()) {
            if (!t.mono.free_of(0, k)) {
                tag_free = false;
                break;
            }
        }
        if (tag_free) out.push_back(g.drop_leading_vars(target, k));
    }
    return out;
}

inline std::vector<Polynomial> eliminate(const Ring& ring,
                                         const std::vector<Polynomial>& gens,
                                         std::uint32_t k) {
    return eliminate(ring, gens, k, ring.without_leading(k));
}

}  // namespace starcore
