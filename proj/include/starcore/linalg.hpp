#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/field.hpp"
#include "starcore/monomial.hpp"
#include "starcore/ring.hpp"

namespace starcore {

// Row space over F_p kept in reduced row echelon form. Used by the
// degree-by-degree routines (minimal generators, Macaulay membership) that
// must stay independent of the Groebner kernel.
class FpSpan {
public:
    FpSpan(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // Reduces v against the span in place; returns the residual vector.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        for (const auto& [pivot, row] : rows_) {
            std::uint32_t c = v[pivot];
            if (c == 0) continue;
            subtract_scaled(v, row, c);
        }
        return v;
    }

    bool contains(const std::vector<std::uint32_t>& v) const {
        std::vector<std::uint32_t> r = reduce(v);
        for (std::uint32_t x : r)
            if (x != 0) return false;
        return true;
    }

    // Inserts v; returns true when the rank grew.
    bool insert(std::vector<std::uint32_t> v) {
        v = reduce(std::move(v));
        std::size_t pivot = cols_;
        for (std::size_t i = 0; i < cols_; ++i) {
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == cols_) return false;
        std::uint32_t inv = FieldElement(PrimeChar(p_), v[pivot]).inverse().value();
        for (std::uint32_t& x : v)
            x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * inv) % p_);
        for (auto& [q, row] : rows_) {
            std::uint32_t c = row[pivot];
            if (c != 0) subtract_scaled(row, v, c);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    // Canonical RREF rows keyed by pivot column; equal spans compare equal.
    const std::map<std::size_t, std::vector<std::uint32_t>>& rref_rows() const {
        return rows_;
    }

    friend bool operator==(const FpSpan& a, const FpSpan& b) {
        return a.p_ == b.p_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const FpSpan& a, const FpSpan& b) { return !(a == b); }

private:
    void subtract_scaled(std::vector<std::uint32_t>& target,
                         const std::vector<std::uint32_t>& src,
                         std::uint32_t c) const {
        for (std::size_t i = 0; i < cols_; ++i) {
            std::uint64_t sub = (static_cast<std::uint64_t>(src[i]) * c) % p_;
            std::uint64_t val = target[i] + p_ - sub;
            target[i] = static_cast<std::uint32_t>(val % p_);
        }
    }

    std::uint32_t p_;
    std::size_t cols_;
    std::map<std::size_t, std::vector<std::uint32_t>> rows_;
};

// All monomials of total degree d, sorted descending in the ring's order so
// coefficient vectors are deterministic.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint64_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(ring.var_count(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
        if (i + 1 == e.size()) {
            e[i] = static_cast<std::uint32_t>(rest);
            out.emplace_back(e);
            return;
        }
        for (std::uint64_t v = 0; v <= rest; ++v) {
            e[i] = static_cast<std::uint32_t>(v);
            self(self, i + 1, rest - v);
        }
    };
    if (ring.var_count() == 0) {
        if (d == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, 0, d);
    MonomialOrder ord = ring.order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.greater(a, b);
    });
    return out;
}

}  // namespace starcore
