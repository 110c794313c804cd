#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "starcore/common.hpp"

namespace starcore {

// Exponent vector of fixed length (= number of ring variables), with the
// total degree kept alongside.
class Monomial {
public:
    explicit Monomial(std::size_t var_count)
        : exps_(var_count, 0), degree_(0) {}

    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    std::size_t var_count() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const {
        check_arity(other);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& other) const {
        check_arity(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    // Quotient other / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& other) const {
        check_arity(other);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (exps_[i] > other.exps_[i])
                throw UsageError("monomial division is not exact");
            e[i] = other.exps_[i] - exps_[i];
        }
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& other) const {
        check_arity(other);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = std::max(exps_[i], other.exps_[i]);
        return Monomial(std::move(e));
    }

    bool coprime_with(const Monomial& other) const {
        check_arity(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && other.exps_[i] > 0) return false;
        return true;
    }

    Monomial pow(std::uint64_t q) const {
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(exps_[i]) * q;
            if (v > 0xffffffffull) throw ResourceError("monomial exponent overflow");
            e[i] = static_cast<std::uint32_t>(v);
        }
        return Monomial(std::move(e));
    }

    // True when no exponent in [first, first+count) is nonzero.
    bool free_of(std::size_t first, std::size_t count) const {
        for (std::size_t i = first; i < first + count; ++i)
            if (exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void check_arity(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw UsageError("monomials from rings with different variable counts");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_;
};

enum class OrderKind { Lex, Grevlex, Block };

// Monomial order: lex, grevlex, or the elimination product order
// block(k) = grevlex on the first k exponents, ties broken by grevlex on the
// rest. All three refine divisibility and are multiplicative.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::uint32_t block_size = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder block(std::uint32_t k) { return {OrderKind::Block, k}; }

    friend bool operator==(MonomialOrder a, MonomialOrder b) {
        return a.kind == b.kind && a.block_size == b.block_size;
    }
    friend bool operator!=(MonomialOrder a, MonomialOrder b) { return !(a == b); }

    std::string name() const {
        switch (kind) {
            case OrderKind::Lex: return "lex";
            case OrderKind::Grevlex: return "grevlex";
            case OrderKind::Block: return "block(" + std::to_string(block_size) + ")";
        }
        return "?";
    }

    // Returns <0, 0, >0 as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex:
                return lex_range(a, b, 0, a.var_count());
            case OrderKind::Grevlex:
                return grevlex_range(a, b, 0, a.var_count());
            case OrderKind::Block: {
                int c = grevlex_range(a, b, 0, block_size);
                if (c != 0) return c;
                return grevlex_range(a, b, block_size, a.var_count());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    static int lex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i) ? -1 : 1;
        }
        return 0;
    }

    static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                             std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace starcore
