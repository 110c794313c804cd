#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "starcore/common.hpp"

namespace starcore {

// A validated odd prime 2 < p < 2^31. Products of two residues then fit in
// 64-bit intermediates, so no multi-precision arithmetic is needed anywhere.
class PrimeChar {
public:
    explicit PrimeChar(std::uint32_t p) : p_(p) {
        if (p <= 2 || p >= (1u << 31))
            throw UsageError("characteristic must satisfy 2 < p < 2^31, got " +
                             std::to_string(p));
        if (!is_prime(p))
            throw UsageError("characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t value() const { return p_; }

    friend bool operator==(PrimeChar a, PrimeChar b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeChar a, PrimeChar b) { return a.p_ != b.p_; }

    // Deterministic trial division; p < 2^31 keeps this instant.
    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

// Residue in [0, p). Arithmetic is total except inversion of zero; mixing
// characteristics is a usage error.
class FieldElement {
public:
    FieldElement(PrimeChar chr, std::int64_t value) : p_(chr.value()) {
        std::int64_t r = value % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        v_ = static_cast<std::uint32_t>(r);
    }

    static FieldElement zero(PrimeChar chr) { return FieldElement(chr, 0); }
    static FieldElement one(PrimeChar chr) { return FieldElement(chr, 1); }

    std::uint32_t value() const { return v_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.require_same(b);
        std::uint32_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(a.p_, s);
    }

    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.require_same(b);
        std::uint32_t s = (a.v_ >= b.v_) ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return FieldElement(a.p_, s);
    }

    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.require_same(b);
        std::uint64_t prod = static_cast<std::uint64_t>(a.v_) * b.v_;
        return FieldElement(a.p_, static_cast<std::uint32_t>(prod % a.p_));
    }

    FieldElement operator-() const {
        return FieldElement(p_, v_ == 0 ? 0 : p_ - v_);
    }

    // Extended Euclid. Total on nonzero input.
    FieldElement inverse() const {
        if (v_ == 0) throw UsageError("division by zero in F_" + std::to_string(p_));
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return FieldElement(p_, static_cast<std::uint32_t>(t));
    }

    friend FieldElement operator/(FieldElement a, FieldElement b) {
        return a * b.inverse();
    }

    FieldElement pow(std::uint64_t e) const {
        FieldElement base = *this;
        FieldElement acc(p_, 1);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, FieldElement a) {
        return os << a.v_;
    }

private:
    FieldElement(std::uint32_t p, std::uint32_t reduced) : v_(reduced), p_(p) {}

    void require_same(FieldElement other) const {
        if (p_ != other.p_)
            throw UsageError("mixed characteristics " + std::to_string(p_) + " and " +
                             std::to_string(other.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

}  // namespace starcore
