#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starcore/common.hpp"
#include "starcore/field.hpp"
#include "starcore/monomial.hpp"

namespace starcore {

// Ambient polynomial ring descriptor F_p[x_1, ..., x_n] with its monomial
// order. Cheap to copy (shared immutable data); equality is structural.
class Ring {
public:
    static Ring make(std::vector<std::string> variables, PrimeChar chr,
                     MonomialOrder order = MonomialOrder::grevlex()) {
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (variables[i].empty()) throw UsageError("empty variable name");
            for (std::size_t j = i + 1; j < variables.size(); ++j)
                if (variables[i] == variables[j])
                    throw UsageError("duplicate variable name '" + variables[i] + "'");
        }
        return Ring(std::make_shared<const Data>(Data{std::move(variables), chr, order}));
    }

    std::size_t var_count() const { return d_->vars.size(); }
    const std::string& var_name(std::size_t i) const { return d_->vars[i]; }
    const std::vector<std::string>& variables() const { return d_->vars; }
    PrimeChar characteristic() const { return d_->chr; }
    std::uint32_t p() const { return d_->chr.value(); }
    MonomialOrder order() const { return d_->order; }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < d_->vars.size(); ++i)
            if (d_->vars[i] == name) return i;
        return std::nullopt;
    }

    // Ring with k tag variables prepended and the matching elimination order.
    // Tag names use a '$' prefix so they can never collide with parsed input.
    Ring extended_with_tags(std::uint32_t k) const {
        std::vector<std::string> vars;
        vars.reserve(var_count() + k);
        for (std::uint32_t i = 0; i < k; ++i)
            vars.push_back("$t" + std::to_string(i));
        vars.insert(vars.end(), d_->vars.begin(), d_->vars.end());
        return make(std::move(vars), d_->chr, MonomialOrder::block(k));
    }

    // Ring with the first k variables dropped, back on the default order.
    Ring without_leading(std::uint32_t k) const {
        if (k > var_count()) throw UsageError("cannot drop more variables than exist");
        std::vector<std::string> vars(d_->vars.begin() + k, d_->vars.end());
        return make(std::move(vars), d_->chr, MonomialOrder::grevlex());
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.d_ == b.d_) return true;
        return a.d_->vars == b.d_->vars && a.d_->chr == b.d_->chr &&
               a.d_->order == b.d_->order;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "F(" + std::to_string(p()) + ")[";
        for (std::size_t i = 0; i < var_count(); ++i) {
            if (i) s += ",";
            s += d_->vars[i];
        }
        s += "]";
        return s;
    }

private:
    struct Data {
        std::vector<std::string> vars;
        PrimeChar chr;
        MonomialOrder order;
    };

    explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    std::shared_ptr<const Data> d_;
};

}  // namespace starcore
