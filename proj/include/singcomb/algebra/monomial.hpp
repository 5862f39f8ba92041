#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace singcomb::algebra {

// Exponent vector of fixed arity. The ambient variable names live on the
// Polynomial; a Monomial only knows how many slots it has.
class Monomial {
public:
    explicit Monomial(std::size_t var_count)
        : exponents_(var_count, 0) {}
    Monomial(std::initializer_list<unsigned> exponents)
        : exponents_(exponents) {}
    explicit Monomial(std::vector<unsigned> exponents)
        : exponents_(std::move(exponents)) {}

    static Monomial one(std::size_t var_count) { return Monomial(var_count); }

    std::size_t var_count() const { return exponents_.size(); }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }
    unsigned& operator[](std::size_t i) { return exponents_[i]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    unsigned total_degree() const;
    bool is_one() const;

    // this | m
    bool divides(const Monomial& m) const;
    bool coprime_with(const Monomial& m) const;

    Monomial operator*(const Monomial& m) const;
    // Requires m.divides(*this).
    Monomial operator/(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

private:
    std::vector<unsigned> exponents_;
};

enum class MonomialOrder { degrevlex, lex };

// Three-way comparison under a monomial order: -1 if a < b, 0, +1.
// Variable slot 0 is the largest variable in both orders.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

// Structural key order for canonical term storage (plain exponent lex).
// Independent of the active monomial order.
struct StructuralLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exponents() < b.exponents();
    }
};

// Comparator adapter: sorts ascending under the given monomial order.
struct OrderLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, order) < 0;
    }
};

}  // namespace singcomb::algebra
