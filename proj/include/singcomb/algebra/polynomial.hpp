#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "singcomb/algebra/errors.hpp"
#include "singcomb/algebra/monomial.hpp"
#include "singcomb/algebra/rational.hpp"

namespace singcomb::algebra {

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored. Arithmetic requires identical
// variable lists; there is no implicit promotion between rings.
// Terms live in a structurally-ordered map; order-sensitive queries
// (leading term, formatting) take the active MonomialOrder explicitly.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, StructuralLess>;

    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial zero(std::vector<std::string> variables);
    static Polynomial constant(std::vector<std::string> variables,
                               const Rational& c);
    static Polynomial term(std::vector<std::string> variables,
                           const Monomial& m, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables,
                               const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }
    std::size_t variable_index(const std::string& name) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;  // 0 for the zero polynomial
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        return a -= b;
    }
    Polynomial operator*(const Polynomial& q) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    // Adds c * m in place.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial partial_derivative(const std::string& var) const;
    Polynomial partial_derivative(std::size_t var_index) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Largest term under the given order. Throws on the zero polynomial.
    const Monomial& leading_monomial(MonomialOrder order) const;
    Rational leading_coefficient(MonomialOrder order) const;

    // Scales so the leading coefficient is 1.
    Polynomial monic(MonomialOrder order) const;
    // Clears denominators and divides by the integer content; sign chosen
    // so the leading coefficient under `order` is positive.
    Polynomial primitive(MonomialOrder order) const;

    // Canonical text: terms descending under `order`, rationals as p/q,
    // `^` powers, `*` between factors. parse(format(p)) == p.
    std::string format(MonomialOrder order = MonomialOrder::degrevlex) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

private:
    void check_same_ring(const Polynomial& q) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace singcomb::algebra
