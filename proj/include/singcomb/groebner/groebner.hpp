#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "singcomb/algebra/polynomial.hpp"

namespace singcomb::groebner {

using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::Rational;

// Termination guard for Buchberger. Exceeding a limit throws; it never
// silently truncates.
struct Limits {
    unsigned max_polynomial_degree = 60;
    long max_pair_count = 20000;
};

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Generators of an ideal over one shared variable list. Zero generators
// are dropped at construction; an ideal needs at least one nonzero one.
struct Ideal {
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::degrevlex;

    Ideal(std::vector<Polynomial> gens, MonomialOrder ord);
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order = MonomialOrder::degrevlex;
    bool reduced = false;
};

// Remainder of multivariate division of f by `basis`: no term of the
// result is divisible by any basis leading term, and f minus the result
// lies in the ideal generated by `basis`. Deterministic (first divisor in
// list order wins) and idempotent.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       MonomialOrder order);

// Buchberger's algorithm with the coprime-leading-term and chain
// criteria, followed by minimalization and inter-reduction. The result is
// the unique reduced Groebner basis: monic elements, no element's term
// divisible by another's leading term, sorted ascending by leading term.
GroebnerBasis buchberger(const Ideal& ideal, const Limits& limits = {});

// Vector-space dimension of the quotient ring by the ideal of `basis`.
// Finite with the explicit standard-monomial list exactly when every
// variable has a pure power among the leading terms.
struct QuotientDimension {
    bool finite = false;
    std::size_t dimension = 0;
    std::vector<Monomial> standard_monomials;  // ascending in basis order

    static QuotientDimension infinite() { return {}; }
};

QuotientDimension quotient_dimension(const GroebnerBasis& basis);

// True iff normal_form(f, basis) == 0. Requires a reduced basis.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace singcomb::groebner
