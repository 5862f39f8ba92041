#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singcomb/groebner/groebner.hpp"

namespace singcomb::singularity {

using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::Rational;
using groebner::Limits;
using groebner::QuotientDimension;

// Raised when a finite invariant is requested for a non-isolated
// singularity (infinite quotient dimension).
class NonIsolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A polynomial considered locally at the origin. Construction checks the
// origin is critical: f(0) = 0 and all first partials vanish there.
//
// Invariants are quotient dimensions over the global polynomial ring.
// They equal the local (germ) invariants exactly when the origin is the
// only affine critical point, which holds for the whole catalog in
// normal_forms.hpp except the T_pq family; see that header.
class Germ {
public:
    Germ(Polynomial f, std::string description);

    const Polynomial& f() const { return f_; }
    const std::string& description() const { return description_; }
    const std::vector<std::string>& variables() const {
        return f_.variables();
    }

private:
    Polynomial f_;
    std::string description_;
};

// Ideal generated by all first partials; zero partials dropped.
// Throws if every partial vanishes (constant f).
groebner::Ideal jacobian_ideal(const Germ& germ,
                               MonomialOrder order = MonomialOrder::degrevlex);

// mu = dim Q[x]/J_f. Infinite signals a non-isolated singularity.
QuotientDimension milnor_number(const Germ& germ, const Limits& limits = {},
                                MonomialOrder order = MonomialOrder::degrevlex);

// tau = dim Q[x]/(J_f + <f>).
QuotientDimension tjurina_number(const Germ& germ, const Limits& limits = {},
                                 MonomialOrder order = MonomialOrder::degrevlex);

// mu - tau; requires both finite, else throws NonIsolated.
long moduli_gap(const Germ& germ, const Limits& limits = {},
                MonomialOrder order = MonomialOrder::degrevlex);

// Weight vector and weighted degree with sum(w_i * u_i) = d for every
// exponent vector u of f, when the linear system over Q is consistent.
// Canonical scaling: integer entries with overall gcd 1, degree positive.
// Weights for variables absent from f are reported as 0.
struct QuasiHomogeneity {
    std::vector<Rational> weights;
    Rational degree;
};

std::optional<QuasiHomogeneity> is_quasihomogeneous(const Germ& germ);

// Everything the analyzer reports for one germ.
struct InvariantReport {
    QuotientDimension mu;
    QuotientDimension tau;
    std::optional<long> moduli_gap;  // set when both dimensions finite
    std::optional<QuasiHomogeneity> quasihomogeneous;
};

InvariantReport analyze(const Germ& germ, const Limits& limits = {},
                        MonomialOrder order = MonomialOrder::degrevlex);

}  // namespace singcomb::singularity
