#pragma once

#include <span>
#include <string>
#include <vector>

#include "singcomb/singularity/invariants.hpp"

namespace singcomb::singularity {

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Catalog of plane-curve singularity normal forms in variables (x, y):
//   A_k      x^(k+1) + y^2        k >= 1
//   D_k      x^(k-1) + x*y^2      k >= 4
//   E6       x^3 + y^4
//   E7       x^3 + x*y^3
//   E8       x^3 + y^5
//   X9(a)    x^4 + y^4 + a*x^2*y^2   with a^2 != 4
//   T_pq     x^p + y^q + x^2*y^2  with 1/p + 1/q < 1/2
//
// For A/D/E/X9 the origin is the only affine critical point, so the global
// quotient dimensions are the germ invariants. T_pq has extra Morse
// critical points away from the origin; those inflate mu (and not tau,
// since f is nonzero there), so reported T_pq values are the global
// dimensions, not the local ones.
enum class Family { A, D, E6, E7, E8, X9, T };

struct NormalFormSpec {
    Family family = Family::A;
    int k = 0;            // A_k, D_k index
    int p = 0, q = 0;     // T_pq exponents
    Rational modulus;     // X9 modulus a

    static NormalFormSpec a_k(int k) {
        NormalFormSpec s;
        s.family = Family::A;
        s.k = k;
        return s;
    }
    static NormalFormSpec d_k(int k) {
        NormalFormSpec s;
        s.family = Family::D;
        s.k = k;
        return s;
    }
    static NormalFormSpec e6() { return plain(Family::E6); }
    static NormalFormSpec e7() { return plain(Family::E7); }
    static NormalFormSpec e8() { return plain(Family::E8); }
    static NormalFormSpec x9(Rational a) {
        NormalFormSpec s;
        s.family = Family::X9;
        s.modulus = std::move(a);
        return s;
    }
    static NormalFormSpec t_pq(int p, int q) {
        NormalFormSpec s;
        s.family = Family::T;
        s.p = p;
        s.q = q;
        return s;
    }

private:
    static NormalFormSpec plain(Family f) {
        NormalFormSpec s;
        s.family = f;
        return s;
    }
};

// Builds the germ for a spec; throws InvalidParameter when the family
// constraints fail (e.g. X9 with a = +/-2).
Germ normal_form(const NormalFormSpec& spec);

// The X9 polynomial without the modulus validity check; used by sweeps so
// degenerate moduli become row statuses instead of errors.
Polynomial x9_polynomial(const Rational& modulus);

// One row of a modulus sweep over the X9 family.
struct SweepRow {
    Rational modulus;
    bool non_isolated = false;
    long mu = 0;
    long tau = 0;
    long gap = 0;
};

// mu/tau/gap per modulus value, in input order. Degenerate moduli
// (a = +/-2) produce non_isolated rows rather than failing the sweep.
std::vector<SweepRow> modulus_sweep(std::span<const Rational> a_values,
                                    const Limits& limits = {},
                                    int workers = 1);

}  // namespace singcomb::singularity
