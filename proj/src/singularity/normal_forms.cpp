#include "singcomb/singularity/normal_forms.hpp"

#include "singcomb/algebra/parser.hpp"
#include "singcomb/util/parallel.hpp"

namespace singcomb::singularity {

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial xy_poly(const std::string& text) {
    return algebra::parse_polynomial(text, kXY);
}

}  // namespace

Polynomial x9_polynomial(const Rational& modulus) {
    Polynomial f = xy_poly("x^4 + y^4");
    f.add_term(algebra::Monomial{2, 2}, modulus);
    return f;
}

Germ normal_form(const NormalFormSpec& spec) {
    switch (spec.family) {
        case Family::A: {
            if (spec.k < 1)
                throw InvalidParameter("A_k requires k >= 1");
            return Germ(xy_poly("x^" + std::to_string(spec.k + 1) + " + y^2"),
                        "A" + std::to_string(spec.k));
        }
        case Family::D: {
            if (spec.k < 4)
                throw InvalidParameter("D_k requires k >= 4");
            return Germ(
                xy_poly("x^" + std::to_string(spec.k - 1) + " + x*y^2"),
                "D" + std::to_string(spec.k));
        }
        case Family::E6:
            return Germ(xy_poly("x^3 + y^4"), "E6");
        case Family::E7:
            return Germ(xy_poly("x^3 + x*y^3"), "E7");
        case Family::E8:
            return Germ(xy_poly("x^3 + y^5"), "E8");
        case Family::X9: {
            if (spec.modulus * spec.modulus == Rational(4))
                throw InvalidParameter(
                    "X9 requires a^2 != 4 (a = +/-2 is non-isolated)");
            return Germ(x9_polynomial(spec.modulus),
                        "X9(a=" + spec.modulus.str() + ")");
        }
        case Family::T: {
            // 1/p + 1/q < 1/2  <=>  2(p+q) < pq, with p, q > 0.
            if (spec.p <= 0 || spec.q <= 0 ||
                2 * (spec.p + spec.q) >= spec.p * spec.q)
                throw InvalidParameter("T_pq requires 1/p + 1/q < 1/2");
            return Germ(xy_poly("x^" + std::to_string(spec.p) + " + y^" +
                                std::to_string(spec.q) + " + x^2*y^2"),
                        "T" + std::to_string(spec.p) + std::to_string(spec.q));
        }
    }
    throw InvalidParameter("unknown normal form family");
}

std::vector<SweepRow> modulus_sweep(std::span<const Rational> a_values,
                                    const Limits& limits, int workers) {
    std::vector<SweepRow> rows(a_values.size());
    util::parallel_for(a_values.size(), workers, [&](std::size_t i) {
        const Rational& a = a_values[i];
        SweepRow row;
        row.modulus = a;
        const Germ germ(x9_polynomial(a), "X9(a=" + a.str() + ")");
        const auto mu = milnor_number(germ, limits);
        const auto tau = tjurina_number(germ, limits);
        if (!mu.finite || !tau.finite) {
            row.non_isolated = true;
        } else {
            row.mu = static_cast<long>(mu.dimension);
            row.tau = static_cast<long>(tau.dimension);
            row.gap = row.mu - row.tau;
        }
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace singcomb::singularity
