#include "singcomb/singularity/invariants.hpp"

#include <algorithm>

namespace singcomb::singularity {

Germ::Germ(Polynomial f, std::string description)
    : f_(std::move(f)), description_(std::move(description)) {
    if (f_.is_zero())
        throw std::invalid_argument("germ must be a nonzero polynomial");
    if (!f_.constant_term().is_zero())
        throw std::invalid_argument("germ must vanish at the origin");
    // All first partials vanish at 0 iff f has no degree-1 terms.
    for (const auto& [m, c] : f_.terms()) {
        if (m.total_degree() == 1)
            throw std::invalid_argument(
                "origin is not critical: germ has a linear term");
    }
}

groebner::Ideal jacobian_ideal(const Germ& germ, MonomialOrder order) {
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < germ.variables().size(); ++i) {
        Polynomial d = germ.f().partial_derivative(i);
        if (!d.is_zero()) partials.push_back(std::move(d));
    }
    if (partials.empty())
        throw std::invalid_argument(
            "jacobian ideal of a constant: no variable appears in f");
    return groebner::Ideal(std::move(partials), order);
}

QuotientDimension milnor_number(const Germ& germ, const Limits& limits,
                                MonomialOrder order) {
    const auto basis = groebner::buchberger(jacobian_ideal(germ, order), limits);
    return groebner::quotient_dimension(basis);
}

QuotientDimension tjurina_number(const Germ& germ, const Limits& limits,
                                 MonomialOrder order) {
    auto ideal = jacobian_ideal(germ, order);
    ideal.generators.push_back(germ.f());
    const auto basis = groebner::buchberger(ideal, limits);
    return groebner::quotient_dimension(basis);
}

long moduli_gap(const Germ& germ, const Limits& limits, MonomialOrder order) {
    const auto mu = milnor_number(germ, limits, order);
    const auto tau = tjurina_number(germ, limits, order);
    if (!mu.finite || !tau.finite)
        throw NonIsolated("moduli gap undefined: non-isolated singularity");
    return static_cast<long>(mu.dimension) - static_cast<long>(tau.dimension);
}

namespace {

// Solves sum_i(w_i * u_i) = 1 over Q for all exponent vectors u of f by
// Gaussian elimination; free weights are set to 0. Returns nothing when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_weight_system(const Polynomial& f) {
    const std::size_t n = f.var_count();
    std::vector<std::vector<Rational>> rows;  // n coefficients | rhs
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            row[i] = Rational(static_cast<long>(m[i]));
        row[n] = Rational(1);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c2 = col; c2 <= n; ++c2)
                rows[r][c2] -= factor * rows[rank][c2];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Inconsistent iff a zero row has nonzero rhs.
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][n].is_zero()) return std::nullopt;

    std::vector<Rational> weights(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        weights[pivot_col[r]] = rows[r][n];
    return weights;
}

}  // namespace

std::optional<QuasiHomogeneity> is_quasihomogeneous(const Germ& germ) {
    auto weights = solve_weight_system(germ.f());
    if (!weights) return std::nullopt;

    // Canonical scaling: clear denominators, divide by the gcd.
    mpz_class den_lcm = 1;
    for (const auto& w : *weights)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                w.denominator().get_mpz_t());
    mpz_class num_gcd = den_lcm;  // scaled degree 1 -> den_lcm
    for (const auto& w : *weights) {
        const mpz_class scaled = w.numerator() * (den_lcm / w.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    const Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    QuasiHomogeneity qh;
    qh.degree = scale;  // = scale * 1
    for (auto& w : *weights) qh.weights.push_back(w * scale);
    return qh;
}

InvariantReport analyze(const Germ& germ, const Limits& limits,
                        MonomialOrder order) {
    InvariantReport report;
    report.mu = milnor_number(germ, limits, order);
    report.tau = tjurina_number(germ, limits, order);
    if (report.mu.finite && report.tau.finite)
        report.moduli_gap = static_cast<long>(report.mu.dimension) -
                            static_cast<long>(report.tau.dimension);
    report.quasihomogeneous = is_quasihomogeneous(germ);
    return report;
}

}  // namespace singcomb::singularity
