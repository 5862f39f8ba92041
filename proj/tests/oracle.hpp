#pragma once

// Test-only brute-force quotient-dimension oracle. Independent of the
// Groebner module: it never forms an S-polynomial or a normal form. For a
// growing degree cap D it row-reduces the products
//     { m * g : g generator, m monomial, deg(m*g) <= D }
// over the monomials of degree <= D with exact rational arithmetic, and
// reports the quotient dimension once the standard-monomial count
// stabilizes for three consecutive caps.

#include <cstdint>
#include <random>
#include <vector>

#include "singcomb/algebra/polynomial.hpp"

namespace oracle {

struct Result {
    bool stabilized = false;      // false means "did not look finite by Dmax"
    std::size_t dimension = 0;    // valid when stabilized
    unsigned stabilized_at = 0;   // first cap of the stable plateau
};

Result quotient_dimension_bruteforce(
    const std::vector<singcomb::algebra::Polynomial>& generators,
    unsigned max_degree = 20);

// Random sparse polynomial for oracle-equivalence sweeps: total degree
// <= max_degree, small integer coefficients, at least one term.
singcomb::algebra::Polynomial random_sparse_poly(
    std::mt19937_64& rng, const std::vector<std::string>& vars,
    unsigned max_degree);

}  // namespace oracle
