#include "singcomb/groebner/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace singcomb::groebner {

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder ord) : order(ord) {
    if (gens.empty()) throw std::invalid_argument("ideal needs generators");
    const auto& vars = gens.front().variables();
    for (const auto& g : gens) {
        if (g.variables() != vars)
            throw algebra::VariableMismatch(
                "ideal generators live in different rings");
        if (!g.is_zero()) generators.push_back(g);
    }
    if (generators.empty())
        throw std::invalid_argument("ideal has only zero generators");
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       MonomialOrder order) {
    if (basis.empty()) throw std::invalid_argument("empty division basis");
    for (const auto& b : basis) {
        if (b.variables() != f.variables())
            throw algebra::VariableMismatch(
                "division basis in a different ring");
        if (b.is_zero())
            throw std::invalid_argument("zero polynomial in division basis");
    }

    Polynomial work = f;
    Polynomial remainder(f.variables());
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial(order);
        const Rational lc = work.leading_coefficient(order);
        bool reduced_once = false;
        for (const auto& b : basis) {
            const Monomial& blm = b.leading_monomial(order);
            if (!blm.divides(lm)) continue;
            const Rational factor = lc / b.leading_coefficient(order);
            const Monomial shift = lm / blm;
            // work -= factor * shift * b
            Polynomial sub(f.variables());
            for (const auto& [m, c] : b.terms())
                sub.add_term(m * shift, c * factor);
            work -= sub;
            reduced_once = true;
            break;
        }
        if (!reduced_once) {
            remainder.add_term(lm, lc);
            // Move the leading term out of the working polynomial.
            work.add_term(lm, -lc);
        }
    }
    return remainder;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned degree;
};

// Normal selection: smallest lcm degree first; index pair breaks ties so
// runs are reproducible.
bool pair_before(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Limits& limits) {
    const MonomialOrder order = ideal.order;
    const auto& vars = ideal.generators.front().variables();

    std::vector<Polynomial> basis;
    basis.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) basis.push_back(g.primitive(order));

    auto check_degree = [&](const Polynomial& p) {
        if (p.total_degree() > limits.max_polynomial_degree)
            throw LimitExceeded("polynomial degree limit exceeded at degree " +
                                std::to_string(p.total_degree()));
    };
    for (const auto& g : basis) check_degree(g);

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial l = Monomial::lcm(basis[i].leading_monomial(order),
                                             basis[j].leading_monomial(order));
            pending.push_back({i, j, l, l.total_degree()});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    long processed = 0;
    while (!pending.empty()) {
        if (++processed > limits.max_pair_count)
            throw LimitExceeded("pair count limit exceeded after " +
                                std::to_string(limits.max_pair_count) +
                                " pairs");
        const auto it =
            std::min_element(pending.begin(), pending.end(), pair_before);
        const Pair pair = *it;
        pending.erase(it);
        handled.insert({pair.i, pair.j});

        const Monomial& lmi = basis[pair.i].leading_monomial(order);
        const Monomial& lmj = basis[pair.j].leading_monomial(order);

        // Buchberger's first criterion: coprime leading terms.
        if (lmi.coprime_with(lmj)) continue;

        // Chain criterion: some k divides the lcm and both side pairs are
        // already resolved.
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial(order).divides(pair.lcm)) continue;
            const auto ik = std::minmax(pair.i, k);
            const auto jk = std::minmax(pair.j, k);
            const bool ik_done = handled.count({ik.first, ik.second}) > 0;
            const bool jk_done = handled.count({jk.first, jk.second}) > 0;
            if (ik_done && jk_done) chain = true;
        }
        if (chain) continue;

        // S-polynomial.
        const Monomial ui = pair.lcm / lmi;
        const Monomial uj = pair.lcm / lmj;
        Polynomial spoly(vars);
        {
            const Rational ci = basis[pair.i].leading_coefficient(order);
            for (const auto& [m, c] : basis[pair.i].terms())
                spoly.add_term(m * ui, c / ci);
            const Rational cj = basis[pair.j].leading_coefficient(order);
            for (const auto& [m, c] : basis[pair.j].terms())
                spoly.add_term(m * uj, -(c / cj));
        }
        check_degree(spoly);

        Polynomial rem = normal_form(spoly, basis, order);
        if (rem.is_zero()) continue;
        rem = rem.primitive(order);
        check_degree(rem);
        basis.push_back(rem);
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading term another element divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lm = basis[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& other = basis[j].leading_monomial(order);
            if (other.divides(lm) && !(lm == other && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails and normalize to monic.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty()
                           ? minimal[i]
                           : normal_form(minimal[i], others, order);
        reduced.push_back(r.monic(order));
    }

    std::sort(reduced.begin(), reduced.end(),
              [order](const Polynomial& a, const Polynomial& b) {
                  return algebra::compare(a.leading_monomial(order),
                                          b.leading_monomial(order),
                                          order) < 0;
              });

    return GroebnerBasis{std::move(reduced), order, true};
}

QuotientDimension quotient_dimension(const GroebnerBasis& basis) {
    if (!basis.reduced)
        throw std::invalid_argument("quotient_dimension needs a reduced basis");
    if (basis.elements.empty())
        throw std::invalid_argument("empty Groebner basis");
    const std::size_t nvars = basis.elements.front().var_count();
    const MonomialOrder order = basis.order;

    std::vector<Monomial> leading;
    leading.reserve(basis.elements.size());
    for (const auto& g : basis.elements)
        leading.push_back(g.leading_monomial(order));

    // Ideal contains a unit: quotient is the zero ring.
    for (const auto& lm : leading)
        if (lm.is_one()) return {true, 0, {}};

    // Finite iff every variable has a pure power among the leading terms.
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        unsigned best = 0;
        for (const auto& lm : leading) {
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < nvars && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure && (best == 0 || lm[v] < best)) best = lm[v];
        }
        if (best == 0) return QuotientDimension::infinite();
        bound[v] = best;
    }

    std::size_t volume = 1;
    for (unsigned b : bound) {
        volume *= b;
        if (volume > 50'000'000)
            throw LimitExceeded("standard-monomial box too large");
    }

    // Enumerate the exponent box and keep monomials no leading term divides.
    std::vector<Monomial> standard;
    Monomial m(nvars);
    std::size_t v = 0;
    while (true) {
        bool divisible = false;
        for (const auto& lm : leading) {
            if (lm.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) standard.push_back(m);
        // Odometer over the box.
        v = 0;
        while (v < nvars) {
            if (++m[v] < bound[v]) break;
            m[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }

    std::sort(standard.begin(), standard.end(), algebra::OrderLess{order});
    const std::size_t n = standard.size();
    return {true, n, std::move(standard)};
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
    if (!basis.reduced)
        throw std::invalid_argument("ideal_membership needs a reduced basis");
    return normal_form(f, basis.elements, basis.order).is_zero();
}

}  // namespace singcomb::groebner
