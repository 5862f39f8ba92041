#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using singcomb::algebra::Monomial;
using singcomb::algebra::Polynomial;
using singcomb::algebra::Rational;
using singcomb::algebra::StructuralLess;

namespace {

// Column keys sort by degree DESCENDING (then structural lex), so echelon
// pivots claim the highest-degree monomials first. A row whose leading
// key sits in degree <= d is then entirely supported on monomials of
// degree <= d, which makes dim(V ∩ P_{<=d}) equal to the number of pivots
// with leading degree <= d.
constexpr unsigned kMaxColumnDegree = 1024;

std::uint64_t column_key(unsigned degree, std::uint32_t index_in_degree) {
    return (static_cast<std::uint64_t>(kMaxColumnDegree - degree) << 32) |
           index_in_degree;
}

unsigned degree_of_key(std::uint64_t key) {
    return kMaxColumnDegree - static_cast<unsigned>(key >> 32);
}

using SparseRow = std::map<std::uint64_t, Rational>;

class Echelon {
public:
    bool insert(SparseRow row) {
        while (!row.empty()) {
            const std::uint64_t lead = row.begin()->first;
            auto pivot = pivots_.find(lead);
            if (pivot == pivots_.end()) {
                const Rational inv = row.begin()->second.inverse();
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            const Rational factor = row.begin()->second;
            for (const auto& [c, v] : pivot->second) {
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -(factor * v));
                } else {
                    it->second -= factor * v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
        return false;
    }

    std::size_t pivots_up_to_degree(unsigned d) const {
        std::size_t n = 0;
        for (const auto& [key, row] : pivots_) {
            if (degree_of_key(key) <= d) ++n;
        }
        return n;
    }

private:
    std::map<std::uint64_t, SparseRow> pivots_;
};

void enumerate_monomials_of_degree(std::size_t nvars, unsigned degree,
                                   std::vector<Monomial>& out) {
    Monomial m(nvars);
    std::vector<unsigned> comp(nvars, 0);
    comp[0] = degree;
    while (true) {
        for (std::size_t i = 0; i < nvars; ++i) m[i] = comp[i];
        out.push_back(m);
        if (nvars == 1) break;
        std::size_t i = 0;
        while (i + 1 < nvars && comp[i] == 0) ++i;
        if (i + 1 == nvars) break;
        const unsigned head = comp[i];
        comp[i] = 0;
        comp[i + 1] += 1;
        comp[0] = head - 1;
    }
}

std::size_t monomial_count_up_to(std::size_t nvars, unsigned d) {
    // C(d + nvars, nvars)
    std::size_t r = 1;
    for (std::size_t i = 1; i <= nvars; ++i) r = r * (d + i) / i;
    return r;
}

}  // namespace

Result quotient_dimension_bruteforce(const std::vector<Polynomial>& generators,
                                     unsigned max_degree) {
    if (generators.empty())
        throw std::invalid_argument("oracle needs generators");
    const std::size_t nvars = generators.front().var_count();

    unsigned max_gen_degree = 0;
    for (const auto& g : generators)
        max_gen_degree = std::max(max_gen_degree, g.total_degree());

    // Products of degree <= D only certify membership for elements of
    // degree <= D - headroom; reading the count at the cap itself
    // overcounts by a boundary layer that never clears.
    const unsigned headroom = 2 * max_gen_degree + 2;
    // After a plateau, keep extending the matrix this many caps; a deep
    // membership certificate arriving late breaks a false plateau.
    const unsigned confirm_tail = max_gen_degree + 2;

    std::map<Monomial, std::uint64_t, StructuralLess> column;

    Echelon echelon;
    Result result;
    std::size_t previous = 0;
    int plateau = 0;
    bool have_previous = false;
    bool confirming = false;
    std::size_t candidate = 0;
    unsigned candidate_probe = 0;
    unsigned confirm_until = 0;

    for (unsigned cap = 0; cap <= max_degree + headroom + confirm_tail;
         ++cap) {
        std::vector<Monomial> fresh;
        enumerate_monomials_of_degree(nvars, cap, fresh);
        for (std::uint32_t i = 0; i < fresh.size(); ++i)
            column.emplace(fresh[i], column_key(cap, i));

        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            const unsigned dg = g.total_degree();
            if (dg > cap) continue;
            std::vector<Monomial> shifts;
            enumerate_monomials_of_degree(nvars, cap - dg, shifts);
            for (const auto& shift : shifts) {
                SparseRow row;
                for (const auto& [m, c] : g.terms())
                    row.emplace(column.at(m * shift), c);
                echelon.insert(std::move(row));
            }
        }

        if (cap < headroom) continue;
        const unsigned probe = cap - headroom;
        const std::size_t estimate = monomial_count_up_to(nvars, probe) -
                                     echelon.pivots_up_to_degree(probe);

        if (confirming) {
            if (estimate != candidate) {
                confirming = false;
                plateau = 0;
            } else if (cap >= confirm_until) {
                result.stabilized = true;
                result.dimension = candidate;
                result.stabilized_at = candidate_probe;
                return result;
            }
        } else if (have_previous && estimate == previous) {
            if (++plateau >= 2) {
                confirming = true;
                candidate = estimate;
                candidate_probe = probe - static_cast<unsigned>(plateau);
                confirm_until = cap + confirm_tail;
            }
        } else {
            plateau = 0;
        }
        previous = estimate;
        have_previous = true;
    }
    return result;
}

Polynomial random_sparse_poly(std::mt19937_64& rng,
                              const std::vector<std::string>& vars,
                              unsigned max_degree) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<unsigned> expo(0, max_degree);
    Polynomial p(vars);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        // Constant-free terms, like the Jacobian ideals this oracle backs
        // up: truncated membership certificates stay shallow that way.
        Monomial m(vars.size());
        while (m.total_degree() == 0) {
            unsigned budget = max_degree;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                const unsigned e = expo(rng) % (budget + 1);
                m[i] = e;
                budget -= e;
            }
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    if (p.is_zero()) {
        Monomial m(vars.size());
        m[0] = 1;
        p.add_term(m, Rational(1));
    }
    return p;
}

}  // namespace oracle
