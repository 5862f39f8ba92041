#include "singcomb/algebra/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace singcomb::algebra {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exponents_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (var_count() != m.var_count()) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > m.exponents_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > 0 && m.exponents_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        r.exponents_[i] += m.exponents_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (m.exponents_[i] > r.exponents_[i])
            throw std::domain_error("monomial division with remainder");
        r.exponents_[i] -= m.exponents_[i];
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exponents_.size(); ++i)
        r.exponents_[i] = std::max(r.exponents_[i], b.exponents_[i]);
    return r;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    const std::size_t n = a.var_count();
    switch (order) {
        case MonomialOrder::lex:
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
            return 0;
        case MonomialOrder::degrevlex: {
            const unsigned da = a.total_degree();
            const unsigned db = b.total_degree();
            if (da != db) return da > db ? 1 : -1;
            // Equal degree: the monomial with the smaller exponent in the
            // last differing variable is the larger one.
            for (std::size_t i = n; i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace singcomb::algebra
