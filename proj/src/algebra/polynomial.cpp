#include "singcomb/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace singcomb::algebra {

Polynomial::Polynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {}

Polynomial Polynomial::zero(std::vector<std::string> variables) {
    return Polynomial(std::move(variables));
}

Polynomial Polynomial::constant(std::vector<std::string> variables,
                                const Rational& c) {
    Polynomial p(std::move(variables));
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(p.var_count()), c);
    return p;
}

Polynomial Polynomial::term(std::vector<std::string> variables,
                            const Monomial& m, const Rational& c) {
    Polynomial p(std::move(variables));
    if (m.var_count() != p.var_count())
        throw VariableMismatch("monomial arity differs from variable list");
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables,
                                const std::string& name) {
    Polynomial p(std::move(variables));
    Monomial m(p.var_count());
    m[p.variable_index(name)] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

std::size_t Polynomial::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw VariableMismatch("unknown variable: " + name);
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial::one(var_count()));
}

void Polynomial::check_same_ring(const Polynomial& q) const {
    if (vars_ != q.vars_)
        throw VariableMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_ring(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_ring(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_same_ring(q);
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, Rational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(const std::string& var) const {
    return partial_derivative(variable_index(var));
}

Polynomial Polynomial::partial_derivative(std::size_t var_index) const {
    if (var_index >= vars_.size())
        throw VariableMismatch("variable index out of range");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        const unsigned e = m[var_index];
        if (e == 0) continue;
        Monomial dm(m);
        dm[var_index] = e - 1;
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size())
        throw VariableMismatch("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (compare(m, *best, order) > 0) best = &m;
    return *best;
}

Rational Polynomial::leading_coefficient(MonomialOrder order) const {
    return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(MonomialOrder order) const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient(order).inverse());
}

Polynomial Polynomial::primitive(MonomialOrder order) const {
    if (is_zero()) return *this;
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.denominator().get_mpz_t());
    }
    Rational scale =
        Rational(mpq_class(den_lcm) / mpq_class(num_gcd));
    if (leading_coefficient(order).sign() < 0) scale = -scale;
    return scaled(scale);
}

namespace {

void append_monomial(std::ostringstream& os,
                     const std::vector<std::string>& vars, const Monomial& m,
                     bool leading_star) {
    bool first = !leading_star;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << vars[i];
        if (m[i] > 1) os << '^' << m[i];
    }
}

}  // namespace

std::string Polynomial::format(MonomialOrder order) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [order](const auto* a, const auto* b) {
                  return compare(a->first, b->first, order) > 0;
              });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        const auto& [m, c] = *t;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag.str();
        } else if (mag.is_one()) {
            append_monomial(os, vars_, m, false);
        } else {
            os << mag.str();
            append_monomial(os, vars_, m, true);
        }
    }
    return os.str();
}

}  // namespace singcomb::algebra
