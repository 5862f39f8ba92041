#include "singcomb/algebra/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace singcomb::algebra {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace singcomb::algebra
