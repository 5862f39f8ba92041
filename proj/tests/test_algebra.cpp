#include <random>

#include "doctest.h"
#include "singcomb/algebra/parser.hpp"
#include "singcomb/algebra/polynomial.hpp"

using namespace singcomb::algebra;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(const std::string& text,
             const std::vector<std::string>& vars = kXY) {
    return parse_polynomial(text, vars);
}

// Small random polynomial: degree <= 4, coefficients in [-5, 5].
Polynomial random_poly(std::mt19937_64& rng,
                       const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    Polynomial p(vars);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(vars.size());
        unsigned total = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = expo(rng);
            if (total + e <= 4) {
                m[i] = e;
                total += e;
            }
        }
        p.add_term(m, Rational(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational construction stays reduced") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::from_string("3/9") == Rational(1, 3));
    CHECK(Rational::from_string("-12/8").str() == "-3/2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(7, 2).denominator() == 2);
    CHECK(Rational(-7, 2).denominator() == 2);  // denominator stays positive
}

TEST_CASE("monomial order comparisons") {
    const Monomial x{1, 0}, y{0, 1}, x2{2, 0}, xy{1, 1}, y2{0, 2};
    // degrevlex: degree first, then smaller last exponent wins.
    CHECK(compare(x, y, MonomialOrder::degrevlex) > 0);
    CHECK(compare(x2, xy, MonomialOrder::degrevlex) > 0);
    CHECK(compare(xy, y2, MonomialOrder::degrevlex) > 0);
    CHECK(compare(y2, x, MonomialOrder::degrevlex) > 0);
    // lex ignores degree.
    CHECK(compare(x, y2, MonomialOrder::lex) > 0);
    CHECK(compare(Monomial{1, 0, 0}, Monomial{0, 9, 9}, MonomialOrder::lex) > 0);

    const Monomial one = Monomial::one(2);
    for (auto o : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
        CHECK(compare(one, x, o) < 0);  // 1 is minimal
        CHECK(compare(one, y, o) < 0);
        // multiplicative: u < v => u*w < v*w
        CHECK(compare(y * xy, x * xy, o) < 0);
    }
}

TEST_CASE("parse expands to canonical sparse form") {
    const Polynomial p = P("x^4 + y^4 + 2*x^2*y^2");
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial{4, 0}).is_one());
    CHECK(p.coefficient(Monomial{0, 4}).is_one());
    CHECK(p.coefficient(Monomial{2, 2}) == Rational(2));

    const Polynomial sq = P("(x+y)^2");
    CHECK(sq == P("x^2 + 2*x*y + y^2"));

    CHECK(P("x^4 + y^4 + (3/2)*x^2*y^2").coefficient(Monomial{2, 2}) ==
          Rational(3, 2));
    CHECK(P("3/2*x^2*y^2").coefficient(Monomial{2, 2}) == Rational(3, 2));
}

TEST_CASE("parse errors report positions") {
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("x + z"), ParseError);  // unknown variable
    CHECK_THROWS_AS(P("x^-2"), ParseError);   // negative exponent
    CHECK_THROWS_AS(P("x/2"), ParseError);    // '/' outside a literal
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    try {
        P("x + @");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    try {
        P("x + qq*y");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("ring operations and edge cases") {
    CHECK(P("x+y") + P("x-y") == P("2*x"));
    CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
    CHECK(P("x^2*y").scaled(Rational(0)).is_zero());
    CHECK((-P("x - y")) == P("y - x"));
    CHECK_THROWS_AS(P("x", {"x"}) + P("x"), VariableMismatch);

    // mixed-arity multiplication is an error too
    CHECK_THROWS_AS(P("x", {"x"}) * P("y"), VariableMismatch);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^4+y^4+2*x^2*y^2").partial_derivative("x") ==
          P("4*x^3 + 4*x*y^2"));
    CHECK(P("x^2+y^2").partial_derivative("y") == P("2*y"));
    CHECK(P("y^5").partial_derivative("x").is_zero());
    CHECK_THROWS_AS(P("x").partial_derivative("q"), VariableMismatch);
}

TEST_CASE("evaluate") {
    const Rational pt34[] = {Rational(3), Rational(4)};
    CHECK(P("x^2+y^2").evaluate(pt34) == Rational(25));
    const Rational pt11[] = {Rational(1), Rational(1)};
    CHECK(P("x^4+y^4+2*x^2*y^2").evaluate(pt11) == Rational(4));
    const Rational origin[] = {Rational(0), Rational(0)};
    CHECK(P("7/3 + x*y + x^5").evaluate(origin) == Rational(7, 3));
    const Rational one[] = {Rational(1)};
    CHECK_THROWS_AS(P("x^2").evaluate(one), VariableMismatch);
}

TEST_CASE("format is canonical and parse(format(p)) == p") {
    CHECK(P("y^4 + 3/2*y^2*x^2 + x^4").format() ==
          "x^4 + 3/2*x^2*y^2 + y^4");
    CHECK(P("0").format() == "0");
    CHECK(P("-x^2 + y - 1/3").format() == "-x^2 + y - 1/3");
    CHECK(P("x*y*x").format() == "x^2*y");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = random_poly(rng, kXYZ);
        CHECK(parse_polynomial(p.format(), kXYZ) == p);
        CHECK(parse_polynomial(p.format(MonomialOrder::lex), kXYZ) == p);
    }
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const Polynomial a = random_poly(rng, kXYZ);
        const Polynomial b = random_poly(rng, kXYZ);
        const Polynomial c = random_poly(rng, kXYZ);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        const Polynomial a = random_poly(rng, kXY);
        const Polynomial b = random_poly(rng, kXY);
        for (const auto& v : kXY) {
            CHECK((a + b).partial_derivative(v) ==
                  a.partial_derivative(v) + b.partial_derivative(v));
            CHECK((a * b).partial_derivative(v) ==
                  a.partial_derivative(v) * b + a * b.partial_derivative(v));
        }
    }
}

TEST_CASE("coefficients stay reduced through arithmetic") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(rng, kXY).scaled(Rational(1, 6));
        Polynomial b = random_poly(rng, kXY).scaled(Rational(2, 3));
        const Polynomial prod = a * b + a;
        for (const auto& [m, c] : prod.terms()) {
            CHECK(!c.is_zero());  // no stored zeros
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(),
                    c.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(c.denominator() > 0);
        }
    }
}

TEST_CASE("monic and primitive normalizations") {
    const Polynomial p = P("4*x^3 + 6*x*y^2");
    CHECK(p.monic(MonomialOrder::degrevlex) == P("x^3 + 3/2*x*y^2"));
    CHECK(p.primitive(MonomialOrder::degrevlex) == P("2*x^3 + 3*x*y^2"));
    CHECK(P("-1/2*x - 1/3").primitive(MonomialOrder::degrevlex) ==
          P("3*x + 2"));
}
