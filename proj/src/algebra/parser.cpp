#include "singcomb/algebra/parser.hpp"

#include <cctype>
#include <optional>

namespace singcomb::algebra {

namespace {

struct Token {
    enum class Kind { integer, name, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::Kind::end, "", start};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = pos_;
            while (n < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[n])))
                ++n;
            Token t{Token::Kind::integer, text_.substr(pos_, n - pos_), start};
            pos_ = n;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = pos_;
            while (n < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[n])) ||
                    text_[n] == '_'))
                ++n;
            Token t{Token::Kind::name, text_.substr(pos_, n - pos_), start};
            pos_ = n;
            return t;
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::plus, "+", start};
            case '-': return {Token::Kind::minus, "-", start};
            case '*': return {Token::Kind::star, "*", start};
            case '^': return {Token::Kind::caret, "^", start};
            case '(': return {Token::Kind::lparen, "(", start};
            case ')': return {Token::Kind::rparen, ")", start};
            case '/': return {Token::Kind::star, "/", start};  // handled in primary
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 start);
        }
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// Recursive descent:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('-')* base ('^' INT)?
//   base    := INT ('/' INT)? | VAR | '(' expr ')'
// Division appears only inside rational literals.
class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lexer_(text), vars_(vars), current_(lexer_.next()) {}

    Polynomial parse() {
        Polynomial p = expr();
        expect(Token::Kind::end, "trailing input");
        return p;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* what) {
        if (current_.kind != kind)
            throw ParseError(std::string("expected ") + what, current_.pos);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (current_.kind == Token::Kind::plus ||
               current_.kind == Token::Kind::minus) {
            const bool neg = current_.kind == Token::Kind::minus;
            advance();
            Polynomial rhs = term();
            acc += neg ? -rhs : rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (current_.kind == Token::Kind::star) {
            if (current_.text == "/")
                throw ParseError("'/' is only valid inside rational literals",
                                 current_.pos);
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        bool neg = false;
        while (current_.kind == Token::Kind::minus) {
            neg = !neg;
            advance();
        }
        Polynomial p = base();
        if (current_.kind == Token::Kind::caret) {
            const std::size_t caret_pos = current_.pos;
            advance();
            if (current_.kind == Token::Kind::minus)
                throw ParseError("negative exponent", current_.pos);
            expect(Token::Kind::integer, "exponent");
            unsigned long e = 0;
            try {
                e = std::stoul(current_.text);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", caret_pos);
            }
            if (e > 4096) throw ParseError("exponent too large", caret_pos);
            advance();
            p = p.pow(static_cast<unsigned>(e));
        }
        return neg ? -p : p;
    }

    Polynomial base() {
        switch (current_.kind) {
            case Token::Kind::integer: {
                Rational value = Rational::from_string(current_.text);
                advance();
                if (current_.kind == Token::Kind::star &&
                    current_.text == "/") {
                    advance();
                    expect(Token::Kind::integer, "denominator");
                    const Rational den = Rational::from_string(current_.text);
                    if (den.is_zero())
                        throw ParseError("zero denominator", current_.pos);
                    value /= den;
                    advance();
                }
                return Polynomial::constant(vars_, value);
            }
            case Token::Kind::name: {
                for (const auto& v : vars_) {
                    if (v == current_.text) {
                        Polynomial p = Polynomial::variable(vars_, v);
                        advance();
                        return p;
                    }
                }
                throw ParseError("unknown variable '" + current_.text + "'",
                                 current_.pos);
            }
            case Token::Kind::lparen: {
                advance();
                Polynomial p = expr();
                expect(Token::Kind::rparen, "')'");
                advance();
                return p;
            }
            default:
                throw ParseError("expected a number, variable, or '('",
                                 current_.pos);
        }
    }

    Lexer lexer_;
    std::vector<std::string> vars_;
    Token current_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace singcomb::algebra
