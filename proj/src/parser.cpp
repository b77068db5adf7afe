#include "algind/parser.hpp"

#include <cctype>

namespace algind {

namespace {

constexpr int kMaxNestingDepth = 256;
constexpr unsigned long kMaxExponent = 4096;
constexpr std::size_t kMaxTerms = 100000;
constexpr std::size_t kMaxMulWork = 4000000;

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text.push_back(src_[pos_]);
                advance();
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                t.text.push_back(src_[pos_]);
                advance();
            }
            return t;
        }
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '-': t.kind = Token::Kind::Minus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '/': t.kind = Token::Kind::Slash; break;
            case '^': t.kind = Token::Kind::Caret; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default: throw ParseError(line_, col_, "unexpected character '" + printable(c) + "'");
        }
        t.text.push_back(c);
        advance();
        return t;
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    static std::string printable(char c) {
        if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\x%02x", static_cast<unsigned char>(c));
        return buf;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : lexer_(src), vars_(vars) {
        cur_ = lexer_.next();
    }

    RationalFunction run() {
        RationalFunction value = parse_expr();
        if (cur_.kind != Token::Kind::End) throw err("unexpected token '" + cur_.text + "'");
        return value;
    }

  private:
    ParseError err(const std::string& msg) const { return ParseError(cur_.line, cur_.col, msg); }

    void bump() { cur_ = lexer_.next(); }

    static std::size_t weight(const RationalFunction& v) {
        return v.num().term_count() + v.den().term_count() + 1;
    }

    void check_size(const RationalFunction& v) const {
        if (v.num().term_count() > kMaxTerms || v.den().term_count() > kMaxTerms)
            throw err("expression too large");
    }

    // Cross-multiplication work grows with the term-count product; refuse it
    // up front so no intermediate is ever materialized.
    void check_budget(const RationalFunction& a, const RationalFunction& b) const {
        if (weight(a) * weight(b) > kMaxMulWork) throw err("expression too large");
    }

    RationalFunction parse_expr() {
        RationalFunction value = parse_term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool add = cur_.kind == Token::Kind::Plus;
            bump();
            RationalFunction rhs = parse_term();
            check_budget(value, rhs);
            value = add ? value + rhs : value - rhs;
            check_size(value);
        }
        return value;
    }

    RationalFunction parse_term() {
        RationalFunction value = parse_signed();
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
            bool mul = cur_.kind == Token::Kind::Star;
            Token op = cur_;
            bump();
            RationalFunction rhs = parse_signed();
            check_budget(value, rhs);
            if (mul) {
                value = value * rhs;
            } else {
                if (rhs.is_zero()) throw ParseError(op.line, op.col, "division by zero");
                value = value / rhs;
            }
            check_size(value);
        }
        return value;
    }

    RationalFunction parse_signed() {
        if (cur_.kind == Token::Kind::Minus) {
            bump();
            return -parse_factor();
        }
        return parse_factor();
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_base();
        if (cur_.kind != Token::Kind::Caret) return base;
        bump();
        if (cur_.kind != Token::Kind::Number) throw err("expected a natural-number exponent");
        Int e(cur_.text);
        if (e > Int(static_cast<long>(kMaxExponent))) throw err("exponent too large");
        bump();
        // Square-and-multiply with the budget enforced at every step.
        unsigned long k = static_cast<unsigned long>(e.to_long());
        RationalFunction acc = RationalFunction::constant(vars_, Rational(1));
        while (k > 0) {
            if (k & 1) {
                check_budget(acc, base);
                acc = acc * base;
                check_size(acc);
            }
            if (k >>= 1) {
                check_budget(base, base);
                base = base * base;
                check_size(base);
            }
        }
        return acc;
    }

    RationalFunction parse_base() {
        switch (cur_.kind) {
            case Token::Kind::Number: {
                Rational v(Int(cur_.text));
                bump();
                return RationalFunction::constant(vars_, std::move(v));
            }
            case Token::Kind::Ident: {
                bool declared = false;
                for (const auto& v : vars_)
                    if (v == cur_.text) {
                        declared = true;
                        break;
                    }
                if (!declared) throw err("undeclared variable '" + cur_.text + "'");
                Polynomial p = Polynomial::variable(vars_, cur_.text);
                bump();
                return RationalFunction::from_polynomial(std::move(p));
            }
            case Token::Kind::LParen: {
                if (++depth_ > kMaxNestingDepth) throw err("nesting too deep");
                bump();
                RationalFunction inner = parse_expr();
                if (cur_.kind != Token::Kind::RParen) throw err("expected ')'");
                bump();
                --depth_;
                return inner;
            }
            case Token::Kind::End: throw err("unexpected end of input");
            default: throw err("unexpected token '" + cur_.text + "'");
        }
    }

    Lexer lexer_;
    const std::vector<std::string>& vars_;
    Token cur_;
    int depth_ = 0;
};

void append_monomial(std::string& out, const std::vector<std::string>& vars, const Exponents& e,
                     const Rational& coeff, bool first) {
    bool negative = coeff.sign() < 0;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    Rational mag = coeff.abs();
    bool has_vars = false;
    for (auto x : e)
        if (x != 0) has_vars = true;
    if (!has_vars) {
        out += mag.to_string();
        return;
    }
    bool printed = false;
    if (!mag.is_one()) {
        out += mag.to_string();
        printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) out += "*";
        out += vars[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
        printed = true;
    }
}

} // namespace

ParsedExpr parse_expression(const std::string& text, const std::vector<std::string>& variables) {
    RationalFunction value = Parser(text, variables).run();
    // Normalization reduces every constant denominator to 1.
    if (value.is_polynomial()) return value.num();
    return value;
}

std::string format_canonical(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_monomial(out, p.vars(), e, c, first);
        first = false;
    }
    return out;
}

std::string format_canonical(const RationalFunction& r) {
    if (r.is_polynomial()) return format_canonical(r.num());
    return "(" + format_canonical(r.num()) + ")/(" + format_canonical(r.den()) + ")";
}

std::string format_canonical(const ParsedExpr& e) {
    if (std::holds_alternative<Polynomial>(e)) return format_canonical(std::get<Polynomial>(e));
    return format_canonical(std::get<RationalFunction>(e));
}

} // namespace algind
