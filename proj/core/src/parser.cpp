#include "singulab/parser.hpp"

#include "singulab/errors.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace singulab {

namespace {

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semicolon, End };

struct Token {
    TokenKind kind = TokenKind::End;
    int position = 0;
    std::string text;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> tokens;
    int i = 0;
    const int n = static_cast<int>(src.size());
    while (i < n) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            tokens.push_back({TokenKind::Number, start, src.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int start = i;
            while (i < n && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
            tokens.push_back({TokenKind::Identifier, start, src.substr(start, i - start)});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ';': kind = TokenKind::Semicolon; break;
            default:
                throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        tokens.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    tokens.push_back({TokenKind::End, n, ""});
    return tokens;
}

bool valid_variable_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

void check_variables(const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::invalid_argument("variable list must not be empty");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!valid_variable_name(vars[i]))
            throw std::invalid_argument("invalid variable name '" + vars[i] + "'");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw std::invalid_argument("duplicate variable name '" + vars[i] + "'");
    }
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const std::vector<std::string>& vars, bool map_mode)
        : tokens_(std::move(tokens)), vars_(vars), map_mode_(map_mode) {}

    ExprPtr parse_expression() {
        ExprPtr result = parse_signed_term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const bool plus = peek().kind == TokenKind::Plus;
            advance();
            ExprPtr rhs = parse_term();
            result = plus ? Expr::add(result, rhs) : Expr::sub(result, rhs);
        }
        return result;
    }

    const Token& peek() const { return tokens_[cursor_]; }

    void expect_end_of_component() {
        const Token& t = peek();
        if (t.kind != TokenKind::End && t.kind != TokenKind::Semicolon)
            throw ParseError(t.position, "unexpected '" + t.text + "'");
    }

    bool consume_semicolon() {
        if (peek().kind != TokenKind::Semicolon) return false;
        advance();
        return true;
    }

  private:
    void advance() { ++cursor_; }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError(at.position, message);
    }

    ExprPtr parse_signed_term() {
        if (peek().kind == TokenKind::Plus) {
            advance();
            return parse_term();
        }
        if (peek().kind == TokenKind::Minus) {
            advance();
            ExprPtr operand = parse_term();
            return negated(operand);
        }
        return parse_term();
    }

    static ExprPtr negated(const ExprPtr& operand) {
        if (operand->kind() == Expr::Kind::Constant)
            return Expr::constant(-operand->value());
        return Expr::neg(operand);
    }

    bool starts_factor(TokenKind kind) const {
        return kind == TokenKind::Number || kind == TokenKind::Identifier || kind == TokenKind::LParen;
    }

    ExprPtr parse_term() {
        ExprPtr result = parse_factor();
        for (;;) {
            const Token& t = peek();
            if (t.kind == TokenKind::Star) {
                advance();
                result = Expr::mul(result, parse_factor());
            } else if (t.kind == TokenKind::Slash) {
                if (!map_mode_) fail(t, "division requires map mode");
                advance();
                result = Expr::div(result, parse_factor());
            } else if (starts_factor(t.kind)) {
                result = Expr::mul(result, parse_factor());
            } else {
                return result;
            }
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (peek().kind != TokenKind::Caret) return base;
        advance();
        const Token& at = peek();
        Rational exponent = parse_exponent();
        if (!map_mode_) {
            if (!is_integer(exponent)) fail(at, "fractional exponent requires map mode");
            if (exponent < 0) fail(at, "negative exponent requires map mode");
        }
        return Expr::pow(base, exponent);
    }

    // exponent := ['+'|'-'] (integer ('/' integer)? | '(' exponent ')');
    // the '/' is taken only when an integer follows, so a parenthesized
    // divisor after '^' stays a division.
    Rational parse_exponent() {
        const Token& t = peek();
        if (t.kind == TokenKind::Plus) {
            advance();
            return parse_exponent();
        }
        if (t.kind == TokenKind::Minus) {
            advance();
            return -parse_exponent();
        }
        if (t.kind == TokenKind::LParen) {
            advance();
            Rational inner = parse_exponent();
            if (peek().kind != TokenKind::RParen) fail(peek(), "expected ')'");
            advance();
            return inner;
        }
        if (t.kind != TokenKind::Number) fail(t, "expected exponent");
        return parse_rational_literal();
    }

    // integer ('/' integer)?, the slash taken only when a number follows
    Rational parse_rational_literal() {
        const Token& num = peek();
        advance();
        if (peek().kind != TokenKind::Slash || tokens_[cursor_ + 1].kind != TokenKind::Number)
            return rational_from_string(num.text);
        const Token& slash = peek();
        advance();
        const Token& den = peek();
        advance();
        Rational value = rational_from_string(num.text);
        Rational denominator = rational_from_string(den.text);
        if (denominator == 0) fail(slash, "zero denominator in rational literal");
        return value / denominator;
    }

    ExprPtr parse_base() {
        const Token& t = peek();
        if (t.kind == TokenKind::Number) return Expr::constant(parse_rational_literal());
        if (t.kind == TokenKind::Identifier) return parse_identifier();
        if (t.kind == TokenKind::LParen) {
            advance();
            ExprPtr inner = parse_expression();
            if (peek().kind != TokenKind::RParen) fail(peek(), "expected ')'");
            advance();
            return inner;
        }
        fail(t, t.kind == TokenKind::End ? "expected expression" : "unexpected '" + t.text + "'");
    }

    ExprPtr parse_identifier() {
        const Token& t = peek();
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == t.text) {
                advance();
                return Expr::variable(static_cast<int>(i));
            }
        }
        if (map_mode_ && t.text == "abs" && tokens_[cursor_ + 1].kind == TokenKind::LParen) {
            advance();
            advance();
            ExprPtr inner = parse_expression();
            if (peek().kind != TokenKind::RParen) fail(peek(), "expected ')'");
            advance();
            return Expr::abs(inner);
        }
        fail(t, "unknown variable '" + t.text + "'");
    }

    std::vector<Token> tokens_;
    const std::vector<std::string>& vars_;
    bool map_mode_;
    int cursor_ = 0;
};

// Poly-mode trees contain no Div or Abs nodes and only non-negative integer
// exponents, so this conversion is total.
Polynomial to_polynomial(const ExprPtr& expr, int variable_count) {
    switch (expr->kind()) {
        case Expr::Kind::Constant:
            return Polynomial::constant(variable_count, expr->value());
        case Expr::Kind::Variable:
            return Polynomial::variable(variable_count, expr->index());
        case Expr::Kind::Add:
            return to_polynomial(expr->left(), variable_count) + to_polynomial(expr->right(), variable_count);
        case Expr::Kind::Sub:
            return to_polynomial(expr->left(), variable_count) - to_polynomial(expr->right(), variable_count);
        case Expr::Kind::Mul:
            return to_polynomial(expr->left(), variable_count) * to_polynomial(expr->right(), variable_count);
        case Expr::Kind::Neg:
            return -to_polynomial(expr->left(), variable_count);
        case Expr::Kind::Pow: {
            Polynomial base = to_polynomial(expr->left(), variable_count);
            unsigned long e = static_cast<unsigned long>(to_double(expr->exponent()));
            Polynomial result = Polynomial::constant(variable_count, Rational(1));
            while (e > 0) {
                if (e & 1UL) result = result * base;
                e >>= 1UL;
                if (e > 0) base = base * base;
            }
            return result;
        }
        case Expr::Kind::Div:
        case Expr::Kind::Abs:
            break;
    }
    throw std::logic_error("non-polynomial node in polynomial mode");
}

} // namespace

PolynomialParseResult parse_polynomial(const std::string& src, const std::vector<std::string>& vars) {
    check_variables(vars);
    PolynomialParseResult result;
    result.variables = vars;
    result.value = Polynomial(static_cast<int>(vars.size()));
    try {
        Parser parser(lex(src), vars, false);
        ExprPtr tree = parser.parse_expression();
        const Token& t = parser.peek();
        if (t.kind != TokenKind::End) throw ParseError(t.position, "unexpected '" + t.text + "'");
        result.value = to_polynomial(tree, static_cast<int>(vars.size()));
        result.ok = true;
    } catch (const ParseError& error) {
        result.diagnostics.push_back({static_cast<int>(error.position()), error.message()});
    }
    return result;
}

MapParseResult parse_map(const std::string& src, const std::vector<std::string>& vars) {
    check_variables(vars);
    MapParseResult result;
    result.variables = vars;
    try {
        Parser parser(lex(src), vars, true);
        for (;;) {
            result.components.push_back(parser.parse_expression());
            parser.expect_end_of_component();
            if (!parser.consume_semicolon()) break;
        }
        result.ok = true;
    } catch (const ParseError& error) {
        result.components.clear();
        result.diagnostics.push_back({static_cast<int>(error.position()), error.message()});
    }
    return result;
}

MapExpr make_map(const MapParseResult& result) {
    if (!result.ok) throw std::invalid_argument("make_map requires a successful parse");
    return MapExpr(static_cast<int>(result.variables.size()), result.components);
}

} // namespace singulab
