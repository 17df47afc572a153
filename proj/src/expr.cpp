#include "grautkit/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace grautkit {

std::string_view variable_names(VarSet vs) { return vs == VarSet::Plane ? "uv" : "xyz"; }

namespace {

constexpr long kMaxExponent = 1'000'000;
constexpr std::size_t kMaxTerms = 1u << 22;

struct Token {
    enum class Kind { Integer, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    SourceSpan span;
    std::string text;  // digits for Integer
    int var = -1;      // variable index for Variable
};

class Lexer {
public:
    Lexer(std::string_view text, VarSet vars, std::size_t offset)
        : text_(text), vars_(vars), offset_(offset) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < text_.size()) {
            unsigned char ch = static_cast<unsigned char>(text_[i]);
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++i;
                continue;
            }
            if (ch >= 0x80)
                throw ParseError("non-ASCII byte in expression", span(i, i + 1));
            if (std::isdigit(ch)) {
                std::size_t begin = i;
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
                tokens.push_back({Token::Kind::Integer, span(begin, i),
                                  std::string(text_.substr(begin, i - begin)), -1});
                continue;
            }
            if (std::isalpha(ch)) {
                auto names = variable_names(vars_);
                auto pos = names.find(static_cast<char>(ch));
                if (pos == std::string_view::npos)
                    throw ParseError(std::string("unknown variable '") + static_cast<char>(ch) +
                                         "' (expected one of " + std::string(names) + ")",
                                     span(i, i + 1));
                tokens.push_back({Token::Kind::Variable, span(i, i + 1), {},
                                  static_cast<int>(pos)});
                ++i;
                continue;
            }
            Token::Kind kind;
            switch (ch) {
                case '+': kind = Token::Kind::Plus; break;
                case '-': kind = Token::Kind::Minus; break;
                case '*': kind = Token::Kind::Star; break;
                case '/': kind = Token::Kind::Slash; break;
                case '^': kind = Token::Kind::Caret; break;
                case '(': kind = Token::Kind::LParen; break;
                case ')': kind = Token::Kind::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") +
                                         static_cast<char>(ch) + "'",
                                     span(i, i + 1));
            }
            tokens.push_back({kind, span(i, i + 1), {}, -1});
            ++i;
        }
        tokens.push_back({Token::Kind::End, span(text_.size(), text_.size()), {}, -1});
        return tokens;
    }

private:
    SourceSpan span(std::size_t b, std::size_t e) const { return {offset_ + b, offset_ + e}; }

    std::string_view text_;
    VarSet vars_;
    std::size_t offset_;
};

/// Recursive-descent parser producing fully expanded polynomials.
///
///   expression := [+|-] term { (+|-) term }
///   term       := factor { [*] factor }        (implicit multiplication)
///   factor     := primary [^ positive-integer]
///   primary    := integer [/ integer] | variable | ( expression )
class Parser {
public:
    Parser(std::vector<Token> tokens, VarSet vars)
        : tokens_(std::move(tokens)), vars_(vars), arity_(arity_of(vars)) {}

    Poly parse() {
        Poly p = expression();
        expect(Token::Kind::End, "unexpected trailing input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const std::string& message) {
        if (peek().kind != k) throw ParseError(message, peek().span);
    }

    static bool starts_factor(Token::Kind k) {
        return k == Token::Kind::Integer || k == Token::Kind::Variable ||
               k == Token::Kind::LParen;
    }

    Poly expression() {
        Poly acc = signed_term();
        while (true) {
            if (accept(Token::Kind::Plus))
                acc = acc + signed_term();
            else if (accept(Token::Kind::Minus))
                acc = acc - signed_term();
            else
                return acc;
        }
    }

    Poly signed_term() {
        bool negative = false;
        while (true) {
            if (accept(Token::Kind::Minus))
                negative = !negative;
            else if (!accept(Token::Kind::Plus))
                break;
        }
        Poly t = term();
        return negative ? -t : t;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (accept(Token::Kind::Star)) {
                acc = checked_mul(acc, factor());
            } else if (starts_factor(peek().kind)) {
                acc = checked_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (accept(Token::Kind::Caret)) {
            Token t = next();
            if (t.kind != Token::Kind::Integer)
                throw ParseError("expected integer exponent after '^'", t.span);
            long e = parse_exponent(t);
            Poly acc = base.pow(e);
            if (acc.terms().size() > kMaxTerms)
                throw ParseError("expression expands to too many terms", t.span);
            return acc;
        }
        return base;
    }

    Poly primary() {
        Token t = next();
        switch (t.kind) {
            case Token::Kind::Integer: {
                std::string text = t.text;
                if (accept(Token::Kind::Slash)) {
                    Token den = next();
                    if (den.kind != Token::Kind::Integer)
                        throw ParseError("expected integer denominator", den.span);
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError("zero denominator", den.span);
                    text += "/" + den.text;
                }
                return Poly::constant(arity_, Rational::from_string(text));
            }
            case Token::Kind::Variable:
                return Poly::variable(arity_, t.var);
            case Token::Kind::LParen: {
                Poly inner = expression();
                if (!accept(Token::Kind::RParen))
                    throw ParseError("expected ')'", peek().span);
                return inner;
            }
            case Token::Kind::End:
                throw ParseError("unexpected end of input", t.span);
            default:
                throw ParseError("expected a number, variable or '('", t.span);
        }
    }

    long parse_exponent(const Token& t) {
        long e = 0;
        for (char ch : t.text) {
            e = e * 10 + (ch - '0');
            if (e > kMaxExponent) throw ParseError("exponent too large", t.span);
        }
        if (e == 0) throw ParseError("exponent must be positive", t.span);
        return e;
    }

    Poly checked_mul(const Poly& a, const Poly& b) {
        if (a.terms().size() * b.terms().size() > kMaxTerms)
            throw ParseError("expression expands to too many terms", peek().span);
        return a * b;
    }

    std::vector<Token> tokens_;
    VarSet vars_;
    int arity_;
    std::size_t pos_ = 0;
};

Poly parse_component(std::string_view text, VarSet vars, std::size_t offset) {
    return Parser(Lexer(text, vars, offset).run(), vars).parse();
}

}  // namespace

Poly parse_poly(std::string_view text, VarSet vars) { return parse_component(text, vars, 0); }

PolyMap parse_map(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';' || text[i] == '\n') {
            parts.emplace_back(begin, text.substr(begin, i - begin));
            begin = i + 1;
        }
    }
    // A trailing separator or blank line is not another component.
    while (parts.size() > 1 &&
           parts.back().second.find_first_not_of(" \t\r") == std::string_view::npos)
        parts.pop_back();

    if (parts.size() != 2 && parts.size() != 3)
        throw ParseError("a map needs 2 components (u,v) or 3 components (x,y,z), got " +
                             std::to_string(parts.size()),
                         SourceSpan{0, text.size()});
    VarSet vars = parts.size() == 2 ? VarSet::Plane : VarSet::Space;
    std::vector<Poly> images;
    for (auto& [offset, part] : parts) images.push_back(parse_component(part, vars, offset));
    return PolyMap(std::move(images));
}

namespace {

void format_term(std::ostream& os, const Monomial& m, const Rational& coeff, VarSet vars) {
    Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    bool wrote_coeff = false;
    if (m.is_unit() || !mag.is_one()) {
        os << mag.str();
        wrote_coeff = true;
    }
    auto names = variable_names(vars);
    for (int var = 0; var < m.arity(); ++var) {
        long e = m.exponent(var);
        if (e == 0) continue;
        if (wrote_coeff) os << "*";
        os << names[static_cast<std::size_t>(var)];
        if (e > 1) os << "^" << e;
        wrote_coeff = true;
    }
}

}  // namespace

std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    VarSet vars = p.arity() == 2 ? VarSet::Plane : VarSet::Space;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        format_term(os, m, c, vars);
    }
    return os.str();
}

std::string format(const PolyMap& m) {
    std::ostringstream os;
    for (int i = 0; i < m.arity(); ++i) {
        if (i) os << "; ";
        os << format(m.image(i));
    }
    return os.str();
}

}  // namespace grautkit
