#include "symcore/parser.hpp"

#include <cctype>

#include "symcore/errors.hpp"

namespace kontact {
namespace {

enum class Tok { Num, Name, DName, Sin, Cos, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Tok::Num, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            std::string word(src_.substr(i_, j - i_));
            i_ = j;
            if ((word == "sin" || word == "cos") && i_ < src_.size() && src_[i_] == '(') {
                cur_ = {word == "sin" ? Tok::Sin : Tok::Cos, word, start};
                return;
            }
            if (word.rfind("d_", 0) == 0 && word.size() > 2) {
                cur_ = {Tok::DName, word.substr(2), start};
                return;
            }
            cur_ = {Tok::Name, word, start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = {Tok::Plus, "+", start}; return;
            case '-': cur_ = {Tok::Minus, "-", start}; return;
            case '*': cur_ = {Tok::Star, "*", start}; return;
            case '^': cur_ = {Tok::Caret, "^", start}; return;
            case '/': cur_ = {Tok::Slash, "/", start}; return;
            case '(': cur_ = {Tok::LParen, "(", start}; return;
            case ')': cur_ = {Tok::RParen, ")", start}; return;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

/// Scalar or vector-field value threaded through the recursive descent.
struct Val {
    TrigPoly scalar;
    std::optional<VectorField> vec;
    std::size_t pos = 0;

    bool is_vec() const { return vec.has_value(); }
};

class Parser {
public:
    Parser(std::string_view src, ChartPtr chart) : lex_(src), chart_(std::move(chart)) {}

    Val parse() {
        Val v = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().pos, "trailing input after expression");
        return v;
    }

private:
    [[noreturn]] static void fail(std::size_t pos, const std::string& msg) {
        throw ParseError(pos, msg);
    }

    Val expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Val acc = term();
        if (negate) acc = negated(acc);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Val rhs = term();
            if (minus) rhs = negated(rhs);
            acc = add(acc, rhs);
        }
        return acc;
    }

    Val term() {
        Val acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = mul(acc, factor());
        }
        return acc;
    }

    Val factor() {
        Val base = primary();
        while (lex_.peek().kind == Tok::Caret) {
            std::size_t pos = lex_.take().pos;
            if (lex_.peek().kind != Tok::Num) fail(lex_.peek().pos, "expected integer exponent");
            Token e = lex_.take();
            if (base.is_vec()) fail(pos, "cannot raise a vector field to a power");
            unsigned exp = 0;
            for (char ch : e.text) exp = exp * 10 + static_cast<unsigned>(ch - '0');
            base.scalar = base.scalar.pow(exp);
        }
        return base;
    }

    Val primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Num: {
                std::string lit = t.text;
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Tok::Num)
                        fail(lex_.peek().pos, "expected denominator digits");
                    lit += "/" + lex_.take().text;
                }
                return scalar(TrigPoly::constant(chart_, Rat::parse(lit)), t.pos);
            }
            case Tok::Name: {
                auto idx = chart_->index_of(t.text);
                if (!idx) fail(t.pos, "unknown symbol '" + t.text + "'");
                if (chart_->coord(*idx).kind == CoordKind::Angular)
                    fail(t.pos, "angular coordinate '" + t.text +
                                    "' has no polynomial value; use sin()/cos()");
                return scalar(TrigPoly::coordinate(chart_, *idx), t.pos);
            }
            case Tok::Sin:
            case Tok::Cos: {
                bool is_sin = t.kind == Tok::Sin;
                expect(Tok::LParen, "'('");
                Token name = lex_.take();
                if (name.kind != Tok::Name) fail(name.pos, "expected coordinate name");
                expect(Tok::RParen, "')'");
                auto idx = chart_->index_of(name.text);
                if (!idx) fail(name.pos, "unknown symbol '" + name.text + "'");
                if (chart_->coord(*idx).kind != CoordKind::Angular)
                    fail(name.pos, std::string(is_sin ? "sin" : "cos") +
                                       " applied to linear coordinate '" + name.text + "'");
                return scalar(is_sin ? TrigPoly::sin_of(chart_, *idx)
                                     : TrigPoly::cos_of(chart_, *idx),
                              t.pos);
            }
            case Tok::DName: {
                auto idx = chart_->index_of(t.text);
                if (!idx) fail(t.pos, "unknown coordinate 'd_" + t.text + "'");
                Val v;
                v.scalar = TrigPoly::zero(chart_);
                v.vec = VectorField::basis(chart_, *idx);
                v.pos = t.pos;
                return v;
            }
            case Tok::LParen: {
                Val v = expr();
                expect(Tok::RParen, "')'");
                return v;
            }
            default:
                fail(t.pos, "expected a factor");
        }
    }

    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) fail(lex_.peek().pos, std::string("expected ") + what);
        lex_.take();
    }

    Val scalar(TrigPoly p, std::size_t pos) {
        Val v;
        v.scalar = std::move(p);
        v.pos = pos;
        return v;
    }

    static Val negated(Val v) {
        if (v.is_vec())
            v.vec = -*v.vec;
        else
            v.scalar = -v.scalar;
        return v;
    }

    Val add(Val a, Val b) {
        if (a.is_vec() != b.is_vec())
            fail(b.pos, "cannot mix polynomial and vector-field summands");
        if (a.is_vec())
            a.vec = *a.vec + *b.vec;
        else
            a.scalar = a.scalar + b.scalar;
        return a;
    }

    Val mul(Val a, Val b) {
        if (a.is_vec() && b.is_vec())
            fail(b.pos, "a summand may contain at most one d_ factor");
        if (a.is_vec()) {
            a.vec = *a.vec * b.scalar;
            return a;
        }
        if (b.is_vec()) {
            b.vec = *b.vec * a.scalar;
            return b;
        }
        a.scalar = a.scalar * b.scalar;
        return a;
    }

    Lexer lex_;
    ChartPtr chart_;
};

}  // namespace

ParsedExpr parse_expression(std::string_view text, const ChartPtr& chart) {
    Parser p(text, chart);
    Val v = p.parse();
    ParsedExpr out;
    if (v.is_vec())
        out.field = std::move(*v.vec);
    else
        out.poly = std::move(v.scalar);
    return out;
}

TrigPoly parse_poly(std::string_view text, const ChartPtr& chart) {
    ParsedExpr e = parse_expression(text, chart);
    if (e.is_field()) throw ParseError(0, "expected a polynomial, got a vector field");
    return std::move(*e.poly);
}

VectorField parse_field(std::string_view text, const ChartPtr& chart) {
    ParsedExpr e = parse_expression(text, chart);
    if (!e.is_field()) throw ParseError(0, "expected a vector field, got a polynomial");
    return std::move(*e.field);
}

}  // namespace kontact
