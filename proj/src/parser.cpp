#include "fsing/parser.hpp"

#include <cctype>

namespace fsing {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket,
                 Comma, Semicolon, End };

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t value = 0;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& msg) const {
        std::string frag = at.kind == Tok::End ? "<end of input>" : at.text;
        throw ParseError(kind, at.line, at.col, frag,
                         msg + " at line " + std::to_string(at.line) + ", column " +
                             std::to_string(at.col) + " (near '" + frag + "')");
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = Token{Tok::End, "", 0, line_, col_};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            tok_ = Token{k, std::string(1, c), 0, line_, col_};
            ++pos_;
            ++col_;
        };
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case '[': single(Tok::LBracket); return;
            case ']': single(Tok::RBracket); return;
            case ',': single(Tok::Comma); return;
            case ';': single(Tok::Semicolon); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            std::uint64_t v = 0;
            bool overflow = false;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                std::uint64_t digit = static_cast<std::uint64_t>(src_[pos_] - '0');
                if (v > (UINT64_MAX - digit) / 10) overflow = true;
                if (!overflow) v = v * 10 + digit;
                text += src_[pos_];
                ++pos_;
                ++col_;
            }
            Token t{Tok::Int, text, v, line_, tok_.col};
            if (overflow)
                throw ParseError(ParseErrorKind::ExponentOverflow, t.line, t.col, text,
                                 "integer literal exceeds 64 bits");
            tok_ = t;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                ++pos_;
                ++col_;
            }
            tok_ = Token{Tok::Ident, text, 0, line_, tok_.col};
            return;
        }
        Token bad{Tok::End, std::string(1, c), 0, line_, col_};
        throw ParseError(ParseErrorKind::Syntax, line_, col_, bad.text,
                         "unexpected character '" + bad.text + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_;
};

// Generic recursive-descent core over an abstract coefficient algebra.
// Ops: from_int, from_var (throws UnknownVariable via lexer), add, sub,
// neg, mul, pow.
template <class Alg>
class ExprParser {
public:
    ExprParser(Lexer& lx, Alg& alg) : lx_(lx), alg_(alg) {}

    typename Alg::Value parse_expr() {
        bool neg = false;
        if (lx_.peek().kind == Tok::Minus) {
            lx_.take();
            neg = true;
        }
        auto v = parse_term();
        if (neg) v = alg_.neg(v);
        while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
            Token op = lx_.take();
            auto rhs = parse_term();
            v = op.kind == Tok::Plus ? alg_.add(v, rhs) : alg_.sub(v, rhs);
        }
        return v;
    }

private:
    typename Alg::Value parse_term() {
        auto v = parse_factor();
        while (lx_.peek().kind == Tok::Star) {
            lx_.take();
            v = alg_.mul(v, parse_factor());
        }
        return v;
    }

    typename Alg::Value parse_factor() {
        auto v = parse_base();
        if (lx_.peek().kind == Tok::Caret) {
            lx_.take();
            Token e = lx_.take();
            if (e.kind != Tok::Int) lx_.fail(ParseErrorKind::Syntax, e, "expected an exponent");
            v = alg_.pow(v, e.value, e);
        }
        return v;
    }

    typename Alg::Value parse_base() {
        Token t = lx_.peek();
        switch (t.kind) {
            case Tok::Int:
                lx_.take();
                return alg_.from_int(t.value);
            case Tok::Ident:
                lx_.take();
                return alg_.from_var(t, lx_);
            case Tok::LParen: {
                lx_.take();
                auto v = parse_expr();
                Token close = lx_.take();
                if (close.kind != Tok::RParen)
                    lx_.fail(ParseErrorKind::Syntax, close, "expected ')'");
                return v;
            }
            case Tok::Minus: {
                lx_.take();
                return alg_.neg(parse_base());
            }
            default:
                lx_.fail(ParseErrorKind::Syntax, t, "expected a value");
        }
    }

    Lexer& lx_;
    Alg& alg_;
};

struct PolyAlg {
    using Value = Polynomial;
    PolyRingPtr ring;

    Value from_int(std::uint64_t v) const { return Polynomial::constant(ring, v % ring->p()); }
    Value from_var(const Token& t, Lexer& lx) const {
        auto idx = ring->var_index(t.text);
        if (!idx) lx.fail(ParseErrorKind::UnknownVariable, t, "unknown variable '" + t.text + "'");
        return Polynomial::variable(ring, *idx);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value pow(const Value& a, std::uint64_t e, const Token& at) const {
        try {
            return a.pow(e);
        } catch (const ExponentOverflow&) {
            throw ParseError(ParseErrorKind::ExponentOverflow, at.line, at.col, at.text,
                             "exponent overflow in '^" + at.text + "'");
        }
    }
};

struct UPolyAlg {
    using Value = UPoly;
    FqContextPtr ctx;
    std::string var;

    Value from_int(std::uint64_t v) const { return UPoly::constant(ctx, v); }
    Value from_var(const Token& t, Lexer& lx) const {
        if (t.text == var) return UPoly::variable(ctx);
        if (ctx->degree() > 1 && t.text == ctx->variable())
            return UPoly::constant(ctx, Fq::generator(ctx));
        lx.fail(ParseErrorKind::UnknownVariable, t, "unknown variable '" + t.text + "'");
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value pow(const Value& a, std::uint64_t e, const Token& at) const {
        try {
            return a.pow(e);
        } catch (const ExponentOverflow&) {
            throw ParseError(ParseErrorKind::ExponentOverflow, at.line, at.col, at.text,
                             "exponent overflow in '^" + at.text + "'");
        }
    }
};

template <class Alg>
SLMat<typename Alg::Value> parse_matrix_with(Lexer& lx, Alg& alg,
                                             const typename Alg::Value& zero) {
    Token open = lx.take();
    if (open.kind != Tok::LBracket) lx.fail(ParseErrorKind::Syntax, open, "expected '['");
    std::vector<std::vector<typename Alg::Value>> rows;
    ExprParser<Alg> parser(lx, alg);
    while (true) {
        std::vector<typename Alg::Value> row;
        row.push_back(parser.parse_expr());
        while (lx.peek().kind == Tok::Comma) {
            lx.take();
            row.push_back(parser.parse_expr());
        }
        rows.push_back(std::move(row));
        Token t = lx.take();
        if (t.kind == Tok::Semicolon) continue;
        if (t.kind == Tok::RBracket) break;
        lx.fail(ParseErrorKind::Syntax, t, "expected ';' or ']'");
    }
    Token end = lx.take();
    if (end.kind != Tok::End) lx.fail(ParseErrorKind::Syntax, end, "trailing input after matrix");
    std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw ParseError(ParseErrorKind::Syntax, 1, 1, "matrix",
                             "matrix must be square (row lengths differ)");
    SLMat<typename Alg::Value> M(n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = rows[i][j];
    return M;
}

} // namespace

Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring) {
    Lexer lx(src);
    PolyAlg alg{ring};
    ExprParser<PolyAlg> p(lx, alg);
    Polynomial v = p.parse_expr();
    Token end = lx.take();
    if (end.kind != Tok::End) lx.fail(ParseErrorKind::Syntax, end, "trailing input");
    return v;
}

UPoly parse_upoly(const std::string& src, const FqContextPtr& ctx, const std::string& var) {
    Lexer lx(src);
    UPolyAlg alg{ctx, var};
    ExprParser<UPolyAlg> p(lx, alg);
    UPoly v = p.parse_expr();
    Token end = lx.take();
    if (end.kind != Tok::End) lx.fail(ParseErrorKind::Syntax, end, "trailing input");
    return v;
}

UPolyMat parse_upoly_matrix(const std::string& src, const FqContextPtr& ctx,
                            const std::string& var) {
    Lexer lx(src);
    UPolyAlg alg{ctx, var};
    return parse_matrix_with(lx, alg, UPoly::zero(ctx));
}

FqMat parse_fq_matrix(const std::string& src, const FqContextPtr& ctx) {
    // parse entries as polynomials in the field generator, then evaluate
    Lexer lx(src);
    UPolyAlg alg{ctx, ctx->variable()};
    UPolyMat M = parse_matrix_with(lx, alg, UPoly::zero(ctx));
    FqMat out(M.size(), Fq::zero(ctx));
    Fq gen = ctx->degree() > 1 ? Fq::generator(ctx) : Fq::zero(ctx);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) out.at(i, j) = M.at(i, j).eval(gen);
    return out;
}

std::string matrix_to_string(const UPolyMat& M, const std::string& var) {
    std::string s = "[";
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j) s += ", ";
            s += M.at(i, j).to_string(var);
        }
    }
    return s + "]";
}

std::string matrix_to_string(const FqMat& M) {
    std::string s = "[";
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j) s += ", ";
            s += M.at(i, j).to_string();
        }
    }
    return s + "]";
}

} // namespace fsing
