#ifndef FSING_PARSER_HPP
#define FSING_PARSER_HPP

#include <string>

#include "fsing/polynomial.hpp"
#include "fsing/semilinear.hpp"
#include "fsing/upoly.hpp"

namespace fsing {

enum class ParseErrorKind { Syntax, UnknownVariable, ExponentOverflow };

/// Parse failure with position info; kind distinguishes syntax errors,
/// unknown variables, and exponent overflow.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
               const std::string& fragment, const std::string& what)
        : Error(what), kind_(kind), line_(line), column_(column), fragment_(fragment) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& fragment() const { return fragment_; }

private:
    ParseErrorKind kind_;
    std::size_t line_, column_;
    std::string fragment_;
};

/// Grammar: integer literals, declared variable names, + - * ^ and
/// parentheses, unary minus; integers reduced mod p; explicit '*'
/// required (implicit multiplication like "2x" is a syntax error).
Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring);

/// Univariate variant over F_{p^m}: `var` is the polynomial variable;
/// when m > 1 the field generator is also accepted by its context name.
UPoly parse_upoly(const std::string& src, const FqContextPtr& ctx, const std::string& var);

/// Matrix text "[a, b; c, d]" with univariate polynomial entries.
UPolyMat parse_upoly_matrix(const std::string& src, const FqContextPtr& ctx,
                            const std::string& var);

/// Matrix with entries in F_{p^m} (constants, or expressions in the
/// field generator).
FqMat parse_fq_matrix(const std::string& src, const FqContextPtr& ctx);

/// Compact matrix text, "[a, b; c, d]".
std::string matrix_to_string(const UPolyMat& M, const std::string& var);
std::string matrix_to_string(const FqMat& M);

} // namespace fsing

#endif
