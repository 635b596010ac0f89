#ifndef FSING_UPOLY_HPP
#define FSING_UPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsing/field.hpp"

namespace fsing {

/// Sparse univariate polynomial over F_{p^m}, terms ascending by
/// exponent.  Exponents are 64-bit: Frobenius twists produce huge but
/// very sparse polynomials, which this representation keeps cheap.
class UPoly {
public:
    explicit UPoly(FqContextPtr ctx) : ctx_(std::move(ctx)) {}
    UPoly(FqContextPtr ctx, std::vector<std::pair<std::uint64_t, Fq>> terms);

    static UPoly zero(FqContextPtr ctx) { return UPoly(std::move(ctx)); }
    static UPoly constant(FqContextPtr ctx, const Fq& c);
    static UPoly constant(FqContextPtr ctx, std::uint64_t residue);
    static UPoly monomial(FqContextPtr ctx, std::uint64_t exp, const Fq& c);
    static UPoly variable(FqContextPtr ctx);

    const FqContextPtr& context() const { return ctx_; }
    const std::vector<std::pair<std::uint64_t, Fq>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    std::uint64_t degree() const; // throws ZeroPolynomialDegree on 0
    const Fq& leading_coeff() const;
    std::size_t term_count() const { return terms_.size(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    /// n-th power via base-p digits: a^n = prod (a^{d_k})^{[p^k]}, so
    /// Frobenius-sized powers stay sparse.
    UPoly pow(std::uint64_t n) const;
    /// Coefficient-wise p^e-th power with exponents scaled by p^e;
    /// equals the p^e-th power of the polynomial.
    UPoly frobenius(unsigned e) const;
    /// Quotient when the division is exact; VerificationError otherwise.
    UPoly divide_exact(const UPoly& g) const;
    Fq eval(const Fq& x) const;

    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Prime-field coefficient vector (requires m = 1), for reuse of the
    /// F_p irreducibility machinery.
    FpPolyVec to_fp_vec() const;

    /// Compact text, descending exponents: "x^4+1", "2*x^3+x+2", "0".
    std::string to_string(const std::string& var) const;

private:
    void normalize();
    FqContextPtr ctx_;
    std::vector<std::pair<std::uint64_t, Fq>> terms_;
};

} // namespace fsing

#endif
