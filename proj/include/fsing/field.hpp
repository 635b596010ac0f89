#ifndef FSING_FIELD_HPP
#define FSING_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsing/errors.hpp"

namespace fsing {

/// Prime characteristic, checked at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);
    std::uint64_t value() const { return p_; }
    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// Deterministic 64-bit primality test (Miller-Rabin with a fixed
/// witness set that is exact for all 64-bit integers).
bool is_prime_u64(std::uint64_t n);

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// p^e with an overflow check (ExponentOverflow past 64 bits).
std::uint64_t checked_prime_power(std::uint64_t p, unsigned e);

/// Coefficient vector of a monic univariate polynomial over F_p,
/// c[0] + c[1] u + ... + c[m] u^m with c[m] = 1.
using FpPolyVec = std::vector<std::uint64_t>;

/// Returns the first monic irreducible of degree m over F_p in the fixed
/// enumeration order (lower coefficients counted base p from 0 upward).
FpPolyVec find_irreducible(const PrimeModulus& p, unsigned m);

/// Trial-factorization irreducibility test for a monic polynomial over F_p.
bool is_irreducible_fp(const FpPolyVec& f, std::uint64_t p);

/// Description of a finite field F_{p^m}.  For m = 1 the modulus is the
/// single variable u.  Immutable and shared by all of its elements.
class FqContext {
public:
    /// Builds F_{p^m} with the deterministic modulus from find_irreducible.
    static std::shared_ptr<const FqContext> make(std::uint64_t p, unsigned m,
                                                 std::string var = "u");
    /// Builds F_{p^m} with an explicit monic modulus (verified irreducible).
    static std::shared_ptr<const FqContext> make_with_modulus(std::uint64_t p,
                                                              FpPolyVec modulus,
                                                              std::string var = "u");

    std::uint64_t p() const { return p_.value(); }
    unsigned degree() const { return m_; }
    const FpPolyVec& modulus() const { return modulus_; }
    const std::string& variable() const { return var_; }
    /// p^m as long as it fits 64 bits; throws ExponentOverflow otherwise.
    std::uint64_t order() const;
    bool same(const FqContext& other) const;

private:
    FqContext(PrimeModulus p, unsigned m, FpPolyVec modulus, std::string var);
    PrimeModulus p_;
    unsigned m_;
    FpPolyVec modulus_;
    std::string var_;
};

using FqContextPtr = std::shared_ptr<const FqContext>;

/// Element of F_{p^m}: coefficient vector of length m over F_p, reduced
/// modulo the context's irreducible.  Canonical and immutable.
class Fq {
public:
    Fq() = default;
    Fq(FqContextPtr ctx, std::uint64_t residue); // embeds F_p
    Fq(FqContextPtr ctx, std::vector<std::uint64_t> coeffs);

    static Fq zero(FqContextPtr ctx) { return Fq(ctx, 0); }
    static Fq one(FqContextPtr ctx) { return Fq(ctx, 1); }
    /// The class of u, a root of the defining irreducible (m >= 2).
    static Fq generator(FqContextPtr ctx);

    const FqContextPtr& context() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    /// Residue in [0,p) when the element lies in the prime field.
    std::uint64_t as_prime_residue() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq inverse() const;
    Fq pow(std::uint64_t e) const;
    /// a^{p^e}; restriction to F_p is the identity.
    Fq frobenius(unsigned e) const;
    /// Unique b with b^p = a (finite fields are perfect).
    Fq pth_root() const;

    friend bool operator==(const Fq& a, const Fq& b);
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
    /// Deterministic total order (by coefficient vectors); used only for
    /// canonical sorting of outputs, not algebraically meaningful.
    static bool less(const Fq& a, const Fq& b);

    std::string to_string() const;

private:
    void check_same(const Fq& o) const;
    FqContextPtr ctx_;
    std::vector<std::uint64_t> c_;
};

/// All field elements in the fixed counting order (coefficient vectors
/// counted base p, least significant first).  |F| must fit the budget.
std::vector<Fq> all_elements(const FqContextPtr& ctx, std::uint64_t budget = 1u << 20);

/// Deterministic embedding F_{p^m} -> F_{p^{m k}}: sends the generator to
/// the first root (in counting order) of the small field's modulus.
class FieldEmbedding {
public:
    FieldEmbedding(FqContextPtr from, FqContextPtr to);
    Fq operator()(const Fq& a) const;
    const FqContextPtr& from() const { return from_; }
    const FqContextPtr& to() const { return to_; }

private:
    FqContextPtr from_, to_;
    Fq image_of_gen_;
};

} // namespace fsing

#endif
