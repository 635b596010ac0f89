#ifndef FSING_POLYNOMIAL_HPP
#define FSING_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsing/field.hpp"

namespace fsing {

/// Exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint64_t> exps) : e_(std::move(exps)) {}
    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<std::uint64_t>(nvars, 0)); }

    std::size_t nvars() const { return e_.size(); }
    std::uint64_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint64_t>& exponents() const { return e_; }
    bool is_unit() const;
    std::uint64_t total_degree() const;

    Monomial operator*(const Monomial& o) const;
    /// Componentwise quotient; precondition: o divides *this.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const; // *this | o
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    /// Scales every exponent by k (Frobenius); throws on overflow.
    Monomial scaled(std::uint64_t k) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<std::uint64_t> e_;
};

enum class OrderKind { Lex, GrLex, GrevLex };

/// Total multiplicative well-ordering on monomials: lex / graded lex /
/// graded reverse lex over a variable permutation, with an optional
/// leading elimination block (block variables dominate the rest).
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, std::size_t nvars);
    MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation, std::size_t block = 0);

    static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder(OrderKind::GrevLex, nvars); }
    static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(OrderKind::Lex, nvars); }
    static MonomialOrder grlex(std::size_t nvars) { return MonomialOrder(OrderKind::GrLex, nvars); }
    /// First `block` variables (in permutation order) eliminate the rest.
    static MonomialOrder elimination(OrderKind kind, std::vector<std::size_t> permutation,
                                     std::size_t block);

    /// Strict "a comes after b" comparison: true iff a < b in the order.
    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    std::size_t block() const { return block_; }
    std::string key() const; // stable identifier for caching

private:
    int cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;
    OrderKind kind_ = OrderKind::GrevLex;
    std::vector<std::size_t> perm_;
    std::size_t block_ = 0;
};

/// Polynomial ring F_p[x_1..x_n] with a positive weight per variable
/// (all 1 = standard grading) and grevlex as the default order.
class PolyRing {
public:
    PolyRing(PrimeModulus p, std::vector<std::string> variables,
             std::vector<std::uint64_t> weights = {});

    static std::shared_ptr<const PolyRing> make(std::uint64_t p,
                                                std::vector<std::string> variables,
                                                std::vector<std::uint64_t> weights = {});

    std::uint64_t p() const { return p_.value(); }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<std::uint64_t>& weights() const { return weights_; }
    bool standard_grading() const;
    std::optional<std::size_t> var_index(const std::string& name) const;
    const MonomialOrder& default_order() const { return default_order_; }
    bool same(const PolyRing& other) const;
    /// Ring with one extra elimination variable prepended (for colon ideals).
    std::shared_ptr<const PolyRing> with_elimination_variable(const std::string& name) const;

private:
    PrimeModulus p_;
    std::vector<std::string> vars_;
    std::vector<std::uint64_t> weights_;
    MonomialOrder default_order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    Monomial mono;
    std::uint64_t coeff; // nonzero residue in [1, p)
};

/// Sparse multivariate polynomial over F_p in canonical form: terms
/// strictly descending in the ring's default order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring); // zero
    Polynomial(PolyRingPtr ring, std::vector<Term> terms); // canonicalizes

    static Polynomial zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(PolyRingPtr ring, std::uint64_t c);
    static Polynomial variable(PolyRingPtr ring, std::size_t index);
    static Polynomial monomial(PolyRingPtr ring, Monomial m, std::uint64_t c = 1);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(std::uint64_t c) const;
    Polynomial times_monomial(const Monomial& m, std::uint64_t c = 1) const;
    Polynomial pow(std::uint64_t n) const; // repeated squaring

    /// f^{p^e} by exponent scaling (coefficients are F_p-fixed).
    Polynomial frobenius(unsigned e) const;
    std::uint64_t coefficient_of(const Monomial& m) const;
    /// Max weighted degree; throws ZeroPolynomialDegree on 0.
    std::uint64_t weighted_degree() const;
    bool is_homogeneous() const;
    Polynomial derivative(std::size_t var) const;
    /// Leading term w.r.t. an arbitrary order.
    const Term& leading_term(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical text: descending grevlex, explicit '*', '^' powers,
    /// least non-negative residues, e.g. "x^4 + y^4 + 4*z^4".
    std::string to_string() const;

private:
    void canonicalize();
    void check_same_ring(const Polynomial& o) const;
    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace fsing

#endif
