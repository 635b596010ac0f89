#include "fsing/field.hpp"

#include <algorithm>

namespace fsing {

// ---------------------------------------------------------------- primes

static std::uint64_t mulmod_u128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u128(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Exact for all 64-bit integers with this witness set.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u128(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u128(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return mulmod_u128(a, b, p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    return powmod_u128(a, e, p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    return powmod_u128(a, p - 2, p);
}

std::uint64_t checked_prime_power(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) throw ExponentOverflow("p^e exceeds 64 bits");
        r *= p;
    }
    return r;
}

// ------------------------------------------------- univariate F_p helpers

namespace {

void trim(FpPolyVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of a modulo monic g, coefficients mod p
FpPolyVec poly_rem(FpPolyVec a, const FpPolyVec& g, std::uint64_t p) {
    trim(a);
    const std::size_t dg = g.size() - 1;
    while (a.size() >= g.size()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t t = mul_mod(lead, g[i], p);
                a[shift + i] = sub_mod(a[shift + i], t, p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPolyVec poly_mul(const FpPolyVec& a, const FpPolyVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPolyVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    return r;
}

FpPolyVec poly_mulmod(const FpPolyVec& a, const FpPolyVec& b, const FpPolyVec& g, std::uint64_t p) {
    return poly_rem(poly_mul(a, b, p), g, p);
}

FpPolyVec poly_powmod(FpPolyVec a, std::uint64_t e, const FpPolyVec& g, std::uint64_t p) {
    FpPolyVec r{1};
    a = poly_rem(std::move(a), g, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, g, p);
        a = poly_mulmod(a, a, g, p);
        e >>= 1;
    }
    return r;
}

// quotient and remainder of a by nonzero b
std::pair<FpPolyVec, FpPolyVec> poly_divmod(FpPolyVec a, const FpPolyVec& b, std::uint64_t p) {
    trim(a);
    if (a.size() < b.size()) return {{}, std::move(a)};
    FpPolyVec q(a.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = inv_mod(b.back(), p);
    for (std::size_t k = a.size(); k-- > 0;) {
        if (k + 1 < b.size()) break;
        std::uint64_t c = a[k];
        if (c != 0) {
            std::size_t qi = k + 1 - b.size();
            std::uint64_t factor = mul_mod(c, lead_inv, p);
            q[qi] = factor;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[qi + i] = sub_mod(a[qi + i], mul_mod(factor, b[i], p), p);
        }
    }
    trim(a);
    return {std::move(q), std::move(a)};
}

// extended Euclid: returns (gcd, s) with s*a = gcd mod b
std::pair<FpPolyVec, FpPolyVec> poly_half_gcd_inv(FpPolyVec a, FpPolyVec b, std::uint64_t p) {
    FpPolyVec r0 = std::move(a), r1 = std::move(b);
    FpPolyVec s0{1}, s1{};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1, p);
        FpPolyVec qs = poly_mul(q, s1, p);
        FpPolyVec s(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::uint64_t x = i < s0.size() ? s0[i] : 0;
            std::uint64_t y = i < qs.size() ? qs[i] : 0;
            s[i] = sub_mod(x, y, p);
        }
        trim(s);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    return {r0, s0};
}

} // namespace

bool is_irreducible_fp(const FpPolyVec& f, std::uint64_t p) {
    if (f.size() < 2) return false; // constants
    if (f.back() != 1) throw PreconditionError("irreducibility test expects a monic polynomial");
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        // iterate lower coefficients as a base-p counter
        FpPolyVec g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_rem(f, g, p).empty()) return false;
            // increment counter over g[0..d-1]
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++g[i] < p) break;
                g[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

FpPolyVec find_irreducible(const PrimeModulus& p, unsigned m) {
    if (m == 0) throw PreconditionError("extension degree must be >= 1");
    FpPolyVec f(m + 1, 0);
    f[m] = 1;
    while (true) {
        if (is_irreducible_fp(f, p.value())) return f;
        std::size_t i = 0;
        for (; i < m; ++i) {
            if (++f[i] < p.value()) break;
            f[i] = 0;
        }
        if (i == m) throw Error("no irreducible found (unreachable)");
    }
}

// ----------------------------------------------------------------- FqContext

FqContext::FqContext(PrimeModulus p, unsigned m, FpPolyVec modulus, std::string var)
    : p_(p), m_(m), modulus_(std::move(modulus)), var_(std::move(var)) {}

std::shared_ptr<const FqContext> FqContext::make(std::uint64_t p, unsigned m, std::string var) {
    PrimeModulus pm(p);
    FpPolyVec mod = m == 1 ? FpPolyVec{0, 1} : find_irreducible(pm, m);
    return std::shared_ptr<const FqContext>(new FqContext(pm, m, std::move(mod), std::move(var)));
}

std::shared_ptr<const FqContext> FqContext::make_with_modulus(std::uint64_t p, FpPolyVec modulus,
                                                              std::string var) {
    PrimeModulus pm(p);
    for (auto& c : modulus) c %= p;
    if (modulus.size() < 2 || modulus.back() != 1)
        throw PreconditionError("defining modulus must be monic of degree >= 1");
    if (!is_irreducible_fp(modulus, p))
        throw PreconditionError("defining modulus is reducible over F_p");
    unsigned m = static_cast<unsigned>(modulus.size() - 1);
    return std::shared_ptr<const FqContext>(new FqContext(pm, m, std::move(modulus), std::move(var)));
}

std::uint64_t FqContext::order() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (r > UINT64_MAX / p()) throw ExponentOverflow("field order exceeds 64 bits");
        r *= p();
    }
    return r;
}

bool FqContext::same(const FqContext& other) const {
    return p() == other.p() && m_ == other.m_ && modulus_ == other.modulus_;
}

// ----------------------------------------------------------------------- Fq

Fq::Fq(FqContextPtr ctx, std::uint64_t residue) : ctx_(std::move(ctx)) {
    c_.assign(ctx_->degree(), 0);
    c_[0] = residue % ctx_->p();
}

Fq::Fq(FqContextPtr ctx, std::vector<std::uint64_t> coeffs) : ctx_(std::move(ctx)) {
    for (auto& c : coeffs) c %= ctx_->p();
    coeffs = poly_rem(std::move(coeffs), ctx_->modulus(), ctx_->p());
    coeffs.resize(ctx_->degree(), 0);
    c_ = std::move(coeffs);
}

Fq Fq::generator(FqContextPtr ctx) {
    if (ctx->degree() < 2) throw PreconditionError("prime field has no extension generator");
    std::vector<std::uint64_t> c(ctx->degree(), 0);
    c[1] = 1;
    return Fq(std::move(ctx), std::move(c));
}

bool Fq::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool Fq::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t x) { return x == 0; });
}

std::uint64_t Fq::as_prime_residue() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) throw PreconditionError("element does not lie in the prime field");
    return c_.empty() ? 0 : c_[0];
}

void Fq::check_same(const Fq& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
        throw FieldMismatch("operands live in different fields");
}

Fq Fq::operator+(const Fq& o) const {
    check_same(o);
    Fq r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = add_mod(c_[i], o.c_[i], ctx_->p());
    return r;
}

Fq Fq::operator-(const Fq& o) const {
    check_same(o);
    Fq r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = sub_mod(c_[i], o.c_[i], ctx_->p());
    return r;
}

Fq Fq::operator-() const {
    Fq r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = sub_mod(0, c_[i], ctx_->p());
    return r;
}

Fq Fq::operator*(const Fq& o) const {
    check_same(o);
    Fq r = *this;
    r.c_ = poly_mulmod(c_, o.c_, ctx_->modulus(), ctx_->p());
    r.c_.resize(ctx_->degree(), 0);
    return r;
}

Fq Fq::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    FpPolyVec a = c_;
    trim(a);
    auto [g, s] = poly_half_gcd_inv(a, ctx_->modulus(), ctx_->p());
    // g is a nonzero constant since the modulus is irreducible
    std::uint64_t ginv = inv_mod(g.empty() ? 0 : g[0], ctx_->p());
    for (auto& x : s) x = mul_mod(x, ginv, ctx_->p());
    Fq r = *this;
    r.c_ = poly_rem(std::move(s), ctx_->modulus(), ctx_->p());
    r.c_.resize(ctx_->degree(), 0);
    return r;
}

Fq Fq::pow(std::uint64_t e) const {
    Fq r = *this;
    r.c_ = poly_powmod(c_, e, ctx_->modulus(), ctx_->p());
    r.c_.resize(ctx_->degree(), 0);
    return r;
}

Fq Fq::frobenius(unsigned e) const {
    Fq r = *this;
    for (unsigned i = 0; i < e; ++i) r = r.pow(ctx_->p());
    return r;
}

Fq Fq::pth_root() const {
    // a^{p^{m-1}} inverts x -> x^p on F_{p^m}
    return frobenius(ctx_->degree() - 1);
}

bool operator==(const Fq& a, const Fq& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

bool Fq::less(const Fq& a, const Fq& b) {
    a.check_same(b);
    return a.c_ < b.c_;
}

std::string Fq::to_string() const {
    if (ctx_->degree() == 1) return std::to_string(c_[0]);
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
            s += ctx_->variable();
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<Fq> all_elements(const FqContextPtr& ctx, std::uint64_t budget) {
    std::uint64_t n = ctx->order();
    if (n > budget) throw BudgetExceeded("field enumeration budget exceeded");
    std::vector<Fq> out;
    out.reserve(n);
    std::vector<std::uint64_t> c(ctx->degree(), 0);
    while (true) {
        out.emplace_back(ctx, c);
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (++c[i] < ctx->p()) break;
            c[i] = 0;
        }
        if (i == c.size()) break;
    }
    return out;
}

FieldEmbedding::FieldEmbedding(FqContextPtr from, FqContextPtr to)
    : from_(std::move(from)), to_(std::move(to)), image_of_gen_(Fq::zero(to_)) {
    if (from_->p() != to_->p()) throw FieldMismatch("embedding requires equal characteristic");
    if (to_->degree() % from_->degree() != 0)
        throw PreconditionError("no embedding: source degree does not divide target degree");
    if (from_->degree() == 1) {
        image_of_gen_ = Fq::zero(to_);
        return;
    }
    // first root of the source modulus in the target field, counting order
    const auto& mod = from_->modulus();
    std::vector<std::uint64_t> c(to_->degree(), 0);
    while (true) {
        Fq cand(to_, c);
        Fq val = Fq::zero(to_);
        for (std::size_t i = mod.size(); i-- > 0;)
            val = val * cand + Fq(to_, mod[i]);
        if (val.is_zero()) {
            image_of_gen_ = cand;
            return;
        }
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (++c[i] < to_->p()) break;
            c[i] = 0;
        }
        if (i == c.size()) throw Error("embedding root not found (unreachable)");
    }
}

Fq FieldEmbedding::operator()(const Fq& a) const {
    if (!a.context()->same(*from_)) throw FieldMismatch("embedding applied to foreign element");
    Fq r = Fq::zero(to_);
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * image_of_gen_ + Fq(to_, c[i]);
    return r;
}

} // namespace fsing
