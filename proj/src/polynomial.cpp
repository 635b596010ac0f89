#include "fsing/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fsing {

// ------------------------------------------------------------------ Monomial

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint64_t x) { return x == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t s = 0;
    for (auto x : e_) {
        if (s > UINT64_MAX - x) throw ExponentOverflow("total degree exceeds 64 bits");
        s += x;
    }
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint64_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > UINT64_MAX - o.e_[i]) throw ExponentOverflow("monomial exponent overflow");
        r[i] = e_[i] + o.e_[i];
    }
    return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<std::uint64_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < o.e_[i]) throw PreconditionError("monomial quotient is not a monomial");
        r[i] = e_[i] - o.e_[i];
    }
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::uint64_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<std::uint64_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::min(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::scaled(std::uint64_t k) const {
    std::vector<std::uint64_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] != 0 && k > UINT64_MAX / e_[i])
            throw ExponentOverflow("frobenius exponent overflow");
        r[i] = e_[i] * k;
    }
    return Monomial(std::move(r));
}

// -------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind) {
    perm_.resize(nvars);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation, std::size_t block)
    : kind_(kind), perm_(std::move(permutation)), block_(block) {
    if (block_ > perm_.size()) throw PreconditionError("elimination block larger than variable count");
}

MonomialOrder MonomialOrder::elimination(OrderKind kind, std::vector<std::size_t> permutation,
                                         std::size_t block) {
    return MonomialOrder(kind, std::move(permutation), block);
}

// compares a and b restricted to permuted positions [lo, hi): -1, 0, +1
int MonomialOrder::cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    auto deg = [&](const Monomial& m) {
        std::uint64_t s = 0;
        for (std::size_t i = lo; i < hi; ++i) s += m[perm_[i]];
        return s;
    };
    switch (kind_) {
        case OrderKind::Lex:
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint64_t x = a[perm_[i]], y = b[perm_[i]];
                if (x != y) return x < y ? -1 : 1;
            }
            return 0;
        case OrderKind::GrLex: {
            std::uint64_t da = deg(a), db = deg(b);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint64_t x = a[perm_[i]], y = b[perm_[i]];
                if (x != y) return x < y ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::GrevLex: {
            std::uint64_t da = deg(a), db = deg(b);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = hi; i-- > lo;) {
                std::uint64_t x = a[perm_[i]], y = b[perm_[i]];
                if (x != y) return x < y ? 1 : -1; // last differing exponent: smaller wins
            }
            return 0;
        }
    }
    return 0;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (block_ > 0) {
        int c = cmp_range(a, b, 0, block_);
        if (c != 0) return c < 0;
        return cmp_range(a, b, block_, perm_.size()) < 0;
    }
    return cmp_range(a, b, 0, perm_.size()) < 0;
}

std::string MonomialOrder::key() const {
    std::string s;
    switch (kind_) {
        case OrderKind::Lex: s = "lex"; break;
        case OrderKind::GrLex: s = "grlex"; break;
        case OrderKind::GrevLex: s = "grevlex"; break;
    }
    s += ";b" + std::to_string(block_) + ";";
    for (auto i : perm_) s += std::to_string(i) + ",";
    return s;
}

// ------------------------------------------------------------------ PolyRing

PolyRing::PolyRing(PrimeModulus p, std::vector<std::string> variables,
                   std::vector<std::uint64_t> weights)
    : p_(p), vars_(std::move(variables)), weights_(std::move(weights)),
      default_order_(OrderKind::GrevLex, vars_.size()) {
    if (vars_.empty()) throw PreconditionError("ring needs at least one variable");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        throw PreconditionError("weight count differs from variable count");
    for (auto w : weights_)
        if (w == 0) throw PreconditionError("weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw PreconditionError("duplicate variable name " + vars_[i]);
}

std::shared_ptr<const PolyRing> PolyRing::make(std::uint64_t p, std::vector<std::string> variables,
                                               std::vector<std::uint64_t> weights) {
    return std::make_shared<const PolyRing>(PrimeModulus(p), std::move(variables), std::move(weights));
}

bool PolyRing::standard_grading() const {
    return std::all_of(weights_.begin(), weights_.end(), [](std::uint64_t w) { return w == 1; });
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool PolyRing::same(const PolyRing& other) const {
    return p() == other.p() && vars_ == other.vars_ && weights_ == other.weights_;
}

std::shared_ptr<const PolyRing> PolyRing::with_elimination_variable(const std::string& name) const {
    if (var_index(name)) throw PreconditionError("elimination variable clashes with " + name);
    std::vector<std::string> vars{name};
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    std::vector<std::uint64_t> w{1};
    w.insert(w.end(), weights_.begin(), weights_.end());
    return PolyRing::make(p(), std::move(vars), std::move(w));
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.mono.nvars() != ring_->nvars())
            throw PreconditionError("monomial arity differs from ring");
    canonicalize();
}

void Polynomial::canonicalize() {
    const std::uint64_t p = ring_->p();
    for (auto& t : terms_) t.coeff %= p;
    const MonomialOrder& ord = ring_->default_order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = add_mod(out.back().coeff, t.coeff, p);
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::uint64_t c) {
    std::size_t n = ring->nvars();
    return Polynomial(std::move(ring), {Term{Monomial::unit(n), c}});
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw PreconditionError("variable index out of range");
    std::vector<std::uint64_t> e(ring->nvars(), 0);
    e[index] = 1;
    return Polynomial(std::move(ring), {Term{Monomial(std::move(e)), 1}});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial m, std::uint64_t c) {
    return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
        throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    const std::uint64_t p = ring_->p();
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = sub_mod(0, t.coeff, p);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(ts); // still sorted, still nonzero coefficients
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    const std::uint64_t p = ring_->p();
    std::map<Monomial, std::uint64_t> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            std::uint64_t c = mul_mod(a.coeff, b.coeff, p);
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second = add_mod(it->second, c, p);
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) ts.push_back(Term{m, c});
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::scale(std::uint64_t c) const {
    const std::uint64_t p = ring_->p();
    c %= p;
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = mul_mod(t.coeff, c, p);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(ts);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint64_t c) const {
    const std::uint64_t p = ring_->p();
    c %= p;
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> ts = terms_;
    for (auto& t : ts) {
        t.mono = t.mono * m;
        t.coeff = mul_mod(t.coeff, c, p);
    }
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(ts); // multiplication by a monomial preserves order
    return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
    Polynomial base = *this;
    Polynomial result = Polynomial::constant(ring_, 1);
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::frobenius(unsigned e) const {
    std::uint64_t q = checked_prime_power(ring_->p(), e);
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.mono = t.mono.scaled(q);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_ = std::move(ts); // exponent scaling preserves every monomial order
    return r;
}

std::uint64_t Polynomial::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

std::uint64_t Polynomial::weighted_degree() const {
    if (terms_.empty()) throw ZeroPolynomialDegree("the zero polynomial has no degree");
    const auto& w = ring_->weights();
    std::uint64_t best = 0;
    for (const auto& t : terms_) {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = t.mono[i];
            if (x != 0 && w[i] > UINT64_MAX / x) throw ExponentOverflow("weighted degree overflow");
            std::uint64_t prod = x * w[i];
            if (d > UINT64_MAX - prod) throw ExponentOverflow("weighted degree overflow");
            d += prod;
        }
        best = std::max(best, d);
    }
    return best;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto& w = ring_->weights();
    auto degree_of = [&](const Term& t) {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += t.mono[i] * w[i];
        return d;
    };
    std::uint64_t d0 = degree_of(terms_[0]);
    for (const auto& t : terms_)
        if (degree_of(t) != d0) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    const std::uint64_t p = ring_->p();
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        std::uint64_t e = t.mono[var];
        if (e == 0) continue;
        std::uint64_t c = mul_mod(t.coeff, e % p, p);
        if (c == 0) continue;
        auto exps = t.mono.exponents();
        exps[var] = e - 1;
        ts.push_back(Term{Monomial(std::move(exps)), c});
    }
    return Polynomial(ring_, std::move(ts));
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw ZeroPolynomialDegree("the zero polynomial has no leading term");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    std::uint64_t lc = leading_term(ord).coeff;
    return scale(inv_mod(lc, ring_->p()));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const auto& vars = ring_->variables();
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            std::uint64_t e = t.mono[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            s += std::to_string(t.coeff);
        else if (t.coeff == 1)
            s += mono;
        else
            s += std::to_string(t.coeff) + "*" + mono;
    }
    return s;
}

} // namespace fsing
