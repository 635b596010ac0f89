#include "fsing/upoly.hpp"

#include <algorithm>
#include <map>

namespace fsing {

UPoly::UPoly(FqContextPtr ctx, std::vector<std::pair<std::uint64_t, Fq>> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    normalize();
}

void UPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint64_t, Fq>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!t.second.context()->same(*ctx_))
            throw FieldMismatch("upoly coefficient from a different field");
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

UPoly UPoly::constant(FqContextPtr ctx, const Fq& c) {
    UPoly r(ctx);
    if (!c.is_zero()) r.terms_.push_back({0, c});
    return r;
}

UPoly UPoly::constant(FqContextPtr ctx, std::uint64_t residue) {
    Fq c(ctx, residue);
    return constant(ctx, c);
}

UPoly UPoly::monomial(FqContextPtr ctx, std::uint64_t exp, const Fq& c) {
    UPoly r(ctx);
    if (!c.is_zero()) r.terms_.push_back({exp, c});
    return r;
}

UPoly UPoly::variable(FqContextPtr ctx) {
    Fq one = Fq::one(ctx);
    return monomial(std::move(ctx), 1, one);
}

std::uint64_t UPoly::degree() const {
    if (terms_.empty()) throw ZeroPolynomialDegree("zero polynomial has no degree");
    return terms_.back().first;
}

const Fq& UPoly::leading_coeff() const {
    if (terms_.empty()) throw ZeroPolynomialDegree("zero polynomial has no leading coefficient");
    return terms_.back().second;
}

UPoly UPoly::operator+(const UPoly& o) const {
    if (!ctx_->same(*o.ctx_)) throw FieldMismatch("upoly addition across fields");
    std::vector<std::pair<std::uint64_t, Fq>> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            Fq c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) out.push_back({terms_[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    UPoly r(ctx_);
    r.terms_ = std::move(out);
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r(ctx_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (!ctx_->same(*o.ctx_)) throw FieldMismatch("upoly multiplication across fields");
    if (is_zero() || o.is_zero()) return UPoly(ctx_);

    // dense fast path over the prime field
    if (ctx_->degree() == 1) {
        std::uint64_t da = degree(), db = o.degree();
        if (da <= (1u << 26) && db <= (1u << 26) && da + db <= (1u << 26)) {
            const std::uint64_t p = ctx_->p();
            std::vector<std::uint64_t> dense(da + db + 1, 0);
            for (const auto& a : terms_) {
                std::uint64_t ca = a.second.coeffs()[0];
                for (const auto& b : o.terms_) {
                    std::uint64_t& slot = dense[a.first + b.first];
                    slot = add_mod(slot, mul_mod(ca, b.second.coeffs()[0], p), p);
                }
            }
            std::vector<std::pair<std::uint64_t, Fq>> out;
            for (std::uint64_t e = 0; e < dense.size(); ++e)
                if (dense[e] != 0) out.push_back({e, Fq(ctx_, dense[e])});
            UPoly r(ctx_);
            r.terms_ = std::move(out);
            return r;
        }
    }

    std::map<std::uint64_t, Fq> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            if (a.first > UINT64_MAX - b.first) throw ExponentOverflow("upoly exponent overflow");
            std::uint64_t e = a.first + b.first;
            Fq c = a.second * b.second;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(c));
            else
                it->second = it->second + c;
        }
    std::vector<std::pair<std::uint64_t, Fq>> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, std::move(c)});
    UPoly r(ctx_);
    r.terms_ = std::move(out);
    return r;
}

UPoly UPoly::pow(std::uint64_t n) const {
    UPoly result = UPoly::constant(ctx_, Fq::one(ctx_));
    if (n == 0) return result;
    if (is_zero()) return UPoly(ctx_);

    const std::uint64_t p = ctx_->p();
    // digits of n base p, least significant first
    std::vector<std::uint64_t> digits;
    for (std::uint64_t m = n; m; m /= p) digits.push_back(m % p);

    // a^{d} for 0 <= d < p by binary powering (d is small)
    auto small_pow = [&](const UPoly& a, std::uint64_t d) {
        UPoly r = UPoly::constant(ctx_, Fq::one(ctx_));
        UPoly base = a;
        while (d) {
            if (d & 1) r = r * base;
            d >>= 1;
            if (d) base = base * base;
        }
        return r;
    };

    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] == 0) continue;
        UPoly piece = small_pow(*this, digits[k]).frobenius(static_cast<unsigned>(k));
        result = result * piece;
    }
    return result;
}

UPoly UPoly::frobenius(unsigned e) const {
    if (e == 0) return *this;
    std::uint64_t q = checked_prime_power(ctx_->p(), e);
    UPoly r(ctx_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        if (t.first != 0 && q > UINT64_MAX / t.first)
            throw ExponentOverflow("upoly frobenius exponent overflow");
        t.first *= q;
        t.second = t.second.frobenius(e);
    }
    return r;
}

UPoly UPoly::divide_exact(const UPoly& g) const {
    if (g.is_zero()) throw DivisionByZero("upoly division by zero");
    std::map<std::uint64_t, Fq> rem;
    for (const auto& t : terms_) rem.emplace(t.first, t.second);
    const std::uint64_t dg = g.degree();
    const Fq lg_inv = g.leading_coeff().inverse();
    std::vector<std::pair<std::uint64_t, Fq>> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (top->first < dg) throw VerificationError("upoly division is not exact");
        std::uint64_t qe = top->first - dg;
        Fq qc = top->second * lg_inv;
        quot.push_back({qe, qc});
        for (const auto& t : g.terms_) {
            std::uint64_t e = qe + t.first;
            Fq delta = qc * t.second;
            auto it = rem.find(e);
            if (it == rem.end()) {
                rem.emplace(e, -delta);
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return UPoly(ctx_, std::move(quot));
}

Fq UPoly::eval(const Fq& x) const {
    // exponents can be huge and sparse: power per term
    Fq acc = Fq::zero(ctx_);
    for (const auto& t : terms_) acc = acc + t.second * x.pow(t.first);
    return acc;
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (!a.ctx_->same(*b.ctx_)) throw FieldMismatch("upoly comparison across fields");
    return a.terms_ == b.terms_;
}

FpPolyVec UPoly::to_fp_vec() const {
    if (ctx_->degree() != 1)
        throw PreconditionError("to_fp_vec requires prime-field coefficients");
    if (is_zero()) return {};
    FpPolyVec v(degree() + 1, 0);
    for (const auto& t : terms_) v[t.first] = t.second.coeffs()[0];
    return v;
}

std::string UPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = terms_.size(); i-- > 0;) {
        const auto& [e, c] = terms_[i];
        if (!s.empty()) s += "+";
        std::string cs = c.to_string();
        bool needs_parens = cs.find('+') != std::string::npos;
        if (e == 0) {
            s += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (!c.is_one()) {
                s += (needs_parens ? "(" + cs + ")" : cs) + "*";
            }
            s += var;
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace fsing
