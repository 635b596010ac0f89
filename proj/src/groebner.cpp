#include "fsing/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace fsing {

namespace {

// Working representation inside the engine: terms sorted descending by
// the active order, coefficients mod p.
struct OPoly {
    std::vector<Term> terms;
    bool zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
};

struct Engine {
    const MonomialOrder& ord;
    const PolyRingPtr ring;
    const std::uint64_t p;
    const GbBudget& budget;
    std::uint64_t reduction_steps = 0;

    Engine(const MonomialOrder& o, PolyRingPtr r, const GbBudget& b)
        : ord(o), ring(std::move(r)), p(ring->p()), budget(b) {}

    void step() {
        if (++reduction_steps > budget.max_reduction_steps)
            throw BudgetExceeded("groebner reduction step budget exceeded");
    }

    OPoly to_opoly(const Polynomial& f) const {
        OPoly g{f.terms()};
        std::sort(g.terms.begin(), g.terms.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
        return g;
    }

    Polynomial to_polynomial(const OPoly& f) const { return Polynomial(ring, f.terms); }

    // f -= c * m * g
    OPoly subtract_scaled(const OPoly& f, std::uint64_t c, const Monomial& m, const OPoly& g) {
        std::vector<Term> out;
        out.reserve(f.terms.size() + g.terms.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms.size() || j < g.terms.size()) {
            step();
            if (j == g.terms.size()) {
                out.push_back(f.terms[i++]);
                continue;
            }
            Monomial gm = g.terms[j].mono * m;
            std::uint64_t gc = mul_mod(c, g.terms[j].coeff, p);
            if (i == f.terms.size()) {
                std::uint64_t nc = sub_mod(0, gc, p);
                if (nc != 0) out.push_back(Term{std::move(gm), nc});
                ++j;
                continue;
            }
            if (f.terms[i].mono == gm) {
                std::uint64_t nc = sub_mod(f.terms[i].coeff, gc, p);
                if (nc != 0) out.push_back(Term{gm, nc});
                ++i;
                ++j;
            } else if (ord.greater(f.terms[i].mono, gm)) {
                out.push_back(f.terms[i++]);
            } else {
                std::uint64_t nc = sub_mod(0, gc, p);
                if (nc != 0) out.push_back(Term{std::move(gm), nc});
                ++j;
            }
        }
        return OPoly{std::move(out)};
    }

    // full normal form of f modulo basis (leading and tail reduction);
    // the first divisor in basis order is used at every step
    OPoly reduce(OPoly f, const std::vector<OPoly>& basis) {
        std::vector<Term> remainder;
        while (!f.zero()) {
            step();
            bool reduced = false;
            const Term& lt = f.lt();
            for (const auto& g : basis) {
                if (g.zero()) continue;
                if (g.lt().mono.divides(lt.mono)) {
                    std::uint64_t c = mul_mod(lt.coeff, inv_mod(g.lt().coeff, p), p);
                    f = subtract_scaled(f, c, lt.mono / g.lt().mono, g);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                remainder.push_back(f.terms.front());
                f.terms.erase(f.terms.begin());
            }
        }
        return OPoly{std::move(remainder)};
    }

    OPoly spoly(const OPoly& f, const OPoly& g) {
        const Monomial l = f.lt().mono.lcm(g.lt().mono);
        OPoly a = subtract_scaled(OPoly{}, sub_mod(0, inv_mod(f.lt().coeff, p), p),
                                  l / f.lt().mono, f); // a = (1/lc_f) * (l/lt_f) * f
        OPoly b = subtract_scaled(OPoly{}, sub_mod(0, inv_mod(g.lt().coeff, p), p),
                                  l / g.lt().mono, g);
        return subtract_scaled(a, 1, Monomial::unit(ring->nvars()), b);
    }
};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t lcm_deg;
};

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("s-polynomial of zero");
    GbBudget b;
    Engine eng(ord, f.ring(), b);
    return eng.to_polynomial(eng.spoly(eng.to_opoly(f), eng.to_opoly(g)));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord,
                         const GbBudget& budget) {
    PolyRingPtr ring;
    for (const auto& g : generators)
        if (!g.is_zero()) { ring = g.ring(); break; }
    if (!ring) {
        if (generators.empty()) throw PreconditionError("buchberger needs at least one generator");
        ring = generators.front().ring();
    }

    Engine eng(ord, ring, budget);
    std::vector<OPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        OPoly og = eng.to_opoly(g);
        if (!og.zero()) basis.push_back(std::move(og));
    }

    // deterministic start: sort generators by leading monomial, then length
    std::sort(basis.begin(), basis.end(), [&](const OPoly& a, const OPoly& b) {
        if (a.lt().mono != b.lt().mono) return ord.less(a.lt().mono, b.lt().mono);
        return a.terms.size() < b.terms.size();
    });

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = basis[i].lt().mono.lcm(basis[j].lt().mono);
        std::uint64_t d = l.total_degree();
        return Pair{i, j, std::move(l), d};
    };

    // normal strategy: smallest lcm first (by order), ties by indices
    auto pair_after = [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return ord.greater(a.lcm, b.lcm);
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    };

    std::vector<Pair> queue;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) queue.push_back(make_pair(i, j));
    std::sort(queue.begin(), queue.end(), pair_after); // back() = smallest

    std::set<std::pair<std::size_t, std::size_t>> done;
    std::uint64_t pairs_processed = 0;

    while (!queue.empty()) {
        Pair pr = queue.back();
        queue.pop_back();
        done.insert({pr.i, pr.j});

        if (++pairs_processed > budget.max_pairs)
            throw BudgetExceeded("groebner pair budget exceeded");

        const OPoly& f = basis[pr.i];
        const OPoly& g = basis[pr.j];

        // product criterion: coprime leading monomials
        if (f.lt().mono.coprime(g.lt().mono)) continue;

        // chain criterion: some k with lt(k) | lcm(i,j) and both pairs done
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].lt().mono.divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        OPoly s = eng.spoly(f, g);
        OPoly r = eng.reduce(std::move(s), basis);
        if (r.zero()) continue;

        basis.push_back(std::move(r));
        if (basis.size() > budget.max_basis)
            throw BudgetExceeded("groebner basis size budget exceeded");
        std::size_t newi = basis.size() - 1;
        for (std::size_t i = 0; i < newi; ++i) queue.push_back(make_pair(i, newi));
        std::sort(queue.begin(), queue.end(), pair_after);
    }

    // autoreduce: drop elements whose lt is divisible by another's lt,
    // then fully reduce each survivor modulo the others and make monic
    std::vector<OPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lt().mono.divides(basis[i].lt().mono)) {
                if (basis[j].lt().mono == basis[i].lt().mono && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    std::vector<OPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = eng.reduce(minimal[i], others);
        // make monic
        std::uint64_t inv = inv_mod(r.lt().coeff, ring->p());
        for (auto& t : r.terms) t.coeff = mul_mod(t.coeff, inv, ring->p());
        reduced[i] = std::move(r);
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.less(a.lt().mono, b.lt().mono); });

    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (const auto& r : reduced) out.push_back(eng.to_polynomial(r));
    return GroebnerBasis(ord, std::move(out));
}

bool GroebnerBasis::trivial() const {
    for (const auto& g : elements_)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GbBudget& budget) {
    if (f.is_zero()) return f;
    Engine eng(G.order(), f.ring(), budget);
    std::vector<OPoly> basis;
    basis.reserve(G.elements().size());
    for (const auto& g : G.elements()) basis.push_back(eng.to_opoly(g));
    return eng.to_polynomial(eng.reduce(eng.to_opoly(f), basis));
}

bool buchberger_criterion_holds(const GroebnerBasis& G, const GbBudget& budget) {
    const auto& els = G.elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            Polynomial s = s_polynomial(els[i], els[j], G.order());
            if (!normal_form(s, G, budget).is_zero()) return false;
        }
    return true;
}

// --------------------------------------------------------------------- Ideal

Ideal::Ideal(PolyRingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) {
        if (g.is_zero()) throw PreconditionError("ideal generators must be nonzero");
        if (!g.ring()->same(*ring_)) throw RingMismatch("generator from a different ring");
    }
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& ord,
                                                     const GbBudget& budget) const {
    const std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, ord, budget));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, fresh] = cache_->bases.emplace(key, gb);
    (void)fresh;
    return it->second;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const GbBudget& budget) const {
    return groebner(ring_->default_order(), budget);
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const GbBudget& budget) {
    if (f.is_zero()) return true;
    if (!f.ring()->same(*I.ring())) throw RingMismatch("membership across different rings");
    return normal_form(f, *I.groebner(budget), budget).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    for (const auto& g : J.generators())
        if (!ideal_membership(g, I, budget)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    return ideal_contains(I, J, budget) && ideal_contains(J, I, budget);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
    const MonomialOrder& ord = f.ring()->default_order();
    const std::uint64_t p = f.ring()->p();
    Polynomial rem = f;
    Polynomial quot = Polynomial::zero(f.ring());
    const Term& glt = g.leading_term(ord);
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading_term(ord);
        if (!glt.mono.divides(rlt.mono))
            throw VerificationError("polynomial division is not exact");
        Monomial m = rlt.mono / glt.mono;
        std::uint64_t c = mul_mod(rlt.coeff, inv_mod(glt.coeff, p), p);
        quot = quot + Polynomial::monomial(f.ring(), m, c);
        rem = rem - g.times_monomial(m, c);
    }
    return quot;
}

// Intersection via a fresh elimination variable t with a block order
// t >> rest on generators t*I and (1-t)*J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    const PolyRingPtr& R = I.ring();
    std::string tname = "t";
    while (R->var_index(tname)) tname += "_";
    PolyRingPtr Rt = R->with_elimination_variable(tname);

    auto lift = [&](const Polynomial& f) {
        std::vector<Term> ts;
        for (const auto& t : f.terms()) {
            std::vector<std::uint64_t> e{0};
            auto src = t.mono.exponents();
            e.insert(e.end(), src.begin(), src.end());
            ts.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        return Polynomial(Rt, std::move(ts));
    };

    Polynomial t = Polynomial::variable(Rt, 0);
    Polynomial one_minus_t = Polynomial::constant(Rt, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * lift(f));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift(g));

    std::vector<std::size_t> perm(Rt->nvars());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    MonomialOrder elim = MonomialOrder::elimination(OrderKind::GrevLex, perm, 1);

    GroebnerBasis gb = buchberger(gens, elim, budget);

    std::vector<Polynomial> result;
    for (const auto& f : gb.elements()) {
        bool uses_t = false;
        for (const auto& term : f.terms())
            if (term.mono[0] != 0) { uses_t = true; break; }
        if (uses_t) continue;
        std::vector<Term> ts;
        for (const auto& term : f.terms()) {
            auto src = term.mono.exponents();
            ts.push_back(Term{Monomial(std::vector<std::uint64_t>(src.begin() + 1, src.end())),
                              term.coeff});
        }
        result.emplace_back(R, std::move(ts));
    }
    if (result.empty())
        throw VerificationError("empty intersection basis (inputs were zero ideals?)");
    return Ideal(R, std::move(result));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const GbBudget& budget) {
    if (g.is_zero()) throw PreconditionError("colon by zero");
    if (!g.ring()->same(*I.ring())) throw RingMismatch("colon across different rings");
    Ideal gI(I.ring(), {g});
    Ideal inter = ideal_intersection(I, gI, budget);
    std::vector<Polynomial> gens;
    for (const auto& h : inter.generators()) gens.push_back(exact_divide(h, g));
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbBudget& budget) {
    if (J.generators().empty()) throw PreconditionError("colon by the zero ideal");
    bool first = true;
    Ideal acc = I;
    for (const auto& g : J.generators()) {
        Ideal q = ideal_quotient(I, g, budget);
        acc = first ? q : ideal_intersection(acc, q, budget);
        first = false;
    }
    return acc;
}

bool is_zero_dimensional(const Ideal& I, const GbBudget& budget) {
    auto gb = I.groebner(budget);
    const std::size_t n = I.ring()->nvars();
    std::vector<bool> covered(n, false);
    for (const auto& g : gb->elements()) {
        const Monomial& lt = g.leading_term(gb->order()).mono;
        std::size_t nz = 0, which = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lt[i] != 0) { ++nz; which = i; }
        if (nz == 1) covered[which] = true;
        if (nz == 0) return true; // 1 in ideal: empty variety
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

} // namespace fsing
