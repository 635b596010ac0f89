#include "fsing/frobenius_ideals.hpp"

namespace fsing {

Ideal bracket_power(const Ideal& I, unsigned e) {
    if (e == 0) throw PreconditionError("bracket power needs e >= 1");
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.frobenius(e));
    return Ideal(I.ring(), std::move(gens));
}

Ideal irrelevant_maximal_ideal(const PolyRingPtr& R) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < R->nvars(); ++i) vars.push_back(Polynomial::variable(R, i));
    return Ideal(R, std::move(vars));
}

bool fedder_is_fpure_principal(const Polynomial& f, const GbBudget& budget) {
    (void)budget;
    if (f.is_zero()) throw PreconditionError("fedder: zero polynomial");
    const std::uint64_t p = f.ring()->p();
    Polynomial fp1 = f.pow(p - 1);
    // f^{p-1} not in m^{[p]} iff some monomial has every exponent <= p-1
    for (const auto& t : fp1.terms()) {
        bool small = true;
        for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
            if (t.mono[i] >= p) { small = false; break; }
        if (small) return true;
    }
    return false;
}

bool fedder_is_fpure(const Ideal& I, const GbBudget& budget) {
    const PolyRingPtr& R = I.ring();
    // proper ideal required
    if (ideal_membership(Polynomial::constant(R, 1), I, budget))
        throw PreconditionError("fedder: ideal is the unit ideal");
    Ideal colon = ideal_quotient(bracket_power(I, 1), I, budget);
    Ideal mp = bracket_power(irrelevant_maximal_ideal(R), 1);
    auto gb = mp.groebner(budget);
    for (const auto& h : colon.generators())
        if (!normal_form(h, *gb, budget).is_zero()) return true;
    return false;
}

Polynomial ci_colon_generator(const std::vector<Polynomial>& seq, unsigned e,
                              const GbBudget& budget) {
    if (seq.empty()) throw PreconditionError("empty sequence");
    const PolyRingPtr& R = seq.front().ring();
    std::uint64_t q = checked_prime_power(R->p(), e);

    Polynomial prod = Polynomial::constant(R, 1);
    for (const auto& x : seq) prod = prod * x;
    Polynomial y = prod.pow(q - 1);

    Ideal I(R, seq);
    Ideal Iq = bracket_power(I, e);
    Ideal colon = ideal_quotient(Iq, I, budget);

    std::vector<Polynomial> claimed_gens = Iq.generators();
    claimed_gens.push_back(y);
    Ideal claimed(R, std::move(claimed_gens));
    if (!ideal_equal(claimed, colon, budget))
        throw VerificationError(
            "colon identity (I^[q]:I) = (x_1...x_c)^{q-1} + I^[q] failed; "
            "the sequence is not regular");
    return y;
}

EStructureModule e_structure_module(const Ideal& I, unsigned e, const GbBudget& budget) {
    const PolyRingPtr& R = I.ring();
    if (ideal_membership(Polynomial::constant(R, 1), I, budget))
        throw PreconditionError("e-structure module needs a proper ideal");
    Ideal Iq = bracket_power(I, e);
    Ideal colon = ideal_quotient(Iq, I, budget);
    auto gb = Iq.groebner(budget);

    std::vector<Polynomial> cosets;
    for (const auto& g : colon.generators()) {
        Polynomial r = normal_form(g, *gb, budget);
        if (!r.is_zero()) cosets.push_back(std::move(r));
    }

    if (I.generators().size() == 1) {
        // Gorenstein hypersurface: the module is cyclic, generated by f^{q-1}
        std::uint64_t q = checked_prime_power(R->p(), e);
        Polynomial f = I.generators()[0];
        std::vector<Polynomial> cyc = Iq.generators();
        cyc.push_back(f.pow(q - 1));
        if (!ideal_equal(Ideal(R, std::move(cyc)), colon, budget))
            throw VerificationError("principal e-structure module is not cyclic on f^{q-1}");
    }

    return EStructureModule{I, e, std::move(colon), std::move(cosets)};
}

bool is_rf_submodule(const Ideal& tau, const Ideal& I, unsigned e, const GbBudget& budget) {
    if (!ideal_contains(tau, I, budget))
        throw PreconditionError("is_rf_submodule: I is not contained in tau");
    Ideal colon = ideal_quotient(bracket_power(I, e), I, budget);
    Ideal tau_q = bracket_power(tau, e);
    for (const auto& c : colon.generators())
        for (const auto& t : tau.generators())
            if (!ideal_membership(c * t, tau_q, budget)) return false;
    return true;
}

} // namespace fsing
