#ifndef FSING_FROBENIUS_IDEALS_HPP
#define FSING_FROBENIUS_IDEALS_HPP

#include "fsing/groebner.hpp"

namespace fsing {

/// I^{[p^e]}: the ideal generated by the p^e-th powers of the generators.
/// Independent of the generating set up to ideal equality.
Ideal bracket_power(const Ideal& I, unsigned e);

/// The irrelevant maximal ideal (all variables) of the ring.
Ideal irrelevant_maximal_ideal(const PolyRingPtr& R);

/// Fedder's F-purity test for R/I at the irrelevant maximal ideal:
/// (I^{[p]} : I) not contained in m^{[p]}.  For principal I = (f) the
/// fast path tests whether f^{p-1} has a monomial with every exponent
/// <= p-1; both paths agree.
bool fedder_is_fpure(const Ideal& I, const GbBudget& budget = {});
bool fedder_is_fpure_principal(const Polynomial& f, const GbBudget& budget = {});

/// For I = (x_1..x_c) generated by a regular sequence,
/// (I^{[q]} : I) = (x_1...x_c)^{q-1} + I^{[q]} with q = p^e.  Returns the
/// generator and verifies the identity by Groebner; a mismatch means the
/// input sequence was not regular and raises VerificationError.
Polynomial ci_colon_generator(const std::vector<Polynomial>& seq, unsigned e,
                              const GbBudget& budget = {});

/// The module of Frobenius structures on the injective hull E_{R/I},
/// presented as (I^{[q]} : I) with generators reduced mod I^{[q]}.
struct EStructureModule {
    Ideal ideal;
    unsigned e;
    Ideal colon;                            // (I^{[q]} : I)
    std::vector<Polynomial> coset_generators; // colon generators mod I^{[q]}, nonzero
};

EStructureModule e_structure_module(const Ideal& I, unsigned e, const GbBudget& budget = {});

/// Colon criterion for tau/I to cut out an R[F^e]-submodule of H^d_m(R/I):
/// (I^{[q]} : I) * tau is contained in tau^{[q]}.  Pre: I included in tau.
bool is_rf_submodule(const Ideal& tau, const Ideal& I, unsigned e, const GbBudget& budget = {});

} // namespace fsing

#endif
