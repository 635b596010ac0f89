#ifndef FSING_GROEBNER_HPP
#define FSING_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fsing/polynomial.hpp"

namespace fsing {

/// Resource caps for the Buchberger engine.  Exceeding a cap raises
/// BudgetExceeded; the engine never returns a possibly wrong basis.
struct GbBudget {
    std::uint64_t max_pairs = 1'000'000;
    std::size_t max_basis = 10'000;
    std::uint64_t max_reduction_steps = 200'000'000;
};

/// Reduced Groebner basis: monic elements, pairwise irreducible leading
/// terms, sorted ascending by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
        : order_(std::move(order)), elements_(std::move(elements)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool trivial() const; // contains 1

private:
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Finitely generated ideal with a per-order cache of reduced bases.
class Ideal {
public:
    Ideal(PolyRingPtr ring, std::vector<Polynomial> generators);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced basis w.r.t. ord, computed once per order and cached.
    std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord,
                                                  const GbBudget& budget = {}) const;
    std::shared_ptr<const GroebnerBasis> groebner(const GbBudget& budget = {}) const;

private:
    PolyRingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
    };
    std::shared_ptr<Cache> cache_;
};

/// Buchberger with the normal pair-selection strategy plus the product
/// and chain criteria; deterministic output.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& ord,
                         const GbBudget& budget = {});

/// Unique remainder of f modulo G (no term divisible by any leading term).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const GbBudget& budget = {});

/// S-polynomial w.r.t. the basis order (exposed for criterion checks).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Buchberger's criterion: every S-polynomial of G reduces to zero.
bool buchberger_criterion_holds(const GroebnerBasis& G, const GbBudget& budget = {});

bool ideal_membership(const Polynomial& f, const Ideal& I, const GbBudget& budget = {});
bool ideal_contains(const Ideal& I, const Ideal& J, const GbBudget& budget = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GbBudget& budget = {});

/// I : g = {h : h g in I}, via the elimination-variable intersection
/// I cap (g) followed by exact division by g.
Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const GbBudget& budget = {});
/// I : J as the intersection of the I : g over generators g of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GbBudget& budget = {});
Ideal ideal_intersection(const Ideal& I, const Ideal& J, const GbBudget& budget = {});

/// True iff the leading-term ideal contains a pure power of every variable.
bool is_zero_dimensional(const Ideal& I, const GbBudget& budget = {});

/// Exact multivariate division f / g; throws VerificationError when g
/// does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace fsing

#endif
