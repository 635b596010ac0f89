#ifndef FSING_LOCAL_COHOMOLOGY_HPP
#define FSING_LOCAL_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fsing/frobenius_ideals.hpp"
#include "fsing/semilinear.hpp"

namespace fsing {

/// Graded hypersurface A = k[y_1..y_n]/(f) with f homogeneous of degree d
/// and monic (up to a unit) in the last variable.  Top local cohomology
/// H^{n-1}_m(A) is computed via the Cech complex on y_1..y_{n-1}.
class GradedHypersurface {
public:
    GradedHypersurface(PolyRingPtr ring, Polynomial f, const GbBudget& budget = {});

    const PolyRingPtr& ring() const { return ring_; }
    /// Normalized to have leading y_n-coefficient 1.
    const Polynomial& f() const { return f_; }
    std::uint64_t degree() const { return d_; }
    std::size_t nvars() const { return ring_->nvars(); }
    /// a-invariant d - n of the hypersurface ring.
    std::int64_t a_invariant() const;
    /// True iff (f, jacobian(f)) is zero-dimensional (isolated singularity).
    bool jacobian_zero_dimensional() const { return jac_zero_dim_; }

    /// Remainder of g modulo f as a polynomial in y_n (y_n-degree < d).
    Polynomial reduce_mod_f(Polynomial g) const;

private:
    PolyRingPtr ring_;
    Polynomial f_;
    std::uint64_t d_;
    bool jac_zero_dim_;
};

/// Class [num / (y_1^{i_1} ... y_{n-1}^{i_{n-1}})] in H^{n-1}_m(A).
/// Canonical form: numerator reduced mod f in y_n; numerator terms with
/// some y_j-exponent (j < n) at or above i_j are Cech-trivial and
/// deleted; common y_j factors are cancelled so min_j exponent is 0 or
/// the denominator exponent is 1.  The zero class has numerator 0 and
/// all denominator exponents 1.
struct CechClass {
    Polynomial numerator;
    std::vector<std::uint64_t> denominator_exponents; // length n-1, all >= 1

    bool is_zero() const { return numerator.is_zero(); }
    /// Graded degree deg(num) - sum(i_j); requires a homogeneous numerator.
    std::int64_t graded_degree() const;
    /// Text form "num / y1^i1*...*y_{n-1}^i_{n-1}".
    std::string to_string() const;
};

/// Canonicalize a fraction (reduce mod f, prune trivial terms, cancel).
CechClass make_cech_class(const GradedHypersurface& H, Polynomial numerator,
                          std::vector<std::uint64_t> denominator_exponents);

/// Basis e_s = y_n^{d-1}/(y_1...y_{n-1}) * s^{-1} of the degree-zero part,
/// s over monomials of degree d-n, in descending grevlex order on s;
/// empty when d < n.
std::vector<CechClass> degree_zero_basis(const GradedHypersurface& H);

/// Frobenius: numerator^p over denominator exponents * p, canonicalized.
CechClass frobenius_on_class(const GradedHypersurface& H, const CechClass& c);

/// Matrix of the Frobenius action on the degree-zero part in the
/// degree_zero_basis (F_p-linear since F_p is Frobenius-fixed).
FqMat frobenius_matrix_degree_zero(const GradedHypersurface& H);

/// Nilpotency analysis of the Frobenius on the degree-zero part of
/// H^{n-1}_m(A), which under the Hara hypothesis is the F-interesting
/// part of the tight closure of zero.
struct StarZeroAnalysis {
    std::size_t dimension = 0;
    bool hypothesis_isolated_singularity = false;
    bool nilpotent = false;
    unsigned nilpotency_order = 0;   // least k with M^k = 0 (when nilpotent)
    bool injective = false;          // full rank
    std::size_t f_reduced_dimension = 0; // rank of M^dimension
};

StarZeroAnalysis star_zero_analysis(const GradedHypersurface& H);

enum class Verdict { Simple, NotSimple, Inconclusive };
std::string to_string(Verdict v);

struct SocleLine {
    CechClass cls;
    std::uint64_t eigencoefficient = 0; // in F_p, nonzero
    std::vector<Polynomial> annihilator; // generators of Ann_R
    bool is_parameter_ideal = false;     // verified tau_s = (y_1^{i_1},...,y_n^{i_n})
    std::vector<std::uint64_t> parameter_exponents; // when is_parameter_ideal
};

/// D_R-simplicity verdict for H^1_{(f)}(R) per the tight-closure
/// criterion: SIMPLE iff the degree-zero Frobenius is nilpotent, under
/// the isolated-singularity and large-p hypotheses (both reported).
struct SimplicityReport {
    std::uint64_t p = 0;
    std::string f_text;
    std::uint64_t degree = 0;
    std::int64_t a_invariant = 0;
    std::size_t degree_zero_dimension = 0;
    std::vector<std::vector<std::uint64_t>> frobenius_matrix; // row-major residues
    StarZeroAnalysis nilpotency;
    Verdict verdict = Verdict::Inconclusive;
    bool hypothesis_isolated_singularity = false;
    bool hara_large_p_assumed = true; // Hara's theorem needs p >> 0; flagged, never decided
    std::vector<SocleLine> socle_lines;
};

SimplicityReport d_simplicity_verdict(const GradedHypersurface& H,
                                      const GbBudget& budget = {});

/// F-stable socle lines with eigencoefficients and annihilators.  For a
/// diagonal Frobenius matrix (Fermat type) these are the basis classes
/// with nonzero diagonal entry, with the annihilator verified equal to
/// the parameter ideal (y_1^{i_1},...,y_n^{i_n}); otherwise the
/// eigenlines of the matrix over F_p.
std::vector<SocleLine> socle_line_data(const GradedHypersurface& H,
                                       const GbBudget& budget = {});

/// Dual commuting-square witness: f^{p-1} = c_s (y_1^{i_1}...y_n^{i_n})^{p-1}
/// modulo tau_s^{[p]}, checked by Groebner normal form.
bool dual_square_check(const GradedHypersurface& H, const SocleLine& line,
                       const GbBudget& budget = {});

} // namespace fsing

#endif
