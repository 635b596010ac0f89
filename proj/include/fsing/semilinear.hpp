#ifndef FSING_SEMILINEAR_HPP
#define FSING_SEMILINEAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "fsing/upoly.hpp"

namespace fsing {

// Element operations shared by the two coefficient domains (finite
// fields and univariate twisted polynomial rings).
inline Fq elem_zero_like(const Fq& a) { return Fq::zero(a.context()); }
inline Fq elem_one_like(const Fq& a) { return Fq::one(a.context()); }
inline Fq elem_frob(const Fq& a, unsigned e) { return a.frobenius(e); }
inline Fq elem_div_exact(const Fq& a, const Fq& b) { return a * b.inverse(); }

inline UPoly elem_zero_like(const UPoly& a) { return UPoly::zero(a.context()); }
inline UPoly elem_one_like(const UPoly& a) { return UPoly::constant(a.context(), 1); }
inline UPoly elem_frob(const UPoly& a, unsigned e) { return a.frobenius(e); }
inline UPoly elem_div_exact(const UPoly& a, const UPoly& b) { return a.divide_exact(b); }

/// Dense square matrix over a coefficient domain element type.
template <class E>
class SLMat {
public:
    SLMat(std::size_t n, const E& fill) : n_(n), a_(n * n, fill) {}

    static SLMat identity(std::size_t n, const E& proto) {
        SLMat m(n, elem_zero_like(proto));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = elem_one_like(proto);
        return m;
    }

    std::size_t size() const { return n_; }
    E& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const E& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    SLMat operator*(const SLMat& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix sizes differ");
        SLMat r(n_, elem_zero_like(a_[0]));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                E acc = elem_zero_like(a_[0]);
                for (std::size_t k = 0; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    SLMat operator-() const {
        SLMat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    /// Entrywise p^e-th powers (the matrix M^{[p^e]}).
    SLMat frobenius(unsigned e) const {
        SLMat r = *this;
        for (auto& x : r.a_) x = elem_frob(x, e);
        return r;
    }

    std::vector<E> apply(const std::vector<E>& v) const {
        if (v.size() != n_) throw DimensionMismatch("vector length differs from matrix size");
        std::vector<E> r;
        r.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            E acc = elem_zero_like(a_[0]);
            for (std::size_t j = 0; j < n_; ++j) acc = acc + at(i, j) * v[j];
            r.push_back(acc);
        }
        return r;
    }

    E det() const { return det_minor(all_indices(), all_indices()); }

    /// Adjugate (transpose cofactor matrix): adj(A) * A = det(A) * I.
    SLMat adjugate() const {
        SLMat r(n_, elem_zero_like(a_[0]));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                auto rows = all_indices(), cols = all_indices();
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(j));
                cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
                E c = det_minor(rows, cols);
                if ((i + j) % 2 == 1) c = -c;
                r.at(i, j) = c;
            }
        return r;
    }

    friend bool operator==(const SLMat& a, const SLMat& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }

private:
    std::vector<std::size_t> all_indices() const {
        std::vector<std::size_t> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    E det_minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        if (rows.empty()) return elem_one_like(a_[0]);
        if (rows.size() == 1) return at(rows[0], cols[0]);
        E acc = elem_zero_like(a_[0]);
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const E& pivot = at(rows[0], cols[k]);
            if (pivot.is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            for (std::size_t m = 0; m < cols.size(); ++m)
                if (m != k) sub_cols.push_back(cols[m]);
            E term = pivot * det_minor(sub_rows, sub_cols);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    std::size_t n_;
    std::vector<E> a_;
};

/// Frobenius structure on a free module in a fixed basis: v -> A v^{[q]}
/// with q = p^e.
template <class E>
struct SemilinearMap {
    SLMat<E> A;
    unsigned e; // twist power, q = p^e
    std::string basis_tag = "std";

    /// A v^{[q]} exactly.
    std::vector<E> apply(const std::vector<E>& v) const {
        std::vector<E> vq;
        vq.reserve(v.size());
        for (const auto& x : v) vq.push_back(elem_frob(x, e));
        return A.apply(vq);
    }
};

/// A_r = A A^{[q]} ... A^{[q^{r-1}]}, the matrix for the r-th power of
/// the Frobenius action; satisfies A_r = A_{r-1} A^{[q^{r-1}]}.
template <class E>
SemilinearMap<E> iterate_map(const SemilinearMap<E>& F, unsigned r) {
    if (r == 0) throw PreconditionError("iterate needs r >= 1");
    SLMat<E> acc = F.A;
    for (unsigned i = 1; i < r; ++i) acc = acc * F.A.frobenius(F.e * i);
    return SemilinearMap<E>{std::move(acc), F.e * r, F.basis_tag};
}

/// Representing matrix after the base change by C: B = C^{-1} A C^{[q]}.
/// Over polynomial domains the entries must remain polynomial; a
/// non-exact division raises VerificationError, a singular C raises
/// SingularMatrix.
template <class E>
SemilinearMap<E> base_change(const SemilinearMap<E>& F, const SLMat<E>& C,
                             const std::string& new_tag = "changed") {
    E d = C.det();
    if (d.is_zero()) throw SingularMatrix("base change by a singular matrix");
    SLMat<E> num = C.adjugate() * F.A * C.frobenius(F.e);
    SLMat<E> out(C.size(), elem_zero_like(d));
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j)
            out.at(i, j) = elem_div_exact(num.at(i, j), d);
    return SemilinearMap<E>{std::move(out), F.e, new_tag};
}

using FqMat = SLMat<Fq>;
using FqSemilinearMap = SemilinearMap<Fq>;
using UPolyMat = SLMat<UPoly>;
using UPolySemilinearMap = SemilinearMap<UPoly>;

// ------------------------------------------------------- Fq linear algebra

/// Rank of a matrix with rows `rows` over F_{p^m} (destructive on a copy).
std::size_t fq_rank(std::vector<std::vector<Fq>> rows);
/// Solve M x = b over the coefficient field; nullopt if inconsistent.
std::optional<std::vector<Fq>> fq_solve(const FqMat& M, const std::vector<Fq>& b);
/// Null-space basis of the matrix with the given rows, in reduced form.
std::vector<std::vector<Fq>> fq_kernel(std::vector<std::vector<Fq>> rows,
                                       const FqContextPtr& ctx);
/// Characteristic polynomial det(t I - A).
UPoly char_poly(const FqMat& A);

// ---------------------------------------------------------- fixed vectors

struct FixedVectorBudget {
    std::uint64_t exhaustive_limit = 1'000'000; // max |K|^n for the full scan
    std::uint64_t scan_limit = 1'000'000;       // max |K| for the root scan
};

/// All v with F(v) = v.  Exhaustive scan when |K|^n is within budget;
/// otherwise a cyclic vector reduces the problem to the fixed-point
/// equation t = t^{q^{r+1}} b_0^{q^r} + ... + t^q b_r whose roots are
/// scanned over K.  Deterministic output order.
std::vector<std::vector<Fq>> fixed_vectors(const FqSemilinearMap& F,
                                           const FixedVectorBudget& budget = {});

struct FFixedBasisResult {
    bool found = false;
    unsigned extension_degree = 0; // k: basis lives over F_{p^{m k}}
    FqContextPtr field;            // the extension field (when found)
    std::vector<std::vector<Fq>> basis;
};

/// Searches F_{p^{m k}}, k <= max_ext, for a basis of F-fixed vectors.
/// Requires det A != 0 (SingularMatrix otherwise).  Exhausting the bound
/// is a negative result, not an error.
FFixedBasisResult f_fixed_basis(const FqSemilinearMap& F, unsigned max_ext,
                                const FixedVectorBudget& budget = {});

// -------------------------------------------------------- stable subspaces

struct SubspaceReport {
    unsigned power = 1;            // r': the map studied is F^{e r'}
    bool simple = true;            // no proper nonzero stable subspace
    std::uint64_t stable_lines = 0;
    std::uint64_t stable_hyperplanes = 0;
    std::vector<std::vector<Fq>> stable_line_reps; // first nonzero coord = 1
};

/// For each r' <= r, enumerates all subspaces of K^n stable under the
/// r'-fold iterate; refuses (BudgetExceeded) when the subspace count
/// exceeds the enumeration budget.
std::vector<SubspaceReport> stable_subspaces(const FqSemilinearMap& F, unsigned r,
                                             std::uint64_t subspace_budget = 1'000'000);

// ---------------------------------------------------- counterexample search

/// One term c(u) * alpha^s of a twisted algebraic equation.
struct EquationTerm {
    UPoly coeff;
    std::uint64_t alpha_power;
};

/// All alpha in base[u] with deg <= deg_max satisfying sum c_i alpha^{s_i} = 0.
/// Exhaustive within the bound: candidate degrees are pruned by the
/// top-degree cancellation argument, then scanned in full.
std::vector<UPoly> twisted_root_search(const std::vector<EquationTerm>& equation,
                                       std::uint64_t deg_max,
                                       std::uint64_t candidate_budget = 10'000'000);

struct CounterexampleCertificate {
    std::uint64_t q = 0;
    unsigned t_max = 0;
    std::uint64_t deg_max = 0;
    bool degree_obstruction_holds = false; // (q+1)n = 1+n insoluble for n >= 1
    std::uint64_t candidates_scanned = 0;
    // (depth t, root) pairs; the paper proves none exist for its equation
    std::vector<std::pair<unsigned, UPoly>> roots;
    bool no_root_found() const { return roots.empty(); }
};

/// Bounded certificate that alpha^{q+1} + x alpha - 1 = 0 has no solution
/// with alpha in F_p[x^{1/p^t}], t <= t_max, u-degree <= deg_max.
CounterexampleCertificate counterexample_search(std::uint64_t p, unsigned e, unsigned t_max,
                                                std::uint64_t deg_max,
                                                std::uint64_t candidate_budget = 10'000'000);

} // namespace fsing

#endif
