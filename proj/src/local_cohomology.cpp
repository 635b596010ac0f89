#include "fsing/local_cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fsing {

// ---------------------------------------------------------- hypersurface

GradedHypersurface::GradedHypersurface(PolyRingPtr ring, Polynomial f, const GbBudget& budget)
    : ring_(std::move(ring)), f_(std::move(f)) {
    if (ring_->nvars() < 2)
        throw PreconditionError("hypersurface needs at least two variables");
    if (!ring_->standard_grading())
        throw PreconditionError("the Cech layer requires the standard grading");
    if (f_.is_zero()) throw PreconditionError("hypersurface equation is zero");
    if (!f_.ring()->same(*ring_)) throw RingMismatch("f from a different ring");
    if (!f_.is_homogeneous()) throw PreconditionError("hypersurface equation must be homogeneous");
    d_ = f_.weighted_degree();

    const std::size_t n = ring_->nvars();
    std::vector<std::uint64_t> pure(n, 0);
    pure[n - 1] = d_;
    std::uint64_t lead = f_.coefficient_of(Monomial(pure));
    if (lead == 0)
        throw PreconditionError(
            "f is not monic in the last variable (no unit coefficient on " +
            ring_->variables().back() + "^" + std::to_string(d_) +
            "); permute variables so the last one carries a pure power");
    f_ = f_.scale(inv_mod(lead, ring_->p()));

    std::vector<Polynomial> jac{f_};
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial di = f_.derivative(i);
        if (!di.is_zero()) jac.push_back(std::move(di));
    }
    jac_zero_dim_ = is_zero_dimensional(Ideal(ring_, std::move(jac)), budget);
}

std::int64_t GradedHypersurface::a_invariant() const {
    return static_cast<std::int64_t>(d_) - static_cast<std::int64_t>(ring_->nvars());
}

Polynomial GradedHypersurface::reduce_mod_f(Polynomial g) const {
    const std::size_t yn = ring_->nvars() - 1;
    while (true) {
        // highest y_n-exponent term at or above d
        const Term* worst = nullptr;
        for (const auto& t : g.terms())
            if (t.mono[yn] >= d_ && (!worst || t.mono[yn] > worst->mono[yn])) worst = &t;
        if (!worst) return g;
        auto exps = worst->mono.exponents();
        exps[yn] -= d_;
        g = g - f_.times_monomial(Monomial(std::move(exps)), worst->coeff);
    }
}

// ------------------------------------------------------------- Cech class

std::int64_t CechClass::graded_degree() const {
    if (numerator.is_zero()) throw ZeroPolynomialDegree("the zero class has no degree");
    std::int64_t deg = static_cast<std::int64_t>(numerator.weighted_degree());
    for (auto i : denominator_exponents) deg -= static_cast<std::int64_t>(i);
    return deg;
}

std::string CechClass::to_string() const {
    if (numerator.is_zero()) return "0";
    const auto& vars = numerator.ring()->variables();
    std::string den;
    for (std::size_t j = 0; j < denominator_exponents.size(); ++j) {
        if (!den.empty()) den += "*";
        den += vars[j];
        if (denominator_exponents[j] > 1) den += "^" + std::to_string(denominator_exponents[j]);
    }
    std::string num = numerator.to_string();
    if (numerator.term_count() > 1) num = "(" + num + ")";
    return num + " / " + den;
}

CechClass make_cech_class(const GradedHypersurface& H, Polynomial numerator,
                          std::vector<std::uint64_t> denominator_exponents) {
    const std::size_t n = H.nvars();
    if (denominator_exponents.size() != n - 1)
        throw PreconditionError("denominator exponent count must be nvars-1");
    for (auto i : denominator_exponents)
        if (i == 0) throw PreconditionError("denominator exponents must be >= 1");

    numerator = H.reduce_mod_f(std::move(numerator));

    // Cech-trivial terms: those reaching the denominator exponent in some
    // Cech variable lie in (y_1^{i_1},...,y_{n-1}^{i_{n-1}}) A and vanish
    std::vector<Term> kept;
    for (const auto& t : numerator.terms()) {
        bool trivial = false;
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (t.mono[j] >= denominator_exponents[j]) { trivial = true; break; }
        if (!trivial) kept.push_back(t);
    }
    if (kept.empty())
        return CechClass{Polynomial::zero(H.ring()),
                         std::vector<std::uint64_t>(n - 1, 1)};

    // cancel common y_j factors against the denominator
    std::vector<std::uint64_t> shift(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::uint64_t m = UINT64_MAX;
        for (const auto& t : kept) m = std::min(m, t.mono[j]);
        shift[j] = m;
    }
    bool any = std::any_of(shift.begin(), shift.end(), [](std::uint64_t s) { return s != 0; });
    if (any) {
        for (auto& t : kept) {
            auto e = t.mono.exponents();
            for (std::size_t j = 0; j + 1 < n; ++j) e[j] -= shift[j];
            t.mono = Monomial(std::move(e));
        }
        for (std::size_t j = 0; j + 1 < n; ++j) denominator_exponents[j] -= shift[j];
    }
    return CechClass{Polynomial(H.ring(), std::move(kept)), std::move(denominator_exponents)};
}

std::vector<CechClass> degree_zero_basis(const GradedHypersurface& H) {
    const std::size_t n = H.nvars();
    const std::uint64_t d = H.degree();
    if (d < n) return {};
    const std::uint64_t target = d - n;

    // all monomials s of degree d-n, descending grevlex
    std::vector<Monomial> ss;
    std::vector<std::uint64_t> e(n, 0);
    // odometer over exponent vectors with sum == target
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == n) {
            e[i] = left;
            ss.push_back(Monomial(e));
            return;
        }
        for (std::uint64_t v = 0; v <= left; ++v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, target);
    MonomialOrder ord = MonomialOrder::grevlex(n);
    std::sort(ss.begin(), ss.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.greater(a, b);
    });

    std::vector<CechClass> basis;
    basis.reserve(ss.size());
    for (const auto& s : ss) {
        std::vector<std::uint64_t> iexp(n - 1);
        for (std::size_t j = 0; j + 1 < n; ++j) iexp[j] = s[j] + 1;
        std::uint64_t i_n = s[n - 1] + 1;
        std::vector<std::uint64_t> nexp(n, 0);
        nexp[n - 1] = d - i_n;
        basis.push_back(CechClass{Polynomial::monomial(H.ring(), Monomial(std::move(nexp))),
                                  std::move(iexp)});
    }
    return basis;
}

CechClass frobenius_on_class(const GradedHypersurface& H, const CechClass& c) {
    if (c.is_zero()) return c;
    const std::uint64_t p = H.ring()->p();
    std::vector<std::uint64_t> iexp = c.denominator_exponents;
    for (auto& i : iexp) {
        if (i > UINT64_MAX / p) throw ExponentOverflow("denominator exponent overflow");
        i *= p;
    }
    return make_cech_class(H, c.numerator.frobenius(1), std::move(iexp));
}

// ------------------------------------------------------ degree-zero matrix

FqMat frobenius_matrix_degree_zero(const GradedHypersurface& H) {
    auto basis = degree_zero_basis(H);
    if (basis.empty())
        throw PreconditionError("degree-zero part is empty (a-invariant < 0)");
    const std::size_t n = H.nvars();
    auto Fp = FqContext::make(H.ring()->p(), 1);

    // index basis classes by (denominator deficit vector, y_n exponent)
    std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, std::size_t> index;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const auto& b = basis[t];
        std::pair<std::vector<std::uint64_t>, std::uint64_t> key{
            b.denominator_exponents, b.numerator.terms()[0].mono[n - 1]};
        index.emplace(std::move(key), t);
    }

    FqMat M(basis.size(), Fq::zero(Fp));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        CechClass img = frobenius_on_class(H, basis[col]);
        if (img.is_zero()) continue;
        for (const auto& t : img.numerator.terms()) {
            std::vector<std::uint64_t> deficit(n - 1);
            for (std::size_t j = 0; j + 1 < n; ++j)
                deficit[j] = img.denominator_exponents[j] - t.mono[j];
            auto it = index.find({deficit, t.mono[n - 1]});
            if (it == index.end())
                throw VerificationError(
                    "degree-zero image does not decompose in the basis (internal)");
            M.at(it->second, col) = Fq(Fp, t.coeff);
        }
    }
    return M;
}

StarZeroAnalysis star_zero_analysis(const GradedHypersurface& H) {
    StarZeroAnalysis res;
    res.hypothesis_isolated_singularity = H.jacobian_zero_dimensional();
    auto basis = degree_zero_basis(H);
    res.dimension = basis.size();
    if (basis.empty()) {
        res.nilpotent = true;
        res.nilpotency_order = 0;
        res.injective = false;
        res.f_reduced_dimension = 0;
        return res;
    }
    FqMat M = frobenius_matrix_degree_zero(H);
    auto Fp = FqContext::make(H.ring()->p(), 1);
    auto rows_of = [&](const FqMat& A) {
        std::vector<std::vector<Fq>> rows;
        for (std::size_t i = 0; i < A.size(); ++i) {
            std::vector<Fq> row;
            for (std::size_t j = 0; j < A.size(); ++j) row.push_back(A.at(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    auto is_zero_mat = [&](const FqMat& A) {
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j)
                if (!A.at(i, j).is_zero()) return false;
        return true;
    };

    res.injective = fq_rank(rows_of(M)) == basis.size();
    FqMat P = M;
    for (unsigned k = 1; k <= basis.size(); ++k) {
        if (is_zero_mat(P)) {
            res.nilpotent = true;
            res.nilpotency_order = k;
            break;
        }
        if (k < basis.size()) P = P * M;
    }
    // rank of M^dim: F-reduced dimension (the F-stable part F eventually
    // maps onto)
    FqMat Q = M;
    for (std::size_t k = 1; k < basis.size(); ++k) Q = Q * M;
    res.f_reduced_dimension = res.nilpotent ? 0 : fq_rank(rows_of(Q));
    return res;
}

// ------------------------------------------------------------ socle lines

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Simple: return "SIMPLE";
        case Verdict::NotSimple: return "NOT_SIMPLE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::vector<SocleLine> socle_line_data(const GradedHypersurface& H, const GbBudget& budget) {
    auto basis = degree_zero_basis(H);
    if (basis.empty()) return {};
    FqMat M = frobenius_matrix_degree_zero(H);
    const std::size_t n = H.nvars();
    const std::size_t dim = basis.size();
    const PolyRingPtr& R = H.ring();
    const std::uint64_t p = R->p();

    bool diagonal = true;
    for (std::size_t i = 0; i < dim && diagonal; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i != j && !M.at(i, j).is_zero()) { diagonal = false; break; }

    std::vector<SocleLine> lines;
    Ideal principal(R, {H.f()});

    auto annihilator_of = [&](const CechClass& c) {
        std::vector<Polynomial> gens;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            std::vector<std::uint64_t> e(n, 0);
            e[j] = c.denominator_exponents[j];
            gens.push_back(Polynomial::monomial(R, Monomial(std::move(e))));
        }
        gens.push_back(H.f());
        return ideal_quotient(Ideal(R, std::move(gens)), c.numerator, budget);
    };

    if (diagonal) {
        for (std::size_t s = 0; s < dim; ++s) {
            if (M.at(s, s).is_zero()) continue;
            SocleLine line;
            line.cls = basis[s];
            line.eigencoefficient = M.at(s, s).as_prime_residue();

            Ideal ann = annihilator_of(basis[s]);
            // expected parameter ideal tau_s = (y_1^{i_1},...,y_n^{i_n})
            std::vector<std::uint64_t> exps(n);
            for (std::size_t j = 0; j + 1 < n; ++j) exps[j] = basis[s].denominator_exponents[j];
            exps[n - 1] = H.degree() - basis[s].numerator.terms()[0].mono[n - 1];
            std::vector<Polynomial> tau_gens;
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::uint64_t> e(n, 0);
                e[j] = exps[j];
                tau_gens.push_back(Polynomial::monomial(R, Monomial(std::move(e))));
            }
            Ideal tau(R, tau_gens);
            line.is_parameter_ideal = ideal_equal(ann, tau, budget);
            if (line.is_parameter_ideal) {
                line.parameter_exponents = exps;
                line.annihilator = tau.generators();
                if (!is_rf_submodule(tau, principal, 1, budget))
                    throw VerificationError(
                        "socle annihilator fails the R[F]-submodule colon criterion");
            } else {
                line.annihilator = ann.generators();
            }
            lines.push_back(std::move(line));
        }
        return lines;
    }

    // non-diagonal: F-stable lines among eigenvectors of M over F_p
    auto Fp = FqContext::make(p, 1);
    for (std::uint64_t lam = 1; lam < p; ++lam) {
        std::vector<std::vector<Fq>> rows;
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Fq> row;
            for (std::size_t j = 0; j < dim; ++j) {
                Fq x = M.at(i, j);
                if (i == j) x = x - Fq(Fp, lam);
                row.push_back(x);
            }
            rows.push_back(std::move(row));
        }
        for (auto& v : fq_kernel(std::move(rows), Fp)) {
            // normalize: first nonzero coordinate 1
            std::size_t lead = 0;
            while (lead < dim && v[lead].is_zero()) ++lead;
            if (lead == dim) continue;
            Fq inv = v[lead].inverse();
            for (auto& x : v) x = x * inv;

            // combined class over a common denominator
            std::vector<std::uint64_t> common(n - 1, 1);
            for (std::size_t s = 0; s < dim; ++s)
                if (!v[s].is_zero())
                    for (std::size_t j = 0; j + 1 < n; ++j)
                        common[j] = std::max(common[j], basis[s].denominator_exponents[j]);
            Polynomial num = Polynomial::zero(R);
            for (std::size_t s = 0; s < dim; ++s) {
                if (v[s].is_zero()) continue;
                std::vector<std::uint64_t> lift(n, 0);
                for (std::size_t j = 0; j + 1 < n; ++j)
                    lift[j] = common[j] - basis[s].denominator_exponents[j];
                num = num + basis[s].numerator.times_monomial(Monomial(lift),
                                                              v[s].as_prime_residue());
            }
            CechClass cls = make_cech_class(H, std::move(num), common);
            if (cls.is_zero()) continue;
            SocleLine line;
            line.eigencoefficient = lam;
            line.annihilator = annihilator_of(cls).generators();
            line.cls = std::move(cls);
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

bool dual_square_check(const GradedHypersurface& H, const SocleLine& line,
                       const GbBudget& budget) {
    if (!line.is_parameter_ideal)
        throw PreconditionError("dual square check needs a parameter-ideal socle line");
    if (line.eigencoefficient == 0)
        throw PreconditionError("dual square check needs a nonzero eigencoefficient");
    const PolyRingPtr& R = H.ring();
    const std::uint64_t p = R->p();
    const std::size_t n = R->nvars();

    // tau_s^{[p]}
    std::vector<Polynomial> taup;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::uint64_t> e(n, 0);
        if (line.parameter_exponents[j] > UINT64_MAX / p)
            throw ExponentOverflow("bracket power exponent overflow");
        e[j] = line.parameter_exponents[j] * p;
        taup.push_back(Polynomial::monomial(R, Monomial(std::move(e))));
    }
    Ideal tau_p(R, std::move(taup));

    // f^{p-1} - c_s (y_1^{i_1}...y_n^{i_n})^{p-1} must lie in tau_s^{[p]}
    std::vector<std::uint64_t> prod(n);
    for (std::size_t j = 0; j < n; ++j) prod[j] = line.parameter_exponents[j] * (p - 1);
    Polynomial rhs = Polynomial::monomial(R, Monomial(std::move(prod)), line.eigencoefficient);
    Polynomial lhs = H.f().pow(p - 1);
    return normal_form(lhs - rhs, *tau_p.groebner(budget), budget).is_zero();
}

// ---------------------------------------------------------------- verdict

SimplicityReport d_simplicity_verdict(const GradedHypersurface& H, const GbBudget& budget) {
    SimplicityReport rep;
    rep.p = H.ring()->p();
    rep.f_text = H.f().to_string();
    rep.degree = H.degree();
    rep.a_invariant = H.a_invariant();

    StarZeroAnalysis sa = star_zero_analysis(H);
    rep.nilpotency = sa;
    rep.degree_zero_dimension = sa.dimension;
    rep.hypothesis_isolated_singularity = sa.hypothesis_isolated_singularity;

    if (sa.dimension > 0) {
        FqMat M = frobenius_matrix_degree_zero(H);
        rep.frobenius_matrix.assign(sa.dimension,
                                    std::vector<std::uint64_t>(sa.dimension, 0));
        for (std::size_t i = 0; i < sa.dimension; ++i)
            for (std::size_t j = 0; j < sa.dimension; ++j)
                rep.frobenius_matrix[i][j] = M.at(i, j).as_prime_residue();
    }

    if (!sa.hypothesis_isolated_singularity) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    rep.verdict = sa.nilpotent ? Verdict::Simple : Verdict::NotSimple;
    if (rep.verdict == Verdict::NotSimple) rep.socle_lines = socle_line_data(H, budget);
    return rep;
}

} // namespace fsing
