#include "fsing/semilinear.hpp"

#include <algorithm>
#include <map>

namespace fsing {

namespace {

bool vec_less(const std::vector<Fq>& a, const std::vector<Fq>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (Fq::less(a[i], b[i])) return true;
        if (Fq::less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

bool vec_eq(const std::vector<Fq>& a, const std::vector<Fq>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// reduced row echelon form in place; returns rank
std::size_t rref(std::vector<std::vector<Fq>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Fq inv = rows[rank][c].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Fq f = rows[r][c];
            for (std::size_t cc = 0; cc < ncols; ++cc)
                rows[r][cc] = rows[r][cc] - f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t fq_rank(std::vector<std::vector<Fq>> rows) { return rref(rows); }

std::optional<std::vector<Fq>> fq_solve(const FqMat& M, const std::vector<Fq>& b) {
    const std::size_t n = M.size();
    if (b.size() != n) throw DimensionMismatch("rhs length differs from matrix size");
    FqContextPtr ctx = b.empty() ? nullptr : b[0].context();
    std::vector<std::vector<Fq>> aug;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fq> row;
        row.reserve(n + 1);
        for (std::size_t j = 0; j < n; ++j) row.push_back(M.at(i, j));
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    rref(aug);
    std::vector<Fq> x(n, Fq::zero(ctx));
    for (const auto& row : aug) {
        std::size_t lead = 0;
        while (lead < n && row[lead].is_zero()) ++lead;
        if (lead == n) {
            if (!row[n].is_zero()) return std::nullopt; // inconsistent
            continue;
        }
        x[lead] = row[n]; // free variables stay zero
    }
    // verify (guards the free-variable shortcut)
    std::vector<Fq> mx = M.apply(x);
    for (std::size_t i = 0; i < n; ++i)
        if (mx[i] != b[i]) return std::nullopt;
    return x;
}

std::vector<std::vector<Fq>> fq_kernel(std::vector<std::vector<Fq>> rows,
                                       const FqContextPtr& ctx) {
    if (rows.empty()) return {};
    const std::size_t n = rows[0].size();
    rref(rows);
    // pivot column of each nonzero row
    std::vector<std::optional<std::size_t>> pivot_row(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t lead = 0;
        while (lead < n && rows[r][lead].is_zero()) ++lead;
        if (lead < n) pivot_row[lead] = r;
    }
    std::vector<std::vector<Fq>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row[c]) continue; // free column c
        std::vector<Fq> v(n, Fq::zero(ctx));
        v[c] = Fq::one(ctx);
        for (std::size_t cc = 0; cc < n; ++cc)
            if (pivot_row[cc]) v[cc] = -rows[*pivot_row[cc]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

UPoly char_poly(const FqMat& A) {
    const std::size_t n = A.size();
    FqContextPtr ctx = A.at(0, 0).context();
    UPoly t = UPoly::variable(ctx);
    SLMat<UPoly> M(n, UPoly::zero(ctx));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UPoly entry = UPoly::constant(ctx, -A.at(i, j));
            if (i == j) entry = entry + t;
            M.at(i, j) = entry;
        }
    return M.det();
}

// ------------------------------------------------------------ fixed vectors

namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1; // saturate just above the cap
        r *= base;
    }
    return r;
}

std::vector<std::vector<Fq>> fixed_by_scan(const FqSemilinearMap& F, const FqContextPtr& ctx) {
    const std::size_t n = F.A.size();
    auto elems = all_elements(ctx, UINT64_MAX);
    std::vector<std::vector<Fq>> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Fq> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(elems[idx[i]]);
        if (vec_eq(F.apply(v), v)) out.push_back(v);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < elems.size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<std::vector<Fq>> fixed_by_cyclic(const FqSemilinearMap& F, const FqContextPtr& ctx,
                                             const FixedVectorBudget& budget) {
    const std::size_t n = F.A.size();
    if (ctx->order() > budget.scan_limit)
        throw BudgetExceeded("field too large for the fixed-point root scan");

    // deterministic cyclic-vector candidates: unit vectors, then prefix sums
    std::vector<std::vector<Fq>> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fq> v(n, Fq::zero(ctx));
        v[i] = Fq::one(ctx);
        candidates.push_back(std::move(v));
    }
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Fq> v(n, Fq::zero(ctx));
        for (std::size_t i = 0; i <= k; ++i) v[i] = Fq::one(ctx);
        candidates.push_back(std::move(v));
    }

    for (const auto& v0 : candidates) {
        // orbit v, F(v), ..., F^{(n-1)e}(v) as columns
        std::vector<std::vector<Fq>> orbit{v0};
        for (std::size_t i = 1; i <= n; ++i) orbit.push_back(F.apply(orbit.back()));
        FqMat M(n, Fq::zero(ctx));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) M.at(i, j) = orbit[j][i];
        {
            std::vector<std::vector<Fq>> rows;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Fq> row;
                for (std::size_t j = 0; j < n; ++j) row.push_back(M.at(i, j));
                rows.push_back(std::move(row));
            }
            if (fq_rank(std::move(rows)) < n) continue; // not cyclic
        }
        auto bcoef = fq_solve(M, orbit[n]); // F^{ne}(v) = sum b_i F^{ie}(v)
        if (!bcoef) continue;
        const std::vector<Fq>& b = *bcoef;
        const std::size_t r = n - 1;

        std::vector<std::vector<Fq>> out;
        for (const Fq& t : all_elements(ctx, budget.scan_limit)) {
            // t = t^{q^{r+1}} b_0^{q^r} + t^{q^r} b_1^{q^{r-1}} + ... + t^q b_r
            Fq rhs = Fq::zero(ctx);
            for (std::size_t j = 0; j <= r; ++j)
                rhs = rhs + t.frobenius(F.e * static_cast<unsigned>(r + 1 - j)) *
                                b[j].frobenius(F.e * static_cast<unsigned>(r - j));
            if (rhs != t) continue;
            // back-substitute the coefficients a_i
            std::vector<Fq> a(n, Fq::zero(ctx));
            Fq tq = t.frobenius(F.e);
            a[0] = r == 0 ? t : tq * b[0];
            for (std::size_t i = 1; i <= r; ++i) a[i] = a[i - 1].frobenius(F.e) + tq * b[i];
            std::vector<Fq> w(n, Fq::zero(ctx));
            for (std::size_t i = 0; i <= r; ++i)
                for (std::size_t c = 0; c < n; ++c) w[c] = w[c] + a[i] * orbit[i][c];
            if (vec_eq(F.apply(w), w)) out.push_back(std::move(w));
        }
        return out;
    }
    throw BudgetExceeded("no cyclic vector among the deterministic candidates");
}

} // namespace

std::vector<std::vector<Fq>> fixed_vectors(const FqSemilinearMap& F,
                                           const FixedVectorBudget& budget) {
    const std::size_t n = F.A.size();
    FqContextPtr ctx = F.A.at(0, 0).context();
    std::uint64_t total = checked_pow_u64(ctx->order(), n, budget.exhaustive_limit);

    std::vector<std::vector<Fq>> out;
    if (total <= budget.exhaustive_limit)
        out = fixed_by_scan(F, ctx);
    else
        out = fixed_by_cyclic(F, ctx, budget);
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end(), vec_eq), out.end());
    return out;
}

FFixedBasisResult f_fixed_basis(const FqSemilinearMap& F, unsigned max_ext,
                                const FixedVectorBudget& budget) {
    const std::size_t n = F.A.size();
    FqContextPtr ctx = F.A.at(0, 0).context();
    if (F.A.det().is_zero()) throw SingularMatrix("f_fixed_basis requires an injective action");

    for (unsigned k = 1; k <= max_ext; ++k) {
        auto big = FqContext::make(ctx->p(), ctx->degree() * k, ctx->variable());
        FieldEmbedding phi(ctx, big);
        FqMat Abig(n, Fq::zero(big));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Abig.at(i, j) = phi(F.A.at(i, j));
        FqSemilinearMap Fbig{Abig, F.e, F.basis_tag};

        auto fixed = fixed_vectors(Fbig, budget);
        // greedy extraction of a big-field-independent subset
        std::vector<std::vector<Fq>> chosen;
        for (const auto& v : fixed) {
            std::vector<std::vector<Fq>> trial = chosen;
            trial.push_back(v);
            if (fq_rank(trial) > chosen.size()) chosen.push_back(v);
            if (chosen.size() == n) break;
        }
        if (chosen.size() == n)
            return FFixedBasisResult{true, k, big, std::move(chosen)};
    }
    return FFixedBasisResult{};
}

// --------------------------------------------------------- stable subspaces

namespace {

// enumerate all RREF bases of dimension k in K^n, invoking fn on each
template <class Fn>
void for_each_subspace(const FqContextPtr& ctx, std::size_t n, std::size_t k, Fn&& fn) {
    auto elems = all_elements(ctx, UINT64_MAX);
    std::vector<std::size_t> pivots(k);
    // iterate over pivot column combinations
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // free positions: (row i, col c) with c > pivots[i], c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = pivots[i] + 1; c < n; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_pos.push_back({i, c});

        std::vector<std::size_t> idx(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<Fq>> rows(k, std::vector<Fq>(n, Fq::zero(ctx)));
            for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = Fq::one(ctx);
            for (std::size_t f = 0; f < free_pos.size(); ++f)
                rows[free_pos[f].first][free_pos[f].second] = elems[idx[f]];
            fn(rows);
            std::size_t f = 0;
            for (; f < free_pos.size(); ++f) {
                if (++idx[f] < elems.size()) break;
                idx[f] = 0;
            }
            if (f == free_pos.size()) break;
            if (free_pos.empty()) break;
        }

        // next pivot combination
        std::size_t i = k;
        while (i-- > 0) {
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

// membership of w in the row space of RREF rows
bool in_rowspace(std::vector<Fq> w, const std::vector<std::vector<Fq>>& rows) {
    const std::size_t n = w.size();
    for (const auto& row : rows) {
        std::size_t lead = 0;
        while (lead < n && row[lead].is_zero()) ++lead;
        if (lead == n) continue;
        if (!w[lead].is_zero()) {
            Fq f = w[lead];
            for (std::size_t c = 0; c < n; ++c) w[c] = w[c] - f * row[c];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Fq& x) { return x.is_zero(); });
}

} // namespace

std::vector<SubspaceReport> stable_subspaces(const FqSemilinearMap& F, unsigned r,
                                             std::uint64_t subspace_budget) {
    const std::size_t n = F.A.size();
    FqContextPtr ctx = F.A.at(0, 0).context();
    const std::uint64_t Q = ctx->order();

    // subspace count: sum over dims of sum over pivot sets of Q^{#free}
    std::uint64_t count = 0;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<std::size_t> pivots(k);
        for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            std::size_t free_count = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = pivots[i] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) ++free_count;
            std::uint64_t cells = checked_pow_u64(Q, free_count, subspace_budget);
            if (cells > subspace_budget - std::min(count, subspace_budget))
                throw BudgetExceeded("subspace enumeration budget exceeded");
            count += cells;
            std::size_t i = k;
            bool advanced = false;
            while (i-- > 0) {
                if (pivots[i] + (k - i) < n) {
                    ++pivots[i];
                    for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    if (count > subspace_budget) throw BudgetExceeded("subspace enumeration budget exceeded");

    std::vector<SubspaceReport> reports;
    for (unsigned rr = 1; rr <= r; ++rr) {
        FqSemilinearMap Fr = iterate_map(F, rr);
        SubspaceReport rep;
        rep.power = rr;
        for (std::size_t k = 1; k < n; ++k) {
            for_each_subspace(ctx, n, k, [&](const std::vector<std::vector<Fq>>& rows) {
                for (const auto& b : rows)
                    if (!in_rowspace(Fr.apply(b), rows)) return;
                rep.simple = false;
                if (k == 1) {
                    ++rep.stable_lines;
                    rep.stable_line_reps.push_back(rows[0]);
                }
                if (k == n - 1) ++rep.stable_hyperplanes;
            });
        }
        std::sort(rep.stable_line_reps.begin(), rep.stable_line_reps.end(), vec_less);
        reports.push_back(std::move(rep));
    }
    return reports;
}

// ----------------------------------------------------- counterexample search

std::vector<UPoly> twisted_root_search(const std::vector<EquationTerm>& equation,
                                       std::uint64_t deg_max, std::uint64_t candidate_budget) {
    // merge terms sharing the same alpha power
    std::map<std::uint64_t, UPoly> merged;
    FqContextPtr ctx;
    for (const auto& t : equation) {
        if (!ctx) ctx = t.coeff.context();
        auto it = merged.find(t.alpha_power);
        if (it == merged.end())
            merged.emplace(t.alpha_power, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    std::vector<EquationTerm> terms;
    for (auto& [s, c] : merged)
        if (!c.is_zero()) terms.push_back({std::move(c), s});
    if (terms.empty()) throw PreconditionError("identically zero equation has every root");

    std::vector<UPoly> roots;

    auto evaluate = [&](const UPoly& alpha) {
        UPoly acc = UPoly::zero(ctx);
        for (const auto& t : terms) acc = acc + t.coeff * alpha.pow(t.alpha_power);
        return acc;
    };

    // alpha = 0
    {
        UPoly at_zero = UPoly::zero(ctx);
        for (const auto& t : terms)
            if (t.alpha_power == 0) at_zero = at_zero + t.coeff;
        if (at_zero.is_zero()) roots.push_back(UPoly::zero(ctx));
    }

    auto elems = all_elements(ctx, UINT64_MAX);
    const std::uint64_t K = ctx->order();

    for (std::uint64_t n = 0; n <= deg_max; ++n) {
        // top-degree cancellation: a root of degree exactly n needs the
        // maximum of deg(c_i) + s_i n to be attained at least twice
        std::uint64_t dmax = 0;
        unsigned attainers = 0;
        bool overflow = false;
        for (const auto& t : terms) {
            std::uint64_t d = t.coeff.degree();
            if (t.alpha_power != 0 && n != 0 && t.alpha_power > (UINT64_MAX - d) / n) {
                overflow = true;
                break;
            }
            std::uint64_t total = d + t.alpha_power * n;
            if (total > dmax) {
                dmax = total;
                attainers = 1;
            } else if (total == dmax) {
                ++attainers;
            }
        }
        if (overflow || attainers < 2) continue;

        // scan every alpha of degree exactly n
        std::uint64_t candidates = checked_pow_u64(K, n, candidate_budget);
        if (candidates > candidate_budget / (K - 1))
            throw BudgetExceeded("twisted root search candidate budget exceeded");

        std::vector<std::size_t> idx(n + 1, 0);
        idx[n] = 1; // leading coefficient nonzero
        while (true) {
            std::vector<std::pair<std::uint64_t, Fq>> ts;
            for (std::uint64_t i = 0; i <= n; ++i)
                if (idx[i] != 0) ts.push_back({i, elems[idx[i]]});
            UPoly alpha(ctx, std::move(ts));
            if (evaluate(alpha).is_zero()) roots.push_back(std::move(alpha));
            // odometer: positions 0..n-1 full range, position n skips zero
            std::size_t i = 0;
            for (; i <= n; ++i) {
                if (++idx[i] < elems.size()) break;
                idx[i] = (i == n) ? 1 : 0;
                if (i == n) { i = n + 1; break; }
            }
            if (i > n) break;
        }
    }
    return roots;
}

CounterexampleCertificate counterexample_search(std::uint64_t p, unsigned e, unsigned t_max,
                                                std::uint64_t deg_max,
                                                std::uint64_t candidate_budget) {
    CounterexampleCertificate cert;
    cert.q = checked_prime_power(p, e);
    cert.t_max = t_max;
    cert.deg_max = deg_max;

    // (q+1) n = 1 + n would force q n = 1: impossible for n >= 1
    cert.degree_obstruction_holds = true;
    for (std::uint64_t n = 1; n <= deg_max; ++n)
        if (cert.q * n == 1) cert.degree_obstruction_holds = false;

    auto base = FqContext::make(p, 1);
    for (unsigned t = 0; t <= t_max; ++t) {
        std::uint64_t pt = checked_prime_power(p, t);
        // alpha^{q+1} + u^{p^t} alpha - 1 = 0 in u = x^{1/p^t}
        std::vector<EquationTerm> eq{
            {UPoly::constant(base, 1), cert.q + 1},
            {UPoly::monomial(base, pt, Fq::one(base)), 1},
            {-UPoly::constant(base, 1), 0},
        };
        for (auto& root : twisted_root_search(eq, deg_max, candidate_budget))
            cert.roots.push_back({t, std::move(root)});
        // candidate degrees for this depth: n with q n = p^t
        if (pt % cert.q == 0) {
            std::uint64_t n = pt / cert.q;
            if (n <= deg_max)
                cert.candidates_scanned += (p - 1) * checked_pow_u64(p, n, UINT64_MAX - 1);
        }
    }
    return cert;
}

} // namespace fsing
