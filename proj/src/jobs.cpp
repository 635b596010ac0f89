#include "fsing/jobs.hpp"

#include <chrono>
#include <future>

#include "fsing/local_cohomology.hpp"
#include "fsing/parser.hpp"

namespace fsing {

namespace {

PolyRingPtr ring_from_job(const Json& job) {
    if (!job.contains("p")) throw PreconditionError("job is missing the prime 'p'");
    std::uint64_t p = job.at("p").get<std::uint64_t>();
    if (!job.contains("vars")) throw PreconditionError("job is missing 'vars'");
    std::vector<std::string> vars = job.at("vars").get<std::vector<std::string>>();
    std::vector<std::uint64_t> weights;
    if (job.contains("weights")) weights = job.at("weights").get<std::vector<std::uint64_t>>();
    return PolyRing::make(p, std::move(vars), std::move(weights));
}

std::vector<Polynomial> parse_list(const Json& src, const PolyRingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& s : src) out.push_back(parse_polynomial(s.get<std::string>(), ring));
    return out;
}

MonomialOrder order_from_job(const Json& job, std::size_t nvars) {
    std::string name = job.value("order", "grevlex");
    if (name == "grevlex") return MonomialOrder::grevlex(nvars);
    if (name == "lex") return MonomialOrder::lex(nvars);
    if (name == "grlex") return MonomialOrder::grlex(nvars);
    throw PreconditionError("unknown order '" + name + "' (grevlex, lex, grlex)");
}

GbBudget budget_from_job(const Json& job) {
    GbBudget b;
    if (job.contains("gb_max_pairs")) b.max_pairs = job.at("gb_max_pairs").get<std::uint64_t>();
    if (job.contains("gb_max_basis")) b.max_basis = job.at("gb_max_basis").get<std::size_t>();
    if (job.contains("gb_max_steps"))
        b.max_reduction_steps = job.at("gb_max_steps").get<std::uint64_t>();
    return b;
}

Json strings_of(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& f : ps) a.push_back(f.to_string());
    return a;
}

unsigned twist_from_job(const Json& job) {
    unsigned e = job.value("e", 1u);
    if (e == 0) throw PreconditionError("twist power e must be >= 1");
    return e;
}

// factor a prime power q = p^e
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) throw PreconditionError("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    unsigned e = 0;
    std::uint64_t r = q;
    while (r > 1) {
        if (r % p != 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
        r /= p;
        ++e;
    }
    return {p, e};
}

Json socle_line_json(const SocleLine& line) {
    Json l;
    l["class"] = line.cls.to_string();
    l["eigencoefficient"] = line.eigencoefficient;
    Json ann = Json::array();
    for (const auto& g : line.annihilator) ann.push_back(g.to_string());
    l["annihilator"] = ann;
    l["is_parameter_ideal"] = line.is_parameter_ideal;
    if (line.is_parameter_ideal) l["parameter_exponents"] = line.parameter_exponents;
    return l;
}

Json run_groebner_family(const Json& job, const std::string& cmd) {
    PolyRingPtr R = ring_from_job(job);
    GbBudget budget = budget_from_job(job);
    Json results;

    if (cmd == "gb") {
        Ideal I(R, parse_list(job.at("gens"), R));
        auto gb = I.groebner(order_from_job(job, R->nvars()), budget);
        results["basis"] = strings_of(gb->elements());
        results["trivial"] = gb->trivial();
        return results;
    }
    if (cmd == "member") {
        Ideal I(R, parse_list(job.at("gens"), R));
        Polynomial f = parse_polynomial(job.at("f").get<std::string>(), R);
        results["member"] = ideal_membership(f, I, budget);
        return results;
    }
    if (cmd == "colon") {
        Ideal I(R, parse_list(job.at("gens"), R));
        Ideal J(R, parse_list(job.at("by"), R));
        Ideal Q = ideal_quotient(I, J, budget);
        results["generators"] = strings_of(Q.generators());
        return results;
    }
    if (cmd == "bracket-power") {
        Ideal I(R, parse_list(job.at("gens"), R));
        results["generators"] = strings_of(bracket_power(I, twist_from_job(job)).generators());
        return results;
    }
    if (cmd == "fedder") {
        if (job.contains("f")) {
            Polynomial f = parse_polynomial(job.at("f").get<std::string>(), R);
            bool fast = fedder_is_fpure_principal(f, budget);
            bool general = fedder_is_fpure(Ideal(R, {f}), budget);
            results["f_pure"] = general;
            results["fast_path"] = fast;
            results["paths_agree"] = (fast == general);
        } else {
            Ideal I(R, parse_list(job.at("gens"), R));
            results["f_pure"] = fedder_is_fpure(I, budget);
        }
        return results;
    }
    if (cmd == "e-structures") {
        Ideal I(R, parse_list(job.at("gens"), R));
        EStructureModule E = e_structure_module(I, twist_from_job(job), budget);
        results["colon_generators"] = strings_of(E.colon.generators());
        results["coset_generators"] = strings_of(E.coset_generators);
        return results;
    }
    if (cmd == "rf-submodule") {
        Ideal I(R, parse_list(job.at("gens"), R));
        Ideal tau(R, parse_list(job.at("tau"), R));
        results["is_submodule"] = is_rf_submodule(tau, I, twist_from_job(job), budget);
        return results;
    }
    throw PreconditionError("unknown command '" + cmd + "'");
}

Json run_semilinear(const Json& job, const std::string& sub) {
    Json results;

    if (sub == "counterexample") {
        std::uint64_t q = job.value("q", 3ull);
        auto [p, e] = split_prime_power(q);
        auto cert = counterexample_search(p, e, job.value("t_max", 2u),
                                          job.value("deg_max", 30ull));
        results["q"] = cert.q;
        results["t_max"] = cert.t_max;
        results["deg_max"] = cert.deg_max;
        results["no_root_found"] = cert.no_root_found();
        results["degree_obstruction_holds"] = cert.degree_obstruction_holds;
        results["candidates_scanned"] = cert.candidates_scanned;
        Json roots = Json::array();
        for (const auto& [t, alpha] : cert.roots) {
            Json r;
            r["depth"] = t;
            r["alpha"] = alpha.to_string("u");
            roots.push_back(r);
        }
        results["roots"] = roots;
        return results;
    }

    if (sub == "iterate" || sub == "base-change") {
        std::uint64_t q = job.value("q", 3ull);
        auto [p, e] = split_prime_power(q);
        std::string var = job.value("var", "x");
        auto base = FqContext::make(p, job.value("m", 1u));
        UPolyMat A = parse_upoly_matrix(job.at("A").get<std::string>(), base, var);
        UPolySemilinearMap F{A, e};
        if (sub == "iterate") {
            unsigned r = job.value("r", 1u);
            auto Fr = iterate_map(F, r);
            results["r"] = r;
            results["twist"] = Fr.e;
            results["matrix"] = matrix_to_string(Fr.A, var);
        } else {
            UPolyMat C = parse_upoly_matrix(job.at("C").get<std::string>(), base, var);
            auto B = base_change(F, C);
            results["matrix"] = matrix_to_string(B.A, var);
        }
        return results;
    }

    // finite-field ops: fixed, fixed-basis, stable
    std::uint64_t p = job.at("p").get<std::uint64_t>();
    unsigned m = job.value("m", 1u);
    unsigned e = twist_from_job(job);
    auto K = FqContext::make(p, m);
    FqMat A = parse_fq_matrix(job.at("A").get<std::string>(), K);
    FqSemilinearMap F{A, e};

    if (sub == "fixed") {
        FixedVectorBudget budget;
        if (job.contains("scan_budget")) {
            budget.exhaustive_limit = job.at("scan_budget").get<std::uint64_t>();
            budget.scan_limit = budget.exhaustive_limit;
        }
        auto fixed = fixed_vectors(F, budget);
        Json vecs = Json::array();
        for (const auto& v : fixed) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ", ";
                s += v[i].to_string();
            }
            vecs.push_back(s + ")");
        }
        results["count"] = fixed.size();
        results["fixed"] = vecs;
        return results;
    }
    if (sub == "fixed-basis") {
        auto res = f_fixed_basis(F, job.value("max_ext", 6u));
        results["found"] = res.found;
        if (res.found) {
            results["extension_degree"] = res.extension_degree;
            results["field_order"] = res.field->order();
            Json basis = Json::array();
            for (const auto& v : res.basis) {
                std::string s = "(";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) s += ", ";
                    s += v[i].to_string();
                }
                basis.push_back(s + ")");
            }
            results["basis"] = basis;
        }
        return results;
    }
    if (sub == "stable") {
        auto reports = stable_subspaces(F, job.value("r", 1u),
                                        job.value("subspace_budget", 1'000'000ull));
        Json arr = Json::array();
        for (const auto& rep : reports) {
            Json r;
            r["power"] = rep.power;
            r["simple"] = rep.simple;
            r["stable_lines"] = rep.stable_lines;
            r["stable_hyperplanes"] = rep.stable_hyperplanes;
            Json reps = Json::array();
            for (const auto& v : rep.stable_line_reps) {
                std::string s = "(";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) s += ", ";
                    s += v[i].to_string();
                }
                reps.push_back(s + ")");
            }
            r["stable_line_reps"] = reps;
            arr.push_back(r);
        }
        results["reports"] = arr;
        return results;
    }
    throw PreconditionError("unknown semilinear subcommand '" + sub + "'");
}

GradedHypersurface hypersurface_from_job(const Json& job, const GbBudget& budget) {
    PolyRingPtr R = ring_from_job(job);
    Polynomial f = parse_polynomial(job.at("f").get<std::string>(), R);
    return GradedHypersurface(R, f, budget);
}

Json run_lc(const Json& job, const std::string& sub, Json& hypotheses) {
    GbBudget budget = budget_from_job(job);
    GradedHypersurface H = hypersurface_from_job(job, budget);
    hypotheses["isolated_singularity"] = H.jacobian_zero_dimensional();
    hypotheses["hara_large_p_assumed"] = true;
    Json results;
    results["degree"] = H.degree();
    results["a_invariant"] = H.a_invariant();

    if (sub == "basis") {
        auto basis = degree_zero_basis(H);
        results["dimension"] = basis.size();
        Json arr = Json::array();
        for (const auto& c : basis) arr.push_back(c.to_string());
        results["classes"] = arr;
        return results;
    }
    if (sub == "frobenius") {
        auto basis = degree_zero_basis(H);
        results["dimension"] = basis.size();
        if (!basis.empty()) {
            FqMat M = frobenius_matrix_degree_zero(H);
            Json rows = Json::array();
            for (std::size_t i = 0; i < M.size(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < M.size(); ++j)
                    row.push_back(M.at(i, j).as_prime_residue());
                rows.push_back(row);
            }
            results["matrix"] = rows;
        }
        return results;
    }
    if (sub == "verdict") {
        SimplicityReport rep = d_simplicity_verdict(H, budget);
        results["verdict"] = to_string(rep.verdict);
        results["degree_zero_dimension"] = rep.degree_zero_dimension;
        results["frobenius_matrix"] = rep.frobenius_matrix;
        Json nil;
        nil["nilpotent"] = rep.nilpotency.nilpotent;
        nil["order"] = rep.nilpotency.nilpotency_order;
        nil["injective"] = rep.nilpotency.injective;
        nil["f_reduced_dimension"] = rep.nilpotency.f_reduced_dimension;
        results["nilpotency"] = nil;
        Json lines = Json::array();
        for (const auto& l : rep.socle_lines) lines.push_back(socle_line_json(l));
        results["socle_lines"] = lines;
        return results;
    }
    if (sub == "socle") {
        auto lines = socle_line_data(H, budget);
        Json arr = Json::array();
        for (const auto& l : lines) arr.push_back(socle_line_json(l));
        results["lines"] = arr;
        return results;
    }
    if (sub == "dual-check") {
        auto lines = socle_line_data(H, budget);
        Json arr = Json::array();
        bool all = true;
        for (const auto& l : lines) {
            bool ok = dual_square_check(H, l, budget);
            all = all && ok;
            Json r;
            r["class"] = l.cls.to_string();
            r["ok"] = ok;
            arr.push_back(r);
        }
        results["lines"] = arr;
        results["all_ok"] = all;
        return results;
    }
    throw PreconditionError("unknown lc subcommand '" + sub + "'");
}

} // namespace

Json run_job(const Json& job) {
    auto t0 = std::chrono::steady_clock::now();
    std::string cmd = job.value("command", "");
    if (cmd.empty()) throw PreconditionError("job is missing 'command'");

    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = "fsing";
    report["version"] = kToolVersion;
    report["job"] = job;

    if (job.contains("weights")) {
        auto w = job.at("weights").get<std::vector<std::uint64_t>>();
        bool std_grading = true;
        for (auto x : w)
            if (x != 1) std_grading = false;
        if (!std_grading) report["experimental_nonstandard_grading"] = true;
    }

    Json hypotheses;
    Json results;
    if (cmd == "sweep") {
        report["csv"] = run_sweep_csv(job);
    } else if (cmd.rfind("semilinear.", 0) == 0) {
        results = run_semilinear(job, cmd.substr(11));
        report["results"] = results;
    } else if (cmd.rfind("lc.", 0) == 0) {
        results = run_lc(job, cmd.substr(3), hypotheses);
        report["results"] = results;
        report["hypotheses"] = hypotheses;
    } else {
        results = run_groebner_family(job, cmd);
        report["results"] = results;
    }

    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

std::string run_sweep_csv(const Json& job) {
    if (!job.contains("primes")) throw PreconditionError("sweep needs 'primes'");
    std::vector<std::uint64_t> primes = job.at("primes").get<std::vector<std::uint64_t>>();
    std::string inner_cmd = job.value("sweep_command", "");
    if (inner_cmd != "lc.verdict" && inner_cmd != "fedder")
        throw PreconditionError("sweep supports lc.verdict and fedder (got '" + inner_cmd + "')");

    // the sweeps are per-prime analyses of a fixed f; d for the p-mod-d column
    std::uint64_t d = 0;

    auto run_one = [&](std::uint64_t p) -> std::string {
        Json sub = job;
        sub.erase("primes");
        sub.erase("command");
        sub.erase("sweep_command");
        sub["command"] = inner_cmd;
        sub["p"] = p;
        Json rep = run_job(sub);
        if (inner_cmd == "lc.verdict") return rep.at("results").at("verdict").get<std::string>();
        return rep.at("results").at("f_pure").get<bool>() ? "F_PURE" : "NOT_F_PURE";
    };

    {
        // degree of f at the first prime fixes the p mod d column
        Json probe = job;
        probe.erase("primes");
        probe.erase("command");
        probe.erase("sweep_command");
        probe["command"] = inner_cmd;
        probe["p"] = primes.at(0);
        PolyRingPtr R = ring_from_job(probe);
        d = parse_polynomial(probe.at("f").get<std::string>(), R).weighted_degree();
    }

    std::vector<std::future<std::string>> futs;
    futs.reserve(primes.size());
    for (auto p : primes)
        futs.push_back(std::async(std::launch::async, run_one, p));

    std::string csv = "p,p_mod_d,result\n";
    for (std::size_t i = 0; i < primes.size(); ++i)
        csv += std::to_string(primes[i]) + "," + std::to_string(primes[i] % d) + "," +
               futs[i].get() + "\n";
    return csv;
}

std::string report_to_text(const Json& report) {
    std::string out;
    const Json& job = report.at("job");
    std::string cmd = job.value("command", "");
    out += "fsing " + cmd + "\n";
    if (report.contains("experimental_nonstandard_grading"))
        out += "note: non-standard grading weights are experimental\n";
    if (cmd == "sweep") {
        out += report.at("csv").get<std::string>();
        return out;
    }
    if (report.contains("hypotheses")) {
        const Json& h = report.at("hypotheses");
        out += "hypotheses: isolated_singularity=" +
               std::string(h.at("isolated_singularity").get<bool>() ? "true" : "false") +
               " hara_large_p_assumed=true\n";
    }
    const Json& r = report.at("results");
    for (auto it = r.begin(); it != r.end(); ++it) {
        if (it.value().is_string())
            out += it.key() + ": " + it.value().get<std::string>() + "\n";
        else
            out += it.key() + ": " + it.value().dump() + "\n";
    }
    return out;
}

} // namespace fsing
