// polyqd: instance generation, verification, decoding, spectral reports,
// exact simulation of the quantum solver, and the classical solvers, all
// behind one reproducible command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polyqd/decoder.hpp"
#include "polyqd/fourier.hpp"
#include "polyqd/instance.hpp"
#include "polyqd/qsim.hpp"
#include "polyqd/selftest.hpp"
#include "polyqd/solvers.hpp"

namespace {

using namespace polyqd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parameter_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot write " + path);
    out << text << "\n";
}

Rational parse_eps(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw parameter_error("epsilon must be of the form a/b");
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("POLYQD_SEED")) return std::stoull(env);
    return 1;
}

std::vector<gf2e::Elem> parse_symbols(const std::string& s) {
    std::vector<gf2e::Elem> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(gf2e::Elem(std::stoul(tok, nullptr, 16)));
    return out;
}

int cmd_gen(const instance::Params& p, bool strict, const std::string& out_path) {
    auto inst = instance::gen(p, strict ? instance::Mode::strict : instance::Mode::desk);
    spill(out_path, instance::to_json(inst));
    return kExitOk;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    auto inst = instance::from_json(slurp(inst_path));
    auto sol = instance::solution_from_json(slurp(sol_path));
    auto res = instance::verify(inst, sol);
    json j;
    j["schema_version"] = 1;
    j["valid"] = res.valid;
    if (!res.valid) {
        j["failed_constraint"] = res.failed_constraint;
        if (res.poly_index >= 0) j["poly_index"] = res.poly_index;
    }
    std::cout << j.dump() << "\n";
    return res.valid ? kExitOk : kExitDomainFailure;
}

int cmd_decode(const std::string& inst_path, const std::string& z_hex, const std::string& backend) {
    auto inst = instance::from_json(slurp(inst_path));
    auto z = parse_symbols(z_hex);
    auto out = decoder::decode(inst.code, z, inst.params.epsilon,
                               backend == "gs" ? decoder::Backend::gs
                                               : decoder::Backend::bruteforce);
    json j;
    j["schema_version"] = 1;
    j["unique"] = out.unique_flag;
    j["codeword"] = out.codeword;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_spectrum(int n, int d, std::uint64_t trials, std::uint64_t seed, const std::string& out_path) {
    Rng rng(seed);
    auto rep = fourier::spectrum_stats({n, d}, trials, rng);
    std::ostringstream csv;
    csv << "e,estimate,stderr\n";
    for (std::size_t e = 0; e < rep.tail_mean.size(); ++e)
        csv << e << "," << rep.tail_mean[e] << "," << rep.tail_stderr[e] << "\n";
    csv << "summary,mode=" << (rep.exhaustive ? "exhaustive" : "montecarlo")
        << ";samples=" << rep.samples << ";seed=" << seed
        << ";w0=" << rep.w0_mean << ";max_tail=" << rep.max_tail_mean
        << ";max_tail_arg=" << rep.max_tail_arg << ",\n";
    spill(out_path, csv.str());
    return kExitOk;
}

int solve_with_instance(const instance::Instance& inst, const std::string& method,
                        const std::string& backend, int samples, std::uint64_t seed,
                        std::uint64_t budget, const std::string& out_path,
                        const std::string& sol_path) {
    json j;
    j["schema_version"] = 1;
    j["method"] = method;
    j["seed"] = seed;
    std::optional<instance::Solution> sol;

    if (method == "quantum-sim") {
        qsim::RunOptions opts;
        opts.samples = samples;
        opts.seed = seed;
        auto rep = (backend == "dense") ? qsim::run_dense(inst, opts)
                                        : qsim::run_structured(inst, opts);
        spill(out_path, qsim::report_to_json(rep, inst, opts));
        for (const auto& s : rep.samples) {
            if (!s.valid) continue;
            instance::Solution cand;
            cand.y = bitmat::BitVec::from_u64(inst.params.n * inst.params.m, s.y);
            sol = cand;
            break;
        }
        if (!sol_path.empty()) {
            if (!sol) return kExitDomainFailure;
            spill(sol_path, instance::solution_to_json(*sol));
        }
        return kExitOk;
    }

    if (method == "quadratic") {
        auto res = solvers::solve_quadratic(inst, seed);
        j["solved"] = res.solved;
        j["retries"] = res.retries;
        if (res.solved) sol = res.sol;
    } else if (method == "combinatorial") {
        auto res = solvers::solve_combinatorial(inst, seed, budget);
        j["solved"] = res.solved;
        j["trials"] = res.trials;
        if (res.vr_image_density >= 0) j["vr_image_density"] = res.vr_image_density;
        if (res.solved) sol = res.sol;
    } else if (method == "exhaustive") {
        auto res = solvers::solve_exhaustive(inst);
        j["solved"] = res.found;
        if (res.found) sol = res.sol;
    } else {
        throw parameter_error("unknown method " + method);
    }

    if (sol) j["solution"] = json::parse(instance::solution_to_json(*sol));
    spill(out_path, j.dump());
    if (sol && !sol_path.empty()) spill(sol_path, instance::solution_to_json(*sol));
    return sol ? kExitOk : kExitDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multivariate-plus-dual-RS toolkit: generators, decoders, solvers, simulator"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap (current pipelines are single-threaded)");

    // gen
    auto* gen = app.add_subcommand("gen", "sample an instance");
    instance::Params gp;
    std::string gp_eps = "1/10", gen_out;
    bool gen_strict = false, gen_allow_rootless = false;
    std::uint64_t gen_seed = default_seed();
    gen->add_option("--n", gp.n, "variables per block")->required();
    gen->add_option("--m", gp.m, "number of blocks")->required();
    gen->add_option("--d", gp.d, "degree bound")->required();
    gen->add_option("--k-dual", gp.k_dual, "dimension of the dual code")->required();
    gen->add_option("--eps", gp_eps, "decoding threshold epsilon as a/b");
    gen->add_option("--seed", gen_seed, "instance seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_flag("--strict", gen_strict, "enforce the strict rate window");
    gen->add_flag("--allow-rootless", gen_allow_rootless, "keep rootless polynomials");

    // verify
    auto* ver = app.add_subcommand("verify", "check a solution file against an instance");
    std::string ver_inst, ver_sol;
    ver->add_option("--instance", ver_inst)->required();
    ver->add_option("--solution", ver_sol)->required();

    // decode
    auto* dec = app.add_subcommand("decode", "decode an ad-hoc symbol vector");
    std::string dec_inst, dec_z, dec_backend = "bruteforce";
    dec->add_option("--instance", dec_inst)->required();
    dec->add_option("--z", dec_z, "comma-separated hex symbols")->required();
    dec->add_option("--backend", dec_backend)->check(CLI::IsMember({"bruteforce", "gs"}));

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "per-symbol Fourier mass statistics (CSV)");
    int sp_n = 6, sp_d = 3;
    std::uint64_t sp_trials = 10000, sp_seed = default_seed();
    std::string sp_out;
    spec->add_option("--n", sp_n);
    spec->add_option("--d", sp_d);
    spec->add_option("--trials", sp_trials);
    spec->add_option("--seed", sp_seed);
    spec->add_option("--out", sp_out, "output path (default stdout)");

    // solve / simulate
    std::string so_inst, so_method = "quantum-sim", so_backend = "structured", so_out, so_sol;
    int so_samples = 0;
    std::uint64_t so_seed = default_seed(), so_budget = 1 << 20;
    auto add_solve_opts = [&](CLI::App* cmd, bool with_method) {
        cmd->add_option("--instance", so_inst)->required();
        if (with_method)
            cmd->add_option("--method", so_method)
                ->check(CLI::IsMember({"quantum-sim", "quadratic", "combinatorial", "exhaustive"}));
        cmd->add_option("--backend", so_backend)->check(CLI::IsMember({"structured", "dense"}));
        cmd->add_option("--samples", so_samples);
        cmd->add_option("--seed", so_seed);
        cmd->add_option("--budget", so_budget, "trial budget for the combinatorial solver");
        cmd->add_option("--out", so_out, "report path (default stdout)");
        cmd->add_option("--solution-out", so_sol, "write the found solution here");
    };
    auto* solve = app.add_subcommand("solve", "run a solver against an instance");
    add_solve_opts(solve, true);
    auto* sim = app.add_subcommand("simulate", "alias of solve --method quantum-sim");
    add_solve_opts(sim, false);

    // experiment
    auto* exp = app.add_subcommand("experiment", "statistical experiments");
    auto* sub = exp->add_subcommand("subspace", "degree drop under random affine restriction");
    int ex_n = 8, ex_codim = 2;
    std::uint64_t ex_trials = 10000, ex_seed = default_seed();
    std::string ex_out;
    sub->add_option("--n", ex_n);
    sub->add_option("--codim", ex_codim);
    sub->add_option("--trials", ex_trials);
    sub->add_option("--seed", ex_seed);
    sub->add_option("--out", ex_out);
    exp->require_subcommand(1);

    // selftest
    auto* st = app.add_subcommand("selftest", "run the enumeration-based invariant battery");
    std::string st_level = "quick";
    st->add_option("--level", st_level)->check(CLI::IsMember({"quick", "exhaustive"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            gp.epsilon = parse_eps(gp_eps);
            gp.seed = gen_seed;
            gp.reject_rootless = !gen_allow_rootless;
            return cmd_gen(gp, gen_strict, gen_out);
        }
        if (ver->parsed()) return cmd_verify(ver_inst, ver_sol);
        if (dec->parsed()) return cmd_decode(dec_inst, dec_z, dec_backend);
        if (spec->parsed()) return cmd_spectrum(sp_n, sp_d, sp_trials, sp_seed, sp_out);
        if (solve->parsed() || sim->parsed()) {
            auto inst = instance::from_json(slurp(so_inst));
            std::string method = sim->parsed() ? "quantum-sim" : so_method;
            return solve_with_instance(inst, method, so_backend, so_samples, so_seed, so_budget,
                                       so_out, so_sol);
        }
        if (exp->parsed()) {
            auto rep = solvers::subspace_degree_experiment(ex_n, ex_codim, ex_trials, ex_seed);
            json j;
            j["schema_version"] = 1;
            j["n"] = rep.n;
            j["codim"] = rep.codim;
            j["trials"] = rep.trials;
            j["seed"] = ex_seed;
            j["drop_events"] = rep.drop_events;
            j["frequency"] = rep.frequency;
            j["predicted"] = rep.predicted;
            j["degree_le2_samples"] = rep.degree_le2_samples;
            spill(ex_out, j.dump());
            return kExitOk;
        }
        if (st->parsed()) {
            auto results = selftest::run(st_level == "exhaustive" ? selftest::Level::exhaustive
                                                                  : selftest::Level::quick);
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
                all_ok &= r.passed;
            }
            return all_ok ? kExitOk : kExitDomainFailure;
        }
    } catch (const parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    return kExitUsage;
}
