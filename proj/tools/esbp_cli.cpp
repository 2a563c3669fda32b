#include "esbp/config.hpp"
#include "esbp/io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace esbp;

namespace {

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw ConfigError("bad integer list '" + s + "'");
        v.push_back(x);
    }
    if (v.empty())
        throw ConfigError("empty integer list");
    return v;
}

std::string out_path(const std::string& dir, const std::string& f) { return (std::filesystem::path(dir) / f).string(); }

struct Overrides {
    std::string config;
    int order = 0;
    std::string stencil;
    double cfl = 0, beta = 0;
    long long seed = -1;
    std::string out_dir = "out";
    int threads = 0;
    std::string orders, resolutions;
    int n = 0;
};

Json resolve(const Overrides& o, CLI::App* sub)
{
    Json cfg = load_config(o.config);
    if (sub->count("--order"))
        cfg["order"] = o.order;
    if (sub->count("--stencil"))
        cfg["stencil"] = o.stencil;
    if (sub->count("--cfl"))
        cfg["cfl"] = o.cfl;
    if (sub->count("--beta"))
        cfg["beta"] = o.beta;
    if (sub->count("--seed"))
        cfg["seed"] = o.seed;
    if (sub->count("--orders"))
        cfg["mms"]["orders"] = parse_list(o.orders);
    if (sub->count("--resolutions"))
        cfg["mms"]["resolutions"] = parse_list(o.resolutions);
    if (sub->count("--n")) {
        cfg["audit"]["n"] = o.n;
        cfg["simulate"]["n"] = o.n;
    }
    int order = cfg.at("order").get<int>();
    if (order != 2 && order != 4 && order != 6)
        throw ConfigError("order must be 2, 4 or 6");
    parse_stencil(cfg.at("stencil").get<std::string>());
    if (!(cfg.at("cfl").get<double>() > 0))
        throw ConfigError("cfl must be positive");
    if (!(cfg.at("beta").get<double>() >= 1))
        throw ConfigError("beta must be >= 1");
    return cfg;
}

int cmd_certify(const Json& cfg, const std::string& dir)
{
    std::ostringstream os;
    os << "order,n_points,fully_compatible,check,residual,tol,pass\n";
    const int order = cfg.at("order").get<int>();
    bool ok = true;
    for (int n : {12, 24})
        for (bool fc : {false, true}) {
            auto op = build_operator_set(order, n, 1.0 / (n - 1), fc);
            auto rep = certify_operator_set(op, unsigned(cfg.at("seed").get<long long>()), 20);
            for (const auto& c : rep.checks)
                os << order << ',' << n << ',' << int(fc) << ',' << c.name << ',' << csv_number(c.residual) << ','
                   << csv_number(c.tol) << ',' << int(c.pass) << '\n';
            std::printf("order %d n=%d fc=%d: %s\n", order, n, int(fc), rep.pass() ? "pass" : "FAIL");
            ok = ok && rep.pass();
        }
    write_atomic(out_path(dir, "certification.csv"), os.str());
    return ok ? 0 : 1;
}

int cmd_convergence(const Json& cfg, const std::string& dir)
{
    MMSProblem pb = mms_problem_from(cfg);
    auto orders = cfg.at("mms").at("orders").get<std::vector<int>>();
    auto res = cfg.at("mms").at("resolutions").get<std::vector<int>>();
    Stencil st = parse_stencil(cfg.at("stencil").get<std::string>());
    for (int o : orders)
        if (o != 2 && o != 4 && o != 6)
            throw ConfigError("orders must be drawn from 2, 4, 6");
    ConvergenceReport rep = run_convergence(pb, orders, res, st);
    write_convergence_csv(rep, out_path(dir, "convergence.csv"));
    bool ok = true;
    for (const auto& r : rep.rows) {
        std::printf("order %d h_inv %d ppwl %.2f log10_error %.3f rate %.3f%s\n", r.order, r.h_inv, r.ppwl,
                    std::log10(r.error), r.rate, r.failed ? " (unstable)" : "");
        ok = ok && !r.failed;
    }
    for (int o : orders) {
        double avg = rep.average_rate(o);
        std::printf("order %d average rate %.3f, least-squares rate %.3f\n", o, avg, rep.lsq_rate(o));
        if (res.size() >= 3) {
            double lo = o == 2 ? 1.75 : o == 4 ? 3.2 : 4.2, hi = o == 2 ? 2.25 : o == 4 ? 3.9 : 5.0;
            ok = ok && avg >= lo && avg <= hi;
        }
    }
    return ok ? 0 : 1;
}

int cmd_audit(const Json& cfg, const std::string& dir)
{
    AuditConfig c = audit_config_from(cfg);
    AuditReport r = audit_self_adjointness(c);
    write_audit_csv({r}, out_path(dir, "audit.csv"));
    std::printf("unknowns %zu asymmetry %.3e max_eig(hA) %.3e scaled %.3e spectral_radius %.3e\n", r.unknowns,
                r.asymmetry_rel, r.max_eig, r.max_eig_scaled, r.spectral_radius);
    if (c.certificate)
        std::printf("shifted Cholesky certificate: %s\n", r.certified ? "passed" : "failed");
    bool ok = r.symmetric() && r.semidefinite();
    return ok ? 0 : 1;
}

int cmd_simulate(const Json& cfg, const std::string& dir)
{
    SimulationOutput out = run_simulation(cfg, dir);
    std::printf("steps %d dt %.6e relative energy drift %.3e\n", out.steps, out.dt, out.energy_drift_rel);
    for (const auto& f : out.files)
        std::printf("wrote %s\n", f.c_str());
    return 0;
}

int cmd_speeds(const Json& cfg, const std::string& dir)
{
    const Json& s = cfg.at("speeds");
    double lambda = s.at("lambda").get<double>(), mu = s.at("mu").get<double>(), rho = s.at("rho").get<double>();
    int nd = s.at("directions").get<int>();
    Tensor4 C = isotropic_stiffness(lambda, mu);
    auto v = christoffel_speeds(C, rho, {1, 0});
    std::printf("quasi-S %.15g quasi-P %.15g\n", v[0], v[1]);
    auto pts = slowness_surface(C, rho, nd);
    std::ostringstream os;
    os << "branch,angle,s1,s2\n";
    for (const auto& p : pts)
        os << p.branch << ',' << csv_number(p.angle) << ',' << csv_number(p.s1) << ',' << csv_number(p.s2) << '\n';
    write_atomic(out_path(dir, "slowness.csv"), os.str());
    return 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Curvilinear multiblock SBP-SAT solver for anisotropic elastic waves"};
    app.require_subcommand(1);
    Overrides o;
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Json&, const std::string&);
    };
    const Sub subs[] = {{"certify", "certify the 1D operator sets", cmd_certify},
                        {"convergence", "manufactured-solution convergence sweep", cmd_convergence},
                        {"audit", "dense self-adjointness and semidefiniteness audit", cmd_audit},
                        {"simulate", "time-domain simulation", cmd_simulate},
                        {"speeds", "Christoffel speeds and slowness curves", cmd_speeds}};
    std::vector<std::pair<CLI::App*, const Sub*>> cmds;
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--config", o.config, "builtin config name or JSON file");
        sub->add_option("--order", o.order, "operator order (2, 4, 6)");
        sub->add_option("--stencil", o.stencil, "narrow or wide");
        sub->add_option("--cfl", o.cfl, "CFL number");
        sub->add_option("--beta", o.beta, "penalty factor (>= 1)");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out-dir", o.out_dir, "output directory");
        sub->add_option("--threads", o.threads, "worker threads (default: all cores)");
        sub->add_option("--orders", o.orders, "comma-separated orders");
        sub->add_option("--resolutions", o.resolutions, "comma-separated h^-1 values");
        sub->add_option("--n", o.n, "grid points per block side (audit, simulate)");
        cmds.push_back({sub, &s});
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    for (auto& [sub, s] : cmds) {
        if (!sub->parsed())
            continue;
        try {
            if (o.threads > 0)
                omp_set_num_threads(o.threads);
            Json cfg = resolve(o, sub);
            std::filesystem::create_directories(o.out_dir);
            std::string cmdline;
            for (int i = 0; i < argc; ++i)
                cmdline += (i ? " " : "") + std::string(argv[i]);
            write_manifest(cfg, cmdline, o.out_dir);
            return s->fn(cfg, o.out_dir);
        } catch (const ConfigError& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return 2;
        } catch (const SizeCapError& e) {
            std::fprintf(stderr, "size cap: %s\n", e.what());
            return 2;
        } catch (const Json::exception& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return 2;
        } catch (const std::invalid_argument& e) {
            std::fprintf(stderr, "invalid input: %s\n", e.what());
            return 2;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
    }
    return 2;
}
