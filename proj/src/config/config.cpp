#include "esbp/config.hpp"

#include "esbp/io.hpp"

#include <omp.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace esbp {

Json default_config()
{
    return Json::parse(R"({
        "order": 4,
        "stencil": "narrow",
        "cfl": 0.5,
        "beta": 1.0,
        "seed": 7,
        "mms": {
            "variant": "anisotropic",
            "half_width": 1.0,
            "hole_radius": 0.3,
            "final_time": 1.0,
            "orders": [2, 4, 6],
            "resolutions": [40, 60, 80, 100, 120]
        },
        "audit": {
            "n": 36,
            "boundary": "mixed",
            "reversed": false,
            "cap": 40000,
            "eigenvalues": true,
            "certificate": false
        },
        "simulate": {
            "geometry": "box",
            "n": 41,
            "size": 1.0,
            "half_width": 1.0,
            "hole_radius": 0.3,
            "amplitude": 0.1,
            "boundary": "traction",
            "material": {"kind": "isotropic", "lambda": 1.0, "mu": 1.0, "rho": 1.0},
            "final_time": 1.0,
            "initial": {"kind": "gaussian", "center": [0.5, 0.5], "width": 0.1, "amplitude": [1.0, 0.5]},
            "source": null,
            "receivers": [[0.5, 0.5]],
            "energy_every": 10,
            "receiver_every": 1,
            "snapshot_times": []
        },
        "speeds": {"lambda": 1.0, "mu": 1.0, "rho": 1.0, "directions": 360}
    })");
}

namespace {

Json builtin_overlay(const std::string& name)
{
    if (name == "mms_aniso")
        return Json::parse(R"({"mms": {"variant": "anisotropic"}})");
    if (name == "mms_iso")
        return Json::parse(R"({"mms": {"variant": "isotropic"}})");
    if (name == "audit")
        return Json::object();
    if (name == "audit_large")
        return Json::parse(R"({"audit": {"n": 120}})");
    if (name == "simulate" || name == "default")
        return Json::object();
    if (name == "point_source")
        return Json::parse(R"({"simulate": {
            "geometry": "ogrid", "n": 61, "boundary": "traction",
            "initial": {"kind": "zero"},
            "source": {"position": [0.6, 0.6], "force": [-0.7071067811865476, 0.7071067811865476],
                       "alpha": 4.0, "t0": 0.25},
            "receivers": [[-0.6, -0.6], [0.8, 0.0]],
            "snapshot_times": [0.5, 1.0]}})");
    throw ConfigError("unknown builtin config '" + name + "'");
}

}

bool is_builtin(const std::string& name)
{
    try {
        builtin_overlay(name);
        return true;
    } catch (const ConfigError&) {
        return false;
    }
}

Json load_config(const std::string& name_or_path)
{
    Json cfg = default_config();
    if (name_or_path.empty())
        return cfg;
    Json overlay;
    if (is_builtin(name_or_path)) {
        overlay = builtin_overlay(name_or_path);
        cfg["name"] = name_or_path;
    } else {
        std::ifstream in(name_or_path);
        if (!in)
            throw ConfigError("cannot open config '" + name_or_path + "'");
        try {
            overlay = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ConfigError("config '" + name_or_path + "' is not valid JSON: " + e.what());
        }
        if (!overlay.is_object())
            throw ConfigError("config '" + name_or_path + "' must be a JSON object");
        cfg["name"] = name_or_path;
    }
    cfg.merge_patch(overlay);
    return cfg;
}

Stencil parse_stencil(const std::string& s)
{
    if (s == "narrow")
        return Stencil::Narrow;
    if (s == "wide")
        return Stencil::Wide;
    throw ConfigError("stencil must be narrow or wide, got '" + s + "'");
}

namespace {

template <class T>
T get(const Json& j, const char* key)
{
    if (!j.contains(key))
        throw ConfigError(std::string("missing config key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

FaceKind boundary_kind(const std::string& s)
{
    if (s == "traction")
        return FaceKind::Robin;
    if (s == "displacement")
        return FaceKind::Displacement;
    throw ConfigError("boundary must be traction or displacement, got '" + s + "'");
}

}

MMSProblem mms_problem_from(const Json& cfg)
{
    const Json& m = cfg.at("mms");
    MMSProblem pb;
    std::string v = get<std::string>(m, "variant");
    if (v == "anisotropic")
        pb.variant = MMSVariant::Anisotropic;
    else if (v == "isotropic")
        pb.variant = MMSVariant::Isotropic;
    else
        throw ConfigError("mms variant must be anisotropic or isotropic");
    pb.half_width = get<double>(m, "half_width");
    pb.hole_radius = get<double>(m, "hole_radius");
    pb.final_time = get<double>(m, "final_time");
    pb.cfl = get<double>(cfg, "cfl");
    pb.beta = get<double>(cfg, "beta");
    if (!(pb.final_time > 0))
        throw ConfigError("final_time must be positive");
    if (!(pb.cfl > 0))
        throw ConfigError("cfl must be positive");
    if (!(pb.beta >= 1))
        throw ConfigError("beta must be >= 1");
    return pb;
}

AuditConfig audit_config_from(const Json& cfg)
{
    const Json& a = cfg.at("audit");
    AuditConfig c;
    c.order = get<int>(cfg, "order");
    c.stencil = parse_stencil(get<std::string>(cfg, "stencil"));
    c.seed = get<std::uint64_t>(cfg, "seed");
    c.beta = get<double>(cfg, "beta");
    c.n = get<int>(a, "n");
    c.reversed = get<bool>(a, "reversed");
    c.cap = get<std::size_t>(a, "cap");
    c.eigenvalues = get<bool>(a, "eigenvalues");
    c.certificate = get<bool>(a, "certificate");
    std::string b = get<std::string>(a, "boundary");
    if (b == "traction")
        c.boundary = AuditBoundary::Traction;
    else if (b == "displacement")
        c.boundary = AuditBoundary::Displacement;
    else if (b == "mixed")
        c.boundary = AuditBoundary::Mixed;
    else
        throw ConfigError("audit boundary must be traction, displacement or mixed");
    return c;
}

SimulationOutput run_simulation(const Json& cfg, const std::string& out_dir)
{
    namespace fs = std::filesystem;
    const Json& s = cfg.at("simulate");
    const int order = get<int>(cfg, "order");
    const Stencil stencil = parse_stencil(get<std::string>(cfg, "stencil"));
    const double cfl = get<double>(cfg, "cfl"), beta = get<double>(cfg, "beta");
    const double T = get<double>(s, "final_time");
    if (!(T > 0))
        throw ConfigError("final_time must be positive");
    if (!(cfl > 0))
        throw ConfigError("cfl must be positive");
    const int n = get<int>(s, "n");
    const FaceKind bc = boundary_kind(get<std::string>(s, "boundary"));
    const std::string geom = get<std::string>(s, "geometry");

    MultiblockLayout lay;
    if (geom == "box") {
        double L = get<double>(s, "size");
        lay.grids.push_back(build_block(affine_map(L, 0, 0, L, 0, 0), n, n));
        std::array<FaceTag, 4> t;
        for (auto& f : t)
            f.kind = bc;
        lay.tags.push_back(t);
    } else if (geom == "two_block") {
        lay = two_block(n, n, get<double>(s, "amplitude"), false, bc);
    } else if (geom == "ogrid") {
        lay = ogrid(get<double>(s, "half_width"), get<double>(s, "hole_radius"), n, bc, bc);
    } else {
        throw ConfigError("geometry must be box, two_block or ogrid");
    }
    Domain dom = assemble_domain(lay.grids, lay.tags, lay.interfaces, order);

    const Json& m = s.at("material");
    const std::string mk = get<std::string>(m, "kind");
    std::vector<StiffnessField> C;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        if (mk == "isotropic")
            C.push_back(constant_field(isotropic_stiffness(get<double>(m, "lambda"), get<double>(m, "mu")),
                                       get<double>(m, "rho"), blk.npts()));
        else if (mk == "random")
            C.push_back(random_stiffness(get<std::uint64_t>(cfg, "seed") * 1000 + b, blk.npts()));
        else if (mk == "mms")
            C.push_back(mms_material(blk.grid.X1, blk.grid.X2));
        else
            throw ConfigError("material kind must be isotropic, random or mms");
    }
    ElasticOperator op(dom, C, stencil);
    op.set_beta(beta);

    State st = zero_state(dom);
    const Json& ini = s.at("initial");
    const std::string ik = get<std::string>(ini, "kind");
    if (ik == "gaussian") {
        auto c = get<std::vector<double>>(ini, "center");
        auto a = get<std::vector<double>>(ini, "amplitude");
        double w = get<double>(ini, "width");
        if (c.size() != 2 || a.size() != 2 || !(w > 0))
            throw ConfigError("gaussian initial data needs a 2-vector center and amplitude and width > 0");
        for (int b = 0; b < int(dom.blocks.size()); ++b) {
            const BlockGrid& g = dom.blocks[b].grid;
            for (int p = 0; p < g.npts(); ++p) {
                double r2 = std::pow(g.X1[p] - c[0], 2) + std::pow(g.X2[p] - c[1], 2);
                double e = std::exp(-r2 / (w * w));
                for (int J = 0; J < 2; ++J)
                    dom.comp(st.u, b, J)[p] = a[J] * e;
            }
        }
    } else if (ik != "zero") {
        throw ConfigError("initial kind must be zero or gaussian");
    }

    ForcingFn forcing;
    if (!s.at("source").is_null()) {
        const Json& src = s.at("source");
        auto X0 = get<std::vector<double>>(src, "position");
        auto f = get<std::vector<double>>(src, "force");
        if (X0.size() != 2 || f.size() != 2)
            throw ConfigError("source position and force must be 2-vectors");
        PointWeights pw = discrete_delta(dom, {X0[0], X0[1]});
        forcing = point_source(dom, pw, {f[0], f[1]}, get<double>(src, "alpha"), get<double>(src, "t0"));
    }

    RunOptions opt;
    const double dt0 = estimate_dt(op, cfl);
    opt.n_steps = std::max(1, int(std::ceil(T / dt0 - 1e-12)));
    opt.dt = T / opt.n_steps;
    opt.energy_every = get<int>(s, "energy_every");
    opt.receiver_every = get<int>(s, "receiver_every");
    for (const auto& r : s.at("receivers")) {
        auto X = r.get<std::vector<double>>();
        if (X.size() != 2)
            throw ConfigError("receiver positions must be 2-vectors");
        discrete_delta(dom, {X[0], X[1]});  // rejects receivers outside the domain
        opt.receivers.push_back(locate_receiver(dom, {X[0], X[1]}));
    }
    std::vector<double> snaps = get<std::vector<double>>(s, "snapshot_times");
    std::sort(snaps.begin(), snaps.end());

    SimulationOutput out;
    out.dt = opt.dt;
    out.steps = opt.n_steps;
    fs::create_directories(out_dir);
    auto path = [&](const std::string& f) { return (fs::path(out_dir) / f).string(); };

    // advance in segments so snapshots land on the nearest step
    RunResult all;
    all.receivers.resize(opt.receivers.size());
    int done = 0;
    std::size_t next_snap = 0;
    auto snapshot = [&](std::size_t k) {
        for (int b = 0; b < int(dom.blocks.size()); ++b) {
            const BlockGrid& g = dom.blocks[b].grid;
            std::ostringstream os;
            os << "i,j,X1,X2,u1,u2\n";
            for (int p = 0; p < g.npts(); ++p)
                os << p % g.n1 << ',' << p / g.n1 << ',' << csv_number(g.X1[p]) << ',' << csv_number(g.X2[p]) << ','
                   << csv_number(dom.comp(st.u, b, 0)[p]) << ',' << csv_number(dom.comp(st.u, b, 1)[p]) << '\n';
            std::string f = "snapshot_" + std::to_string(k) + "_block" + std::to_string(b) + ".csv";
            write_atomic(path(f), os.str());
            out.files.push_back(f);
        }
    };
    while (done < opt.n_steps) {
        int target = opt.n_steps;
        while (next_snap < snaps.size() && int(std::lround(snaps[next_snap] / opt.dt)) <= done) {
            snapshot(next_snap);
            ++next_snap;
        }
        if (next_snap < snaps.size())
            target = std::min(target, std::max(done + 1, int(std::lround(snaps[next_snap] / opt.dt))));
        RunOptions seg = opt;
        seg.n_steps = target - done;
        RunResult r = rk4_advance(op, st, forcing ? &forcing : nullptr, seg);
        // segment-local step counters restart at zero; keep the global cadence
        for (const auto& e : r.energy)
            if (all.energy.empty() || e.t > all.energy.back().t)
                all.energy.push_back(e);
        for (std::size_t k = 0; k < r.receivers.size(); ++k)
            for (const auto& smp : r.receivers[k])
                if (all.receivers[k].empty() || smp.t > all.receivers[k].back().t)
                    all.receivers[k].push_back(smp);
        done = target;
    }
    while (next_snap < snaps.size()) {
        snapshot(next_snap);
        ++next_snap;
    }

    if (opt.energy_every > 0) {
        std::ostringstream os;
        os << "t,kinetic,strain,remainder,correction,total\n";
        for (const auto& e : all.energy)
            os << csv_number(e.t) << ',' << csv_number(e.E.kinetic) << ',' << csv_number(e.E.strain) << ','
               << csv_number(e.E.remainder) << ',' << csv_number(e.E.correction) << ',' << csv_number(e.E.total)
               << '\n';
        write_atomic(path("energy.csv"), os.str());
        out.files.push_back("energy.csv");
        if (!all.energy.empty() && all.energy.front().E.total != 0) {
            double e0 = all.energy.front().E.total, dmax = 0;
            for (const auto& e : all.energy)
                dmax = std::max(dmax, std::abs(e.E.total - e0));
            out.energy_drift_rel = dmax / std::abs(e0);
        }
    }
    for (std::size_t k = 0; k < all.receivers.size(); ++k) {
        std::ostringstream os;
        os << "t,u1,u2,v1,v2\n";
        for (const auto& r : all.receivers[k])
            os << csv_number(r.t) << ',' << csv_number(r.u1) << ',' << csv_number(r.u2) << ',' << csv_number(r.v1)
               << ',' << csv_number(r.v2) << '\n';
        std::string f = "receiver_" + std::to_string(k) + ".csv";
        write_atomic(path(f), os.str());
        out.files.push_back(f);
    }
    return out;
}

void write_manifest(const Json& cfg, const std::string& command, const std::string& out_dir)
{
    Json m;
    m["command"] = command;
    m["config"] = cfg;
    m["seed"] = cfg.value("seed", 0);
    m["versions"] = {{"esbp", "1.0.0"}, {"compiler", __VERSION__}, {"cxx_standard", __cplusplus},
                     {"openmp", _OPENMP}};
    m["threads"] = omp_get_max_threads();
    write_atomic((std::filesystem::path(out_dir) / "manifest.json").string(), m.dump(2) + "\n");
}

}
