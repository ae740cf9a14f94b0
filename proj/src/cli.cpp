#include "geodex/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geodex/geoflow.hpp"
#include "geodex/isometry.hpp"
#include "geodex/lspace.hpp"
#include "geodex/ruled.hpp"

namespace geodex::cli {

using json = nlohmann::json;

namespace {

// ---- payload parsing ----

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path.empty() ? "/" : path, "expected an object");
}

bool has(const json& obj, const char* key) { return obj.is_object() && obj.contains(key); }

const json& field(const json& obj, const std::string& path, const char* key) {
    expect_object(obj, path);
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(join(path, key), "missing required field");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError(path, "expected a finite number");
    return v;
}

double number(const json& obj, const std::string& path, const char* key) {
    return number(field(obj, path, key), join(path, key));
}

cplx complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw ValidationError(path, "expected [re, im]");
    return {number(j[0], join(path, 0)), number(j[1], join(path, 1))};
}

cplx complex(const json& obj, const std::string& path, const char* key) {
    return complex(field(obj, path, key), join(path, key));
}

cplx complex_or_zero(const json& obj, const std::string& path, const char* key) {
    return has(obj, key) ? complex(obj, path, key) : cplx(0.0);
}

Eigen::Vector3d vec3(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) throw ValidationError(path, "expected [x, y, z]");
    return {number(j[0], join(path, 0)), number(j[1], join(path, 1)), number(j[2], join(path, 2))};
}

int integer(const json& j, const std::string& path, int lo, int hi) {
    if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        throw ValidationError(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::pair<double, double> range(const json& obj, const std::string& path, const char* key,
                                std::pair<double, double> dflt) {
    if (!has(obj, key)) return dflt;
    const json& j = obj.at(key);
    const std::string p = join(path, key);
    if (!j.is_array() || j.size() != 2) throw ValidationError(p, "expected [lo, hi]");
    const double lo = number(j[0], join(p, 0)), hi = number(j[1], join(p, 1));
    if (!(lo < hi)) throw ValidationError(p, "expected lo < hi");
    return {lo, hi};
}

// Riemann-sphere point: [re, im] chart value, [x, y, z] unit vector, or "inf".
lspace::SpherePoint sphere(const json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "inf") return lspace::SpherePoint::infinity();
    if (j.is_array() && j.size() == 2) return lspace::SpherePoint::from_chart(complex(j, path));
    if (j.is_array() && j.size() == 3) {
        const Eigen::Vector3d v = vec3(j, path);
        if (std::abs(v.norm() - 1.0) > 1e-9) throw ValidationError(path, "sphere vector must have unit length");
        return lspace::SpherePoint(v);
    }
    throw ValidationError(path, "expected [re, im], a unit 3-vector, or \"inf\"");
}

struct Base {
    std::optional<hyp3::GeodesicUhs> uhs;
    lspace::GeodesicGlobal global;
};

// geodesic given by (xi, eta) or by (mu1, mu2)
Base geodesic(const json& obj, const std::string& path) {
    expect_object(obj, path);
    if (has(obj, "xi") || has(obj, "eta")) {
        const hyp3::GeodesicUhs g(complex(obj, path, "xi"), complex(obj, path, "eta"));
        return {g, lspace::mu_from_xieta(g)};
    }
    if (has(obj, "mu1") || has(obj, "mu2"))
        return {std::nullopt, lspace::GeodesicGlobal(sphere(field(obj, path, "mu1"), join(path, "mu1")),
                                                     sphere(field(obj, path, "mu2"), join(path, "mu2")))};
    throw ValidationError(path, "expected either xi/eta or mu1/mu2");
}

isometry::HypKilling hyp_killing(const json& obj, const std::string& path) {
    expect_object(obj, path);
    if (!has(obj, "alpha") && !has(obj, "beta") && !has(obj, "gamma"))
        throw ValidationError(path, "expected at least one of alpha, beta, gamma");
    return {complex_or_zero(obj, path, "alpha"), complex_or_zero(obj, path, "beta"),
            complex_or_zero(obj, path, "gamma")};
}

geoflow::GeoParams params(const json& obj, const std::string& path) {
    const json& b = field(obj, path, "b");
    const std::string p = join(path, "b");
    if (!b.is_array() || b.size() != 4) throw ValidationError(p, "expected four complex numbers [b1, b2, b3, b4]");
    const cplx b1 = complex(b[0], join(p, 0)), b2 = complex(b[1], join(p, 1)), b3 = complex(b[2], join(p, 2)),
               b4 = complex(b[3], join(p, 3));
    if (b2 == 0.0) throw ValidationError(join(p, 1), "b2 must be nonzero");
    if (b3 == 0.0) throw ValidationError(join(p, 2), "b3 must be nonzero");
    return {b1, b2, b3, b4};
}

LTangent tangent(const json& obj, const std::string& path, Chart chart) {
    return {chart, complex(obj, path, "a"), complex(obj, path, "b")};
}

// ---- output helpers ----

json J(cplx z) { return json::array({z.real(), z.imag()}); }
json J(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }
json J(const LTangent& t) { return {{"a", J(t.a)}, {"b", J(t.b)}}; }
json J(const isometry::LKilling& c) { return json::array({J(c.c1), J(c.c2), J(c.c3)}); }

json J(const lspace::SpherePoint& p) {
    json out = {{"vector", J(p.vec())}};
    if (auto c = p.chart()) out["chart"] = J(*c);
    else out["chart"] = "inf";
    return out;
}

json J(const Eigen::Matrix4d& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
    return rows;
}

json describe(const lspace::GeodesicGlobal& g) {
    json out = {{"mu1", J(g.mu1())}, {"mu2", J(g.mu2())}};
    const lspace::Endpoints e = lspace::endpoints_ball(g);
    out["past"] = J(e.past);
    out["future"] = J(e.future);
    try {
        const hyp3::GeodesicUhs u = lspace::xieta_from_mu(g);
        out["xi"] = J(u.xi());
        out["eta"] = J(u.eta());
    } catch (const GeometryError&) {
        out["chart_u"] = false;
    }
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---- commands ----

json cmd_convert(const json& p) {
    expect_object(p, "/payload");
    if (has(p, "ball")) {
        const hyp3::UhsPoint u = hyp3::ball_to_uhs(hyp3::BallPoint(vec3(p.at("ball"), "/payload/ball")));
        return {{"t", u.t()}, {"z", J(u.z())}};
    }
    const hyp3::UhsPoint u(number(p, "/payload", "t"), complex(p, "/payload", "z"));
    return {{"ball", J(hyp3::uhs_to_ball(u).y())}};
}

json cmd_endpoints(const json& p) { return describe(geodesic(p, "/payload").global); }

json cmd_metric(const json& p) {
    const Base b = geodesic(p, "/payload");
    json out;
    if (b.uhs) {
        const Eigen::Matrix4d G = lspace::gram_xieta(*b.uhs);
        out["chart"] = "xieta";
        out["gram"] = J(G);
        const auto sig = lspace::signature(G);
        out["signature"] = json::array({sig.first, sig.second});
    } else {
        auto [m1, m2] = b.global.chart_values();
        const Eigen::Matrix4d G = lspace::gram_mu(m1, m2);
        out["chart"] = "mu";
        out["gram"] = J(G);
        const auto sig = lspace::signature(G);
        out["signature"] = json::array({sig.first, sig.second});
    }
    const Chart chart = b.uhs ? Chart::XiEta : Chart::Mu;
    auto G = [&](const LTangent& X, const LTangent& Y) {
        return b.uhs ? lspace::metric_G(*b.uhs, X, Y) : lspace::metric_G(b.global, X, Y);
    };
    auto W = [&](const LTangent& X, const LTangent& Y) {
        return b.uhs ? lspace::omega(*b.uhs, X, Y) : lspace::omega(b.global, X, Y);
    };
    auto Jop = [&](const LTangent& X) { return b.uhs ? lspace::apply_J(*b.uhs, X) : lspace::apply_J(b.global, X); };
    if (has(p, "X")) {
        const LTangent X = tangent(p.at("X"), "/payload/X", chart);
        out["JX"] = J(Jop(X));
        out["G_XX"] = G(X, X);
        if (has(p, "Y")) {
            const LTangent Y = tangent(p.at("Y"), "/payload/Y", chart);
            out["G"] = G(X, Y);
            out["omega"] = W(X, Y);
        }
    }
    return out;
}

json cmd_curvature(const json& p) {
    const Base b = geodesic(p, "/payload");
    const lspace::CurvatureReport r = lspace::curvature_at(b.global);
    return {{"riemann_closed", J(r.riemann_nonzero)},
            {"riemann_numeric", J(r.riemann_numeric)},
            {"scalar", r.scalar},
            {"scalar_imag", r.scalar_imag},
            {"weyl_norm", r.weyl_norm},
            {"signature", json::array({r.signature.first, r.signature.second})}};
}

json cmd_killing(const json& p) {
    expect_object(p, "/payload");
    if (has(p, "b")) {
        const geoflow::GeoParams gp = params(p, "/payload");
        return {{"killing", J(geoflow::killing_of_geodesic(gp))}};
    }
    const isometry::HypKilling k = hyp_killing(p, "/payload");
    const isometry::LKilling c = isometry::induced_killing(k);
    json out = {{"induced", J(c)}};
    if (has(p, "point")) {
        const json& q = p.at("point");
        const hyp3::UhsPoint x(number(q, "/payload/point", "t"), complex(q, "/payload/point", "z"));
        const hyp3::Tangent3 v = isometry::hyp_killing_vector(k, x);
        out["hyp_vector"] = {{"dz", J(v.v)}, {"dt", v.u}};
    }
    if (has(p, "geodesic")) {
        const Base b = geodesic(p.at("geodesic"), "/payload/geodesic");
        out["l_vector"] = J(isometry::l_killing_vector(c, b.global));
    }
    return out;
}

json cmd_flow(const json& p) {
    const isometry::HypKilling k = hyp_killing(p, "/payload");
    const json& q = field(p, "/payload", "point");
    const hyp3::UhsPoint x(number(q, "/payload/point", "t"), complex(q, "/payload/point", "z"));
    const double s = number(p, "/payload", "s");
    const hyp3::UhsPoint y = isometry::hyp_flow(k, x, s);
    json out = {{"t", y.t()}, {"z", J(y.z())}};
    if (!(k.alpha == 0.0 && k.gamma == 0.0)) {
        const isometry::FlowAux aux = isometry::flow_aux(k);
        out["tau"] = J(aux.tau);
        out["gamma1"] = J(aux.gamma1);
    }
    return out;
}

json cmd_act(const json& p) {
    const isometry::HypKilling k = hyp_killing(p, "/payload");
    const json& q = field(p, "/payload", "geodesic");
    const hyp3::GeodesicUhs g(complex(q, "/payload/geodesic", "xi"), complex(q, "/payload/geodesic", "eta"));
    const double s = number(p, "/payload", "s");
    const hyp3::GeodesicUhs h = isometry::l_action(k, g, s);
    json out = describe(lspace::mu_from_xieta(h));
    out["xi"] = J(h.xi());
    out["eta"] = J(h.eta());
    out["r_shift"] = isometry::l_action_r_shift(k, g, s);
    return out;
}

json cmd_geodesic(const json& p) {
    const geoflow::GeoParams gp = params(p, "/payload");
    std::vector<double> ts;
    const json& tj = field(p, "/payload", "t");
    if (tj.is_array()) {
        for (std::size_t i = 0; i < tj.size(); ++i) ts.push_back(number(tj[i], join("/payload/t", i)));
    } else {
        ts.push_back(number(tj, "/payload/t"));
    }
    json out = {{"norm_constant", geoflow::tangent_norm_constant(gp)},
                {"null", ruled::is_totally_geodesic(gp)},
                {"killing", J(geoflow::killing_of_geodesic(gp))}};
    json samples = json::array();
    for (double t : ts) {
        const hyp3::GeodesicUhs g = geoflow::geodesic_G(gp, t);
        json s = describe(geoflow::geodesic_G_mu(gp, t));
        s["t"] = t;
        s["xi"] = J(g.xi());
        s["eta"] = J(g.eta());
        s["velocity"] = J(geoflow::geodesic_G_velocity(gp, t));
        if (has(p, "r")) {
            const double r = number(p, "/payload", "r");
            const hyp3::UhsPoint x = ruled::surface_point(gp, r, t);
            s["point"] = {{"t", x.t()}, {"z", J(x.z())}};
        }
        samples.push_back(std::move(s));
    }
    out["samples"] = std::move(samples);
    if (has(p, "integrate") && p.at("integrate").is_boolean() && p.at("integrate").get<bool>() && ts.size() > 1) {
        std::vector<double> rel;
        for (double t : ts) rel.push_back(t - ts.front());
        const auto path = geoflow::integrate_geodesic_numeric(geoflow::geodesic_G(gp, ts.front()),
                                                              geoflow::geodesic_G_velocity(gp, ts.front()), rel);
        double dev = 0.0;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const hyp3::GeodesicUhs g = geoflow::geodesic_G(gp, ts[i]);
            dev = std::max({dev, std::abs(path[i].xi - g.xi()), std::abs(path[i].eta - g.eta())});
        }
        out["integrator_max_deviation"] = dev;
    }
    return out;
}

void write_file(const std::string& path, const std::string& text, const std::string& field_path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError(field_path, "cannot open " + path + " for writing");
    f << text;
}

JobResult cmd_surface(const json& p, Format format) {
    const geoflow::GeoParams gp = params(p, "/payload");
    int nr = 64, nt = 64;
    if (has(p, "grid")) {
        const json& g = p.at("grid");
        if (!g.is_array() || g.size() != 2) throw ValidationError("/payload/grid", "expected [nr, nt]");
        nr = integer(g[0], "/payload/grid/0", 2, 2048);
        nt = integer(g[1], "/payload/grid/1", 2, 2048);
    }
    const auto rr = range(p, "/payload", "r_range", {-5.0, 5.0});
    const auto tr = range(p, "/payload", "t_range", {0.2, 2.0});
    std::string ruling = "geodesic";
    if (has(p, "ruling")) {
        if (!p.at("ruling").is_string()) throw ValidationError("/payload/ruling", "expected a string");
        ruling = p.at("ruling").get<std::string>();
        if (ruling != "geodesic" && ruling != "perturbed")
            throw ValidationError("/payload/ruling", "expected \"geodesic\" or \"perturbed\"");
    }
    const ruled::SurfacePatch patch = ruling == "geodesic"
        ? ruled::sample_surface(gp, nr, nt, rr, tr)
        : ruled::sample_surface(ruled::perturbed_ruling(gp), nr, nt, rr, tr);
    json out = {{"grid", json::array({nr, nt})},
                {"r_range", json::array({rr.first, rr.second})},
                {"t_range", json::array({tr.first, tr.second})},
                {"ruling", ruling},
                {"max_abs_H", patch.max_abs_H()},
                {"max_abs_K", patch.max_abs_K()},
                {"max_abs_K_rr", patch.max_abs_Krr()},
                {"totally_geodesic", ruled::is_totally_geodesic(gp)}};
    for (const char* key : {"obj", "csv"}) {
        if (!has(p, key)) continue;
        if (!p.at(key).is_string()) throw ValidationError(join("/payload", key), "expected a file path");
        const std::string path = p.at(key).get<std::string>();
        write_file(path, std::string(key) == "obj" ? ruled::to_obj(patch) : ruled::to_csv(patch), join("/payload", key));
        out[key] = path;
    }
    if (format == Format::Obj) return {ruled::to_obj(patch), 0};
    if (format == Format::Csv) return {ruled::to_csv(patch), 0};
    return {out.dump(2) + "\n", 0};
}

json check_json(const verify::Check& c) {
    return {{"criterion", c.criterion}, {"name", c.name},     {"kind", verify::kind_name(c.kind)},
            {"measured", c.measured},   {"tolerance", c.tolerance}, {"samples", c.samples},
            {"pass", c.pass},           {"note", c.note}};
}

JobResult cmd_verify(const JobSpec& job) {
    const json& p = job.payload;
    expect_object(p, "/payload");
    std::string suite = "all";
    if (has(p, "suite")) {
        if (!p.at("suite").is_string()) throw ValidationError("/payload/suite", "expected a string");
        suite = p.at("suite").get<std::string>();
        if (suite != "all" && !verify::is_suite(suite))
            throw ValidationError("/payload/suite", "unknown suite \"" + suite + "\"");
    }
    std::uint64_t seed = 0;
    if (has(p, "seed")) {
        const json& s = p.at("seed");
        if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0))
            throw ValidationError("/payload/seed", "expected a non-negative integer");
        seed = s.get<std::uint64_t>();
    }
    if (job.seed) seed = *job.seed;
    std::vector<std::string> names;
    if (suite == "all") names = verify::suite_names();
    else names.push_back(suite);

    std::vector<verify::SuiteReport> reps;
    bool ok = true;
    for (const auto& n : names) {
        reps.push_back(verify::run_suite(n, seed, job.tolerances));
        ok = ok && reps.back().passed();
    }
    if (job.format == Format::Csv) {
        std::ostringstream os;
        os << "suite,criterion,name,kind,measured,tolerance,samples,pass\n";
        for (const auto& r : reps)
            for (const auto& c : r.checks)
                os << r.suite << "," << c.criterion << "," << c.name << "," << verify::kind_name(c.kind) << ","
                   << fmt(c.measured) << "," << fmt(c.tolerance) << "," << c.samples << "," << (c.pass ? 1 : 0)
                   << "\n";
        return {os.str(), ok ? 0 : 2};
    }
    json out = {{"suite", suite}, {"seed", seed}, {"passed", ok}};
    json tol = json::object();
    if (job.tolerances.closed) tol["closed"] = *job.tolerances.closed;
    if (job.tolerances.fd) tol["fd"] = *job.tolerances.fd;
    out["tolerance_overrides"] = tol;
    json arr = json::array();
    for (const auto& r : reps) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back(check_json(c));
        arr.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    out["reports"] = arr;
    return {out.dump(2) + "\n", ok ? 0 : 2};
}

JobResult error_result(const json& err) { return {json{{"error", err}}.dump(2) + "\n", 1}; }

} // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"convert", "endpoints", "metric", "curvature", "killing",
                                            "flow",    "act",       "geodesic", "surface", "verify"};
    return c;
}

JobResult run(const JobSpec& job) {
    try {
        const std::string& c = job.command;
        if (std::find(commands().begin(), commands().end(), c) == commands().end())
            throw ValidationError("/command", "unknown command \"" + c + "\"");
        if (job.format == Format::Obj && c != "surface")
            throw ValidationError("/format", "obj output is only available for surface");
        if (job.format == Format::Csv && c != "surface" && c != "verify")
            throw ValidationError("/format", "csv output is only available for surface and verify");
        if (job.tolerances.closed && !(*job.tolerances.closed > 0.0))
            throw ValidationError("/tolerances/closed", "expected a positive number");
        if (job.tolerances.fd && !(*job.tolerances.fd > 0.0))
            throw ValidationError("/tolerances/fd", "expected a positive number");

        if (c == "verify") return cmd_verify(job);
        if (c == "surface") return cmd_surface(job.payload, job.format);
        json out;
        if (c == "convert") out = cmd_convert(job.payload);
        else if (c == "endpoints") out = cmd_endpoints(job.payload);
        else if (c == "metric") out = cmd_metric(job.payload);
        else if (c == "curvature") out = cmd_curvature(job.payload);
        else if (c == "killing") out = cmd_killing(job.payload);
        else if (c == "flow") out = cmd_flow(job.payload);
        else if (c == "act") out = cmd_act(job.payload);
        else out = cmd_geodesic(job.payload);
        return {out.dump(2) + "\n", 0};
    } catch (const ValidationError& e) {
        return error_result({{"kind", "validation"}, {"path", e.path()}, {"message", e.what()}});
    } catch (const GeometryError& e) {
        return error_result({{"kind", "geometry"}, {"code", errc_name(e.code())}, {"message", e.what()}});
    }
}

} // namespace geodex::cli
