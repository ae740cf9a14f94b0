#include "geodex/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geodex::verify {

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::Closed: return "closed";
    case Kind::Fd: return "fd";
    case Kind::Exact: return "exact";
    case Kind::Bound: return "bound";
    }
    return "unknown";
}

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hyp3", "kahler", "killing", "flows", "geoflow", "ruled"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

cplx Sampler::annulus(double lo, double hi) {
    const double m = uniform(lo, hi);
    return std::polar(m, uniform(-std::numbers::pi, std::numbers::pi));
}

void Recorder::add(int criterion, std::string name, Kind kind, double measured, double tol, int samples,
                   std::string note) {
    Check c;
    c.criterion = criterion;
    c.name = std::move(name);
    c.kind = kind;
    c.measured = measured;
    c.tolerance = tol;
    c.samples = samples;
    c.note = std::move(note);
    out_.push_back(std::move(c));
}

namespace {

void judge(Check& c, const Tolerances& tol) {
    if (c.kind == Kind::Closed && tol.closed) c.tolerance = *tol.closed;
    if (c.kind == Kind::Fd && tol.fd) c.tolerance = *tol.fd;
    switch (c.kind) {
    case Kind::Bound: c.pass = std::isfinite(c.measured) && c.measured > c.tolerance; break;
    case Kind::Exact: c.pass = c.measured == 0.0; break;
    default: c.pass = std::isfinite(c.measured) && c.measured < c.tolerance; break;
    }
}

} // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const Tolerances& tol) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    Recorder rec(rep.checks);
    Sampler rng(seed);
    if (name == "hyp3") suite_hyp3(rec, rng);
    else if (name == "kahler") suite_kahler(rec, rng);
    else if (name == "killing") suite_killing(rec, rng);
    else if (name == "flows") suite_flows(rec, rng);
    else if (name == "geoflow") suite_geoflow(rec, rng);
    else if (name == "ruled") suite_ruled(rec, rng);
    else throw std::invalid_argument("unknown suite: " + name);
    for (auto& c : rep.checks) judge(c, tol);
    return rep;
}

} // namespace geodex::verify
