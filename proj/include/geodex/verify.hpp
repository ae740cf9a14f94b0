#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geodex/common.hpp"

namespace geodex::verify {

// Closed: exact-arithmetic identities. Fd: finite-difference or integrator based.
// Exact and Bound checks ignore tolerance overrides.
enum class Kind { Closed, Fd, Exact, Bound };

const char* kind_name(Kind k);

struct Check {
    int criterion = 0;  // acceptance criterion covered, 0 for supporting invariants
    std::string name;
    Kind kind = Kind::Fd;
    double measured = 0.0;  // worst error; for Bound, the smallest value that must exceed tol
    double tolerance = 0.0;
    int samples = 0;
    bool pass = false;
    std::string note;
};

struct Tolerances {
    std::optional<double> closed, fd;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const Tolerances& tol = {});

// Internal plumbing shared by the suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    // uniform in the square [-s, s]^2
    cplx square(double s) { return {uniform(-s, s), uniform(-s, s)}; }
    // modulus uniform in [lo, hi], uniform phase
    cplx annulus(double lo, double hi);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

class Recorder {
public:
    explicit Recorder(std::vector<Check>& out) : out_(out) {}
    // passes when measured < tol (or > tol for Bound; == 0 failures for Exact)
    void add(int criterion, std::string name, Kind kind, double measured, double tol, int samples,
             std::string note = {});

private:
    std::vector<Check>& out_;
};

void suite_hyp3(Recorder& rec, Sampler& rng);
void suite_kahler(Recorder& rec, Sampler& rng);
void suite_killing(Recorder& rec, Sampler& rng);
void suite_flows(Recorder& rec, Sampler& rng);
void suite_geoflow(Recorder& rec, Sampler& rng);
void suite_ruled(Recorder& rec, Sampler& rng);

} // namespace geodex::verify
