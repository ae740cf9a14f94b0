// Acceptance run: criteria 1-10 from the verification suites, 11 from the CLI binary.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "geodex/verify.hpp"

namespace {

struct Tally {
    int checks = 0, failed = 0;
    std::string worst;
};

struct Run {
    std::string out;
    int status = -1;
};

Run run_cli(const std::string& cmd) {
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

} // namespace

int main(int argc, char** argv) {
    constexpr std::uint64_t seed = 7;
    std::map<int, Tally> crit;
    for (const auto& name : geodex::verify::suite_names()) {
        const auto rep = geodex::verify::run_suite(name, seed, {});
        for (const auto& c : rep.checks) {
            if (c.criterion < 1 || c.criterion > 10) continue;
            Tally& t = crit[c.criterion];
            ++t.checks;
            if (!c.pass) {
                ++t.failed;
                t.worst += " [" + rep.suite + "/" + c.name + " measured " + std::to_string(c.measured) + "]";
            }
        }
    }
    bool ok = true;
    for (int k = 1; k <= 10; ++k) {
        const Tally& t = crit[k];
        const bool pass = t.checks > 0 && t.failed == 0;
        ok = ok && pass;
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << " (" << t.checks << " checks";
        if (t.failed) std::cout << ", " << t.failed << " failed:" << t.worst;
        std::cout << ")\n";
    }

    bool pass11 = false;
    std::string why;
    if (argc < 2) {
        why = "no CLI binary given";
    } else {
        const std::string bin = quote(argv[1]);
        const auto dir = std::filesystem::temp_directory_path() / "geodex_acceptance";
        std::filesystem::create_directories(dir);
        const auto in = dir / "surface.json";
        std::ofstream(in) << R"({"b":[[0.2,0.1],[0.7,0.7],[1,0],[0,0.3]],"grid":[16,16]})";
        const std::string verify = bin + " verify --suite all --seed 11 < /dev/null 2>&1";
        const std::string surface = bin + " surface --format csv --input " + quote(in.string()) + " 2>&1";
        const Run v1 = run_cli(verify), v2 = run_cli(verify);
        const Run s1 = run_cli(surface), s2 = run_cli(surface);
        if (v1.status != 0) why = "verify exited " + std::to_string(v1.status);
        else if (v1.out != v2.out) why = "verify output differs between runs";
        else if (s1.status != 0) why = "surface exited " + std::to_string(s1.status);
        else if (s1.out != s2.out) why = "surface output differs between runs";
        else if (v1.out.empty() || s1.out.empty()) why = "empty output";
        else pass11 = true;
    }
    ok = ok && pass11;
    std::cout << "criterion 11: " << (pass11 ? "PASS" : "FAIL");
    if (!why.empty()) std::cout << " (" << why << ")";
    std::cout << "\n";
    return ok ? 0 : 1;
}
