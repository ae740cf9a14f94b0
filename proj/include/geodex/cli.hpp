#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geodex/verify.hpp"

namespace geodex::cli {

enum class Format { Json, Csv, Obj };

struct JobSpec {
    std::string command;
    nlohmann::json payload = nlohmann::json::object();
    std::optional<std::uint64_t> seed;  // overrides payload "seed"
    verify::Tolerances tolerances;
    Format format = Format::Json;
};

struct JobResult {
    std::string output;
    int exit_code = 0;
};

// Schema violation; path is a JSON pointer into the job, e.g. "/payload/z/1".
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string path, const std::string& msg)
        : std::runtime_error(path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const std::vector<std::string>& commands();

// Exit codes: 0 success, 1 validation or input-geometry error, 2 failed verify check.
JobResult run(const JobSpec& job);

} // namespace geodex::cli
