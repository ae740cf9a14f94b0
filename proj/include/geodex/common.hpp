#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace geodex {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

enum class Errc {
    NearBoundary,
    OutsideBall,
    InvalidPoint,
    TooFewSamples,
    OutsideChartU,
    ReflectedDiagonal,
    ChartMismatch,
    ChartBoundary,
    TranslationCase,
    LeavesChart,
    ChartExit,
    StepFailure,
    DegenerateNormalizer,
    SingularPoint,
    InvalidArgument,
};

const char* errc_name(Errc e);

class GeometryError : public std::runtime_error {
public:
    GeometryError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline double abs2(cplx z) { return std::norm(z); }

} // namespace geodex
