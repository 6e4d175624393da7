#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mogap/scheme.hpp"

namespace mogap::opt {

struct Degrees {
    int f1 = 3;
    int f1t = 1;
    int P = 2;
};

struct OptimizeConfig {
    Degrees degrees;
    double c_lo = 0.50;
    double c_hi = 0.53;
    double c_step = 0.001;
    double bisection_tol = 1e-7;
    int max_iters = 3000;
    double simplex_scale = 0.05;
    std::uint64_t seed = 1;
    // Outer rounds of (maximize h at a probe c) / (re-bisect c*).
    int outer_rounds = 8;
    // Initial distance of the probe below the current c*.
    double probe_offset = 2e-5;

    // Throws ValidationError.
    void validate() const;
};

// h(lo) - 1 and h(hi) - 1 have opposite signs.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Grid c_lo + i*step (last point clamped to c_hi); first adjacent pair where
// h - 1 changes sign. Errors from h_value propagate.
std::optional<Bracket> bracket_scan(const CoeffScheme& scheme, double c_lo, double c_hi, double step);

// Bisection to width <= tol; returns the endpoint with h > 1.
double threshold_c(const CoeffScheme& scheme, Bracket bracket, double tol);

struct TracePoint {
    int iteration = 0;
    double objective = 0.0;
};

struct NelderMeadOptions {
    int max_iters = 1000;
    double simplex_scale = 0.05;
    std::uint64_t seed = 1;
    double diameter_tol = 1e-7;
    // Maps a vertex to the coordinates the diameter test is measured in.
    std::function<std::vector<double>(const std::vector<double>&)> normalize;
};

struct NelderMeadResult {
    std::vector<double> best;
    double value = 0.0;
    std::vector<TracePoint> trace;
    int iterations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Minimizes objective; coefficients (reflect, expand, contract, shrink) =
// (1, 2, 0.5, 0.5). Non-finite values away from the start count as +inf.
NelderMeadResult nelder_mead(const Objective& objective, const std::vector<double>& start,
                             const NelderMeadOptions& options);

// Packs the free parameters of a scheme: f1 and f1t coefficients, the P
// coefficients of x^1..x^deg except one pinned coefficient, and r last.
class SchemeLayout {
public:
    SchemeLayout(Degrees degrees, const CoeffScheme& start);

    std::vector<double> encode(const CoeffScheme& scheme) const;
    // r is clamped to [kMinR, kMaxR].
    CoeffScheme decode(const std::vector<double>& x) const;
    std::vector<double> normalized(const std::vector<double>& x) const;
    std::size_t dimension() const;

    static constexpr double kMinR = 1.0;
    static constexpr double kMaxR = 1.5;

private:
    Degrees degrees_;
    int pinned_ = -1;  // exponent of the pinned P coefficient, -1 if none
    double pinned_value_ = 0.0;
};

// Maximizes h(c) over the scheme parameters at fixed c and degrees.
struct LocalSearch {
    CoeffScheme scheme;
    double h = 0.0;
    std::vector<TracePoint> trace;
};
LocalSearch maximize_h_at(const CoeffScheme& start, double c, Degrees degrees, const NelderMeadOptions& options);

struct OptimizeReport {
    CoeffScheme best_scheme;
    double c_star = 0.0;
    double margin = 0.0;  // fresh h(c_star) - 1
    std::vector<TracePoint> trace;
};

OptimizeReport optimize_scheme(const OptimizeConfig& config, const CoeffScheme& start);

struct RowReport {
    std::string name;
    double c = 0.0;
    double r = 0.0;
    double h_published = 0.0;
    double margin_published = 0.0;
    // "published", "recovered" or "failed"
    std::string path;
    double h_final = 0.0;
    double margin_final = 0.0;
    double seconds = 0.0;
};

Degrees degrees_of(const CoeffScheme& scheme);

std::vector<RowReport> verify_rows(const std::vector<TableRow>& rows, const NelderMeadOptions& recovery);
std::vector<RowReport> verify_table();

}  // namespace mogap::opt
