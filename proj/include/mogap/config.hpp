#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mogap/optimizer.hpp"
#include "mogap/scheme.hpp"

namespace mogap {

// Flat `key = value` configuration; arrays are ascending-degree coefficient
// lists `[c0, c1, ...]`, `#` starts a comment. Recognized keys:
//
//   preset                                   table1-row1 | table1-row2 | table1-row3
//   r, c, f1, f1t, P                         scheme and evaluation point
//   T                                        oracle height
//   degrees = [f1, f1t, P], c_lo, c_hi, c_step, bisection_tol, max_iters,
//   simplex_scale, seed, outer_rounds, probe_offset   optimizer settings
//
// A preset fills r, c and the polynomials; keys after it override.
struct RunConfig {
    CoeffScheme scheme;
    bool has_scheme = false;
    std::optional<double> c;
    std::optional<double> T;
    opt::OptimizeConfig optimize;
    bool has_degrees = false;
};

// Throws ValidationError with a line number on malformed input or unknown keys.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
RunConfig preset_config(std::string_view name);

// Emits a config that parse_config reads back bit-exactly.
void write_config(std::ostream& out, const CoeffScheme& scheme, std::optional<double> c);

// "%.15g"
std::string format_number(double x);

}  // namespace mogap
