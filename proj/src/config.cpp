#include "mogap/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "mogap/errors.hpp"

namespace mogap {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ValidationError("config line " + std::to_string(line) + ": " + msg);
}

double parse_real(std::string_view token, int line) {
    const std::string s(trim(token));
    if (s.empty()) fail(line, "empty number");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        fail(line, "bad number '" + s + "'");
    }
    return v;
}

long parse_int(std::string_view token, int line) {
    const double v = parse_real(token, line);
    if (v != std::floor(v) || std::abs(v) > 1e15) fail(line, "expected an integer");
    return static_cast<long>(v);
}

std::vector<double> parse_array(std::string_view value, int line) {
    value = trim(value);
    if (value.size() < 2 || value.front() != '[' || value.back() != ']') fail(line, "expected [..] array");
    value = trim(value.substr(1, value.size() - 2));
    std::vector<double> out;
    if (value.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        out.push_back(parse_real(value.substr(start, comma - start), line));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

struct PartialScheme {
    std::optional<double> r;
    std::optional<std::vector<double>> f1, f1t, P;
};

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x + 0.0);
    return buf;
}

RunConfig preset_config(std::string_view name) {
    const TableRow& row = preset(name);
    RunConfig cfg;
    cfg.scheme = row.scheme;
    cfg.has_scheme = true;
    cfg.c = row.c;
    return cfg;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    PartialScheme part;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "preset") {
            try {
                const TableRow& row = preset(value);
                part.r = row.scheme.r;
                part.f1 = row.scheme.f1.dense_coefficients();
                part.f1t = row.scheme.f1t.dense_coefficients();
                part.P = row.scheme.P.dense_coefficients();
                cfg.c = row.c;
            } catch (const ValidationError& e) {
                fail(line_no, e.what());
            }
        } else if (key == "r") {
            part.r = parse_real(value, line_no);
        } else if (key == "c") {
            cfg.c = parse_real(value, line_no);
        } else if (key == "f1") {
            part.f1 = parse_array(value, line_no);
        } else if (key == "f1t") {
            part.f1t = parse_array(value, line_no);
        } else if (key == "P") {
            part.P = parse_array(value, line_no);
        } else if (key == "T") {
            cfg.T = parse_real(value, line_no);
        } else if (key == "degrees") {
            const auto d = parse_array(value, line_no);
            if (d.size() != 3) fail(line_no, "degrees needs three entries [f1, f1t, P]");
            for (double v : d) {
                if (v != std::floor(v) || v < 0 || v > 64) fail(line_no, "degrees must be small nonnegative integers");
            }
            cfg.optimize.degrees = {static_cast<int>(d[0]), static_cast<int>(d[1]), static_cast<int>(d[2])};
            cfg.has_degrees = true;
        } else if (key == "c_lo") {
            cfg.optimize.c_lo = parse_real(value, line_no);
        } else if (key == "c_hi") {
            cfg.optimize.c_hi = parse_real(value, line_no);
        } else if (key == "c_step") {
            cfg.optimize.c_step = parse_real(value, line_no);
        } else if (key == "bisection_tol") {
            cfg.optimize.bisection_tol = parse_real(value, line_no);
        } else if (key == "max_iters") {
            cfg.optimize.max_iters = static_cast<int>(parse_int(value, line_no));
        } else if (key == "simplex_scale") {
            cfg.optimize.simplex_scale = parse_real(value, line_no);
        } else if (key == "seed") {
            const long s = parse_int(value, line_no);
            if (s < 0) fail(line_no, "seed must be nonnegative");
            cfg.optimize.seed = static_cast<std::uint64_t>(s);
        } else if (key == "outer_rounds") {
            cfg.optimize.outer_rounds = static_cast<int>(parse_int(value, line_no));
        } else if (key == "probe_offset") {
            cfg.optimize.probe_offset = parse_real(value, line_no);
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    const bool any = part.r || part.f1 || part.f1t || part.P;
    if (any) {
        if (!part.r || !part.f1) throw ValidationError("config: a scheme needs at least r and f1");
        try {
            cfg.scheme = CoeffScheme::from_coefficients(*part.r, *part.f1, part.f1t.value_or(std::vector<double>{}),
                                                        part.P.value_or(std::vector<double>{}));
        } catch (const DomainError& e) {
            throw ValidationError(std::string("config: ") + e.what());
        }
        cfg.has_scheme = true;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void write_config(std::ostream& out, const CoeffScheme& scheme, std::optional<double> c) {
    auto num = [](double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
        return std::string(buf);
    };
    auto arr = [&](const FracPoly& p) {
        std::string s = "[";
        const auto d = p.dense_coefficients();
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + num(d[i]);
        return s + "]";
    };
    out << "r = " << num(scheme.r) << "\n";
    if (c) out << "c = " << num(*c) << "\n";
    out << "f1 = " << arr(scheme.f1) << "\n";
    out << "f1t = " << arr(scheme.f1t) << "\n";
    out << "P = " << arr(scheme.P) << "\n";
}

}  // namespace mogap
