#include "mogap/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "mogap/errors.hpp"
#include "mogap/hfunc.hpp"

namespace mogap::opt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double h_minus_one(const CoeffScheme& scheme, double c) { return h_value(scheme, c).h - 1.0; }

std::vector<double> padded(const FracPoly& p, int degree, const char* what) {
    std::vector<double> d = p.dense_coefficients();
    if (static_cast<int>(d.size()) > degree + 1) {
        throw ValidationError(std::string("start ") + what + " exceeds configured degree");
    }
    d.resize(static_cast<std::size_t>(degree) + 1, 0.0);
    return d;
}

}  // namespace

void OptimizeConfig::validate() const {
    if (degrees.f1 < 0 || degrees.f1t < 0 || degrees.P < 1) {
        throw ValidationError("optimize: degrees must satisfy f1 >= 0, f1t >= 0, P >= 1");
    }
    if (!(c_lo < c_hi) || !(c_lo > 0.0) || !(c_hi < 1.0)) {
        throw ValidationError("optimize: need 0 < c_lo < c_hi < 1");
    }
    if (!(c_step > 0.0)) throw ValidationError("optimize: c_step must be positive");
    if (!(bisection_tol > 0.0)) throw ValidationError("optimize: bisection_tol must be positive");
    if (max_iters < 0) throw ValidationError("optimize: max_iters must be >= 0");
    if (!(simplex_scale > 0.0)) throw ValidationError("optimize: simplex_scale must be positive");
    if (outer_rounds < 1) throw ValidationError("optimize: outer_rounds must be >= 1");
    if (!(probe_offset > 0.0)) throw ValidationError("optimize: probe_offset must be positive");
}

std::optional<Bracket> bracket_scan(const CoeffScheme& scheme, double c_lo, double c_hi, double step) {
    if (!(c_lo < c_hi) || !(c_lo > 0.0) || !(c_hi < 1.0)) {
        throw DomainError("bracket_scan: need 0 < c_lo < c_hi < 1");
    }
    if (!(step > 0.0)) throw DomainError("bracket_scan: step must be positive");
    const auto n = static_cast<long>(std::ceil((c_hi - c_lo) / step - 1e-9));
    double prev_c = c_lo;
    double prev = h_minus_one(scheme, c_lo);
    for (long i = 1; i <= n; ++i) {
        const double c = std::min(c_lo + static_cast<double>(i) * step, c_hi);
        const double cur = h_minus_one(scheme, c);
        if (prev * cur < 0.0) return Bracket{prev_c, c};
        prev_c = c;
        prev = cur;
    }
    return std::nullopt;
}

double threshold_c(const CoeffScheme& scheme, Bracket bracket, double tol) {
    if (!(tol > 0.0)) throw DomainError("threshold_c: tol must be positive");
    double lo = bracket.lo;
    double hi = bracket.hi;
    const double f_lo = h_minus_one(scheme, lo);
    const double f_hi = h_minus_one(scheme, hi);
    if (!(f_lo * f_hi < 0.0)) throw DomainError("threshold_c: h - 1 does not change sign on the bracket");
    // Keep `good` on the h > 1 side.
    double good = f_hi > 0.0 ? hi : lo;
    double bad = f_hi > 0.0 ? lo : hi;
    while (std::abs(good - bad) > tol) {
        const double mid = 0.5 * (good + bad);
        if (h_minus_one(scheme, mid) > 0.0) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return good;
}

NelderMeadResult nelder_mead(const Objective& objective, const std::vector<double>& start,
                             const NelderMeadOptions& options) {
    const double f0 = objective(start);
    if (!std::isfinite(f0)) throw DomainError("nelder_mead: objective is not finite at the start point");

    NelderMeadResult result{start, f0, {{0, f0}}, 0};
    const std::size_t n = start.size();
    if (options.max_iters <= 0 || n == 0) return result;

    auto eval = [&](const std::vector<double>& x) {
        double v = kInf;
        try {
            v = objective(x);
        } catch (const std::exception&) {
            v = kInf;
        }
        return std::isfinite(v) ? v : kInf;
    };
    auto norm = [&](const std::vector<double>& x) { return options.normalize ? options.normalize(x) : x; };

    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.push_back({start, f0});
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = start;
        const double base = std::abs(x[i]) > 1e-3 ? std::abs(x[i]) : 0.1;
        const double step = options.simplex_scale * base;
        x[i] += flip(rng) ? step : -step;
        const double f = eval(x);
        simplex.push_back({std::move(x), f});
    }

    auto affine = [n](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = from[j] + t * (to[j] - from[j]);
        return out;
    };

    int iter = 0;
    for (; iter < options.max_iters; ++iter) {
        std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

        double diameter = 0.0;
        const std::vector<double> best_n = norm(simplex.front().x);
        for (std::size_t k = 1; k < simplex.size(); ++k) {
            const std::vector<double> other = norm(simplex[k].x);
            for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(other[j] - best_n[j]));
        }
        if (diameter < options.diameter_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[k].x[j];
        }
        for (double& v : centroid) v /= static_cast<double>(n);

        Vertex& worst = simplex.back();
        const double f_best = simplex.front().f;
        const double f_second_worst = simplex[n - 1].f;

        std::vector<double> xr = affine(centroid, worst.x, -1.0);
        const double fr = eval(xr);
        if (fr < f_best) {
            std::vector<double> xe = affine(centroid, xr, 2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                worst = {std::move(xe), fe};
            } else {
                worst = {std::move(xr), fr};
            }
        } else if (fr < f_second_worst) {
            worst = {std::move(xr), fr};
        } else {
            bool accepted = false;
            if (fr < worst.f) {
                std::vector<double> xc = affine(centroid, xr, 0.5);
                const double fc = eval(xc);
                if (fc <= fr) {
                    worst = {std::move(xc), fc};
                    accepted = true;
                }
            } else {
                std::vector<double> xc = affine(centroid, worst.x, 0.5);
                const double fc = eval(xc);
                if (fc < worst.f) {
                    worst = {std::move(xc), fc};
                    accepted = true;
                }
            }
            if (!accepted) {
                const std::vector<double> anchor = simplex.front().x;
                for (std::size_t k = 1; k < simplex.size(); ++k) {
                    simplex[k].x = affine(anchor, simplex[k].x, 0.5);
                    simplex[k].f = eval(simplex[k].x);
                }
            }
        }

        const auto best_it = std::min_element(simplex.begin(), simplex.end(),
                                              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        result.trace.push_back({iter + 1, best_it->f});
    }

    const auto best_it = std::min_element(simplex.begin(), simplex.end(),
                                          [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (best_it->f < result.value) {
        result.best = best_it->x;
        result.value = best_it->f;
    }
    result.iterations = iter;
    return result;
}

SchemeLayout::SchemeLayout(Degrees degrees, const CoeffScheme& start) : degrees_(degrees) {
    const std::vector<double> p = padded(start.P, degrees.P, "P");
    double largest = 0.0;
    for (int e = 1; e <= degrees.P; ++e) {
        if (std::abs(p[static_cast<std::size_t>(e)]) > largest) {
            largest = std::abs(p[static_cast<std::size_t>(e)]);
            pinned_ = e;
        }
    }
    if (pinned_ > 0) pinned_value_ = p[static_cast<std::size_t>(pinned_)];
}

std::size_t SchemeLayout::dimension() const {
    const int p_free = degrees_.P - (pinned_ > 0 ? 1 : 0);
    return static_cast<std::size_t>(degrees_.f1 + 1 + degrees_.f1t + 1 + p_free + 1);
}

std::vector<double> SchemeLayout::encode(const CoeffScheme& scheme) const {
    std::vector<double> x = padded(scheme.f1, degrees_.f1, "f1");
    const std::vector<double> ft = padded(scheme.f1t, degrees_.f1t, "f1t");
    x.insert(x.end(), ft.begin(), ft.end());
    const std::vector<double> p = padded(scheme.P, degrees_.P, "P");
    for (int e = 1; e <= degrees_.P; ++e) {
        if (e != pinned_) x.push_back(p[static_cast<std::size_t>(e)]);
    }
    x.push_back(scheme.r);
    return x;
}

CoeffScheme SchemeLayout::decode(const std::vector<double>& x) const {
    if (x.size() != dimension()) throw DomainError("SchemeLayout: wrong vector size");
    auto it = x.begin();
    std::vector<double> f1(it, it + degrees_.f1 + 1);
    it += degrees_.f1 + 1;
    std::vector<double> ft(it, it + degrees_.f1t + 1);
    it += degrees_.f1t + 1;
    std::vector<double> p(static_cast<std::size_t>(degrees_.P) + 1, 0.0);
    for (int e = 1; e <= degrees_.P; ++e) {
        p[static_cast<std::size_t>(e)] = e == pinned_ ? pinned_value_ : *it++;
    }
    const double r = std::clamp(*it, kMinR, kMaxR);
    return CoeffScheme::from_coefficients(r, std::move(f1), std::move(ft), std::move(p));
}

std::vector<double> SchemeLayout::normalized(const std::vector<double>& x) const {
    std::vector<double> out = x;
    const std::size_t n_f = static_cast<std::size_t>(degrees_.f1 + 1 + degrees_.f1t + 1);
    double scale = 0.0;
    for (std::size_t j = 0; j < n_f; ++j) scale = std::max(scale, std::abs(x[j]));
    if (scale > 0.0) {
        for (std::size_t j = 0; j < n_f; ++j) out[j] /= scale;
    }
    return out;
}

LocalSearch maximize_h_at(const CoeffScheme& start, double c, Degrees degrees, const NelderMeadOptions& options) {
    const SchemeLayout layout(degrees, start);
    NelderMeadOptions opts = options;
    opts.normalize = [&layout](const std::vector<double>& x) { return layout.normalized(x); };
    const Objective objective = [&](const std::vector<double>& x) { return -h_value(layout.decode(x), c).h; };
    const NelderMeadResult nm = nelder_mead(objective, layout.encode(start), opts);
    LocalSearch out;
    out.scheme = layout.decode(nm.best);
    out.h = h_value(out.scheme, c).h;
    out.trace = nm.trace;
    for (auto& t : out.trace) t.objective = -t.objective;
    return out;
}

Degrees degrees_of(const CoeffScheme& scheme) {
    auto deg = [](const FracPoly& p) { return p.is_zero() ? 0 : static_cast<int>(std::lround(p.max_exponent())); };
    return Degrees{deg(scheme.f1), deg(scheme.f1t), std::max(1, deg(scheme.P))};
}

OptimizeReport optimize_scheme(const OptimizeConfig& config, const CoeffScheme& start) {
    config.validate();
    start.validate();

    const auto first = bracket_scan(start, config.c_lo, config.c_hi, config.c_step);
    if (!first) throw DomainError("optimize: h - 1 has no sign change on the c grid for the start scheme");

    OptimizeReport report;
    report.best_scheme = start;
    report.c_star = threshold_c(start, *first, config.bisection_tol);

    NelderMeadOptions nm;
    nm.max_iters = config.max_iters;
    nm.simplex_scale = config.simplex_scale;
    nm.seed = config.seed;

    int iteration_base = 0;
    double offset = config.probe_offset;
    for (int round = 0; round < config.outer_rounds; ++round) {
        const double probe = report.c_star - offset;
        if (!(probe > config.c_lo)) break;
        const LocalSearch local = maximize_h_at(report.best_scheme, probe, config.degrees, nm);
        for (const auto& t : local.trace) report.trace.push_back({iteration_base + t.iteration, t.objective});
        iteration_base += local.trace.empty() ? 0 : local.trace.back().iteration + 1;

        if (!(local.h > 1.0)) {
            // Could not push h above 1 this far below c*; probe closer.
            offset *= 0.25;
            if (offset < config.bisection_tol) break;
            continue;
        }
        const auto bracket = bracket_scan(local.scheme, config.c_lo, probe, config.c_step);
        if (!bracket) break;
        const double c_new = threshold_c(local.scheme, *bracket, config.bisection_tol);
        if (!(c_new < report.c_star)) break;
        const double gain = report.c_star - c_new;
        report.best_scheme = local.scheme;
        report.c_star = c_new;
        if (gain < config.bisection_tol) break;
    }

    report.margin = h_value(report.best_scheme, report.c_star).h - 1.0;
    return report;
}

std::vector<RowReport> verify_rows(const std::vector<TableRow>& rows, const NelderMeadOptions& recovery) {
    std::vector<RowReport> out;
    for (const auto& row : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        RowReport rep;
        rep.name = row.name;
        rep.c = row.c;
        rep.r = row.scheme.r;
        rep.h_published = h_value(row.scheme, row.c).h;
        rep.margin_published = rep.h_published - 1.0;
        if (rep.margin_published > 0.0) {
            rep.path = "published";
            rep.h_final = rep.h_published;
        } else {
            const LocalSearch local = maximize_h_at(row.scheme, row.c, degrees_of(row.scheme), recovery);
            rep.h_final = local.h;
            rep.path = local.h > 1.0 ? "recovered" : "failed";
        }
        rep.margin_final = rep.h_final - 1.0;
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<RowReport> verify_table() {
    NelderMeadOptions recovery;
    recovery.max_iters = 2000;
    recovery.simplex_scale = 0.02;
    return verify_rows(table1_rows(), recovery);
}

}  // namespace mogap::opt
