#include "hermanlab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hermanlab::circle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double x) {
    double f = x - std::floor(x);
    return f < 1.0 ? f : 0.0;
}

// Wrap d into (-1/2, 1/2].
double wrap_half(double d) { return d - std::round(d); }

}  // namespace

CircleLift CircleLift::from_angle_map(std::function<double(double)> g) {
    CircleLift lift;
    lift.angle_map_ = std::move(g);
    const int n = kGridSize;
    lift.grid_.resize(n + 1);
    double prev = lift.angle_map_(0.0);
    lift.grid_[0] = prev;
    lift.min_increment_ = 1.0;
    for (int i = 1; i <= n; ++i) {
        double y = lift.angle_map_(frac((double)i / n));
        double inc = wrap_half(y - prev);
        lift.grid_[i] = lift.grid_[i - 1] + inc;
        lift.min_increment_ = std::min(lift.min_increment_, inc);
        prev = y;
    }
    lift.periodicity_defect_ = std::fabs(lift.grid_[n] - lift.grid_[0] - 1.0);
    if (lift.min_increment_ < -1e-10)
        throw Error("not_homeomorphism",
                    "not a circle homeomorphism for this parameter: decreasing on grid");
    if (lift.periodicity_defect_ > 1e-10)
        throw Error("not_homeomorphism",
                    "not a degree-one circle map: lift increment over a full turn is not 1");
    return lift;
}

CircleLift CircleLift::from_map(const rmap::RationalMap& f) {
    return from_angle_map([f](double x) {
        using rmap::Chart;
        std::complex<double> z = std::polar(1.0, kTwoPi * x);
        auto w = rmap::eval(f, rmap::SpherePoint{z, Chart::Standard});
        double ang = (w.chart == Chart::Standard ? std::arg(w.v) : -std::arg(w.v)) / kTwoPi;
        return frac(ang);
    });
}

CircleLift CircleLift::rigid_rotation(double theta) {
    return from_angle_map([theta](double x) { return frac(x + theta); });
}

double CircleLift::operator()(double x) const {
    double base = std::floor(x);
    double fx = x - base;
    // Anchor the branch on the nearest grid value.
    double pos = fx * kGridSize;
    int i = (int)pos;
    if (i >= kGridSize) i = kGridSize - 1;
    double anchor = grid_[i] + (grid_[i + 1] - grid_[i]) * (pos - i);
    double y = angle_map_(fx);
    double k = std::round(anchor - y);
    return y + k + base;
}

RotationEstimate rotation_number(const CircleLift& lift,
                                 const std::optional<cf::ContinuedFraction>& hint,
                                 long iterations, double tol) {
    if (iterations < 1) throw Error("bad_count", "iteration budget must be >= 1");
    RotationEstimate est;
    const double x0 = 0.1234567891234;
    if (!hint) {
        double x = x0;
        long n = 0;
        while (n < iterations) {
            x = lift(x);
            ++n;
            if (1.0 / (double)n <= tol) break;
        }
        est.value = (x - x0) / (double)n;
        est.error_bound = 1.0 / (double)n;
        est.iterations = n;
        return est;
    }
    auto table = cf::convergents(*hint, (int)hint->max_depth());
    // Deepest convergent within the budget.
    std::size_t last = 0;
    for (std::size_t n = 0; n < table.rows.size(); ++n)
        if (table.rows[n].q <= iterations) last = n;
    double x = x0;
    long k = 0;
    double best_value = 0;
    double best_bound = 1;
    long used = 0;
    for (std::size_t n = 1; n <= last; ++n) {
        const auto q = table.rows[n].q;
        while (k < q) {
            x = lift(x);
            ++k;
        }
        double delta = x - x0;
        best_value = delta / (double)q;
        best_bound = 1.0 / (double)q;
        used = k;
        if (best_bound <= tol) break;
    }
    if (used == 0) {  // budget below q_1: fall back to plain averaging
        return rotation_number(lift, std::nullopt, iterations, tol);
    }
    est.value = best_value;
    est.error_bound = best_bound;
    est.iterations = used;
    return est;
}

int compare_rotation(const CircleLift& lift, const cf::ContinuedFraction& theta,
                     long max_iterations, double* gap, long* evals_used) {
    auto table = cf::convergents(theta, (int)theta.max_depth());
    const double x0 = 0.1234567891234;
    double x = x0;
    long k = 0;
    double bracket = 1.0;
    int verdict = 0;
    for (std::size_t n = 1; n < table.rows.size(); ++n) {
        const auto& row = table.rows[n];
        if (row.q > max_iterations) break;
        while (k < row.q) {
            x = lift(x);
            ++k;
        }
        double delta = x - x0 - (double)row.p;  // L^{q_n}(x0) - x0 - p_n
        // Accumulated roundoff over q_n lift steps; certify only outside it.
        double safety = 1e-12 * (double)row.q + 1e-12;
        bool above_theta = (n % 2 == 1);  // p_1/q_1 > theta, alternating
        if (above_theta && delta >= safety) { verdict = +1; break; }
        if (!above_theta && delta <= -safety) { verdict = -1; break; }
        if (n >= 2) {
            const auto& prev = table.rows[n - 1];
            bracket = 1.0 / ((double)row.q * (double)prev.q);
        }
    }
    if (gap) *gap = verdict == 0 ? bracket : 0.0;
    if (evals_used) *evals_used = k;
    return verdict;
}

BlaschkeSolve solve_blaschke_parameter(int d, const cf::ContinuedFraction& theta,
                                       double tol, long iteration_budget) {
    if (tol < 1e-10) throw Error("bad_tolerance", "tolerance below 1e-10 is not supported");
    // Iterations deep enough that an inconclusive comparison certifies
    // |rho - theta| <= 1/(q_N q_{N-1}) <= tol.
    long budget = iteration_budget;
    if (budget <= 0) {
        auto table = cf::convergents(theta, (int)theta.max_depth());
        budget = 1;
        for (std::size_t n = 2; n < table.rows.size(); ++n) {
            budget = table.rows[n].q;
            if (1.0 / ((double)table.rows[n].q * (double)table.rows[n - 1].q) <= tol) break;
        }
        budget += 8;
    }

    BlaschkeSolve out;
    double lo = 0.0, hi = 1.0;  // rho(0) = 0 < theta < 1 = rho(1^-)
    for (int step = 0; step < 200; ++step) {
        double mid = 0.5 * (lo + hi);
        auto lift = CircleLift::from_map(
            rmap::make_blaschke(d, std::polar(1.0, kTwoPi * mid)));
        double gap = 0;
        long used = 0;
        int cmp = compare_rotation(lift, theta, budget, &gap, &used);
        out.lift_evaluations += used;
        out.bisection_steps = step + 1;
        if (cmp == 0) {
            out.t = mid;
            out.bracket_width = hi - lo;
            return out;
        }
        if (cmp < 0) lo = mid;
        else hi = mid;
        if (hi - lo < 4e-16) break;
    }
    throw Error("bracket_failure",
                "bisection exhausted without certifying |rho - theta| <= tol "
                "(numeric breakdown)");
}

}  // namespace hermanlab::circle
