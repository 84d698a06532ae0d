#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hermanlab/cf.hpp"
#include "hermanlab/rmap.hpp"

namespace hermanlab::circle {

/// Lift L: R -> R with L(x+1) = L(x)+1 of a circle map, realized by
/// continuous unwrapping of the image angle against a reference grid.
/// Construction fails unless the map is a monotone degree-one circle map
/// on the sampled grid.
class CircleLift {
public:
    static constexpr int kGridSize = 4096;

    /// Lift of a rational map restricted to the unit circle.
    static CircleLift from_map(const rmap::RationalMap& f);

    /// Lift from any angle map x -> g(x) with values mod 1.
    static CircleLift from_angle_map(std::function<double(double)> g);

    static CircleLift rigid_rotation(double theta);

    double operator()(double x) const;

    double min_grid_increment() const { return min_increment_; }
    double periodicity_defect() const { return periodicity_defect_; }

private:
    CircleLift() = default;
    std::function<double(double)> angle_map_;  // [0,1) -> [0,1)
    std::vector<double> grid_;                 // unwrapped values at i/N
    double min_increment_ = 0;
    double periodicity_defect_ = 0;
};

struct RotationEstimate {
    double value = 0;
    double error_bound = 1;
    long iterations = 0;
};

/// Rotation number estimate. With a continued-fraction hint the closest
/// returns at the hint's convergents are used (the estimate is the return
/// displacement over the return time); otherwise a plain Birkhoff average
/// with the 1/n pointwise bound.
RotationEstimate rotation_number(const CircleLift& lift,
                                 const std::optional<cf::ContinuedFraction>& hint,
                                 long iterations, double tol);

/// Sign-accurate comparison of the lift's rotation number against theta:
/// -1 or +1 when a one-sided closest-return certificate fires, 0 when the
/// two are indistinguishable within the iteration budget (in which case
/// *gap bounds |rho - theta|).
int compare_rotation(const CircleLift& lift, const cf::ContinuedFraction& theta,
                     long max_iterations, double* gap = nullptr,
                     long* evals_used = nullptr);

struct BlaschkeSolve {
    double t = 0;
    int bisection_steps = 0;
    long lift_evaluations = 0;
    double bracket_width = 1;
};

/// Unique t in [0,1) with rotation number of B_{d}(e^{2 pi i t} ...) equal
/// to theta, found by monotone bisection with certificate comparisons.
BlaschkeSolve solve_blaschke_parameter(int d, const cf::ContinuedFraction& theta,
                                       double tol, long iteration_budget = 0);

}  // namespace hermanlab::circle
