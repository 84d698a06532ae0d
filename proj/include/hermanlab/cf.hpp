#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hermanlab/errors.hpp"

namespace hermanlab::cf {

using Quotients = std::vector<std::int64_t>;

/// Rotation number given by its continued-fraction partial quotients
/// [0; a_1, a_2, ...]. Canonical form is a finite head plus an optional
/// repeating cycle, so bounded type is exact: beta = max stored quotient.
class ContinuedFraction {
public:
    static ContinuedFraction from_quotients(Quotients head, Quotients cycle = {});

    // Text form: comma-separated head, optional "(c1,c2,...)" repeating
    // suffix. "1(1)" and "(1)" both denote the golden mean.
    static ContinuedFraction parse(std::string_view text);
    std::string to_string() const;

    std::int64_t quotient(std::size_t i) const;  // 1-based a_i
    bool periodic() const { return !cycle_.empty(); }
    const Quotients& head() const { return head_; }
    const Quotients& cycle() const { return cycle_; }

    /// Largest depth with quotients stored (head only) or representable
    /// before the convergent denominators overflow (periodic case).
    std::size_t max_depth() const;

    std::int64_t bound() const;  // beta(theta) over all stored quotients
    long double value() const { return value_; }

    ContinuedFraction() = default;

private:
    Quotients head_;
    Quotients cycle_;
    long double value_ = 0;
};

struct ExpandResult {
    ContinuedFraction cf;
    bool precision_exhausted = false;  // q_n^2 passed the input's precision
};

/// Continued-fraction expansion of a real theta in (0,1) by long division.
/// Throws Error("rational_detected") naming the rational when a remainder
/// vanishes. May return fewer quotients than requested (flagged) once the
/// denominators exhaust the input precision.
ExpandResult cf_expand(long double theta, int depth);

struct ConvergentRow {
    std::int64_t p = 0;
    std::int64_t q = 1;
    long double l = 0;  // |p - q*theta|
};

struct ConvergentTable {
    std::vector<ConvergentRow> rows;  // n = 0..depth
    long double theta = 0;

    const ConvergentRow& row(std::size_t n) const { return rows.at(n); }
    std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
};

ConvergentTable convergents(const ContinuedFraction& cf, int depth);

struct BoundedTypeReport {
    bool ok = false;
    bool sufficient_depth = false;
    long double min_ratio = 0;  // empirical min of l_n / l_{n+1}
    long double max_ratio = 0;
    std::string note;
};

/// Checks Ctilde * l_{n+1} <= l_n <= C * l_{n+1} over all stored levels.
BoundedTypeReport bounded_type_check(const ConvergentTable& table,
                                     double c_lower, double c_upper);

/// Permutation sorting {i*theta mod 1 : 0 <= i < count} ascending.
/// Equal angles signal rational input and raise Error("rational_input").
std::vector<std::size_t> circle_order(long double theta, std::size_t count);

}  // namespace hermanlab::cf
