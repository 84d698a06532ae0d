#include "hermanlab/rmap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hermanlab::rmap {

std::int64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > 60) throw Error("bad_degree", "binomial overflow guard: n > 60");
    k = std::min(k, n - k);
    std::int64_t v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

RationalMap make_rational(Polynomial<double> num, Polynomial<double> den) {
    num.trim();
    den.trim();
    if (num.is_zero() || den.is_zero())
        throw Error("bad_map", "numerator and denominator must be nonzero");
    double scale_n = 0, scale_d = 0;
    for (auto& c : num.c) scale_n = std::max(scale_n, std::abs(c));
    for (auto& c : den.c) scale_d = std::max(scale_d, std::abs(c));
    if (num.degree() >= 1 && den.degree() >= 1) {
        auto res = poly::resultant(num, den);
        double norm = std::pow(scale_n, den.degree()) * std::pow(scale_d, num.degree());
        if (std::abs(res) <= 1e-12 * norm)
            throw Error("common_root", "numerator and denominator share a root");
    }
    return {std::move(num), std::move(den)};
}

std::vector<std::pair<SpherePoint, int>> critical_points(const RationalMap& f) {
    const int d = f.degree();
    if (d < 2) throw Error("bad_degree", "critical points need degree >= 2");
    auto wr = wronskian(f);
    if (wr.is_zero())
        throw Error("bad_map", "identically vanishing wronskian (degenerate map)");

    std::vector<std::pair<SpherePoint, int>> out;
    if (wr.degree() >= 1) {
        for (const auto& cl : poly::clustered_roots(wr))
            out.emplace_back(SpherePoint::from_value(cl.center), cl.multiplicity);
    }
    int at_inf = 2 * d - 2 - wr.degree();
    if (at_inf > 0) out.emplace_back(SpherePoint::infinity(), at_inf);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto key = [](const SpherePoint& p) {
            if (p.is_infinity()) return 1e300;
            return std::abs(p.plane());
        };
        return key(a.first) < key(b.first);
    });
    return out;
}

}  // namespace hermanlab::rmap
