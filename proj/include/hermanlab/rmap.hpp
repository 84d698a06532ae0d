#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hermanlab/errors.hpp"
#include "hermanlab/poly.hpp"

namespace hermanlab::rmap {

using poly::Cx;
using poly::Polynomial;

enum class Chart : std::uint8_t { Standard, Reciprocal };

/// Point on the Riemann sphere in one of two charts (z, or w = 1/z).
/// Canonically built points keep |v| <= 1 in their chart; any finite chart
/// value is accepted on input.
template <class R>
struct SpherePointT {
    Cx<R> v{0, 0};
    Chart chart = Chart::Standard;

    static SpherePointT from_value(Cx<R> z) {
        if (std::abs(z) <= R(1)) return {z, Chart::Standard};
        return {Cx<R>(R(1)) / z, Chart::Reciprocal};
    }

    // a/b as a sphere point; 0/0 is the indeterminate error.
    static SpherePointT from_ratio(Cx<R> a, Cx<R> b) {
        if (a == Cx<R>(0) && b == Cx<R>(0))
            throw Error("indeterminate",
                        "0/0 while evaluating: numerator and denominator share a root");
        if (std::abs(a) <= std::abs(b)) return {a / b, Chart::Standard};
        return {b / a, Chart::Reciprocal};
    }

    static SpherePointT infinity() { return {Cx<R>(0), Chart::Reciprocal}; }
    static SpherePointT zero() { return {Cx<R>(0), Chart::Standard}; }

    bool is_infinity() const { return chart == Chart::Reciprocal && v == Cx<R>(0); }

    /// Value in the standard chart; throws at the point at infinity.
    Cx<R> plane() const {
        if (chart == Chart::Standard) return v;
        if (is_infinity()) throw Error("at_infinity", "no standard-chart value at infinity");
        return Cx<R>(R(1)) / v;
    }

    Cx<R> in_chart(Chart target) const {
        if (target == chart) return v;
        if (v == Cx<R>(0))
            throw Error(chart == Chart::Standard ? "at_zero" : "at_infinity",
                        "no finite value in the requested chart");
        return Cx<R>(R(1)) / v;
    }

    template <class R2>
    SpherePointT<R2> cast() const {
        return {Cx<R2>((R2)v.real(), (R2)v.imag()), chart};
    }
};

using SpherePoint = SpherePointT<double>;

/// Chordal distance on the sphere, range [0, 2]. Points are treated as
/// homogeneous pairs (alpha : beta), z = alpha/beta, which is exact in
/// both charts including 0 and infinity.
template <class R>
R sphere_dist(const SpherePointT<R>& a, const SpherePointT<R>& b) {
    auto homog = [](const SpherePointT<R>& p, Cx<R>& al, Cx<R>& be) {
        if (p.chart == Chart::Standard) { al = p.v; be = Cx<R>(R(1)); }
        else { al = Cx<R>(R(1)); be = p.v; }
    };
    Cx<R> a1, b1, a2, b2;
    homog(a, a1, b1);
    homog(b, a2, b2);
    R num = std::abs(a1 * b2 - a2 * b1);
    R den = std::sqrt(std::norm(a1) + std::norm(b1)) * std::sqrt(std::norm(a2) + std::norm(b2));
    return 2 * num / den;
}

template <class R>
struct RationalMapT {
    Polynomial<R> num, den;

    int degree() const { return std::max(num.degree(), den.degree()); }

    template <class R2>
    RationalMapT<R2> cast() const {
        return {num.template cast<R2>(), den.template cast<R2>()};
    }
};

using RationalMap = RationalMapT<double>;

/// Validated constructor: rejects degenerate and common-root inputs
/// (resultant within tolerance of zero).
RationalMap make_rational(Polynomial<double> num, Polynomial<double> den);

template <class R>
Polynomial<R> wronskian(const RationalMapT<R>& f) {
    return f.num.derivative() * f.den - f.num * f.den.derivative();
}

/// Sphere-safe evaluation: picks the output chart so that no intermediate
/// overflows; denominator roots land on the point at infinity.
template <class R>
SpherePointT<R> eval(const RationalMapT<R>& f, const SpherePointT<R>& z) {
    const int d = f.degree();
    Cx<R> a, b;
    if (z.chart == Chart::Standard) {
        a = f.num.eval(z.v);
        b = f.den.eval(z.v);
    } else {
        a = f.num.eval_reversed(z.v, d);
        b = f.den.eval_reversed(z.v, d);
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(b.real()) || !std::isfinite(b.imag()))
        throw Error("overflow", "rational map evaluation overflowed in both charts");
    return SpherePointT<R>::from_ratio(a, b);
}

/// f'(z) in the standard chart, using a precomputed Wronskian.
template <class R>
Cx<R> derivative_plane(const RationalMapT<R>& f, const Polynomial<R>& wr, Cx<R> z) {
    Cx<R> d = f.den.eval(z);
    return wr.eval(z) / (d * d);
}

// --- Explicit families -------------------------------------------------

std::int64_t binomial(int n, int k);

/// Degree-(2d-1) Blaschke product c z^d P(z)/P*(z) with the unique free
/// critical point at z = 1; requires |c| = 1 so the map commutes with
/// z -> 1/conj(z) and preserves the unit circle.
template <class R = double>
RationalMapT<R> make_blaschke(int d, Cx<R> c) {
    if (d < 2) throw Error("bad_degree", "blaschke family needs d >= 2");
    if (std::abs(std::abs(c) - R(1)) > R(1e-12))
        throw Error("not_unit_modulus", "blaschke parameter must have |c| = 1");
    Polynomial<R> num, den;
    num.c.assign(2 * d, Cx<R>(0));
    den.c.assign(d, Cx<R>(0));
    for (int j = 0; j <= d - 1; ++j) {
        R coef = R(binomial(2 * d - 1, j)) * (j % 2 ? R(-1) : R(1));
        num.c[d + (d - 1 - j)] = c * coef;  // c * z^d * P(z)
        den.c[j] = Cx<R>(coef);
    }
    num.trim();
    den.trim();
    return {num, den};
}

/// Unicritical family with critical points 0, infinity, 1 of local degrees
/// d0, dinf, d = d0+dinf-1 and critical value F_c(1) = c.
template <class R = double>
RationalMapT<R> make_unicritical(int d0, int dinf, Cx<R> c) {
    if (d0 < 2 || dinf < 2) throw Error("bad_degree", "local degrees must be >= 2");
    if (c == Cx<R>(0)) throw Error("bad_parameter", "c = 0 degenerates the family");
    const int d = d0 + dinf - 1;
    Polynomial<R> num, den;
    num.c.assign(d + 1, Cx<R>(0));
    den.c.assign(d0, Cx<R>(0));
    for (int j = d0; j <= d; ++j) {
        R sign = (j % 2 ? R(-1) : R(1));
        num.c[j] = -c * R(binomial(d, j)) * sign;
    }
    for (int j = 0; j <= d0 - 1; ++j) {
        R sign = (j % 2 ? R(-1) : R(1));
        den.c[j] = Cx<R>(R(binomial(d, j)) * sign);
    }
    num.trim();
    den.trim();
    return {num, den};
}

/// Antipode-preserving family z^2 (q - z) / (1 + conj(q) z).
template <class R = double>
RationalMapT<R> make_bbm(Cx<R> q) {
    if (q == Cx<R>(0)) throw Error("bad_parameter", "q = 0 degenerates the family");
    Polynomial<R> num, den;
    num.c = {Cx<R>(0), Cx<R>(0), q, Cx<R>(R(-1))};
    den.c = {Cx<R>(R(1)), std::conj(q)};
    return {num, den};
}

// --- Critical points and orbits ----------------------------------------

/// Critical points with multiplicities (local degree minus one); the
/// multiplicities always sum to 2 deg - 2.
std::vector<std::pair<SpherePoint, int>> critical_points(const RationalMap& f);

template <class R>
struct OrbitTraceT {
    std::vector<SpherePointT<R>> points;
    std::vector<Cx<R>> sens;  // dz_k/dc when requested
};

using OrbitTrace = OrbitTraceT<double>;

/// Forward orbit of length n+1 (z_0 .. z_n). When dF_dc is supplied the
/// parameter sensitivity w_{k+1} = dF/dc(z_k) + f'(z_k) w_k is tracked
/// with w_0 = 0; sensitivities require the orbit to stay finite.
template <class R>
OrbitTraceT<R> orbit(const RationalMapT<R>& f, SpherePointT<R> z0, int n,
                     const std::function<Cx<R>(Cx<R>)>& dF_dc = nullptr) {
    if (n < 0) throw Error("bad_count", "orbit length must be >= 0");
    OrbitTraceT<R> tr;
    tr.points.reserve(n + 1);
    tr.points.push_back(z0);
    const bool with_sens = static_cast<bool>(dF_dc);
    Polynomial<R> wr;
    if (with_sens) {
        wr = wronskian(f);
        tr.sens.reserve(n + 1);
        tr.sens.push_back(Cx<R>(0));
    }
    SpherePointT<R> z = z0;
    for (int k = 0; k < n; ++k) {
        SpherePointT<R> znext = eval(f, z);
        if (with_sens) {
            if (z.is_infinity() || znext.is_infinity())
                throw Error("sensitivity_at_infinity",
                            "parameter sensitivity undefined through infinity");
            Cx<R> w = tr.sens.back();
            Cx<R> zz = z.plane();
            Cx<R> wnext = dF_dc(zz) + derivative_plane(f, wr, zz) * w;
            if (!std::isfinite(wnext.real()) || !std::isfinite(wnext.imag()))
                throw Error("overflow", "sensitivity recurrence overflowed");
            tr.sens.push_back(wnext);
        }
        tr.points.push_back(znext);
        z = znext;
    }
    return tr;
}

}  // namespace hermanlab::rmap
