#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hermanlab::poly {

template <class R>
using Cx = std::complex<R>;

/// Dense polynomial with complex coefficients in ascending powers.
/// The zero polynomial is the empty coefficient list (degree -1).
template <class R>
struct Polynomial {
    std::vector<Cx<R>> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<Cx<R>> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() == Cx<R>(0)) c.pop_back();
    }

    Cx<R> eval(Cx<R> z) const {
        Cx<R> acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    }

    /// Horner evaluation of z^n * P(1/z) with n = pad degree; used for
    /// chart-flipped evaluation near infinity.
    Cx<R> eval_reversed(Cx<R> z, int pad_degree) const {
        Cx<R> acc(0);
        for (std::size_t i = 0; i < c.size(); ++i) acc = acc * z + c[i];
        for (int k = (int)c.size() - 1; k < pad_degree; ++k) acc *= z;
        return acc;
    }

    Polynomial derivative() const {
        Polynomial d;
        if (c.size() <= 1) return d;
        d.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * Cx<R>(R(i));
        return d;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        if (a.is_zero() || b.is_zero()) return out;
        out.c.assign(a.c.size() + b.c.size() - 1, Cx<R>(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                out.c[i + j] += a.c[i] * b.c[j];
        out.trim();
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial out = a;
        if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), Cx<R>(0));
        for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
        out.trim();
        return out;
    }

    friend Polynomial operator*(Cx<R> s, const Polynomial& p) {
        Polynomial out = p;
        for (auto& v : out.c) v *= s;
        out.trim();
        return out;
    }

    template <class R2>
    Polynomial<R2> cast() const {
        Polynomial<R2> out;
        out.c.reserve(c.size());
        for (auto& v : c) out.c.push_back(Cx<R2>((R2)v.real(), (R2)v.imag()));
        return out;
    }
};

using Poly = Polynomial<double>;

/// All complex roots via the companion-matrix eigenvalues. Requires a
/// nonconstant polynomial.
std::vector<Cx<double>> roots(const Poly& p);

struct RootCluster {
    Cx<double> center{0, 0};
    int multiplicity = 0;
    double residual = 0;  // |P^(m-1)(center)| relative to the polished scale
};

/// Groups numerically scattered roots of a polynomial with multiple roots
/// and polishes each cluster center with Newton on the (m-1)-th derivative.
/// Throws Error("rootfinder_failed") with a residual report if a polished
/// center does not satisfy its derivative equation.
std::vector<RootCluster> clustered_roots(const Poly& p, double cluster_tol = 3e-3);

/// Sylvester resultant of two polynomials; zero (to tolerance) signals a
/// common root.
Cx<double> resultant(const Poly& a, const Poly& b);

}  // namespace hermanlab::poly
