#include "hermanlab/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hermanlab/errors.hpp"

namespace hermanlab::poly {

std::vector<Cx<double>> roots(const Poly& p) {
    const int n = p.degree();
    if (n < 1) throw Error("bad_polynomial", "root finding needs degree >= 1");
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.c[i] / p.c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    std::vector<Cx<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

namespace {

Cx<double> newton_polish(const Poly& p, Cx<double> z, int steps) {
    Poly d = p.derivative();
    for (int k = 0; k < steps; ++k) {
        Cx<double> f = p.eval(z);
        Cx<double> df = d.eval(z);
        if (std::abs(df) == 0.0) break;
        Cx<double> step = f / df;
        z -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

}  // namespace

std::vector<RootCluster> clustered_roots(const Poly& p, double cluster_tol) {
    auto rs = roots(p);
    std::vector<bool> used(rs.size(), false);
    std::vector<RootCluster> clusters;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i]) continue;
        // Grow the cluster around a centroid until stable.
        std::vector<std::size_t> members{i};
        used[i] = true;
        Cx<double> centroid = rs[i];
        bool grew = true;
        while (grew) {
            grew = false;
            double tol = cluster_tol * std::max(1.0, std::abs(centroid));
            for (std::size_t j = 0; j < rs.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(rs[j] - centroid) <= tol) {
                    used[j] = true;
                    members.push_back(j);
                    grew = true;
                }
            }
            centroid = Cx<double>(0);
            for (auto m : members) centroid += rs[m];
            centroid /= (double)members.size();
        }
        RootCluster cl;
        cl.multiplicity = (int)members.size();
        // A root of multiplicity m is a simple root of the (m-1)-th
        // derivative; polish there so Newton converges quadratically.
        Poly dpoly = p;
        for (int k = 1; k < cl.multiplicity; ++k) dpoly = dpoly.derivative();
        cl.center = newton_polish(dpoly, centroid, 40);
        double scale = 0;
        for (auto& cc : dpoly.c) scale = std::max(scale, std::abs(cc));
        double mag = std::max(1.0, std::abs(cl.center));
        double polemag = std::pow(mag, std::max(0, dpoly.degree()));
        cl.residual = std::abs(dpoly.eval(cl.center)) / std::max(1e-300, scale * polemag);
        if (cl.residual > 1e-10) {
            std::ostringstream msg;
            msg << "root polish failed: residual " << cl.residual << " at ("
                << cl.center.real() << "," << cl.center.imag() << ") multiplicity "
                << cl.multiplicity;
            throw Error("rootfinder_failed", msg.str());
        }
        clusters.push_back(cl);
    }
    return clusters;
}

Cx<double> resultant(const Poly& a, const Poly& b) {
    const int n = a.degree(), m = b.degree();
    if (n < 0 || m < 0) return Cx<double>(0);
    if (n == 0) return std::pow(a.c[0], m);
    if (m == 0) return std::pow(b.c[0], n);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n + m, n + m);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s(r, r + n - k) = a.c[k];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s(m + r, r + m - k) = b.c[k];
    return s.determinant();
}

}  // namespace hermanlab::poly
