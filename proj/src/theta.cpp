#include <capgraph/theta.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace capgraph
{
    namespace
    {
        using Eigen::MatrixXd;
        using Eigen::VectorXd;

        struct Edge
        {
            int u, v;
        };

        // Certified bound on the extreme eigenvalues of a symmetric matrix:
        // eigendecomposition plus a Weyl residual safeguard, cross-checked
        // against Gershgorin discs for the maximum.
        struct EigBounds
        {
            double lambda_max_upper;
            double lambda_min_lower;
        };

        auto certified_eigen_bounds(const MatrixXd & a) -> EigBounds
        {
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
            const MatrixXd & v = es.eigenvectors();
            const VectorXd & d = es.eigenvalues();

            // Every true eigenvalue is within ||A - V D V^T||_F of the
            // computed spectrum (Weyl, with the Frobenius norm dominating
            // the spectral norm), plus slack for the orthogonality defect.
            double residual = (a - v * d.asDiagonal() * v.transpose()).norm();
            double defect = (v.transpose() * v - MatrixXd::Identity(a.rows(), a.cols())).norm();
            double pad = residual + defect * a.norm() +
                1e-14 * double(a.rows()) * a.cwiseAbs().maxCoeff();

            double gersh = -1e300;
            for (int i = 0; i < a.rows(); ++i)
                gersh = std::max(gersh, a(i, i) + a.row(i).cwiseAbs().sum() - std::abs(a(i, i)));

            return {std::min(d.maxCoeff() + pad, gersh), d.minCoeff() - pad};
        }

        auto is_positive_definite(const MatrixXd & a) -> bool
        {
            return Eigen::LLT<MatrixXd>(a).info() == Eigen::Success;
        }

        // Lower certificate: force the iterate onto the primal feasible set
        // (exact zeros on edges, unit trace, psd by mixing with I/n) and
        // re-evaluate <J, X>.
        auto primal_certificate(MatrixXd x, const std::vector<Edge> & edges) -> double
        {
            int n = int(x.rows());
            x = ((x + x.transpose()) / 2.0).eval();
            for (auto & e : edges)
                x(e.u, e.v) = x(e.v, e.u) = 0.0;
            x /= x.trace();

            double shift = std::max(0.0, -certified_eigen_bounds(x).lambda_min_lower);
            double value = (x.sum() + shift * n) / (1.0 + shift * n);
            // Deflate for the floating-point error of the sums above.
            return value * (1.0 - 1e-12) - 1e-12;
        }

        // Upper certificate: the dual matrix that is exactly 1 on the
        // diagonal and on non-edges, with the edge multipliers from y;
        // lambda_max of any such matrix upper-bounds theta.
        auto dual_certificate(const VectorXd & y, const std::vector<Edge> & edges, int n)
            -> double
        {
            MatrixXd b = MatrixXd::Ones(n, n);
            for (std::size_t e = 0; e < edges.size(); ++e) {
                b(edges[e].u, edges[e].v) -= y(Eigen::Index(e));
                b(edges[e].v, edges[e].u) -= y(Eigen::Index(e));
            }
            double bound = certified_eigen_bounds(b).lambda_max_upper;
            return bound * (1.0 + 1e-12) + 1e-12;
        }
    }

    auto theta(const Graph & g, double tol) -> ThetaResult
    {
        int n = g.vertex_count();
        if (n == 0)
            throw ParameterError{"theta needs at least one vertex"};
        if (tol < 1e-9)
            throw ParameterError{"theta tolerance must be at least 1e-9"};
        if (n > 1000)
            throw BudgetError{"theta solver refuses graphs above 1000 vertices", 0, 0.0};

        if (n == 1)
            return {1.0, 1.0, 1.0, 0.0, tol, 0};

        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v))
                    edges.push_back({u, v});
        int m1 = int(edges.size());
        int m = m1 + 1;   // one constraint per edge plus the trace constraint

        VectorXd b = VectorXd::Zero(m);
        b(m - 1) = 1.0;

        // Strictly feasible start: X = I/n, Z = (n+1) I - J.
        MatrixXd x = MatrixXd::Identity(n, n) / double(n);
        VectorXd y = VectorXd::Zero(m);
        y(m - 1) = double(n) + 1.0;
        MatrixXd z = (double(n) + 1.0) * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);

        double mu = z.cwiseProduct(x).sum() / (2.0 * n);

        ThetaResult best{0.0, 0.0, dual_certificate(y, edges, n), 0.0, tol, 0};
        best.lower_cert = primal_certificate(x, edges);
        best.gap = best.upper_cert - best.lower_cert;

        const int max_iterations = 200;
        for (int iteration = 1; iteration <= max_iterations; ++iteration) {
            MatrixXd zi = z.llt().solve(MatrixXd::Identity(n, n));
            zi = ((zi + zi.transpose()) / 2.0).eval();

            // Schur complement M(k,l) = tr(A_k Zi A_l X) for the edge
            // constraints A_e = e_u e_v^T + e_v e_u^T and the trace
            // constraint A_m = I.
            MatrixXd schur(m, m);
            for (int e = 0; e < m1; ++e) {
                int i = edges[std::size_t(e)].u, j = edges[std::size_t(e)].v;
                for (int f = e; f < m1; ++f) {
                    int k = edges[std::size_t(f)].u, l = edges[std::size_t(f)].v;
                    double value = zi(j, k) * x(l, i) + zi(j, l) * x(k, i) +
                        zi(i, k) * x(l, j) + zi(i, l) * x(k, j);
                    schur(e, f) = value;
                    schur(f, e) = value;
                }
                double cross = zi.row(i).dot(x.col(j)) + zi.row(j).dot(x.col(i));
                schur(e, m - 1) = cross;
                schur(m - 1, e) = cross;
            }
            schur(m - 1, m - 1) = zi.cwiseProduct(x).sum();

            VectorXd rhs(m);
            for (int e = 0; e < m1; ++e)
                rhs(e) = 2.0 * zi(edges[std::size_t(e)].u, edges[std::size_t(e)].v);
            rhs(m - 1) = zi.trace();

            VectorXd dy = schur.ldlt().solve(mu * rhs - b);

            MatrixXd dz = dy(m - 1) * MatrixXd::Identity(n, n);
            for (int e = 0; e < m1; ++e) {
                dz(edges[std::size_t(e)].u, edges[std::size_t(e)].v) += dy(e);
                dz(edges[std::size_t(e)].v, edges[std::size_t(e)].u) += dy(e);
            }

            MatrixXd dx = mu * zi - x - zi * dz * x;
            dx = ((dx + dx.transpose()) / 2.0).eval();

            double alpha_p = 1.0;
            while (! is_positive_definite(x + alpha_p * dx)) {
                alpha_p *= 0.8;
                if (alpha_p < 1e-12)
                    break;
            }
            if (alpha_p < 1.0)
                alpha_p *= 0.95;

            double alpha_d = 1.0;
            while (! is_positive_definite(z + alpha_d * dz)) {
                alpha_d *= 0.8;
                if (alpha_d < 1e-12)
                    break;
            }
            if (alpha_d < 1.0)
                alpha_d *= 0.95;

            x += alpha_p * dx;
            y += alpha_d * dy;
            z += alpha_d * dz;

            mu = z.cwiseProduct(x).sum() / (2.0 * n);
            if (alpha_p + alpha_d > 1.8)
                mu /= 2.0;

            double lower = primal_certificate(x, edges);
            double upper = dual_certificate(y, edges, n);
            if (upper - lower < best.gap) {
                best.lower_cert = lower;
                best.upper_cert = upper;
                best.gap = upper - lower;
            }
            best.iterations = iteration;
            best.value = (best.lower_cert + best.upper_cert) / 2.0;

            if (best.gap <= tol)
                return best;
        }

        throw ConvergenceError{"theta did not certify the requested gap",
            best.lower_cert, best.upper_cert};
    }

    auto theta_product_check(const Graph & g, const Graph & h, double tol)
        -> ThetaProductReport
    {
        ThetaProductReport report;
        report.g = theta(g, tol);
        report.h = theta(h, tol);
        report.product = theta(strong_product(g, h), tol);

        report.difference = std::abs(report.product.value - report.g.value * report.h.value);
        report.combined_tol = report.product.gap +
            report.g.upper_cert * report.h.gap + report.h.upper_cert * report.g.gap + 1e-12;
        report.pass = report.difference <= report.combined_tol;
        return report;
    }
}
