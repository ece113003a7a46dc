#ifndef CAPGRAPH_THETA_HPP
#define CAPGRAPH_THETA_HPP

#include <capgraph/graph.hpp>

namespace capgraph
{
    struct ThetaResult
    {
        double value = 0.0;        // point estimate, inside [lower_cert, upper_cert]
        double lower_cert = 0.0;   // from an explicitly feasible primal matrix
        double upper_cert = 0.0;   // from an explicitly feasible dual matrix
        double gap = 0.0;          // upper_cert - lower_cert
        double tol = 0.0;          // requested tolerance
        int iterations = 0;
    };

    // Lovasz number with certified enclosure. Solves the trace-normalized
    // primal (maximize <J, X> over X psd with trace 1 and zeros on edges)
    // by a primal-dual interior-point method; both bounds come from
    // explicitly feasible points re-validated with guaranteed eigenvalue
    // residual bounds. Throws ConvergenceError (with the best enclosure)
    // if the certified gap does not reach tol, ParameterError for an
    // empty graph or tol < 1e-9, BudgetError above 1000 vertices.
    ThetaResult theta(const Graph & g, double tol = 1e-6);

    struct ThetaProductReport
    {
        ThetaResult g, h, product;
        double difference = 0.0;      // |theta(GH) - theta(G) theta(H)|
        double combined_tol = 0.0;    // tolerance implied by the three certificates
        bool pass = false;
    };

    // Checks the multiplicativity of theta under the strong product.
    ThetaProductReport theta_product_check(const Graph & g, const Graph & h,
        double tol = 1e-6);
}

#endif
