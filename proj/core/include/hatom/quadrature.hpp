#pragma once

// Gauss quadrature nodes via Golub-Welsch (Jacobi-matrix eigenvalues).

#include <vector>

namespace hatom::quad {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<double> logw; // log(w_i); far Laguerre weights underflow w
};

// int_{-1}^{1} f(x) dx ~= sum w_i f(x_i)
Rule gauss_legendre(int n);

// int_0^inf f(t) e^{-t} dt ~= sum w_i f(t_i). Nodes from the Jacobi matrix,
// weights from the stable closed form w_i = x_i / ((n+1) L_{n+1}(x_i))^2
// evaluated in log space, so w_i e^{x_i} stays accurate at every node.
Rule gauss_laguerre(int n);

} // namespace hatom::quad
