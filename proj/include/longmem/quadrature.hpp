#pragma once

#include <functional>
#include <vector>

namespace longmem {

// A composite quadrature rule: nodes x with weights w.
struct Rule {
    std::vector<double> x;
    std::vector<double> w;

    std::size_t size() const { return x.size(); }
    void append(const Rule& other);
    double integrate(const std::function<double(double)>& f) const;
};

// Gauss–Legendre rule on [a, b]. Supported orders: 8, 12, 16, 20, 24, 32.
Rule gauss_legendre(double a, double b, int order);

// Composite rule over consecutive panels [edges[i], edges[i+1]].
Rule composite(const std::vector<double>& edges, int order);

// Panel edges graded geometrically toward `lo`: lo, hi*ratio^k, ..., hi*ratio, hi,
// where the smallest positive edge is the first one below `finest` (lo itself is
// always included as the first edge).
std::vector<double> geometric_edges(double lo, double hi, double ratio, double finest);

// Edges a, a+h, ..., b with h <= width.
std::vector<double> uniform_edges(double a, double b, double width);

// Concatenate edge lists that share endpoints.
std::vector<double> join_edges(const std::vector<double>& left, const std::vector<double>& right);

}  // namespace longmem
