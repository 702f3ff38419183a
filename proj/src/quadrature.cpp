#include "longmem/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace longmem {

namespace {

struct Reference {
    std::vector<double> x;
    std::vector<double> w;
};

template <int N>
Reference make_reference() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& abscissa = G::abscissa();
    const auto& weights = G::weights();
    Reference r;
    // Boost stores the non-negative half; mirror it.
    for (std::size_t i = abscissa.size(); i-- > 0;) {
        if (abscissa[i] == 0.0) continue;
        r.x.push_back(-abscissa[i]);
        r.w.push_back(weights[i]);
    }
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        r.x.push_back(abscissa[i]);
        r.w.push_back(weights[i]);
    }
    return r;
}

const Reference& reference(int order) {
    static std::map<int, Reference> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    Reference r;
    switch (order) {
        case 8: r = make_reference<8>(); break;
        case 12: r = make_reference<12>(); break;
        case 16: r = make_reference<16>(); break;
        case 20: r = make_reference<20>(); break;
        case 24: r = make_reference<24>(); break;
        case 32: r = make_reference<32>(); break;
        default: throw std::invalid_argument("unsupported Gauss-Legendre order");
    }
    return cache.emplace(order, std::move(r)).first->second;
}

}  // namespace

void Rule::append(const Rule& other) {
    x.insert(x.end(), other.x.begin(), other.x.end());
    w.insert(w.end(), other.w.begin(), other.w.end());
}

double Rule::integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
}

Rule gauss_legendre(double a, double b, int order) {
    const Reference& ref = reference(order);
    Rule r;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    r.x.reserve(ref.x.size());
    r.w.reserve(ref.x.size());
    for (std::size_t i = 0; i < ref.x.size(); ++i) {
        r.x.push_back(mid + half * ref.x[i]);
        r.w.push_back(half * ref.w[i]);
    }
    return r;
}

Rule composite(const std::vector<double>& edges, int order) {
    Rule r;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) r.append(gauss_legendre(edges[i], edges[i + 1], order));
    return r;
}

std::vector<double> geometric_edges(double lo, double hi, double ratio, double finest) {
    std::vector<double> down;
    double e = hi;
    while (e > finest) {
        down.push_back(e);
        e *= ratio;
    }
    down.push_back(e);
    std::vector<double> edges{lo};
    for (auto it = down.rbegin(); it != down.rend(); ++it)
        if (*it > lo) edges.push_back(*it);
    return edges;
}

std::vector<double> uniform_edges(double a, double b, double width) {
    const int m = std::max(1, static_cast<int>(std::ceil((b - a) / width - 1e-12)));
    std::vector<double> edges(m + 1);
    for (int i = 0; i <= m; ++i) edges[i] = a + (b - a) * i / m;
    edges[m] = b;
    return edges;
}

std::vector<double> join_edges(const std::vector<double>& left, const std::vector<double>& right) {
    std::vector<double> out(left);
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (i == 0 && !out.empty() && out.back() == right[0]) continue;
        out.push_back(right[i]);
    }
    return out;
}

}  // namespace longmem
