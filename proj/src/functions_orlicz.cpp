#include "loglab/functions_orlicz.hpp"

#include <algorithm>
#include <cmath>

namespace loglab {

CylinderFunction CylinderFunction::constant(int k, std::complex<double> v) {
    return CylinderFunction{k, 0, {v}};
}

CylinderFunction CylinderFunction::indicator(int k, const Cylinder& c) {
    CylinderFunction f = zeros(k, c.depth());
    f.values[static_cast<std::size_t>(cylinder_index(k, c.word))] = 1.0;
    return f;
}

CylinderFunction CylinderFunction::zeros(int k, int depth) {
    auto s = TreeBoundarySpace::make(k);
    CylinderFunction f;
    f.k = k;
    f.depth = depth;
    f.values.assign(static_cast<std::size_t>(s.cylinder_count(depth)), 0.0);
    return f;
}

bool CylinderFunction::is_real() const {
    return std::all_of(values.begin(), values.end(),
                       [](const std::complex<double>& v) { return v.imag() == 0.0; });
}

CylinderFunction refine(const CylinderFunction& f, int depth) {
    if (depth < f.depth) throw std::invalid_argument("refine: depth below current");
    if (depth == f.depth) return f;
    const int q = 2 * f.k - 1;
    CylinderFunction out;
    out.k = f.k;
    out.depth = depth;
    std::int64_t block = 1;
    for (int i = f.depth; i < depth; ++i) block *= (i == 0 ? 2 * f.k : q);
    out.values.resize(static_cast<std::size_t>(block) * f.values.size());
    std::size_t pos = 0;
    for (const auto& v : f.values)
        for (std::int64_t b = 0; b < block; ++b) out.values[pos++] = v;
    return out;
}

double max_abs_difference(const CylinderFunction& f, const CylinderFunction& g) {
    const int d = std::max(f.depth, g.depth);
    const CylinderFunction a = refine(f, d), b = refine(g, d);
    double m = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double YoungFunction::operator()(double x) const {
    const double a = std::abs(x);
    if (kind == Kind::power_log) {
        if (a <= 1.0) return 0.0;
        return std::pow(a, p) * p * std::log(a);
    }
    return a < 1.0 ? a : std::exp(a - 1.0);
}

double lp_norm_weighted(std::span<const std::pair<double, double>> items, double p) {
    double s = 0;
    for (const auto& [v, m] : items) s += std::pow(v, p) * m;
    return std::pow(s, 1.0 / p);
}

double luxemburg_norm_weighted(std::span<const std::pair<double, double>> items,
                               const YoungFunction& y, double tol) {
    double vmax = 0;
    for (const auto& [v, m] : items) vmax = std::max(vmax, v);
    if (vmax == 0) return 0;

    auto integral = [&](double kk) {
        double s = 0;
        for (const auto& [v, m] : items) s += y(v / kk) * m;
        return s;
    };

    // The gauge is monotone non-increasing in k.  Both Young families satisfy
    // Y(x) <= 1 on [0,1], so k = vmax always brackets from above.
    double hi = vmax;
    double lo = hi;
    for (int i = 0; i < 200 && integral(lo) <= 1.0; ++i) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-300) return 0;
    }
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (integral(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double entropy_weighted(std::span<const std::pair<double, double>> items, double p) {
    double lp = 0;
    for (const auto& [v, m] : items) lp += std::pow(v, p) * m;
    if (lp == 0) throw ZeroFunction("entropy_functional: zero function");
    double s = 0;
    for (const auto& [v, m] : items) {
        const double vp = std::pow(v, p);
        if (vp > lp) s += vp * std::log(vp / lp) * m;
    }
    return s;
}

WeightedValues weighted_values(const TreeBoundarySpace& s, const CylinderFunction& f) {
    WeightedValues items;
    items.reserve(f.values.size());
    const double mass = to_double(s.cylinder_measure_at(f.depth));
    for (const auto& v : f.values) items.emplace_back(std::abs(v), mass);
    return items;
}

double lp_norm(const TreeBoundarySpace& s, const CylinderFunction& f, double p) {
    return lp_norm_weighted(weighted_values(s, f), p);
}

double luxemburg_norm(const TreeBoundarySpace& s, const CylinderFunction& f, const YoungFunction& y) {
    return luxemburg_norm_weighted(weighted_values(s, f), y);
}

double entropy_functional(const TreeBoundarySpace& s, const CylinderFunction& f, double p) {
    return entropy_weighted(weighted_values(s, f), p);
}

std::pair<double, double> holder_pair(const TreeBoundarySpace& s, const CylinderFunction& f,
                                      const CylinderFunction& g) {
    const int d = std::max(f.depth, g.depth);
    const CylinderFunction a = refine(f, d), b = refine(g, d);
    const double mass = to_double(s.cylinder_measure_at(d));
    double lhs = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        lhs += std::abs(a.values[i]) * std::abs(b.values[i]) * mass;
    const double rhs =
        luxemburg_norm(s, f, YoungFunction::phi(1)) * luxemburg_norm(s, g, YoungFunction::psi());
    return {lhs, rhs};
}

}  // namespace loglab
