#include "loglab/ahlfors_sampled.hpp"

#include <algorithm>
#include <cmath>

#include "loglab/functions_orlicz.hpp"

namespace loglab {

double SampledAhlforsSpace::dist(int i, int j) const {
    switch (kind) {
        case Kind::circle: {
            const int d = std::abs(i - j);
            return static_cast<double>(std::min(d, n - d)) / n;
        }
        case Kind::cantor:
            return std::abs(position[static_cast<std::size_t>(i)] -
                            position[static_cast<std::size_t>(j)]);
        case Kind::tree: {
            if (i == j) return 0.0;
            const Letter* a = tree_letters.data() + static_cast<std::size_t>(i) * tree_depth;
            const Letter* b = tree_letters.data() + static_cast<std::size_t>(j) * tree_depth;
            int m = 0;
            while (m < tree_depth && a[m] == b[m]) ++m;
            return std::exp(-tree_epsilon * m);
        }
    }
    return 0.0;
}

double SampledAhlforsSpace::ball_mass(int i, double r) const {
    double inside = 0, shell = 0;
    for (int j = 0; j < n; ++j) {
        const double d = dist(i, j);
        if (d < r)
            inside += weights[static_cast<std::size_t>(j)];
        else if (d == r)
            shell += weights[static_cast<std::size_t>(j)];
    }
    return inside + 0.5 * shell;
}

SampledAhlforsSpace make_circle(int n) {
    if (n < 8) throw std::invalid_argument("make_circle: n >= 8 required");
    SampledAhlforsSpace s;
    s.kind = SampledAhlforsSpace::Kind::circle;
    s.name = "circle";
    s.n = n;
    s.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
    s.D = 1;
    s.diam = 0.5;
    s.r_min = 1.0 / n;
    s.c_low = s.c_high = 2.0;  // nu(B(xi, r)) = 2r
    return s;
}

SampledAhlforsSpace make_cantor(int level) {
    if (level < 3) throw std::invalid_argument("make_cantor: level >= 3 required");
    SampledAhlforsSpace s;
    s.kind = SampledAhlforsSpace::Kind::cantor;
    s.name = "cantor";
    s.n = 1 << level;
    s.D = std::log(2.0) / std::log(3.0);
    s.r_min = std::pow(3.0, -level);
    s.weights.assign(static_cast<std::size_t>(s.n), std::pow(0.5, level));
    s.position.resize(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) {
        double x = 0, scale = 1;
        for (int b = level - 1; b >= 0; --b) {
            scale /= 3.0;
            if (i & (1 << b)) x += 2.0 * scale;
        }
        s.position[static_cast<std::size_t>(i)] = x + 0.5 * scale;
    }
    s.diam = s.position.back() - s.position.front();
    // Measured regularity constants over a fine radius grid, all points.
    // Positions are sorted, so ball masses come from two binary searches.
    const double w = std::pow(0.5, level);
    auto mass = [&](int i, double r) {
        const double x = s.position[static_cast<std::size_t>(i)];
        auto lo = std::lower_bound(s.position.begin(), s.position.end(), x - r);
        auto hi = std::upper_bound(s.position.begin(), s.position.end(), x + r);
        double m = w * static_cast<double>(hi - lo);
        if (lo != s.position.end() && *lo == x - r) m -= 0.5 * w;
        if (hi != s.position.begin() && *(hi - 1) == x + r) m -= 0.5 * w;
        return m;
    };
    double clow = 1e300, chigh = 0;
    const double rlo = 4.0 * s.r_min, rhi = s.diam;
    const int steps = 400;
    for (int t = 0; t <= steps; ++t) {
        const double r = rlo * std::pow(rhi / rlo, static_cast<double>(t) / steps);
        const double rd = std::pow(r, s.D);
        for (int i = 0; i < s.n; ++i) {
            const double ratio = mass(i, r) / rd;
            clow = std::min(clow, ratio);
            chigh = std::max(chigh, ratio);
        }
    }
    s.c_low = clow;
    s.c_high = chigh;
    return s;
}

SampledAhlforsSpace make_tree_sample(const TreeBoundarySpace& ts, int depth) {
    SampledAhlforsSpace s;
    s.kind = SampledAhlforsSpace::Kind::tree;
    s.name = "tree";
    s.n = static_cast<int>(ts.cylinder_count(depth));
    s.D = ts.D;
    s.diam = 1.0;
    s.r_min = std::exp(-ts.epsilon * depth);
    s.tree_depth = depth;
    s.tree_epsilon = ts.epsilon;
    s.weights.assign(static_cast<std::size_t>(s.n), to_double(ts.cylinder_measure_at(depth)));
    s.tree_letters.resize(static_cast<std::size_t>(s.n) * depth);
    for (CylinderIterator it(ts.k, depth); !it.done(); it.next()) {
        auto w = it.word();
        std::copy(w.begin(), w.end(),
                  s.tree_letters.begin() + static_cast<std::size_t>(it.index()) * depth);
    }
    // Exact ratio q/2k on the scale grid; off-grid the lower constant loses a
    // factor q and the upper reaches 1 at r = diam.
    s.c_low = to_double(ts.ahlfors_constant()) / ts.q;
    s.c_high = 1.0;
    return s;
}

double tail_integral(const SampledAhlforsSpace& s, int xi, double r, ShellRule rule) {
    if (!(r > 0) || r > s.diam + 1e-15)
        throw std::invalid_argument("tail_integral: r in (0, diam] required");
    double sum = 0, shell = 0;
    for (int j = 0; j < s.n; ++j) {
        if (j == xi) continue;
        const double d = s.dist(xi, j);
        if (d > r)
            sum += s.weights[static_cast<std::size_t>(j)] * std::pow(d, -s.D);
        else if (d == r)
            shell += s.weights[static_cast<std::size_t>(j)] * std::pow(d, -s.D);
    }
    return rule == ShellRule::half ? sum + 0.5 * shell : sum;
}

double complement_tail_integral(const SampledAhlforsSpace& s, int xi,
                                const std::vector<char>& in_set) {
    double sum = 0;
    for (int j = 0; j < s.n; ++j) {
        if (j == xi || in_set[static_cast<std::size_t>(j)]) continue;
        sum += s.weights[static_cast<std::size_t>(j)] * std::pow(s.dist(xi, j), -s.D);
    }
    return sum;
}

static WeightedValues sampled_items(const SampledAhlforsSpace& s, const SampledFunction& f) {
    WeightedValues items;
    items.reserve(f.values.size());
    for (int i = 0; i < s.n; ++i)
        items.emplace_back(std::abs(f.values[static_cast<std::size_t>(i)]),
                           s.weights[static_cast<std::size_t>(i)]);
    return items;
}

double lp_norm(const SampledAhlforsSpace& s, const SampledFunction& f, double p) {
    return lp_norm_weighted(sampled_items(s, f), p);
}

double entropy_functional(const SampledAhlforsSpace& s, const SampledFunction& f, double p) {
    return entropy_weighted(sampled_items(s, f), p);
}

}  // namespace loglab
