#include "loglab/energy_forms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace loglab {

namespace {

// Applies fn(m, [b1, b1+len), [b2, b2+len)) to every ordered-once block pair
// that diverges at depth m, recursing in lexicographic order.
template <class Fn>
void for_each_divergence_group(int k, int leaf_depth, int m, std::int64_t begin, std::int64_t size,
                               Fn&& fn) {
    if (m >= leaf_depth) return;
    const int children = (m == 0) ? 2 * k : 2 * k - 1;
    const std::int64_t block = size / children;
    for (int i = 0; i < children; ++i)
        for (int j = i + 1; j < children; ++j)
            fn(m, begin + i * block, begin + j * block, block);
    for (int i = 0; i < children; ++i)
        for_each_divergence_group(k, leaf_depth, m + 1, begin + i * block, block,
                                  std::forward<Fn>(fn));
}

double abs_pow(double a, double p) {
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return std::pow(a, p);
}

}  // namespace

EnergyBreakdown log_energy(const TreeBoundarySpace& s, const CylinderFunction& f, double p) {
    const int n = f.depth;
    EnergyBreakdown out;
    if (n == 0) return out;
    std::vector<double> by_m(static_cast<std::size_t>(n), 0.0);
    const double nu = to_double(s.cylinder_measure_at(n));
    const auto& v = f.values;
    for_each_divergence_group(
        s.k, n, 0, 0, f.size(), [&](int m, std::int64_t b1, std::int64_t b2, std::int64_t len) {
            double acc = 0;
            for (std::int64_t i = b1; i < b1 + len; ++i)
                for (std::int64_t j = b2; j < b2 + len; ++j)
                    acc += abs_pow(std::abs(v[static_cast<std::size_t>(i)] -
                                            v[static_cast<std::size_t>(j)]),
                                   p);
            by_m[static_cast<std::size_t>(m)] += acc * std::pow(static_cast<double>(s.q), m);
        });
    for (int m = 0; m < n; ++m) {
        const double c = 2.0 * nu * nu * by_m[static_cast<std::size_t>(m)];
        out.by_divergence_depth.emplace_back(m, c);
        out.total += c;
    }
    return out;
}

double log_energy_naive(const TreeBoundarySpace& s, const CylinderFunction& f, double p) {
    const int n = f.depth;
    if (n == 0) return 0;
    const double nu = to_double(s.cylinder_measure_at(n));
    std::vector<ReducedWord> words(static_cast<std::size_t>(f.size()));
    for (CylinderIterator it(s.k, n); !it.done(); it.next())
        words[static_cast<std::size_t>(it.index())] = cylinder_word(s.k, n, it.index());
    double total = 0;
    for (std::int64_t i = 0; i < f.size(); ++i)
        for (std::int64_t j = i + 1; j < f.size(); ++j) {
            const int m = common_prefix(words[static_cast<std::size_t>(i)].letters(),
                                        words[static_cast<std::size_t>(j)].letters());
            total += abs_pow(std::abs(f.values[static_cast<std::size_t>(i)] -
                                      f.values[static_cast<std::size_t>(j)]),
                             p) *
                     std::pow(static_cast<double>(s.q), m);
        }
    return 2.0 * nu * nu * total;
}

double log_energy_fast_p2(const TreeBoundarySpace& s, const CylinderFunction& f) {
    const int n = f.depth;
    if (n == 0) return 0;
    const double nu = to_double(s.cylinder_measure_at(n));

    // Bottom-up: returns (sum f nu, sum |f|^2 nu) of the block and adds the
    // node cross terms on the way.
    double total = 0;
    auto rec = [&](auto&& self, int m, std::int64_t begin, std::int64_t size)
        -> std::pair<std::complex<double>, double> {
        if (m == n) {
            const auto& v = f.values[static_cast<std::size_t>(begin)];
            return {v * nu, std::norm(v) * nu};
        }
        const int children = (m == 0) ? 2 * s.k : s.q;
        const std::int64_t block = size / children;
        const double mass_child = nu * static_cast<double>(block);
        std::vector<std::complex<double>> s1(static_cast<std::size_t>(children));
        std::vector<double> s2(static_cast<std::size_t>(children));
        std::complex<double> b1 = 0;
        double b2 = 0;
        for (int i = 0; i < children; ++i) {
            auto [c1, c2] = self(self, m + 1, begin + i * block, block);
            s1[static_cast<std::size_t>(i)] = c1;
            s2[static_cast<std::size_t>(i)] = c2;
            b1 += c1;
            b2 += c2;
        }
        const double total_mass = mass_child * children;
        double cross = 0;
        double s1sq = 0;
        for (int i = 0; i < children; ++i) {
            cross += 2.0 * s2[static_cast<std::size_t>(i)] * (total_mass - mass_child);
            s1sq += std::norm(s1[static_cast<std::size_t>(i)]);
        }
        cross -= 2.0 * (std::norm(b1) - s1sq);
        total += cross * std::pow(static_cast<double>(s.q), m);
        return {b1, b2};
    };
    rec(rec, 0, 0, f.size());
    return total;
}

namespace {

Rational abs_pow_exact(const std::complex<double>& a, const std::complex<double>& b, int p) {
    const Rational dre = rational_from_double(a.real()) - rational_from_double(b.real());
    const Rational dim = rational_from_double(a.imag()) - rational_from_double(b.imag());
    if (p == 2) return dre * dre + dim * dim;
    if (dim != 0) throw std::invalid_argument("log_energy_exact: odd p needs real values");
    Rational d = abs(dre);
    Rational out(1);
    for (int i = 0; i < p; ++i) out *= d;
    return out;
}

}  // namespace

EnergyBreakdownExact log_energy_exact(const TreeBoundarySpace& s, const CylinderFunction& f, int p) {
    if (p < 1) throw std::invalid_argument("log_energy_exact: integer p >= 1");
    const int n = f.depth;
    EnergyBreakdownExact out;
    out.total = 0;
    if (n == 0) return out;
    std::vector<Rational> by_m(static_cast<std::size_t>(n), Rational(0));
    const Rational nu = s.cylinder_measure_at(n);
    for_each_divergence_group(
        s.k, n, 0, 0, f.size(), [&](int m, std::int64_t b1, std::int64_t b2, std::int64_t len) {
            Rational acc(0);
            for (std::int64_t i = b1; i < b1 + len; ++i)
                for (std::int64_t j = b2; j < b2 + len; ++j)
                    acc += abs_pow_exact(f.values[static_cast<std::size_t>(i)],
                                         f.values[static_cast<std::size_t>(j)], p);
            by_m[static_cast<std::size_t>(m)] += acc * rational_pow(s.q, m);
        });
    for (int m = 0; m < n; ++m) {
        const Rational c = Rational(2) * nu * nu * by_m[static_cast<std::size_t>(m)];
        out.by_divergence_depth.emplace_back(m, c);
        out.total += c;
    }
    return out;
}

Rational log_energy_naive_exact(const TreeBoundarySpace& s, const CylinderFunction& f, int p) {
    const int n = f.depth;
    if (n == 0) return Rational(0);
    const Rational nu = s.cylinder_measure_at(n);
    std::vector<ReducedWord> words(static_cast<std::size_t>(f.size()));
    for (std::int64_t i = 0; i < f.size(); ++i)
        words[static_cast<std::size_t>(i)] = cylinder_word(s.k, n, i);
    Rational total(0);
    for (std::int64_t i = 0; i < f.size(); ++i)
        for (std::int64_t j = i + 1; j < f.size(); ++j) {
            const int m = common_prefix(words[static_cast<std::size_t>(i)].letters(),
                                        words[static_cast<std::size_t>(j)].letters());
            total += abs_pow_exact(f.values[static_cast<std::size_t>(i)],
                                   f.values[static_cast<std::size_t>(j)], p) *
                     rational_pow(s.q, m);
        }
    return Rational(2) * nu * nu * total;
}

double wlogp_norm(const TreeBoundarySpace& s, const CylinderFunction& f, double p) {
    const double lp = lp_norm(s, f, p);
    return std::pow(std::pow(lp, p) + log_energy(s, f, p).total, 1.0 / p);
}

double log_energy_sampled(const SampledAhlforsSpace& s, const SampledFunction& f, double p) {
    double total = 0;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) {
            const double diff = std::abs(f.values[static_cast<std::size_t>(i)] -
                                         f.values[static_cast<std::size_t>(j)]);
            if (diff == 0) continue;
            total += abs_pow(diff, p) * std::pow(s.dist(i, j), -s.D) *
                     s.weights[static_cast<std::size_t>(i)] * s.weights[static_cast<std::size_t>(j)];
        }
    return 2.0 * total;
}

double CutoffKernelOperator::min_N() const {
    double m = 1e300;
    for (double x : N_values) m = std::min(m, x);
    return N_values.empty() ? 0.0 : m;
}

std::vector<std::complex<double>> CutoffKernelOperator::apply(
    const std::vector<std::complex<double>>& f) const {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        std::complex<double> acc = 0;
        for (int j = 0; j < n; ++j)
            acc += kernel[static_cast<std::size_t>(i) * n + j] * f[static_cast<std::size_t>(j)] *
                   masses[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

CutoffKernelOperator cutoff_operator(const TreeBoundarySpace& s, int depth, double epsilon_cut) {
    if (!(epsilon_cut > 0)) throw std::invalid_argument("cutoff_operator: eps_cut > 0 required");
    if (depth > 6) throw DimensionTooLarge("cutoff_operator: tree depth capped at 6");
    const std::int64_t n = s.cylinder_count(depth);
    CutoffKernelOperator op;
    op.epsilon_cut = epsilon_cut;
    op.n = static_cast<int>(n);
    op.kernel.assign(static_cast<std::size_t>(n) * n, 0.0);
    op.masses.assign(static_cast<std::size_t>(n), to_double(s.cylinder_measure_at(depth)));
    std::vector<ReducedWord> words(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) words[static_cast<std::size_t>(i)] = cylinder_word(s.k, depth, i);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const int m = common_prefix(words[static_cast<std::size_t>(i)].letters(),
                                        words[static_cast<std::size_t>(j)].letters());
            const double d = std::exp(-s.epsilon * m);
            if (d > epsilon_cut) {
                const double kval = std::pow(static_cast<double>(s.q), m);
                op.kernel[static_cast<std::size_t>(i) * n + j] = kval;
                op.kernel[static_cast<std::size_t>(j) * n + i] = kval;
            }
        }
    op.N_values.assign(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t i = 0; i < n; ++i) {
        double acc = 0;
        for (std::int64_t j = 0; j < n; ++j)
            acc += op.kernel[static_cast<std::size_t>(i) * n + j] * op.masses[static_cast<std::size_t>(j)];
        op.N_values[static_cast<std::size_t>(i)] = acc;
    }
    return op;
}

CutoffKernelOperator cutoff_operator(const SampledAhlforsSpace& s, double epsilon_cut) {
    if (!(epsilon_cut > 0)) throw std::invalid_argument("cutoff_operator: eps_cut > 0 required");
    if (s.n > 2048) throw DimensionTooLarge("cutoff_operator: sample capped at 2048 points");
    CutoffKernelOperator op;
    op.epsilon_cut = epsilon_cut;
    op.n = s.n;
    op.kernel.assign(static_cast<std::size_t>(s.n) * s.n, 0.0);
    op.masses = s.weights;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) {
            const double d = s.dist(i, j);
            if (d > epsilon_cut) {
                const double kval = std::pow(d, -s.D);
                op.kernel[static_cast<std::size_t>(i) * s.n + j] = kval;
                op.kernel[static_cast<std::size_t>(j) * s.n + i] = kval;
            }
        }
    op.N_values.assign(static_cast<std::size_t>(s.n), 0.0);
    for (int i = 0; i < s.n; ++i) {
        double acc = 0;
        for (int j = 0; j < s.n; ++j)
            acc += op.kernel[static_cast<std::size_t>(i) * s.n + j] * op.masses[static_cast<std::size_t>(j)];
        op.N_values[static_cast<std::size_t>(i)] = acc;
    }
    return op;
}

Rational tree_cutoff_N_exact(const TreeBoundarySpace& s, int j) {
    // sum_{m < j} nu(A_m) q^m: annuli with d > e^(-eps j)
    if (j < 1) return Rational(0);
    auto masses = annulus_masses(s, std::max(j, 1));
    Rational acc(0);
    for (int m = 0; m < j; ++m) acc += masses[static_cast<std::size_t>(m)] * rational_pow(s.q, m);
    return acc;
}

std::vector<double> embedding_spectrum(const TreeBoundarySpace& s, int depth, int count) {
    if (depth > 6) throw DimensionTooLarge("embedding_spectrum: depth capped at 6");
    const std::int64_t n = s.cylinder_count(depth);
    if (count > n) throw DimensionTooLarge("embedding_spectrum: count exceeds dimension");
    const double nu = to_double(s.cylinder_measure_at(depth));

    // W-form B = M + L, L the energy quadratic form 2(diag(rowsum) - W).
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    std::vector<ReducedWord> words(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) words[static_cast<std::size_t>(i)] = cylinder_word(s.k, depth, i);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const int m = common_prefix(words[static_cast<std::size_t>(i)].letters(),
                                        words[static_cast<std::size_t>(j)].letters());
            const double w = std::pow(static_cast<double>(s.q), m) * nu * nu;
            W(i, j) = w;
            W(j, i) = w;
        }
    Eigen::VectorXd rowsum = W.rowwise().sum();
    Eigen::MatrixXd B = -2.0 * W;
    for (std::int64_t i = 0; i < n; ++i) B(i, i) += 2.0 * rowsum(i) + nu;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (std::int64_t i = 0; i < n; ++i) M(i, i) = nu;

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, B);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("embedding_spectrum: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(ev(n - 1 - i));
    return out;
}

}  // namespace loglab
