#include "loglab/boundary_reps.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace loglab {

// ---------------------------------------------------------------------------
// PartitionFunction

CylinderFunction PartitionFunction::to_cylinder_function(int depth) const {
    CylinderFunction out = CylinderFunction::zeros(k_, depth);
    const int q = 2 * k_ - 1;
    for (const auto& piece : pieces_) {
        const int len = piece.word.length();
        if (len > depth)
            throw std::invalid_argument("to_cylinder_function: piece deeper than target");
        std::int64_t block = 1;
        for (int i = len; i < depth; ++i) block *= (i == 0 ? 2 * k_ : q);
        std::int64_t base = cylinder_index(k_, piece.word);
        for (int i = len; i < depth; ++i) base *= (i == 0 ? 2 * k_ : q);
        for (std::int64_t b = 0; b < block; ++b)
            out.values[static_cast<std::size_t>(base + b)] = piece.value;
    }
    return out;
}

double lp_norm(const TreeBoundarySpace& s, const PartitionFunction& f, double p) {
    double acc = 0;
    for (const auto& piece : f.pieces_)
        acc += std::pow(std::abs(piece.value), p) * to_double(s.cylinder_measure_at(piece.word.length()));
    return std::pow(acc, 1.0 / p);
}

double luxemburg_norm(const TreeBoundarySpace& s, const PartitionFunction& f,
                      const YoungFunction& y) {
    WeightedValues items;
    items.reserve(f.pieces_.size());
    for (const auto& piece : f.pieces_)
        items.emplace_back(std::abs(piece.value),
                           to_double(s.cylinder_measure_at(piece.word.length())));
    return luxemburg_norm_weighted(items, y);
}

double log_energy(const TreeBoundarySpace& s, const PartitionFunction& f, double p) {
    const auto& pieces = f.pieces_;
    std::vector<double> mass(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i)
        mass[i] = to_double(s.cylinder_measure_at(pieces[i].word.length()));
    double total = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            const double diff = std::abs(pieces[i].value - pieces[j].value);
            if (diff == 0) continue;
            const int m = common_prefix(pieces[i].word.letters(), pieces[j].word.letters());
            total += std::pow(diff, p) * std::pow(static_cast<double>(s.q), m) * mass[i] * mass[j];
        }
    return 2.0 * total;
}

double wlogp_norm(const TreeBoundarySpace& s, const PartitionFunction& f, double p) {
    return std::pow(std::pow(lp_norm(s, f, p), p) + log_energy(s, f, p), 1.0 / p);
}

std::complex<double> inner_product(const TreeBoundarySpace& s, const PartitionFunction& f,
                                   const PartitionFunction& g) {
    std::complex<double> acc = 0;
    for (const auto& pf : f.pieces_)
        for (const auto& pg : g.pieces_) {
            const int lf = pf.word.length(), lg = pg.word.length();
            const int m = common_prefix(pf.word.letters(), pg.word.letters());
            if (m < std::min(lf, lg)) continue;  // disjoint
            acc += pf.value * std::conj(pg.value) *
                   to_double(s.cylinder_measure_at(std::max(lf, lg)));
        }
    return acc;
}

// ---------------------------------------------------------------------------
// Representation operators

void validate(const TreeBoundarySpace& sp, const RepParams& params) {
    if (params.p < 1) throw std::invalid_argument("RepParams: p >= 1 required");
    const double bound = sp.D / params.p;
    if (params.s < -bound - 1e-12 || params.s > bound + 1e-12)
        throw std::invalid_argument("RepParams: s outside [-D/p, D/p]");
}

namespace {

std::complex<double> rep_weight(const TreeBoundarySpace& sp, const RepParams& params, long j) {
    // D_{g^-1}(xi)^{D/p - s - it} with D_{g^-1}(xi) = e^{eps j}
    const double logd = sp.epsilon * static_cast<double>(j);
    const double mod = std::exp((sp.D / params.p - params.s) * logd);
    return std::polar(mod, -params.t * logd);
}

}  // namespace

CylinderFunction apply_rep(const TreeBoundarySpace& sp, const RepParams& params,
                           const ReducedWord& g, const CylinderFunction& f) {
    validate(sp, params);
    if (g.empty()) return f;
    const int n = g.length() + std::max(f.depth, 1);
    const ReducedWord gi = g.inverse();
    CylinderFunction out = CylinderFunction::zeros(f.k, n);
    for (CylinderIterator it(sp.k, n); !it.done(); it.next()) {
        const auto w = it.word();
        const int m = std::min(common_prefix(w, g.letters()), g.length());
        const long j = 2L * m - g.length();
        const ReducedWord image = gi.concat(ReducedWord::reduce(w));
        std::complex<double> val;
        if (f.depth == 0) {
            val = f.values[0];
        } else {
            const ReducedWord pre = image.prefix(f.depth);
            val = f.values[static_cast<std::size_t>(cylinder_index(f.k, pre))];
        }
        out.values[static_cast<std::size_t>(it.index())] = rep_weight(sp, params, j) * val;
    }
    return out;
}

PartitionFunction apply_rep(const TreeBoundarySpace& sp, const RepParams& params,
                            const ReducedWord& g, const PartitionFunction& f) {
    validate(sp, params);
    if (g.empty()) return f;
    const ReducedWord gi = g.inverse();
    auto pieces = f.pieces();
    split_for_reference(sp.k, pieces, gi);
    std::vector<PartitionPiece<std::complex<double>>> out;
    out.reserve(pieces.size());
    for (const auto& piece : pieces) {
        const int mw = std::min(common_prefix(piece.word.letters(), gi.letters()), g.length());
        const long j = static_cast<long>(g.length()) - 2L * mw;
        out.push_back({g.concat(piece.word), rep_weight(sp, params, j) * piece.value});
    }
    return PartitionFunction(sp.k, std::move(out));
}

double xi_integral(const TreeBoundarySpace& sp, int glen, double T) {
    if (glen == 0) return 1.0;
    const auto masses = annulus_masses(sp, glen);
    double acc = 0;
    for (int m = 0; m <= glen; ++m)
        acc += to_double(masses[static_cast<std::size_t>(m)]) *
               std::exp(sp.epsilon * T * static_cast<double>(2 * m - glen));
    return acc;
}

double xi_integral(const TreeBoundarySpace& sp, const ReducedWord& g, double T) {
    return xi_integral(sp, g.length(), T);
}

SqrtExt xi_integral_exact(const TreeBoundarySpace& sp, int glen, long tau_num, long tau_den) {
    if (tau_den != 1 && tau_den != 2)
        throw std::invalid_argument("xi_integral_exact: tau denominator must be 1 or 2");
    if (glen == 0) return SqrtExt::one(sp.q);
    const auto masses = annulus_masses(sp, glen);
    SqrtExt acc = SqrtExt::zero(sp.q);
    for (int m = 0; m <= glen; ++m) {
        // e^{eps T (2m-n)} = q^{tau (2m-n)}, tau = T/D
        const long half_exp = (tau_den == 2) ? tau_num * (2L * m - glen) : 2L * tau_num * (2L * m - glen);
        acc += SqrtExt::half_power(sp.q, half_exp) * masses[static_cast<std::size_t>(m)];
    }
    return acc;
}

namespace {

// Pieces of D_{g^-1}^{D/p} (f o g^-1) for f = 1, with exact q-power values.
std::vector<std::pair<ReducedWord, SqrtExt>> rep_one_pieces_exact(const TreeBoundarySpace& sp,
                                                                  int p, const ReducedWord& g) {
    if (p != 1 && p != 2) throw std::invalid_argument("rep_one_pieces_exact: p in {1,2}");
    const ReducedWord gi = g.inverse();
    std::vector<PartitionPiece<char>> pieces{{ReducedWord{}, 0}};
    split_for_reference(sp.k, pieces, gi);
    std::vector<std::pair<ReducedWord, SqrtExt>> out;
    out.reserve(pieces.size());
    for (const auto& piece : pieces) {
        const int mw = std::min(common_prefix(piece.word.letters(), gi.letters()), g.length());
        const long j = static_cast<long>(g.length()) - 2L * mw;
        // D_{g^-1}^{D/p} = q^{j/p}
        const long half_exp = (p == 2) ? j : 2L * j;
        out.emplace_back(g.concat(piece.word), SqrtExt::half_power(sp.q, half_exp));
    }
    return out;
}

}  // namespace

SqrtExt rep_one_coefficient_exact(const TreeBoundarySpace& sp, int p, const ReducedWord& g,
                                  const Cylinder& target) {
    SqrtExt acc = SqrtExt::zero(sp.q);
    for (const auto& [word, value] : rep_one_pieces_exact(sp, p, g)) {
        const int m = common_prefix(word.letters(), target.word.letters());
        if (m < std::min(word.length(), target.depth())) continue;
        acc += value * sp.cylinder_measure_at(std::max(word.length(), target.depth()));
    }
    return acc;
}

SqrtExt rep_one_coefficient_exact(const TreeBoundarySpace& sp, int p, const ReducedWord& g) {
    SqrtExt acc = SqrtExt::zero(sp.q);
    for (const auto& [word, value] : rep_one_pieces_exact(sp, p, g))
        acc += value * sp.cylinder_measure_at(word.length());
    return acc;
}

// ---------------------------------------------------------------------------
// Multipliers

MultiplierFunction theta_multiplier(const TreeBoundarySpace& sp, const ReducedWord& g, double p,
                                    double t) {
    MultiplierFunction out;
    out.g = g;
    const int n = g.length();
    if (n == 0) {
        out.by_level = {0.0};
        return out;
    }
    const auto masses = annulus_masses(sp, n);
    out.by_level.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        double acc = 0;
        for (int mp = 0; mp <= n; ++mp) {
            if (mp == m) continue;
            // ratio D_g(zeta)/D_g(omega) = e^{2 eps (mp - m)}
            const double logr = 2.0 * sp.epsilon * static_cast<double>(mp - m);
            const double mod = std::exp(logr * sp.D / (2.0 * p));
            const double phase = logr * t;
            const double dist2 = mod * mod - 2.0 * mod * std::cos(phase) + 1.0;
            acc += to_double(masses[static_cast<std::size_t>(mp)]) *
                   std::pow(static_cast<double>(sp.q), std::min(m, mp)) * std::pow(dist2, p / 2.0);
        }
        out.by_level[static_cast<std::size_t>(m)] = acc;
    }
    return out;
}

CylinderFunction MultiplierFunction::as_cylinder_function(const TreeBoundarySpace& sp) const {
    const int n = g.length();
    CylinderFunction out = CylinderFunction::zeros(sp.k, n);
    if (n == 0) {
        out.values[0] = by_level[0];
        return out;
    }
    const ReducedWord ref = g.inverse();
    for (CylinderIterator it(sp.k, n); !it.done(); it.next()) {
        const int m = common_prefix(it.word(), ref.letters());
        out.values[static_cast<std::size_t>(it.index())] = by_level[static_cast<std::size_t>(m)];
    }
    return out;
}

double MultiplierFunction::sup() const {
    double m = 0;
    for (double v : by_level) m = std::max(m, v);
    return m;
}

SqrtExt theta_sup_exact(const TreeBoundarySpace& sp, const ReducedWord& g, int p) {
    if (p != 1 && p != 2) throw std::invalid_argument("theta_sup_exact: p in {1,2}");
    const int n = g.length();
    if (n == 0) return SqrtExt::zero(sp.q);
    const auto masses = annulus_masses(sp, n);
    SqrtExt best = SqrtExt::zero(sp.q);
    double best_value = -1;
    for (int m = 0; m <= n; ++m) {
        SqrtExt acc = SqrtExt::zero(sp.q);
        for (int mp = 0; mp <= n; ++mp) {
            if (mp == m) continue;
            const long delta = mp - m;
            SqrtExt term = SqrtExt::zero(sp.q);
            if (p == 1) {
                // |q^delta - 1|
                Rational r = rational_pow(sp.q, delta) - 1;
                term.rat = abs(r);
            } else {
                // |q^(delta/2) - 1|^2 = q^delta - 2 q^(delta/2) + 1
                term = SqrtExt(rational_pow(sp.q, delta) + 1, Rational(0), sp.q);
                term += SqrtExt::half_power(sp.q, delta) * Rational(-2);
            }
            acc += term * (masses[static_cast<std::size_t>(mp)] * rational_pow(sp.q, std::min(m, mp)));
        }
        if (acc.value() > best_value) {
            best_value = acc.value();
            best = acc;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Coefficients, duality, norms

std::complex<double> matrix_coefficient(const TreeBoundarySpace& sp, const RepParams& params,
                                        const ReducedWord& g, const PartitionFunction& f,
                                        const PartitionFunction& h) {
    return inner_product(sp, apply_rep(sp, params, g, f), h);
}

std::pair<std::complex<double>, std::complex<double>> duality_check(const TreeBoundarySpace& sp,
                                                                    const RepParams& params,
                                                                    const ReducedWord& g,
                                                                    const PartitionFunction& f,
                                                                    const PartitionFunction& h) {
    if (params.p <= 1) throw std::invalid_argument("duality_check: p > 1 required");
    const double qexp = params.p / (params.p - 1.0);
    const RepParams dual{qexp, -params.s, params.t};
    const auto lhs = inner_product(sp, apply_rep(sp, params, g, f), h);
    const auto rhs = inner_product(sp, f, apply_rep(sp, dual, g.inverse(), h));
    return {lhs, rhs};
}

namespace {

// W-form matrix (L^p mass + energy form) over a family of disjoint cylinders.
Eigen::MatrixXd wform_matrix(const TreeBoundarySpace& sp, const std::vector<ReducedWord>& words) {
    const std::int64_t n = static_cast<std::int64_t>(words.size());
    std::vector<double> mass(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        mass[i] = to_double(sp.cylinder_measure_at(words[i].length()));
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const int m = common_prefix(words[static_cast<std::size_t>(i)].letters(),
                                        words[static_cast<std::size_t>(j)].letters());
            const double w = std::pow(static_cast<double>(sp.q), m) *
                             mass[static_cast<std::size_t>(i)] * mass[static_cast<std::size_t>(j)];
            W(i, j) = w;
            W(j, i) = w;
        }
    Eigen::VectorXd rowsum = W.rowwise().sum();
    Eigen::MatrixXd B = -2.0 * W;
    for (std::int64_t i = 0; i < n; ++i) B(i, i) += 2.0 * rowsum(i) + mass[static_cast<std::size_t>(i)];
    return B;
}

double max_generalized_eigenvalue(const Eigen::MatrixXcd& A, const Eigen::MatrixXd& B) {
    const Eigen::LLT<Eigen::MatrixXd> llt(B);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("op_norm_lower: W-form not positive definite");
    const std::int64_t n = A.rows();
    double best = 0;
    for (int start = 0; start < 3; ++start) {
        Eigen::VectorXcd x(n);
        for (std::int64_t i = 0; i < n; ++i) {
            const double base = start == 0 ? 1.0 : (start == 1 ? ((i % 2) ? -1.0 : 1.0) : 0.0);
            x(i) = std::complex<double>(base + 1e-3 * std::sin(0.7 * static_cast<double>(i + 1)),
                                        start == 2 ? std::cos(0.3 * static_cast<double>(i)) : 0.0);
        }
        double lambda = 0;
        for (int iter = 0; iter < 500; ++iter) {
            Eigen::VectorXcd ax = A * x;
            const double num = std::real(x.dot(ax));
            Eigen::VectorXcd bx(n);
            bx.real() = B * x.real().matrix();
            bx.imag() = B * x.imag().matrix();
            const double den = std::real(x.dot(bx));
            const double next = num / den;
            Eigen::VectorXcd y(n);
            y.real() = llt.solve(ax.real().matrix());
            y.imag() = llt.solve(ax.imag().matrix());
            const double norm = y.norm();
            if (norm == 0) break;
            x = y / norm;
            if (iter > 3 && std::abs(next - lambda) <= 1e-13 * std::max(1.0, std::abs(next))) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        best = std::max(best, lambda);
    }
    return best;
}

}  // namespace

double op_norm_lower(const TreeBoundarySpace& sp, const RepParams& params, const ReducedWord& g,
                     int depth) {
    validate(sp, params);
    if (g.empty()) return 1.0;
    const std::int64_t n = sp.cylinder_count(depth);
    if (params.p == 2.0 && params.s == 0.0) {
        if (n > 4000) throw DimensionTooLarge("op_norm_lower: depth-space too large");
        std::vector<ReducedWord> words(static_cast<std::size_t>(n));
        std::vector<ReducedWord> images(static_cast<std::size_t>(n));
        Eigen::VectorXcd weight(n);
        const int glen = g.length();
        for (std::int64_t i = 0; i < n; ++i) {
            words[static_cast<std::size_t>(i)] = cylinder_word(sp.k, depth, i);
            images[static_cast<std::size_t>(i)] = g.concat(words[static_cast<std::size_t>(i)]);
            const int mw = std::min(
                common_prefix(words[static_cast<std::size_t>(i)].letters(), g.inverse().letters()),
                glen);
            weight(i) = rep_weight(sp, params, static_cast<long>(glen) - 2L * mw);
        }
        const Eigen::MatrixXd B = wform_matrix(sp, words);
        const Eigen::MatrixXd Bimg = wform_matrix(sp, images);
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                A(i, j) = std::conj(weight(i)) * weight(j) * Bimg(i, j);
        return std::sqrt(max_generalized_eigenvalue(A, B));
    }

    // Certified lower bound only: max over a fixed candidate family.
    std::vector<PartitionFunction> candidates;
    candidates.push_back(PartitionFunction::constant(sp.k, 1.0));
    const int cand_depth = std::min(depth, 2);
    for (std::int64_t i = 0; i < sp.cylinder_count(cand_depth); ++i) {
        CylinderFunction chi = CylinderFunction::indicator(sp.k, Cylinder{cylinder_word(sp.k, cand_depth, i)});
        candidates.push_back(PartitionFunction::from(chi));
    }
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next_unit = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) / 9007199254740992.0 * 2.0 - 1.0;
    };
    for (int r = 0; r < 24; ++r) {
        CylinderFunction f = CylinderFunction::zeros(sp.k, std::min(depth, 3));
        for (auto& v : f.values) v = next_unit();
        candidates.push_back(PartitionFunction::from(f));
    }
    double best = 0;
    for (const auto& cand : candidates) {
        const double denom = wlogp_norm(sp, cand, params.p);
        if (denom == 0) continue;
        const double num = wlogp_norm(sp, apply_rep(sp, params, g, cand), params.p);
        best = std::max(best, num / denom);
    }
    return best;
}

BasicCalcBound basic_calc_upper(const TreeBoundarySpace& sp, const RepParams& params,
                                const ReducedWord& g, double logsob_luxemburg_constant) {
    if (params.s != 0.0) throw std::invalid_argument("basic_calc_upper: s = 0 required");
    BasicCalcBound out;
    out.c1 = std::pow(3.0, params.p - 1.0);
    out.c2 = 2.0 * out.c1;
    out.theta_sup = theta_multiplier(sp, g, params.p, params.t).sup();
    out.composite = out.c1 + out.c2 * out.theta_sup *
                                std::pow(logsob_luxemburg_constant, params.p);
    return out;
}

LrGrowthBounds lr_growth(const TreeBoundarySpace& sp, double p, double r, int glen) {
    if (p == r) return {1.0, 1.0};
    double pp = p, rr = r;
    if (pp > rr) {  // duality: swap to conjugate exponents
        pp = p / (p - 1.0);
        rr = r / (r - 1.0);
    }
    LrGrowthBounds out;
    out.lower = std::pow(xi_integral(sp, glen, sp.D * rr / pp), 1.0 / rr);
    out.upper = std::exp(sp.epsilon * sp.D * std::abs(1.0 / pp - 1.0 / rr) * glen);
    return out;
}

}  // namespace loglab
