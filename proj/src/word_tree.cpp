#include "loglab/word_tree.hpp"

#include <algorithm>
#include <numeric>

namespace loglab {

TreeBoundarySpace TreeBoundarySpace::make(int k, double epsilon) {
    if (k < 2) throw std::invalid_argument("TreeBoundarySpace: k >= 2 required");
    TreeBoundarySpace s;
    s.k = k;
    s.q = 2 * k - 1;
    s.epsilon = epsilon > 0 ? epsilon : std::log(static_cast<double>(s.q));
    s.D = std::log(static_cast<double>(s.q)) / s.epsilon;
    return s;
}

std::int64_t TreeBoundarySpace::cylinder_count(int depth) const {
    if (depth == 0) return 1;
    std::int64_t n = 2 * k;
    for (int i = 1; i < depth; ++i) n *= q;
    return n;
}

Rational TreeBoundarySpace::cylinder_measure_at(int depth) const {
    if (depth == 0) return Rational(1);
    return Rational(1, 2 * k) * rational_pow(q, -(depth - 1));
}

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i] == inverse_letter(letters_[i - 1]))
            throw std::invalid_argument("ReducedWord: adjacent inverse pair");
}

ReducedWord ReducedWord::parse(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) {
        Letter l;
        if (c >= 'a' && c <= 'z')
            l = static_cast<Letter>(2 * (c - 'a'));
        else if (c >= 'A' && c <= 'Z')
            l = static_cast<Letter>(2 * (c - 'A') + 1);
        else
            throw std::invalid_argument("ReducedWord::parse: bad character");
        out.push_back(l);
    }
    return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::reduce(std::span<const Letter> letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (Letter l : letters) {
        if (!stack.empty() && stack.back() == inverse_letter(l))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return ReducedWord(std::move(stack));
}

ReducedWord ReducedWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l = inverse_letter(l);
    return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::concat(const ReducedWord& rhs) const {
    std::vector<Letter> all(letters_);
    all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(all);
}

ReducedWord ReducedWord::prefix(int n) const {
    return ReducedWord(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

ReducedWord ReducedWord::append(Letter a) const {
    if (!letters_.empty() && a == inverse_letter(letters_.back()))
        throw std::invalid_argument("ReducedWord::append: cancellation");
    std::vector<Letter> out(letters_);
    out.push_back(a);
    return ReducedWord(std::move(out));
}

std::string ReducedWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_)
        out.push_back(static_cast<char>((l & 1) ? 'A' + l / 2 : 'a' + l / 2));
    return out.empty() ? std::string("e") : out;
}

int common_prefix(std::span<const Letter> a, std::span<const Letter> b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return static_cast<int>(i);
}

BoundaryPoint::BoundaryPoint(ReducedWord preperiod, ReducedWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw std::invalid_argument("BoundaryPoint: empty period");
    // The infinite concatenation pre per per ... must stay reduced.
    if (!pre_.empty() && per_.at(0) == inverse_letter(pre_.at(pre_.length() - 1)))
        throw std::invalid_argument("BoundaryPoint: cancellation at preperiod/period seam");
    if (per_.at(0) == inverse_letter(per_.at(per_.length() - 1)))
        throw std::invalid_argument("BoundaryPoint: cancellation at period seam");
}

Letter BoundaryPoint::letter_at(int i) const {
    if (i < pre_.length()) return pre_.at(i);
    return per_.at((i - pre_.length()) % per_.length());
}

ReducedWord BoundaryPoint::prefix(int n) const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(letter_at(i));
    return ReducedWord(std::move(out));
}

int gromov_product(const ReducedWord& x, const ReducedWord& y) {
    return common_prefix(x.letters(), y.letters());
}

int gromov_product(const ReducedWord& x, const BoundaryPoint& xi) {
    int i = 0;
    while (i < x.length() && x.at(i) == xi.letter_at(i)) ++i;
    return i;
}

int gromov_product(const BoundaryPoint& xi, const ReducedWord& x) { return gromov_product(x, xi); }

int gromov_product(const BoundaryPoint& xi, const BoundaryPoint& eta) {
    // Two eventually periodic rays either diverge within one pre+per block of
    // both, or are identical.
    const int p1 = xi.period().length(), p2 = eta.period().length();
    const int bound = std::max(xi.preperiod().length(), eta.preperiod().length()) + p1 * p2 + 1;
    for (int i = 0; i < bound; ++i)
        if (xi.letter_at(i) != eta.letter_at(i)) return i;
    return kInfiniteProduct;
}

ScaleExponent visual_distance(const Cylinder& x, const Cylinder& y) {
    const int m = common_prefix(x.word.letters(), y.word.letters());
    if (m >= std::min(x.depth(), y.depth()))
        throw NonConstantDistance("visual_distance: cylinder contains the other");
    return ScaleExponent::of(m);
}

ScaleExponent visual_distance(const Cylinder& x, const BoundaryPoint& xi) {
    const int m = gromov_product(x.word, xi);
    if (m >= x.depth())
        throw NonConstantDistance("visual_distance: boundary point inside cylinder");
    return ScaleExponent::of(m);
}

ScaleExponent visual_distance(const BoundaryPoint& xi, const Cylinder& x) {
    return visual_distance(x, xi);
}

ScaleExponent visual_distance(const BoundaryPoint& xi, const BoundaryPoint& eta) {
    const int m = gromov_product(xi, eta);
    if (m == kInfiniteProduct) return ScaleExponent::zero_value();
    return ScaleExponent::of(m);
}

ScaleExponent extended_distance(const ReducedWord& x, const BoundaryPoint& xi) {
    return ScaleExponent::of(gromov_product(x, xi));
}

ScaleExponent extended_distance(const ReducedWord& x, const ReducedWord& y) {
    return ScaleExponent::of(gromov_product(x, y));
}

Rational cylinder_measure(const TreeBoundarySpace& s, const Cylinder& c) {
    return s.cylinder_measure_at(c.depth());
}

ScaleExponent metric_derivative_oriented(const TreeBoundarySpace& s, const ReducedWord& g,
                                         const Cylinder& c, bool use_inverse_orientation) {
    (void)s;
    const ReducedWord ref = use_inverse_orientation ? g.inverse() : g;
    const int n = g.length();
    const int depth = c.depth();
    const int cpl = common_prefix(c.word.letters(), ref.letters());
    if (depth < n && cpl == depth)
        throw NeedsRefinement("metric_derivative: not constant on cylinder");
    const int m = std::min(cpl, n);
    return ScaleExponent::of(static_cast<long>(n) - 2 * m);
}

ScaleExponent metric_derivative(const TreeBoundarySpace& s, const ReducedWord& g, const Cylinder& c) {
    return metric_derivative_oriented(s, g, c, true);
}

Cylinder act(const TreeBoundarySpace& s, const ReducedWord& g, const Cylinder& c) {
    (void)s;
    if (c.depth() <= g.length())
        throw DepthTooShallow("act: cylinder depth must exceed |g|");
    return Cylinder{g.concat(c.word)};
}

std::vector<Rational> annulus_masses(const TreeBoundarySpace& s, int glen) {
    if (glen < 1) throw std::invalid_argument("annulus_masses: |g| >= 1 required");
    std::vector<Rational> masses(static_cast<std::size_t>(glen) + 1);
    masses[0] = Rational(s.q, 2 * s.k);
    for (int m = 1; m < glen; ++m)
        masses[static_cast<std::size_t>(m)] = Rational(s.q - 1, 2 * s.k) * rational_pow(s.q, -m);
    masses[static_cast<std::size_t>(glen)] = s.cylinder_measure_at(glen);
    return masses;
}

std::vector<std::pair<int, Rational>> annuli(const TreeBoundarySpace& s, const ReducedWord& g) {
    auto masses = annulus_masses(s, g.length());
    std::vector<std::pair<int, Rational>> out;
    out.reserve(masses.size());
    for (int m = 0; m < static_cast<int>(masses.size()); ++m)
        out.emplace_back(m, masses[static_cast<std::size_t>(m)]);
    return out;
}

BoundaryPoint closest_boundary_ray(const ReducedWord& g) {
    if (g.empty()) throw std::invalid_argument("closest_boundary_ray: |g| >= 1 required");
    const Letter last = g.at(g.length() - 1);
    const Letter forbidden = inverse_letter(last);
    const Letter period = forbidden == 0 ? Letter{1} : Letter{0};
    return BoundaryPoint(g, ReducedWord(std::vector<Letter>{period}));
}

std::int64_t cylinder_index(int k, const ReducedWord& w) {
    const int q = 2 * k - 1;
    if (w.empty()) return 0;
    std::int64_t idx = w.at(0);
    for (int i = 1; i < w.length(); ++i) {
        const Letter f = inverse_letter(w.at(i - 1));
        const Letter l = w.at(i);
        idx = idx * q + (l < f ? l : l - 1);
    }
    return idx;
}

ReducedWord cylinder_word(int k, int depth, std::int64_t index) {
    const int q = 2 * k - 1;
    std::vector<Letter> out(static_cast<std::size_t>(depth));
    std::vector<std::int64_t> digits(static_cast<std::size_t>(depth));
    for (int i = depth - 1; i >= 1; --i) {
        digits[static_cast<std::size_t>(i)] = index % q;
        index /= q;
    }
    if (depth > 0) digits[0] = index;
    for (int i = 0; i < depth; ++i) {
        if (i == 0) {
            out[0] = static_cast<Letter>(digits[0]);
        } else {
            const Letter f = inverse_letter(out[static_cast<std::size_t>(i - 1)]);
            const auto r = digits[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = static_cast<Letter>(r < f ? r : r + 1);
        }
    }
    return ReducedWord(std::move(out));
}

CylinderIterator::CylinderIterator(int k, int depth) : k_(k), depth_(depth) {
    word_.resize(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) {
        if (i == 0) {
            word_[0] = 0;
        } else {
            const Letter f = inverse_letter(word_[static_cast<std::size_t>(i - 1)]);
            word_[static_cast<std::size_t>(i)] = (f == 0) ? 1 : 0;
        }
    }
    if (depth == 0) done_ = false;  // single empty word, one step
}

void CylinderIterator::next() {
    ++index_;
    if (depth_ == 0) {
        done_ = true;
        return;
    }
    const Letter top = static_cast<Letter>(2 * k_ - 1);
    int i = depth_ - 1;
    for (; i >= 0; --i) {
        const Letter f = (i == 0) ? Letter{255} : inverse_letter(word_[static_cast<std::size_t>(i - 1)]);
        Letter l = word_[static_cast<std::size_t>(i)];
        // advance to the next admissible letter at position i
        do {
            if (l == top) {
                l = 255;
                break;
            }
            ++l;
        } while (l == f);
        if (l != 255) {
            word_[static_cast<std::size_t>(i)] = l;
            break;
        }
    }
    if (i < 0) {
        done_ = true;
        return;
    }
    for (int j = i + 1; j < depth_; ++j) {
        const Letter f = inverse_letter(word_[static_cast<std::size_t>(j - 1)]);
        word_[static_cast<std::size_t>(j)] = (f == 0) ? 1 : 0;
    }
}

}  // namespace loglab
