#include "loglab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <vector>

namespace loglab {

namespace {

// All non-root vertices of depth <= maxd in DFS (= lexicographic) order;
// subtrees are contiguous index ranges.
struct VertexTable {
    int k = 2, maxd = 0, stride = 0;
    std::vector<Letter> letters;
    std::vector<std::int8_t> depth;
    std::vector<std::int32_t> subtree_end;

    int count() const { return static_cast<int>(depth.size()); }
    const Letter* word(int v) const { return letters.data() + static_cast<std::size_t>(v) * stride; }

    static VertexTable build(int k, int maxd) {
        VertexTable t;
        t.k = k;
        t.maxd = maxd;
        t.stride = maxd;
        std::vector<Letter> cur;
        auto add = [&](auto&& self) -> void {
            const int v = t.count();
            t.depth.push_back(static_cast<std::int8_t>(cur.size()));
            t.subtree_end.push_back(0);
            t.letters.resize(t.letters.size() + static_cast<std::size_t>(t.stride), 0);
            std::copy(cur.begin(), cur.end(),
                      t.letters.begin() + static_cast<std::size_t>(v) * t.stride);
            if (static_cast<int>(cur.size()) < maxd) {
                for (Letter l = 0; l < 2 * k; ++l) {
                    if (l == inverse_letter(cur.back())) continue;
                    cur.push_back(l);
                    self(self);
                    cur.pop_back();
                }
            }
            t.subtree_end[static_cast<std::size_t>(v)] = t.count();
        };
        for (Letter l = 0; l < 2 * k; ++l) {
            cur.push_back(l);
            add(add);
            cur.pop_back();
        }
        return t;
    }
};

std::vector<ReducedWord> words_up_to(int k, int min_len, int max_len) {
    std::vector<ReducedWord> out;
    if (min_len == 0) out.push_back(ReducedWord{});
    std::vector<Letter> cur;
    auto gen = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) >= min_len)
            out.push_back(ReducedWord(std::vector<Letter>(cur)));
        if (static_cast<int>(cur.size()) == max_len) return;
        for (Letter l = 0; l < 2 * k; ++l) {
            if (!cur.empty() && l == inverse_letter(cur.back())) continue;
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    gen(gen);
    return out;
}

ReducedWord random_word(int k, int len, std::mt19937_64& rng) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int span = (i == 0) ? 2 * k : 2 * k - 1;
        auto r = static_cast<Letter>(rng() % static_cast<std::uint64_t>(span));
        if (i > 0) {
            const Letter f = inverse_letter(out.back());
            if (r >= f) r = static_cast<Letter>(r + 1);
        }
        out.push_back(r);
    }
    return ReducedWord(std::move(out));
}

int cpl_raw(const Letter* a, int la, const Letter* b, int lb) {
    const int n = std::min(la, lb);
    int i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

template <class Fn>
SuiteStats parallel_reduce(int items, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, items));
    std::vector<SuiteStats> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const int begin = static_cast<int>(static_cast<std::int64_t>(items) * t / threads);
        const int end = static_cast<int>(static_cast<std::int64_t>(items) * (t + 1) / threads);
        pool.emplace_back([&, t, begin, end] { partial[static_cast<std::size_t>(t)] = fn(begin, end); });
    }
    for (auto& th : pool) th.join();
    SuiteStats total;
    for (const auto& p : partial) {
        total.checks += p.checks;
        total.failures += p.failures;
    }
    return total;
}

}  // namespace

SuiteStats run_gmv_suite(const TreeBoundarySpace& s, int max_depth, int max_glen,
                         bool corrupt_orientation, int threads) {
    const VertexTable table = VertexTable::build(s.k, max_depth);
    const auto gs = words_up_to(s.k, 0, max_glen);
    const int nv = table.count();

    return parallel_reduce(static_cast<int>(gs.size()), threads, [&](int gbegin, int gend) {
        SuiteStats stats;
        const int img_stride = max_depth + max_glen;
        std::vector<std::uint8_t> m_deriv(static_cast<std::size_t>(nv));
        std::vector<std::uint8_t> ok(static_cast<std::size_t>(nv));
        std::vector<std::uint8_t> img_len(static_cast<std::size_t>(nv));
        std::vector<Letter> img(static_cast<std::size_t>(nv) * img_stride);

        for (int gi = gbegin; gi < gend; ++gi) {
            const ReducedWord& g = gs[static_cast<std::size_t>(gi)];
            const ReducedWord gbar = g.inverse();
            const int glen = g.length();
            const Letter* gb = gbar.letters().data();
            const Letter* gw = g.letters().data();
            const Letter* deriv_ref = corrupt_orientation ? gw : gb;

            for (int v = 0; v < nv; ++v) {
                const int dv = table.depth[static_cast<std::size_t>(v)];
                const Letter* w = table.word(v);
                ok[static_cast<std::size_t>(v)] = dv > glen;
                if (dv <= glen) continue;
                m_deriv[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
                    std::min(cpl_raw(w, dv, deriv_ref, glen), glen));
                // image g . w: cancellation is cpl(w, gbar)
                const int j = cpl_raw(w, dv, gb, glen);
                Letter* out = img.data() + static_cast<std::size_t>(v) * img_stride;
                const int keep_g = glen - j;
                for (int i = 0; i < keep_g; ++i) out[i] = gw[i];
                for (int i = j; i < dv; ++i) out[keep_g + i - j] = w[i];
                img_len[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(keep_g + dv - j);
            }

            // node-grouped pair loop; the root's child blocks first
            auto scan_blocks = [&](int node_depth, int begin, int end, auto child_end) {
                for (int c1 = begin; c1 != end;) {
                    const int e1 = child_end(c1);
                    for (int c2 = e1; c2 != end;) {
                        const int e2 = child_end(c2);
                        for (int v1 = c1; v1 < e1; ++v1) {
                            if (!ok[static_cast<std::size_t>(v1)]) continue;
                            const Letter* i1 = img.data() + static_cast<std::size_t>(v1) * img_stride;
                            const int l1 = img_len[static_cast<std::size_t>(v1)];
                            const int m1 = m_deriv[static_cast<std::size_t>(v1)];
                            for (int v2 = c2; v2 < e2; ++v2) {
                                if (!ok[static_cast<std::size_t>(v2)]) continue;
                                const int want = glen - m1 -
                                                 static_cast<int>(m_deriv[static_cast<std::size_t>(v2)]) +
                                                 node_depth;
                                const int got = cpl_raw(
                                    i1, l1, img.data() + static_cast<std::size_t>(v2) * img_stride,
                                    img_len[static_cast<std::size_t>(v2)]);
                                ++stats.checks;
                                if (got != want) ++stats.failures;
                            }
                        }
                        c2 = e2;
                    }
                    c1 = e1;
                }
            };
            auto child_end = [&](int v) { return static_cast<int>(table.subtree_end[static_cast<std::size_t>(v)]); };
            scan_blocks(0, 0, nv, child_end);
            for (int v = 0; v < nv; ++v)
                if (child_end(v) > v + 1)
                    scan_blocks(table.depth[static_cast<std::size_t>(v)], v + 1, child_end(v), child_end);
        }
        return stats;
    });
}

SuiteStats run_cocycle_suite(const TreeBoundarySpace& s, int exhaustive_len, int sampled_len,
                             int sampled_pairs, int samples_per_pair, std::uint64_t seed,
                             int threads) {
    const auto hs = words_up_to(s.k, 0, exhaustive_len);

    SuiteStats total = parallel_reduce(static_cast<int>(hs.size()), threads, [&](int hbegin, int hend) {
        SuiteStats stats;
        for (int hi = hbegin; hi < hend; ++hi) {
            const ReducedWord& h = hs[static_cast<std::size_t>(hi)];
            const ReducedWord hbar = h.inverse();
            const int hlen = h.length();
            for (int glen = 0; glen <= exhaustive_len; ++glen) {
                const int depth = glen + hlen + 1;
                const std::int64_t n = s.cylinder_count(depth);
                // cache m_h and the image h.c per cylinder
                const int img_stride = depth + hlen;
                std::vector<std::uint8_t> mh(static_cast<std::size_t>(n));
                std::vector<std::uint8_t> hlen_img(static_cast<std::size_t>(n));
                std::vector<Letter> himg(static_cast<std::size_t>(n) * img_stride);
                for (CylinderIterator it(s.k, depth); !it.done(); it.next()) {
                    const Letter* w = it.word().data();
                    const auto idx = static_cast<std::size_t>(it.index());
                    const int j = cpl_raw(w, depth, hbar.letters().data(), hlen);
                    mh[idx] = static_cast<std::uint8_t>(std::min(j, hlen));
                    Letter* out = himg.data() + idx * img_stride;
                    const int keep = hlen - j;
                    for (int i = 0; i < keep; ++i) out[i] = h.letters()[static_cast<std::size_t>(i)];
                    for (int i = j; i < depth; ++i) out[keep + i - j] = w[i];
                    hlen_img[idx] = static_cast<std::uint8_t>(keep + depth - j);
                }
                for (const auto& g : words_up_to(s.k, glen, glen)) {
                    const ReducedWord gbar = g.inverse();
                    const ReducedWord gh = g.concat(h);
                    const ReducedWord ghbar = gh.inverse();
                    const int ghlen = gh.length();
                    for (CylinderIterator it(s.k, depth); !it.done(); it.next()) {
                        const Letter* w = it.word().data();
                        const auto idx = static_cast<std::size_t>(it.index());
                        const int mg = std::min(
                            cpl_raw(himg.data() + idx * img_stride, hlen_img[idx],
                                    gbar.letters().data(), glen),
                            glen);
                        const int mgh =
                            std::min(cpl_raw(w, depth, ghbar.letters().data(), ghlen), ghlen);
                        ++stats.checks;
                        if (ghlen - 2 * mgh != (glen - 2 * mg) + (hlen - 2 * static_cast<int>(mh[idx])))
                            ++stats.failures;
                    }
                }
            }
        }
        return stats;
    });

    // seeded random tail at longer lengths
    std::mt19937_64 rng(seed);
    SuiteStats sampled;
    for (int i = 0; i < sampled_pairs; ++i) {
        const int gl = exhaustive_len + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                 std::max(1, sampled_len - exhaustive_len)));
        const int hl = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(sampled_len));
        const ReducedWord g = random_word(s.k, gl, rng);
        const ReducedWord h = random_word(s.k, hl, rng);
        const ReducedWord gh = g.concat(h);
        const int depth = gl + hl + 1;
        for (int c = 0; c < samples_per_pair; ++c) {
            const std::int64_t idx =
                static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(s.cylinder_count(depth)));
            const Cylinder cyl{cylinder_word(s.k, depth, idx)};
            const auto dh = metric_derivative(s, h, cyl);
            const auto dg = metric_derivative(s, g, act(s, h, cyl));
            const auto dgh = metric_derivative(s, gh, cyl);
            ++sampled.checks;
            if (dgh.exponent != dg.exponent + dh.exponent) ++sampled.failures;
        }
    }
    total.checks += sampled.checks;
    total.failures += sampled.failures;
    return total;
}

SuiteStats run_change_of_var_suite(const TreeBoundarySpace& s, int exhaustive_glen, int max_glen,
                                   int sampled_per_len, std::uint64_t seed, int threads) {
    std::vector<ReducedWord> gs = words_up_to(s.k, 1, exhaustive_glen);
    std::mt19937_64 rng(seed);
    for (int len = exhaustive_glen + 1; len <= max_glen; ++len)
        for (int i = 0; i < sampled_per_len; ++i) gs.push_back(random_word(s.k, len, rng));

    return parallel_reduce(static_cast<int>(gs.size()), threads, [&](int begin, int end) {
        SuiteStats stats;
        for (int gi = begin; gi < end; ++gi) {
            const ReducedWord& g = gs[static_cast<std::size_t>(gi)];
            const ReducedWord gbar = g.inverse();
            const int glen = g.length();
            const int depth = glen + 1;
            std::vector<std::int64_t> counts(static_cast<std::size_t>(glen) + 1, 0);
            for (CylinderIterator it(s.k, depth); !it.done(); it.next()) {
                const int m = std::min(
                    cpl_raw(it.word().data(), depth, gbar.letters().data(), glen), glen);
                ++counts[static_cast<std::size_t>(m)];
            }
            // sum D_g^D nu = sum counts[m] q^(2m - glen) nu_depth, exactly 1
            Rational acc(0);
            const Rational nu = s.cylinder_measure_at(depth);
            for (int m = 0; m <= glen; ++m)
                acc += Rational(counts[static_cast<std::size_t>(m)]) *
                       rational_pow(s.q, 2 * m - glen) * nu;
            ++stats.checks;
            if (acc != 1) ++stats.failures;
        }
        return stats;
    });
}

}  // namespace loglab
