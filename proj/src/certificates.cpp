// Copyright 2026 The hypsign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypsign/certificates.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "hypsign/errors.hpp"
#include "hypsign/parallel.hpp"
#include "hypsign/polyalgebra.hpp"

namespace hypsign {

namespace {

constexpr long kGrid = 10000;
constexpr std::size_t kShards = 16;

// e_j with e_j = 0 outside [0, size].
const Rational &e_at(const std::vector<Rational> &e, int j) {
    static const Rational zero(0);
    if (j < 0 || j >= static_cast<int>(e.size())) return zero;
    return e[static_cast<std::size_t>(j)];
}

Rational sum(const std::vector<Rational> &v, std::size_t from = 0, std::size_t to = SIZE_MAX) {
    Rational s(0);
    for (std::size_t i = from; i < std::min(to, v.size()); ++i) s += v[i];
    return s;
}

std::vector<Rational> reciprocals(const std::vector<Rational> &v, std::size_t from = 0, std::size_t to = SIZE_MAX) {
    std::vector<Rational> out;
    for (std::size_t i = from; i < std::min(to, v.size()); ++i) out.push_back(v[i].inverse());
    return out;
}

void require(bool ok, const std::string &what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

Lemma1Quantities eval_lemma1(const Lemma1Sample &s) {
    require(s.n >= 2, "lemma 1: n must be >= 2");
    require(s.gammas.size() == static_cast<std::size_t>(2 * s.n - 2), "lemma 1: expected 2n-2 gammas");
    require(s.alpha1 > Rational(0), "lemma 1: alpha1 must be positive");
    for (const auto &g : s.gammas) {
        require(g > Rational(0) && g <= Rational(1), "lemma 1: gammas must lie in (0,1]");
        require(s.alpha1 < g, "lemma 1: alpha1 must lie below every gamma");
    }

    Lemma1Quantities q;
    q.e = elementary_symmetric_upto(s.gammas, s.gammas.size());
    const int n = s.n;
    q.t_next = -s.alpha1 * e_at(q.e, n - 1) + e_at(q.e, n) + s.alpha1 * e_at(q.e, n - 3) - e_at(q.e, n - 2);
    q.G = sum(reciprocals(s.gammas));
    q.slack = s.alpha1.inverse() - q.G;
    q.tau = -e_at(q.e, n - 1) + e_at(q.e, n - 3) - q.G * (e_at(q.e, n - 2) - e_at(q.e, n));
    q.violation = q.t_next.sign() > 0 && q.slack.sign() >= 0;
    q.auxiliary_ok = e_at(q.e, n - 2) >= e_at(q.e, n);
    return q;
}

Lemma6Quantities eval_lemma6(const Lemma6Sample &s) {
    require(s.n >= 5, "lemma 6: n must be >= 5");
    require(s.gammas.size() == static_cast<std::size_t>(2 * s.n - 4), "lemma 6: expected 2n-4 gammas");
    require(s.alpha1 > Rational(0) && s.alpha1 < Rational(1), "lemma 6: alpha1 must lie in (0,1)");
    for (const auto &g : s.gammas) require(g >= Rational(1), "lemma 6: gammas must be >= 1");

    Lemma6Quantities q;
    q.e = elementary_symmetric_upto(s.gammas, s.gammas.size());
    const int n = s.n;
    const auto &a = s.alpha1;
    q.s_minus1 = sum(reciprocals(s.gammas));
    q.coeff_margin = e_at(q.e, n - 1) - a * e_at(q.e, n - 2) - e_at(q.e, n - 3) + a * e_at(q.e, n - 4);
    q.reduced_margin = q.s_minus1 * (e_at(q.e, n - 1) - e_at(q.e, n - 3)) - e_at(q.e, n - 2) + e_at(q.e, n - 4);
    q.reciprocal_bound = a.inverse() > q.s_minus1;
    q.violation = q.coeff_margin.sign() < 0 && q.reciprocal_bound;
    return q;
}

Lemma7Quantities eval_lemma7(const Lemma7Sample &s) {
    const auto &g = s.gammas;
    require(g.size() >= 4, "lemma 7: need n >= 4 gammas");
    require(s.alpha1 > Rational(0) && s.alpha2 > Rational(0) && g.front() > Rational(0),
            "lemma 7: roots must be positive");
    require(std::is_sorted(g.begin(), g.end()), "lemma 7: gammas must be increasing");
    require(g[2] <= s.alpha1 && s.alpha1 <= g[3], "lemma 7: need gamma_3 <= alpha_1 <= gamma_4");

    Lemma7Quantities q;
    q.A1 = s.alpha1 + s.alpha2;
    q.Am1 = s.alpha1.inverse() + s.alpha2.inverse();
    q.Am2 = (s.alpha1 * s.alpha2).inverse();
    q.G1 = sum(g, 0, 3);
    q.Gm1 = sum(reciprocals(g, 0, 3));
    q.H1 = sum(g, 3);
    q.Hm1 = sum(reciprocals(g, 3));
    q.Lm2 = elementary_symmetric(reciprocals(g), 2);
    q.delta = s.alpha1 * s.alpha2;
    for (const auto &x : g) q.delta *= x;
    q.c_top = -q.A1 + q.G1 + q.H1;
    q.c2_over_delta = -q.Am1 * (q.Gm1 + q.Hm1) + q.Am2 + q.Lm2;
    q.c2 = q.c2_over_delta * q.delta;
    q.violation = q.c_top.sign() <= 0 && q.c2.sign() < 0;
    return q;
}

Lemma8Quantities eval_lemma8(const Lemma8Sample &s) {
    const auto &g = s.gammas;
    require(g.size() == 6, "lemma 8: expected 6 gammas");
    require(std::is_sorted(g.begin(), g.end()) && g.front() > Rational(0), "lemma 8: gammas must be increasing and positive");
    require(g[4] <= Rational(1) && Rational(1) <= g[5] && g[5] <= s.alpha2,
            "lemma 8: need gamma_5 <= 1 <= gamma_6 <= alpha_2");

    Lemma8Quantities q;
    const Rational one(1);
    q.A1 = one + s.alpha2;
    q.Am1 = one + s.alpha2.inverse();
    q.Am2 = s.alpha2.inverse();
    q.H1 = sum(g);
    auto inv = reciprocals(g);
    auto h = elementary_symmetric_upto(inv, 3);
    q.Hm1 = h[1];
    q.Hm2 = h[2];
    q.Hm3 = h[3];
    q.delta = s.alpha2;
    for (const auto &x : g) q.delta *= x;
    q.c7 = -q.A1 + q.H1;
    q.c3_over_delta = -q.Am1 * q.Hm2 + q.Am2 * q.Hm1 + q.Hm3;
    q.c3 = q.c3_over_delta * q.delta;
    q.violation = q.c7.sign() < 0 && q.c3.sign() < 0;
    return q;
}

Rational lemma8_K(const Rational &r, const Rational &w) {
    const Rational r2 = r * r, w2 = w * w;
    return Rational(12) * r2 * r + Rational(25) * r2 * w + Rational(5) * r * w2 - Rational(25) * r2 -
           Rational(30) * r * w - Rational(5) * w2 + Rational(5) * r + Rational(5) * w;
}

Lemma8Corner eval_lemma8_corner(const Rational &r, const Rational &w) {
    Lemma8Corner c;
    c.r = r;
    c.w = w;
    c.a = Rational(5) * r + w - Rational(1);
    c.K = lemma8_K(r, w);
    auto q = eval_lemma8({c.a, {r, r, r, r, r, w}});
    c.c3_over_delta = q.c3_over_delta;
    c.identity_holds = c.a * r * r * r * w * c.c3_over_delta == Rational(-2) * c.K;
    return c;
}

std::size_t CertificateReport::counter(const std::string &name) const {
    for (const auto &[k, v] : counters)
        if (k == name) return v;
    return 0;
}

const Rational *CertificateReport::value(const std::string &name) const {
    for (const auto &[k, v] : values)
        if (k == name) return &v;
    return nullptr;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    bool chance(int num, int den) { return std::uniform_int_distribution<int>(0, den - 1)(rng_) < num; }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    /// k / 10^4 with k in [1, 10^4].
    Rational unit() { return Rational(integer(1, kGrid), kGrid); }
    /// k / 10^4 with k in [0, 10^4].
    Rational unit0() { return Rational(integer(0, kGrid), kGrid); }
    /// 10^4 / k, a value in [1, 10^4].
    Rational at_least_one() { return Rational(kGrid, integer(1, kGrid)); }

    /// Values drawn by `draw`, with extra mass at `corner` and on repeats.
    template <typename Draw>
    std::vector<Rational> clustered(std::size_t count, const Rational &corner, Draw draw) {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < count; ++i) {
            if (chance(1, 4))
                out.push_back(corner);
            else if (!out.empty() && chance(1, 8))
                out.push_back(out[integer(0, static_cast<long>(out.size()) - 1)]);
            else
                out.push_back(draw());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 rng_;
};

struct Candidate {
    Rational margin;
    std::size_t index = 0;
    std::vector<std::pair<std::string, std::vector<Rational>>> sample;
};

struct Shard {
    std::size_t violations = 0;
    std::vector<std::size_t> counters;
    std::optional<Candidate> extremal;
    std::vector<std::optional<Rational>> maxima;
};

// Keeps the value nearest the forbidden side; `larger_is_worse` picks the direction.
void offer(Shard &sh, bool larger_is_worse, const Rational &margin, std::size_t index,
           const std::vector<std::pair<std::string, std::vector<Rational>>> &sample) {
    if (sh.extremal) {
        bool worse = larger_is_worse ? margin > sh.extremal->margin : margin < sh.extremal->margin;
        if (!worse) return;
    }
    sh.extremal = Candidate{margin, index, sample};
}

void offer_max(std::optional<Rational> &slot, const Rational &v) {
    if (!slot || v > *slot) slot = v;
}

struct LemmaSpec {
    std::string margin_quantity;
    bool larger_is_worse;
    std::vector<std::string> counter_names;
    std::vector<std::string> max_names;
};

LemmaSpec spec_for(int lemma) {
    switch (lemma) {
        case 1:
            return {"t_next", true,
                    {"violations_slack_positive", "violations_slack_zero", "slack_zero_samples", "auxiliary_failures"},
                    {}};
        case 6:
            return {"coeff_margin", false,
                    {"boundary_samples", "boundary_violations", "interior_violations", "reduced_nonpositive"},
                    {}};
        case 7: return {"c2_over_delta", false, {"c_top_zero_samples"}, {}};
        case 8:
            return {"c3_over_delta", false,
                    {"c7_negative_samples", "corner_samples", "corner_identity_failures", "corner_K_nonnegative"},
                    {"corner_max_K"}};
        default: throw DomainError("unknown lemma " + std::to_string(lemma) + " (expected 1, 6, 7 or 8)");
    }
}

void sample_one(int lemma, int n, Sampler &rng, std::size_t index, bool larger_is_worse, Shard &sh) {
    const Rational one(1);
    switch (lemma) {
        case 1: {
            Lemma1Sample s;
            s.n = n;
            s.gammas = rng.clustered(static_cast<std::size_t>(2 * n - 2), one, [&] { return rng.unit(); });
            Rational bound = sum(reciprocals(s.gammas)).inverse();  // slack == 0 here
            s.alpha1 = rng.chance(1, 8) ? bound : bound * rng.unit();
            auto q = eval_lemma1(s);
            bool slack_zero = q.slack.is_zero();
            if (slack_zero) ++sh.counters[2];
            if (q.violation) {
                ++sh.violations;
                ++sh.counters[slack_zero ? 1 : 0];
            }
            if (!q.auxiliary_ok) ++sh.counters[3];
            offer(sh, larger_is_worse, q.t_next, index, {{"gammas", s.gammas}, {"alpha1", {s.alpha1}}});
            break;
        }
        case 6: {
            Lemma6Sample s;
            s.n = n;
            s.gammas = rng.clustered(static_cast<std::size_t>(2 * n - 4), one, [&] { return rng.at_least_one(); });
            Rational cap = std::min(one, sum(reciprocals(s.gammas)).inverse());
            s.alpha1 = cap * Rational(rng.integer(1, kGrid - 1), kGrid);
            auto q = eval_lemma6(s);
            bool boundary = s.gammas.front() == one;
            if (boundary) ++sh.counters[0];
            if (q.violation) {
                ++sh.violations;
                ++sh.counters[boundary ? 1 : 2];
            }
            if (q.reduced_margin.sign() <= 0) ++sh.counters[3];
            offer(sh, larger_is_worse, q.coeff_margin, index, {{"gammas", s.gammas}, {"alpha1", {s.alpha1}}});
            break;
        }
        case 7: {
            // Scale so that alpha_1 = 1.
            Lemma7Sample s;
            s.alpha1 = one;
            auto low = rng.clustered(3, one, [&] { return rng.unit(); });
            auto high = rng.clustered(static_cast<std::size_t>(n - 3), one, [&] { return rng.at_least_one(); });
            s.gammas = low;
            s.gammas.insert(s.gammas.end(), high.begin(), high.end());
            Rational lower = std::max(s.gammas.back(), sum(s.gammas) - s.alpha1);
            s.alpha2 = rng.chance(1, 4) ? lower : lower * (one + rng.unit0());
            auto q = eval_lemma7(s);
            if (q.c_top.is_zero()) ++sh.counters[0];
            if (q.violation) ++sh.violations;
            offer(sh, larger_is_worse, q.c2_over_delta, index,
                  {{"alpha", {s.alpha1, s.alpha2}}, {"gammas", s.gammas}});
            break;
        }
        case 8: {
            Lemma8Sample s;
            auto low = rng.clustered(5, one, [&] { return rng.unit(); });
            s.gammas = low;
            s.gammas.push_back(rng.chance(1, 4) ? one : rng.at_least_one());
            Rational lower = std::max(s.gammas.back(), sum(s.gammas) - one);
            s.alpha2 = rng.chance(1, 4) ? lower : lower * (one + rng.unit());
            auto q = eval_lemma8(s);
            if (q.violation) ++sh.violations;
            if (q.c7.sign() < 0) {
                ++sh.counters[0];
                offer(sh, larger_is_worse, q.c3_over_delta, index,
                      {{"alpha", {one, s.alpha2}}, {"gammas", s.gammas}});
            }
            // Reduced corner: r in [1/5, 1] keeps alpha_2 = 5r + w - 1 >= w.
            Rational r(rng.integer(kGrid / 5, kGrid), kGrid);
            Rational w = rng.chance(1, 4) ? one : rng.at_least_one();
            auto c = eval_lemma8_corner(r, w);
            ++sh.counters[1];
            if (!c.identity_holds) ++sh.counters[2];
            if (c.K.sign() >= 0) ++sh.counters[3];
            offer_max(sh.maxima[0], c.K);
            break;
        }
        default: break;
    }
}

}  // namespace

CertificateReport sample_region(int lemma, int n, std::size_t count, std::uint64_t seed, unsigned threads) {
    const LemmaSpec spec = spec_for(lemma);
    if (count == 0) throw DomainError("certify: count must be >= 1");
    switch (lemma) {
        case 1: require(n >= 2, "lemma 1 needs n >= 2"); break;
        case 6: require(n >= 5, "lemma 6 needs n >= 5"); break;
        case 7: require(n >= 4, "lemma 7 needs n >= 4"); break;
        case 8: require(n == 5, "lemma 8 is stated for S(1,5,3) only (n = 5)"); break;
        default: break;
    }

    std::vector<Shard> shards(kShards);
    parallel_for(kShards, threads, [&](std::size_t k) {
        Shard &sh = shards[k];
        sh.counters.assign(spec.counter_names.size(), 0);
        sh.maxima.assign(spec.max_names.size(), std::nullopt);
        const std::size_t begin = count * k / kShards, end = count * (k + 1) / kShards;
        Sampler rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(lemma) * 1000 + static_cast<std::uint64_t>(n)) ^
                             splitmix(k + 1)));
        for (std::size_t i = begin; i < end; ++i) sample_one(lemma, n, rng, i, spec.larger_is_worse, sh);
    });

    CertificateReport report;
    report.lemma = lemma;
    report.n = n;
    report.count = count;
    report.seed = seed;
    report.margin_quantity = spec.margin_quantity;
    std::vector<std::size_t> counters(spec.counter_names.size(), 0);
    std::vector<std::optional<Rational>> maxima(spec.max_names.size());
    Shard merged;
    for (auto &sh : shards) {
        report.violations += sh.violations;
        for (std::size_t i = 0; i < counters.size(); ++i) counters[i] += sh.counters[i];
        for (std::size_t i = 0; i < maxima.size(); ++i)
            if (sh.maxima[i]) offer_max(maxima[i], *sh.maxima[i]);
        // Shards are merged in index order, so ties keep the lowest sample index.
        if (sh.extremal) offer(merged, spec.larger_is_worse, sh.extremal->margin, sh.extremal->index, sh.extremal->sample);
    }
    if (merged.extremal) {
        report.extremal_margin = merged.extremal->margin;
        report.extremal_index = merged.extremal->index;
        report.extremal_sample = merged.extremal->sample;
    }
    for (std::size_t i = 0; i < counters.size(); ++i) report.counters.emplace_back(spec.counter_names[i], counters[i]);
    for (std::size_t i = 0; i < maxima.size(); ++i)
        if (maxima[i]) report.values.emplace_back(spec.max_names[i], *maxima[i]);

    if (lemma == 8) {
        std::optional<Rational> grid_max;
        std::size_t grid_nonneg = 0;
        for (long i = 20; i <= 100; ++i) {
            for (long j = 0; j <= 100; ++j) {
                Rational K = lemma8_K(Rational(i, 100), Rational(100 + j, 100));
                if (K.sign() >= 0) ++grid_nonneg;
                offer_max(grid_max, K);
            }
        }
        report.counters.emplace_back("grid_K_nonnegative", grid_nonneg);
        report.values.emplace_back("grid_max_K", *grid_max);
        report.values.emplace_back("K(1,1)", lemma8_K(Rational(1), Rational(1)));
    }
    return report;
}

}  // namespace hypsign
