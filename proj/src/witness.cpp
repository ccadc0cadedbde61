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

#include "hypsign/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "hypsign/errors.hpp"
#include "hypsign/io.hpp"
#include "hypsign/kernels.hpp"

namespace hypsign {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Given: return "given";
        case Strategy::Archive: return "archive";
        case Strategy::Ladder: return "ladder";
        case Strategy::FlatExtension: return "flat-extension";
        case Strategy::PerturbedMultiple: return "perturbed-multiple";
        case Strategy::Annealing: return "annealing";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text) {
    for (Strategy s : {Strategy::Given, Strategy::Archive, Strategy::Ladder, Strategy::FlatExtension,
                       Strategy::PerturbedMultiple, Strategy::Annealing})
        if (to_string(s) == text) return s;
    throw ParseError("unknown witness strategy", std::string(text), 0);
}

WitnessRecord make_record(const Couple &couple, RootConfiguration roots, Strategy strategy) {
    Polynomial poly = expand(roots);
    return WitnessRecord{couple, std::move(roots), std::move(poly), strategy, false, 0};
}

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

}  // namespace

VerifyReport check(const WitnessRecord &record) {
    VerifyReport report;
    auto &out = report.mismatches;
    const Polynomial recomputed = expand(record.roots);
    if (recomputed.degree() != record.poly.degree()) {
        out.push_back("stored polynomial has degree " + std::to_string(record.poly.degree()) + ", roots give degree " +
                      std::to_string(recomputed.degree()));
    } else {
        for (std::size_t j = 0; j <= recomputed.degree(); ++j) {
            if (recomputed.coefficient(j) != record.poly.coefficient(j))
                out.push_back("stored coefficient of x^" + std::to_string(j) + " is " +
                              record.poly.coefficient(j).str() + ", expansion gives " +
                              recomputed.coefficient(j).str());
        }
    }
    if (recomputed.degree() != record.couple.degree()) {
        out.push_back("roots give degree " + std::to_string(recomputed.degree()) + ", couple has degree " +
                      std::to_string(record.couple.degree()));
        return report;
    }

    auto cls = classify(recomputed, record.roots);
    if (!cls.genericity.generic()) out.push_back("non-generic: " + cls.genericity.describe());

    auto signs = record.couple.pattern().signs();
    for (std::size_t k = 0; k <= recomputed.degree(); ++k) {
        const std::size_t power = recomputed.degree() - k;
        int got = recomputed.coefficient(power).sign();
        int want = static_cast<int>(signs[k]);
        if (got != 0 && got != want)
            out.push_back(std::string("coefficient of x^") + std::to_string(power) + " has sign " + sign_char(got) +
                          ", pattern expects " + sign_char(want));
    }
    if (auto order = record.roots.order()) {
        auto got = order->letters();
        auto want = record.couple.order().letters();
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (got[i] != want[i])
                out.push_back("order position " + std::to_string(i + 1) + ": roots give " +
                              static_cast<char>(got[i]) + ", couple has " + static_cast<char>(want[i]));
        }
    }
    report.ok = out.empty();
    return report;
}

bool verify(WitnessRecord &record) {
    record.verified = check(record).ok;
    return record.verified;
}

RootConfiguration construct_flat_extension(const RootConfiguration &q_flat, const Rational &alpha1) {
    if (alpha1.sign() <= 0) throw DomainError("flat extension: alpha1 must be positive");
    for (const auto &list : {q_flat.alpha(), q_flat.gamma()})
        if (!list.empty() && !(alpha1 < list.front()))
            throw DomainError("flat extension: alpha1 = " + alpha1.str() + " is not below every modulus (min " +
                              list.front().str() + ")");
    auto alpha = q_flat.alpha();
    alpha.insert(alpha.begin(), alpha1);
    return RootConfiguration(std::move(alpha), q_flat.gamma());
}

RootConfiguration construct_perturbed_multiple(const RootConfiguration &base, const Rational &spread) {
    if (spread.sign() < 0) throw DomainError("perturbed multiple: spread must be >= 0");
    const auto &gamma = base.gamma();
    bool repeated = false;
    for (std::size_t i = 1; i < gamma.size(); ++i) repeated = repeated || gamma[i] == gamma[i - 1];
    if (!repeated) throw DomainError("perturbed multiple: no repeated negative modulus");
    if (spread.is_zero()) return base;

    std::vector<Rational> out;
    for (std::size_t i = 0; i < gamma.size();) {
        std::size_t j = i;
        while (j < gamma.size() && gamma[j] == gamma[i]) ++j;
        const long k = static_cast<long>(j - i);
        for (long t = 0; t < k; ++t) {
            Rational v = k == 1 ? gamma[i] : gamma[i] + spread * Rational(2 * t - k + 1, k);
            if (v.sign() <= 0) throw DomainError("perturbed multiple: spread " + spread.str() + " reaches zero");
            out.push_back(std::move(v));
        }
        i = j;
    }
    return RootConfiguration(base.alpha(), std::move(out));
}

void SearchBudget::validate() const {
    if (max_trials == 0) throw DomainError("search budget: max_trials must be >= 1");
    for (const auto &r : ladder_ratios)
        if (!(r > Rational(1))) throw DomainError("search budget: ladder ratio " + r.str() + " must be > 1");
    if (!(perturbation_scale > Rational(0))) throw DomainError("search budget: perturbation scale must be > 0");
}

std::uint64_t search_seed(const Couple &couple, std::uint64_t seed) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : couple.str()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h ^ seed;
}

namespace {

constexpr std::size_t kLanes = 32;
constexpr double kMargin = 1e-10;
constexpr double kMinGap = 1e-4;  // log-ratio between consecutive moduli
constexpr double kMaxGap = 6.0;
constexpr std::size_t kSegment = 250;  // iterations per annealing restart
constexpr int kMaxHalvings = 60;

struct Trials {
    std::size_t used = 0;
    std::size_t limit = 0;

    std::size_t remaining() const { return used >= limit ? 0 : limit - used; }
    bool take(std::size_t k = 1) {
        if (remaining() < k) return false;
        used += k;
        return true;
    }
};

struct Found {
    RootConfiguration roots;
    Strategy strategy;
};

bool realizes(const RootConfiguration &roots, const Couple &couple) {
    auto cls = classify(roots);
    return cls.couple && *cls.couple == couple;
}

std::optional<Found> try_ladder(const Couple &couple, const SearchBudget &opts, Trials &trials) {
    const std::size_t d = couple.degree();
    for (const auto &ratio : opts.ladder_ratios) {
        if (!trials.take()) return std::nullopt;
        std::vector<Rational> moduli;
        Rational m(1);
        for (std::size_t i = 0; i < d; ++i, m *= ratio) moduli.push_back(m);
        auto roots = configuration_from_order(couple.order(), moduli);
        if (realizes(roots, couple)) return Found{std::move(roots), Strategy::Ladder};
    }
    return std::nullopt;
}

RootConfiguration adjoin(const RootConfiguration &roots, Root letter, const Rational &modulus) {
    auto alpha = roots.alpha();
    auto gamma = roots.gamma();
    (letter == Root::Positive ? alpha : gamma).push_back(modulus);
    return RootConfiguration(std::move(alpha), std::move(gamma));
}

Rational min_modulus(const RootConfiguration &roots) {
    std::optional<Rational> m;
    for (const auto &list : {roots.alpha(), roots.gamma()})
        if (!list.empty() && (!m || list.front() < *m)) m = list.front();
    return *m;
}

Rational max_modulus(const RootConfiguration &roots) {
    std::optional<Rational> m;
    for (const auto &list : {roots.alpha(), roots.gamma()})
        if (!list.empty() && (!m || list.back() > *m)) m = list.back();
    return *m;
}

std::optional<Found> search_core(const Couple &couple, const SearchBudget &opts, Trials &trials, std::mt19937_64 &rng);

// A root of tiny modulus (bottom) or huge modulus (top) barely moves the
// other coefficients, so the couple reduces to one of degree d-1.
std::optional<Found> try_flat_extension(const Couple &couple, const SearchBudget &opts, Trials &trials,
                                        std::mt19937_64 &rng) {
    const std::size_t d = couple.degree();
    if (d < 2) return std::nullopt;
    auto signs = couple.pattern().signs();
    auto letters = couple.order().letters();

    for (int end = 0; end < 2 && trials.remaining() > 0; ++end) {
        const bool bottom = end == 0;
        const Root letter = bottom ? letters.front() : letters.back();
        const bool change = bottom ? signs[d] != signs[d - 1] : signs[0] != signs[1];
        if ((letter == Root::Positive) != change) continue;

        std::vector<Sign> sub_signs;
        if (bottom) {
            sub_signs.assign(signs.begin(), signs.end() - 1);
        } else {
            const bool flip = signs[1] == Sign::Minus;
            for (std::size_t i = 1; i <= d; ++i)
                sub_signs.push_back(flip ? static_cast<Sign>(-static_cast<int>(signs[i])) : signs[i]);
        }
        std::vector<Root> sub_letters = bottom ? std::vector<Root>(letters.begin() + 1, letters.end())
                                               : std::vector<Root>(letters.begin(), letters.end() - 1);
        Couple sub(SignPattern(std::move(sub_signs)), OrderWord(std::move(sub_letters)));

        Trials inner{trials.used, trials.used + trials.remaining() / 4};
        auto base = search_core(sub, opts, inner, rng);
        trials.used = inner.used;
        if (!base) continue;

        Rational t = bottom ? min_modulus(base->roots) / Rational(2) : max_modulus(base->roots) * Rational(2);
        for (int i = 0; i < kMaxHalvings && trials.take(); ++i) {
            auto roots = bottom && letter == Root::Positive ? construct_flat_extension(base->roots, t)
                                                            : adjoin(base->roots, letter, t);
            if (realizes(roots, couple)) return Found{std::move(roots), Strategy::FlatExtension};
            t = bottom ? t / Rational(2) : t * Rational(2);
        }
    }
    return std::nullopt;
}

struct Group {
    Root letter;
    int size;
};

std::vector<Group> groups_of(const OrderWord &order, bool merge_negative_runs) {
    std::vector<Group> out;
    for (Root r : order.letters()) {
        if (merge_negative_runs && r == Root::Negative && !out.empty() && out.back().letter == Root::Negative)
            ++out.back().size;
        else
            out.push_back({r, 1});
    }
    return out;
}

// s significant decimal digits.
Rational round_significant(double x, int digits) {
    const int e = static_cast<int>(std::floor(std::log10(x)));
    const int k = digits - 1 - e;
    if (k >= 0) return Rational::round_to_denominator(x, static_cast<std::uint64_t>(std::pow(10.0, k)));
    Rational scale = Rational::pow(Rational(10), static_cast<unsigned>(-k));
    return Rational::round_to_denominator(x / std::pow(10.0, -k), 1) * scale;
}

RootConfiguration grouped_configuration(const std::vector<Group> &groups, const std::vector<Rational> &moduli) {
    std::vector<Rational> alpha, gamma;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (int k = 0; k < groups[i].size; ++k) (groups[i].letter == Root::Positive ? alpha : gamma).push_back(moduli[i]);
    return RootConfiguration(std::move(alpha), std::move(gamma));
}

// Exact configuration from double moduli, at the fewest significant digits
// that keep the group order and give the target sign pattern.
std::optional<RootConfiguration> round_exact(const Couple &couple, const std::vector<Group> &groups,
                                             const std::vector<double> &moduli, bool clustered, Trials &trials) {
    for (int digits = 2; digits <= 16; ++digits) {
        std::vector<Rational> q;
        bool ordered = true;
        for (double m : moduli) {
            q.push_back(round_significant(m, digits));
            if (q.back().sign() <= 0 || (q.size() > 1 && !(q[q.size() - 2] < q.back()))) ordered = false;
        }
        if (!ordered) continue;
        if (!trials.take()) return std::nullopt;
        auto roots = grouped_configuration(groups, q);
        if (clustered) {
            auto sigma = sign_pattern_of(expand(roots));
            if (sigma && *sigma == couple.pattern()) return roots;
        } else if (realizes(roots, couple)) {
            return roots;
        }
    }
    return std::nullopt;
}

// Lane-parallel annealing over log-gaps between consecutive group moduli,
// screened in double precision and confirmed exactly.
std::optional<RootConfiguration> anneal(const Couple &couple, const std::vector<Group> &groups, bool clustered,
                                        Trials &trials, std::mt19937_64 &rng) {
    const std::size_t d = couple.degree();
    const std::size_t G = groups.size();
    const auto &kern = kernels::active_kernels();

    std::vector<double> target(d + 1);
    for (std::size_t k = 0; k <= d; ++k) target[k] = static_cast<double>(couple.pattern().signs()[k]);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> initial_gap(kMinGap, 3.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, G > 1 ? G - 2 : 0);

    const std::size_t ngaps = G - 1;
    std::vector<double> gaps(ngaps * kLanes), proposal(ngaps * kLanes);
    std::vector<double> roots(d * kLanes), coeffs((d + 1) * kLanes), mags((d + 1) * kLanes);
    std::vector<double> current(kLanes), penalty(kLanes);

    auto moduli_of = [&](const std::vector<double> &g, std::size_t lane) {
        std::vector<double> m(G);
        m[0] = 1.0;
        for (std::size_t i = 1; i < G; ++i) m[i] = m[i - 1] * std::exp(g[(i - 1) * kLanes + lane]);
        return m;
    };
    auto evaluate = [&](const std::vector<double> &g) {
        for (std::size_t l = 0; l < kLanes; ++l) {
            auto m = moduli_of(g, l);
            std::size_t row = 0;
            for (std::size_t i = 0; i < G; ++i)
                for (int k = 0; k < groups[i].size; ++k, ++row)
                    roots[row * kLanes + l] = groups[i].letter == Root::Positive ? m[i] : -m[i];
        }
        kern.expand(roots, d, kLanes, coeffs, mags);
        kern.penalty(coeffs, mags, target, d, kLanes, kMargin, penalty);
    };
    auto randomize = [&](std::size_t l) {
        for (std::size_t k = 0; k < ngaps; ++k) gaps[k * kLanes + l] = initial_gap(rng);
    };
    // Lowest lane first, so the winner does not depend on timing.
    auto harvest = [&](const std::vector<double> &pen) -> std::optional<RootConfiguration> {
        for (std::size_t l = 0; l < kLanes; ++l) {
            if (pen[l] != 0.0) continue;
            auto found = round_exact(couple, groups, moduli_of(gaps, l), clustered, trials);
            if (found) return found;
            randomize(l);
            current[l] = 1e300;
        }
        return std::nullopt;
    };

    if (G == 1) {
        if (!trials.take()) return std::nullopt;
        auto r = grouped_configuration(groups, {Rational(1)});
        auto sigma = sign_pattern_of(expand(r));
        if (clustered ? sigma && *sigma == couple.pattern() : realizes(r, couple)) return r;
        return std::nullopt;
    }

    for (std::size_t l = 0; l < kLanes; ++l) randomize(l);
    if (!trials.take(kLanes)) return std::nullopt;
    evaluate(gaps);
    current = penalty;
    if (auto f = harvest(current)) return f;

    const double t0 = 0.3, t1 = 1e-4;
    for (std::size_t iter = 1; trials.take(kLanes); ++iter) {
        const std::size_t phase = iter % kSegment;
        if (phase == 0) {
            for (std::size_t l = 0; l < kLanes; ++l) {
                randomize(l);
                current[l] = 1e300;
            }
        }
        const double temperature = t0 * std::pow(t1 / t0, static_cast<double>(phase) / kSegment);

        proposal = gaps;
        for (std::size_t l = 0; l < kLanes; ++l) {
            const double sigma = std::exp(std::log(1e-3) * unit(rng));
            if (unit(rng) < 0.7) {
                std::size_t k = pick(rng);
                proposal[k * kLanes + l] += sigma * normal(rng);
            } else {
                for (std::size_t k = 0; k < ngaps; ++k) proposal[k * kLanes + l] += 0.5 * sigma * normal(rng);
            }
            for (std::size_t k = 0; k < ngaps; ++k) {
                double &g = proposal[k * kLanes + l];
                if (g < kMinGap) g = 2 * kMinGap - g;
                g = std::clamp(g, kMinGap, kMaxGap);
            }
        }
        evaluate(proposal);
        for (std::size_t l = 0; l < kLanes; ++l) {
            const double delta = penalty[l] - current[l];
            if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
                current[l] = penalty[l];
                for (std::size_t k = 0; k < ngaps; ++k) gaps[k * kLanes + l] = proposal[k * kLanes + l];
            }
        }
        if (auto f = harvest(current)) return f;
    }
    return std::nullopt;
}

std::optional<Found> try_perturbed_multiple(const Couple &couple, const SearchBudget &opts, Trials &trials,
                                            std::mt19937_64 &rng) {
    auto groups = groups_of(couple.order(), true);
    if (groups.size() == couple.degree()) return std::nullopt;  // no run of N to merge

    Trials inner{trials.used, trials.used + trials.remaining() / 3};
    auto base = anneal(couple, groups, true, inner, rng);
    trials.used = inner.used;
    if (!base) return std::nullopt;

    // Closest distinct moduli bound the spread so that clusters stay apart.
    std::vector<Rational> all = base->alpha();
    all.insert(all.end(), base->gamma().begin(), base->gamma().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Rational closest = all.front();
    for (std::size_t i = 1; i < all.size(); ++i) closest = std::min(closest, all[i] - all[i - 1]);

    Rational spread = opts.perturbation_scale * closest;
    for (int i = 0; i < kMaxHalvings && trials.take(); ++i, spread /= Rational(2)) {
        auto roots = construct_perturbed_multiple(*base, spread);
        if (realizes(roots, couple)) return Found{std::move(roots), Strategy::PerturbedMultiple};
    }
    return std::nullopt;
}

std::optional<Found> search_core(const Couple &couple, const SearchBudget &opts, Trials &trials,
                                 std::mt19937_64 &rng) {
    if ((opts.strategies & kUseLadder) != 0)
        if (auto f = try_ladder(couple, opts, trials)) return f;
    if ((opts.strategies & kUseFlatExtension) != 0)
        if (auto f = try_flat_extension(couple, opts, trials, rng)) return f;
    if ((opts.strategies & kUsePerturbedMultiple) != 0)
        if (auto f = try_perturbed_multiple(couple, opts, trials, rng)) return f;
    if ((opts.strategies & kUseAnnealing) != 0) {
        if (auto r = anneal(couple, groups_of(couple.order(), false), false, trials, rng))
            return Found{std::move(*r), Strategy::Annealing};
    }
    return std::nullopt;
}

}  // namespace

SearchOutcome search(const Couple &couple, const SearchBudget &budget, const WitnessArchive *archive) {
    budget.validate();
    SearchOutcome out;
    if (archive != nullptr && (budget.strategies & kUseArchive) != 0) {
        if (auto rec = archive->lookup(couple)) {
            rec->strategy = Strategy::Archive;
            out.witness = std::move(rec);
            return out;
        }
    }
    std::mt19937_64 rng(search_seed(couple, budget.seed));
    Trials trials{0, budget.max_trials};
    auto found = search_core(couple, budget, trials, rng);
    out.trials = trials.used;
    if (!found) {
        out.exhausted = "no witness within " + std::to_string(trials.used) + " trials";
        return out;
    }
    WitnessRecord rec = make_record(couple, std::move(found->roots), found->strategy);
    rec.trials = trials.used;
    if (!verify(rec)) throw std::logic_error("search produced a record that does not verify: " + couple.str());
    out.witness = std::move(rec);
    return out;
}

WitnessArchive::WitnessArchive(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    io::Json doc;
    try {
        doc = io::Json::parse(in);
    } catch (const io::Json::exception &e) {
        throw ParseError(std::string("witness archive is not valid JSON: ") + e.what(), path_.string(), 0);
    }
    io::expect_schema(doc, io::kArchiveSchema);
    for (const auto &[key, value] : doc.at("witnesses").items()) {
        WitnessRecord rec = io::record_from_json(value);
        if (rec.couple.str() != key)
            throw ParseError("witness archive key does not match its record", key, 0);
        records_.emplace(key, std::move(rec));
    }
}

std::filesystem::path WitnessArchive::default_path() {
    const char *env = std::getenv("HYPSIGN_ARCHIVE");
    return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path("witnesses.json");
}

std::size_t WitnessArchive::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

std::optional<WitnessRecord> WitnessArchive::lookup(const Couple &couple) const {
    std::optional<WitnessRecord> rec;
    {
        std::lock_guard lock(mutex_);
        auto it = records_.find(couple.str());
        if (it == records_.end()) return std::nullopt;
        rec = it->second;
    }
    if (!verify(*rec)) return std::nullopt;
    return rec;
}

void WitnessArchive::insert(const WitnessRecord &record) {
    WitnessRecord copy = record;
    if (!verify(copy)) throw DomainError("refusing to archive an unverified witness for " + record.couple.str());
    std::lock_guard lock(mutex_);
    records_.insert_or_assign(record.couple.str(), std::move(copy));
}

void WitnessArchive::save() const {
    io::Json doc;
    doc["schema"] = io::kArchiveSchema;
    io::Json witnesses = io::Json::object();
    {
        std::lock_guard lock(mutex_);
        for (const auto &[key, rec] : records_) witnesses[key] = io::to_json(rec);
    }
    doc["witnesses"] = std::move(witnesses);
    auto tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
}

}  // namespace hypsign
