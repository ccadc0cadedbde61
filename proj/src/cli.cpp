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

#include "hypsign/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypsign/certificates.hpp"
#include "hypsign/errors.hpp"
#include "hypsign/io.hpp"
#include "hypsign/report.hpp"

namespace hypsign::cli {

namespace {

std::string trim(std::string s) {
    const char *ws = " \t\r\n";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
}

std::uint64_t parse_unsigned(const std::string &text, const std::string &source) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(text, &used);
        if (used == text.size() && text.front() != '-') return v;
    } catch (const std::exception &) {
    }
    throw ParseError("expected a non-negative integer", source + ": " + text, 0);
}

std::vector<Rational> parse_ratios(const std::string &text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::parse(trim(item)));
    return out;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Couple read_couple(const std::string &pattern, const std::string &order) {
    return Couple(SignPattern::parse(pattern), OrderWord::parse(order));
}

}  // namespace

void apply_config_text(RunConfig &config, const std::string &text, const std::string &source) {
    std::stringstream ss(text);
    std::size_t line_no = 0;
    for (std::string line; std::getline(ss, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", where + ": " + line, 0);
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "seed")
            config.seed = parse_unsigned(value, where);
        else if (key == "budget")
            config.budget.max_trials = parse_unsigned(value, where);
        else if (key == "ladder_ratios")
            config.budget.ladder_ratios = parse_ratios(value);
        else if (key == "perturbation_scale")
            config.budget.perturbation_scale = Rational::parse(value);
        else if (key == "rules")
            config.rules = parse_rule_set(value);
        else if (key == "threads")
            config.threads = static_cast<unsigned>(parse_unsigned(value, where));
        else if (key == "archive")
            config.archive = value;
        else if (key == "certificate_count")
            config.certificate_count = parse_unsigned(value, where);
        else
            throw ParseError("unknown configuration key", where + ": " + key, 0);
    }
    config.budget.validate();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sign patterns and root orders of real-rooted polynomials"};
    app.name("hypsign");
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path, rules_text, format;
    std::optional<std::uint64_t> seed, budget;
    std::optional<unsigned> threads;
    std::optional<std::string> archive_path;
    app.add_option("--config", config_path, "key=value file with defaults")->check(CLI::ExistingFile);
    app.add_option("--rules", rules_text, "reconciled (default) or published");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--archive", archive_path, "witness archive (default $HYPSIGN_ARCHIVE or witnesses.json)");

    std::string pattern, order, file;
    std::size_t degree = 0;
    std::string shape = "mn1";
    int lemma = 0, n = 0;
    std::optional<std::size_t> count;
    bool no_archive = false;
    std::string output;

    auto *decide_cmd = app.add_subcommand("decide", "decide realizability of a couple");
    decide_cmd->add_option("--pattern", pattern, "sign pattern, e.g. S(2,3,1) or ++---+")->required();
    decide_cmd->add_option("--order", order, "order word, e.g. PPNNN")->required();
    decide_cmd->add_option("--format", format, "json (default) or text");

    auto *witness_cmd = app.add_subcommand("witness", "search for an exact witness");
    witness_cmd->add_option("--pattern", pattern)->required();
    witness_cmd->add_option("--order", order)->required();
    witness_cmd->add_option("--budget", budget, "maximum trials");
    witness_cmd->add_option("--seed", seed);
    witness_cmd->add_flag("--no-archive", no_archive, "neither read nor update the archive");

    auto *enumerate_cmd = app.add_subcommand("enumerate", "decide every compatible couple of a degree");
    enumerate_cmd->add_option("--degree", degree)->required()->check(CLI::Range(1, 16));
    enumerate_cmd->add_option("--shape", shape, "mn, mn1 (default), supported or all");
    enumerate_cmd->add_option("--format", format, "csv (default) or json");

    auto *verify_cmd = app.add_subcommand("verify", "re-check a witness record");
    verify_cmd->add_option("--file", file)->required();

    auto *certify_cmd = app.add_subcommand("certify", "sample a lemma region");
    certify_cmd->add_option("--lemma", lemma)->required()->check(CLI::IsMember({1, 6, 7, 8}));
    certify_cmd->add_option("--n", n)->required();
    certify_cmd->add_option("--count", count);
    certify_cmd->add_option("--seed", seed);

    auto *report_cmd = app.add_subcommand("report", "write the reproduction document");
    report_cmd->add_option("--seed", seed);
    report_cmd->add_option("--count", count, "certificate samples per region");
    report_cmd->add_option("--budget", budget, "witness search trials");
    report_cmd->add_option("--output", output, "file instead of standard output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitRejected;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitRejected;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) apply_config_text(config, read_file(config_path), config_path);
        if (!rules_text.empty()) config.rules = parse_rule_set(rules_text);
        if (threads) config.threads = *threads;
        if (archive_path) config.archive = *archive_path;
        if (seed) config.seed = *seed;
        if (budget) config.budget.max_trials = *budget;
        if (count) config.certificate_count = *count;
        config.budget.seed = config.seed;
        config.budget.validate();

        if (decide_cmd->parsed()) {
            Couple c = read_couple(pattern, order);
            Verdict v = decide(c, config.rules);
            if (format == "text") {
                out << c.str() << ": " << to_string(v.status);
                if (!v.clause.empty()) out << " (" << v.clause << ", via " << to_string(v.transform) << ")";
                out << '\n';
            } else {
                out << io::to_json(c, v).dump(2) << '\n';
            }
            return kExitOk;
        }
        if (witness_cmd->parsed()) {
            Couple c = read_couple(pattern, order);
            std::optional<WitnessArchive> archive;
            if (!no_archive) archive.emplace(config.archive.value_or(WitnessArchive::default_path()));
            SearchOutcome result = search(c, config.budget, archive ? &*archive : nullptr);
            if (archive && result.witness && result.witness->strategy != Strategy::Archive) {
                archive->insert(*result.witness);
                archive->save();
            }
            out << io::to_json(result, c).dump(2) << '\n';
            if (!result.witness) err << "exhausted: " << result.exhausted << '\n';
            return kExitOk;
        }
        if (enumerate_cmd->parsed()) {
            auto table = enumerate(degree, parse_shape_filter(shape), config.rules, config.threads);
            if (format == "json") {
                out << io::to_json(table).dump(2) << '\n';
            } else {
                std::optional<WitnessArchive> archive;
                auto path = config.archive.value_or(WitnessArchive::default_path());
                if (std::filesystem::exists(path)) archive.emplace(path);
                out << io::to_csv(table, archive ? &*archive : nullptr);
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            io::Json doc;
            try {
                doc = io::Json::parse(read_file(file));
            } catch (const io::Json::exception &e) {
                throw ParseError(std::string("invalid JSON: ") + e.what(), file, 0);
            }
            WitnessRecord rec = io::record_from_json(doc);
            VerifyReport rep = check(rec);
            io::Json j;
            j["couple"] = io::to_json(rec.couple);
            j["verified"] = rep.ok;
            j["mismatches"] = rep.mismatches;
            out << j.dump(2) << '\n';
            for (const auto &m : rep.mismatches) err << "mismatch: " << m << '\n';
            return rep.ok ? kExitOk : kExitRejected;
        }
        if (certify_cmd->parsed()) {
            auto rep = sample_region(lemma, n, config.certificate_count, config.seed, config.threads);
            out << io::to_json(rep).dump(2) << '\n';
            return kExitOk;
        }
        if (report_cmd->parsed()) {
            ReportOptions opt;
            opt.seed = config.seed;
            opt.rules = config.rules;
            opt.certificate_count = config.certificate_count;
            opt.budget = config.budget;
            opt.threads = config.threads;
            std::string doc = render_report(opt);
            if (output.empty()) {
                out << doc;
            } else {
                std::ofstream f(output);
                if (!f) throw DomainError("cannot write " + output);
                f << doc;
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument &e) {  // ParseError, DomainError
        err << "error: " << e.what() << '\n';
        return kExitRejected;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace hypsign::cli
