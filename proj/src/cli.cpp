#include "descentkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descentkit/census.hpp"
#include "descentkit/error.hpp"
#include "descentkit/growth.hpp"
#include "descentkit/oracle.hpp"
#include "descentkit/rsk.hpp"
#include "descentkit/stats.hpp"

namespace descentkit::cli {

namespace {

using nlohmann::json;

constexpr int kStatAllCap = 14;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int guard_limit(int default_limit) {
    if (const char* env = std::getenv(kMaxNEnv)) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError(std::string(kMaxNEnv) + " must be an integer, got '" + env + "'");
        }
    }
    return default_limit;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
    }
    return out;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

bool looks_like_tableau(const std::string& text) { return text.find('[') != std::string::npos; }

json tableau_json(const StandardTableau& t) { return t.rows(); }

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

// Payload is the comparable part; metadata carries the run stamp.
void write_report(const std::string& path, const json& parameters, const json& payload, bool with_metadata) {
    json doc;
    doc["parameters"] = parameters;
    doc["payload"] = payload;
    if (with_metadata) doc["metadata"] = {{"version", version()}, {"generated_at", utc_timestamp()}};
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write report to " + path);
    file << doc.dump(2) << '\n';
}

struct StatOptions {
    std::string perm;
    std::optional<int> d;
    std::optional<std::string> set;
    std::optional<std::string> comp;
    std::optional<std::string> word;
    bool alt = false;
    bool all = false;
    bool oracle = false;
    bool json_out = false;
};

int cmd_stat(const StatOptions& o, std::ostream& out) {
    const int selectors = static_cast<int>(o.d.has_value()) + static_cast<int>(o.set.has_value()) +
                          static_cast<int>(o.comp.has_value()) + static_cast<int>(o.word.has_value()) +
                          static_cast<int>(o.alt) + static_cast<int>(o.all);
    if (selectors != 1)
        throw UsageError("stat needs exactly one of --d, --set, --comp, --word, --alt, --all");
    if (o.oracle && !o.all) throw UsageError("--oracle only applies to --all");

    const Permutation p = parse_permutation(o.perm);
    json result{{"permutation", to_string(p.word())}};

    auto emit_value = [&](const std::string& selector, const json& argument, int value) {
        if (o.json_out) {
            result["selector"] = selector;
            result["argument"] = argument;
            result["value"] = value;
            out << result.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return kSuccess;
    };

    if (o.d) {
        if (*o.d < 0) throw UsageError("--d must be >= 0");
        return emit_value("d", *o.d, ls_d(p, *o.d));
    }
    if (o.set) {
        const DescentSet d = parse_descent_set(*o.set);
        return emit_value("set", json(std::vector<int>(d.positions().begin(), d.positions().end())), ls_D(p, d));
    }
    if (o.comp) {
        Composition c = [&] {
            try {
                return Composition(parse_int_list(*o.comp));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("bad composition: ") + e.what());
            }
        }();
        return emit_value("comp", json(std::vector<int>(c.parts().begin(), c.parts().end())),
                          ls_D(p, composition_to_descents(c)));
    }
    if (o.word) {
        const DescentWord w(*o.word);
        if (w.empty()) throw UsageError("--word needs a nonempty word over U and D");
        return emit_value("word", w.str(), len_w(p, w));
    }
    if (o.alt) return emit_value("alt", nullptr, alternating_length(p));

    // --all
    const int n = p.size();
    std::vector<int> values;
    if (o.oracle) {
        check_guard("stat --all --oracle size", n, guard_limit(kDefaultOracleCap));
        const LsProfile prof = brute_profile(p, guard_limit(kDefaultOracleCap));
        values.assign(prof.values().begin(), prof.values().end());
    } else {
        check_guard("stat --all size", n, guard_limit(kStatAllCap));
        const StatTriangle t = stat_triangle(p);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
            values.push_back(ls_D(t, DescentSet::from_mask(mask)));
    }
    if (o.json_out) {
        json profile = json::array();
        for (std::size_t mask = 0; mask < values.size(); ++mask) {
            const DescentSet d = DescentSet::from_mask(mask);
            profile.push_back({{"D", std::vector<int>(d.positions().begin(), d.positions().end())},
                               {"ls", values[mask]}});
        }
        result["selector"] = "all";
        result["method"] = o.oracle ? "oracle" : "triangle";
        result["profile"] = std::move(profile);
        out << result.dump() << '\n';
    } else {
        for (std::size_t mask = 0; mask < values.size(); ++mask)
            out << to_string(DescentSet::from_mask(mask)) << ' ' << values[mask] << '\n';
    }
    return kSuccess;
}

int cmd_rsk(const std::string& input, const std::string& format, std::ostream& out) {
    const RskPair r = rsk(parse_permutation(input));
    if (format == "json") {
        out << json{{"P", tableau_json(r.insertion)}, {"Q", tableau_json(r.recording)}}.dump() << '\n';
    } else if (format == "ascii") {
        out << "P = " << to_string(r.insertion) << '\n' << "Q = " << to_string(r.recording) << '\n';
    } else {
        throw UsageError("rsk supports --format ascii or json");
    }
    return kSuccess;
}

StandardTableau tableau_from_input(const std::string& input) {
    if (looks_like_tableau(input)) return parse_tableau(input);
    return rsk(parse_permutation(input)).recording;
}

int cmd_evac(const std::string& input, const std::string& format, std::ostream& out) {
    const StandardTableau e = evacuate(tableau_from_input(input));
    if (format == "json")
        out << json{{"evac", tableau_json(e)}}.dump() << '\n';
    else if (format == "ascii")
        out << to_string(e) << '\n';
    else
        throw UsageError("evac supports --format ascii or json");
    return kSuccess;
}

int cmd_growth(const std::string& input, const std::string& format, std::ostream& out) {
    const GrowthDiagram g = build_growth(tableau_from_input(input));
    if (format == "json")
        out << to_json(g).dump() << '\n';
    else if (format == "dot")
        out << render_dot(g);
    else if (format == "ascii")
        out << render_ascii(g);
    else
        throw UsageError("growth supports --format ascii, dot or json");
    return kSuccess;
}

struct VerifyOptions {
    int max_n = 6;
    std::string checks = "all";
    int jobs = 1;
    std::string report = "verify-report.json";
    bool no_metadata = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    check_guard("verify --max-n", o.max_n, guard_limit(kDefaultSweepCap));
    const auto names = split_names(o.checks);
    if (names.empty()) throw UsageError("--checks needs at least one name");
    SweepReport report;
    try {
        report = sweep_verify(o.max_n, names, o.jobs, guard_limit(kDefaultSweepCap));
    } catch (const GuardExceeded&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& c : report.checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.check << " n\xE2\x89\xA4" << c.n_max;
        if (!c.passed()) out << " (" << c.failure_count << " failing; first " << *c.first_failure << ")";
        out << '\n';
    }
    write_report(o.report, {{"command", "verify"}, {"max_n", o.max_n}, {"checks", names}}, to_json(report),
                 !o.no_metadata);
    return report.passed() ? kSuccess : kVerificationFailure;
}

struct CensusOptions {
    int n = 0;
    std::string which = "all";
    std::string report = "census-report.json";
    bool no_metadata = false;
};

int cmd_census(const CensusOptions& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be >= 1");
    std::vector<std::string> which = split_names(o.which);
    if (which.size() == 1 && which[0] == "all") which = {"asc-is", "ls1-deficient", "bijection", "equivalence"};

    json payload = json::array();
    bool ok = true;
    const std::string population = std::to_string(factorial(o.n));
    for (const auto& name : which) {
        json entry{{"n", o.n}, {"check", name}};
        json failures = json::array();
        std::ostringstream line;
        if (name == "asc-is") {
            const CountPair c = count_asc_eq_is_minus_1(o.n, guard_limit(kDefaultCountCap));
            entry["population"] = population;
            entry["direct"] = c.direct.str();
            entry["formula"] = c.formula.str();
            if (!c.equal()) failures.push_back("direct != formula");
            line << "asc-is n=" << o.n << " direct=" << c.direct << " formula=" << c.formula;
        } else if (name == "ls1-deficient") {
            const DeficiencyCount c = count_ls1_deficient(o.n, guard_limit(kDefaultCountCap));
            entry["population"] = population;
            entry["direct"] = c.counts.direct.str();
            entry["formula"] = c.counts.formula.str();
            if (!c.counts.equal()) failures.push_back("direct != formula");
            if (!c.characterizations_agree)
                failures.push_back("characterizations disagree at " + to_string(c.disagreement->word()));
            line << "ls1-deficient n=" << o.n << " direct=" << c.counts.direct << " formula=" << c.counts.formula;
        } else if (name == "bijection") {
            check_guard("census bijection size", o.n, guard_limit(kDefaultSytCap));
            json shapes = json::array();
            for (const Partition& shape : partitions_of(o.n)) {
                const BijectionCheck b = descent_count_bijection_check(shape, guard_limit(kDefaultSytCap));
                shapes.push_back({{"shape", std::vector<int>(shape.parts().begin(), shape.parts().end())},
                                  {"enumerated", b.enumerated.str()},
                                  {"formula", b.formula.str()},
                                  {"lands_in_family", b.lands_in_family},
                                  {"injective", b.injective}});
                if (!b.passed()) failures.push_back("shape " + to_string(shape));
            }
            entry["population"] = shapes.size();
            entry["shapes"] = std::move(shapes);
            line << "bijection n=" << o.n << " shapes=" << entry["population"].get<std::size_t>();
        } else if (name == "equivalence") {
            const EquivalenceResult r = equivalence_classes(o.n, guard_limit(kDefaultEquivalenceCap));
            entry["population"] = population;
            entry["classes"] = to_json(r);
            if (!r.partitions_identical) failures.push_back("profile and triangle partitions differ");
            if (!r.recording_refines_profile) failures.push_back("recording tableaux do not refine profiles");
            line << "equivalence n=" << o.n << " by_profile=" << r.by_profile << " by_triangle=" << r.by_triangle
                 << " by_recording=" << r.by_recording;
        } else {
            throw UsageError("unknown census '" + name + "'");
        }
        const bool passed = failures.empty();
        ok = ok && passed;
        entry["failures"] = std::move(failures);
        payload.push_back(std::move(entry));
        out << (passed ? "PASS " : "FAIL ") << line.str() << '\n';
    }
    write_report(o.report, {{"command", "census"}, {"n", o.n}, {"which", which}}, payload, !o.no_metadata);
    return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"descentkit: descent-restricted longest subsequence statistics"};
    app.require_subcommand(1);

    StatOptions stat;
    auto* stat_cmd = app.add_subcommand("stat", "Compute ls_d, ls_D, len_w or the alternating length");
    stat_cmd->add_option("perm", stat.perm, "Permutation, e.g. 3247516 or \"3 2 4 7 5 1 6\"")->required();
    stat_cmd->add_option("--d", stat.d, "Number of descents (ls_d)");
    stat_cmd->add_option("--set", stat.set, "Descent set as a comma list (ls_D)");
    stat_cmd->add_option("--comp", stat.comp, "Composition c as a comma list (ls_{D_c})");
    stat_cmd->add_option("--word", stat.word, "Descent word over U/D (len_w)");
    stat_cmd->add_flag("--alt", stat.alt, "Longest alternating subsequence");
    stat_cmd->add_flag("--all", stat.all, "Full ls_D profile over all D");
    stat_cmd->add_flag("--oracle", stat.oracle, "With --all: use brute-force enumeration");
    stat_cmd->add_flag("--json", stat.json_out, "Emit JSON");

    std::string input;
    std::string format = "ascii";
    auto* rsk_cmd = app.add_subcommand("rsk", "Print the RSK tableaux P and Q");
    rsk_cmd->add_option("perm", input, "Permutation")->required();
    rsk_cmd->add_option("--format", format, "ascii or json");
    auto* evac_cmd = app.add_subcommand("evac", "Evacuate a tableau (or Q of a permutation)");
    evac_cmd->add_option("input", input, "Permutation or tableau like \"[1 2 4][3][5]\"")->required();
    evac_cmd->add_option("--format", format, "ascii or json");
    auto* growth_cmd = app.add_subcommand("growth", "Render the evacuation growth diagram");
    growth_cmd->add_option("input", input, "Permutation or tableau")->required();
    growth_cmd->add_option("--format", format, "ascii, dot or json");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive property sweeps over S_1..S_max-n");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest permutation size");
    verify_cmd->add_option("--checks", verify.checks, "Comma list of checks, or all");
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");
    verify_cmd->add_option("--report", verify.report, "JSON report path");
    verify_cmd->add_flag("--no-metadata", verify.no_metadata, "Omit the run metadata block from the report");

    CensusOptions census;
    auto* census_cmd = app.add_subcommand("census", "Counting identities and equivalence classes");
    census_cmd->add_option("--n", census.n, "Permutation size")->required();
    census_cmd->add_option("--which", census.which, "asc-is, ls1-deficient, bijection, equivalence or all");
    census_cmd->add_option("--report", census.report, "JSON report path");
    census_cmd->add_flag("--no-metadata", census.no_metadata, "Omit the run metadata block from the report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (stat_cmd->parsed()) return cmd_stat(stat, out);
        if (rsk_cmd->parsed()) return cmd_rsk(input, format, out);
        if (evac_cmd->parsed()) return cmd_evac(input, format, out);
        if (growth_cmd->parsed()) return cmd_growth(input, format, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (census_cmd->parsed()) return cmd_census(census, out);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace descentkit::cli
