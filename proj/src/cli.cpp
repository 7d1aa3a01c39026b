#include "cgaskey/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cgaskey/coproduct.hpp"
#include "cgaskey/errors.hpp"
#include "cgaskey/serialize.hpp"
#include "cgaskey/suite.hpp"

namespace cgaskey::cli {

namespace {

const std::vector<std::string> kParameterKeys = {"alpha", "beta", "p", "q", "lambda1", "lambda2", "kappa1", "kappa2"};

/// Options shared by verify and table. Unset values come from --config, then defaults.
struct RunOptions {
    std::optional<std::string> family;
    std::map<std::string, std::string> params;
    std::optional<int> n_max;
    std::optional<long> seed;
    std::optional<std::string> checks;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<std::string> config;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("'" + key + "' expects an integer, got '" + value + "'");
    return v;
}

/// Fills unset options from the config file; flags given on the command line win.
void merge_config(RunOptions& opt) {
    if (!opt.config) return;
    for (const auto& [key, value] : read_config(*opt.config)) {
        if (key == "family") {
            if (!opt.family) opt.family = value;
        } else if (key == "nmax" || key == "n_max") {
            if (!opt.n_max) opt.n_max = parse_int(key, value);
        } else if (key == "seed") {
            if (!opt.seed) opt.seed = parse_int(key, value);
        } else if (key == "checks") {
            if (!opt.checks) opt.checks = value;
        } else if (key == "output") {
            if (!opt.output) opt.output = value;
        } else if (key == "format") {
            if (!opt.format) opt.format = value;
        } else if (std::find(kParameterKeys.begin(), kParameterKeys.end(), key) != kParameterKeys.end()) {
            opt.params.try_emplace(key, value);
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
}

std::vector<std::string> split_checks(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Resolved {
    FamilyInstance inst;
    long seed;
};

Resolved resolve_instance(const RunOptions& opt) {
    if (!opt.family) throw ParseError("--family is required");
    const FamilyKind kind = parse_family_kind(*opt.family);
    const int n_max = opt.n_max.value_or(8);
    if (n_max < 0) throw InvalidParameter("--nmax must be non-negative");
    const long seed = opt.seed.value_or(0);
    ParameterMap given;
    const auto allowed = free_parameters(kind);
    for (const auto& [key, text] : opt.params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw InvalidParameter("parameter '" + key + "' is not a free parameter of the " + std::string(to_string(kind)) +
                                   " family");
        }
        given[key] = Scalar::parse(text);
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    const auto params = complete_parameters(kind, given, rng, n_max);
    return {FamilyInstance::from_parameters(kind, params, n_max), seed};
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream file(*path);
    if (!file) throw std::ios_base::failure("cannot open output file '" + *path + "'");
    file << text;
    if (!file) throw std::ios_base::failure("write to '" + *path + "' failed");
}

int cmd_verify(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const auto [inst, seed] = resolve_instance(opt);
    const auto selected = opt.checks ? split_checks(*opt.checks) : std::vector<std::string>{};
    const Report report = run_suite(inst, selected);
    Json doc = {{"tool", "cgaskey"},
                {"version", kVersion},
                {"command", "verify"},
                {"instance", to_json(inst)},
                {"seed", seed},
                {"report", to_json(report)},
                {"pass", report.passed()}};
    emit(doc.dump(2) + "\n", opt.output, out);
    if (opt.output) out << (report.passed() ? "PASS" : "FAIL") << " " << report.identities() << " identities\n";
    if (const Check* f = report.first_failure()) err << "check failed: " << f->name << "\n";
    return report.passed() ? kPass : kCheckFailure;
}

std::string text_table(const Table& t) {
    std::ostringstream os;
    os << "family " << to_string(t.instance.kind()) << "\n";
    for (const auto& [name, value] : t.instance.parameters()) os << "  " << name << " = " << value.str() << "\n";
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        const auto& b = t.blocks[i];
        std::size_t width = 1;
        for (std::size_t r = 0; r < b.P.rows(); ++r) {
            for (std::size_t c = 0; c < b.P.cols(); ++c) width = std::max(width, b.P(r, c).str().size());
        }
        os << "\nN = " << b.N << "  (row n, column k: P_n(k,N))\n";
        for (std::size_t r = 0; r < b.P.rows(); ++r) {
            os << "  n=" << r << ":";
            for (std::size_t c = 0; c < b.P.cols(); ++c) os << " " << std::setw(static_cast<int>(width)) << b.P(r, c).str();
            os << "\n";
        }
        const auto& w = t.weights[i];
        os << "  Omega :";
        for (const auto& s : w.omega) os << " " << s.str();
        os << "\n  Omega':";
        for (const auto& s : w.omega_prime) os << " " << s.str();
        os << "\n";
    }
    return os.str();
}

int cmd_table(const RunOptions& opt, std::ostream& out) {
    const std::string format = opt.format.value_or("text");
    if (format != "text" && format != "json") throw ParseError("--format must be text or json");
    const auto [inst, seed] = resolve_instance(opt);
    (void)seed;
    const Table table = make_table(inst);
    emit(format == "json" ? to_json(table).dump(2) + "\n" : text_table(table), opt.output, out);
    return kPass;
}

struct CoassocOptions {
    std::string p, q, p2, q2;
    int n_max = 4;
};

int cmd_coassoc(const CoassocOptions& opt, std::ostream& out) {
    const KrawtchoukQuad quad{Scalar::parse(opt.p), Scalar::parse(opt.q), Scalar::parse(opt.p2), Scalar::parse(opt.q2)};
    const auto res = krawtchouk_coassoc(quad, {Scalar(1), Scalar(2), Scalar(3)}, opt.n_max);
    Json doc = {{"tool", "cgaskey"},
                {"version", kVersion},
                {"command", "coassoc"},
                {"quadruple", {{"p", quad.p.str()}, {"q", quad.q.str()}, {"p2", quad.p2.str()}, {"q2", quad.q2.str()}}},
                {"n_max", opt.n_max},
                {"constraint", res.constraint_holds},
                {"equal", res.lhs_equals_rhs},
                {"report", to_json(res.report)}};
    out << doc.dump(2) << "\n";
    return res.constraint_holds == res.lhs_equals_rhs ? kPass : kCheckFailure;
}

void add_run_options(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--family", opt.family, "hahn, krawtchouk, dual-hahn, racah, q-hahn, q-racah");
    for (const auto& key : kParameterKeys) {
        cmd->add_option_function<std::string>(
            "--" + key, [&opt, key](const std::string& v) { opt.params[key] = v; }, "rational a/b or integer");
    }
    cmd->add_option("--nmax", opt.n_max, "truncation level (default 8)");
    cmd->add_option("--seed", opt.seed, "seed for parameters not given (default 0)");
    cmd->add_option("--output", opt.output, "write the document to this file");
    cmd->add_option("--config", opt.config, "flat key=value file; flags win");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Clebsch-Gordan verification for the finite (q-)Askey families", "cgaskey"};
    app.require_subcommand(1);

    RunOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run the verification suite on one parameter set");
    add_run_options(verify, verify_opt);
    verify->add_option("--checks", verify_opt.checks, "comma-separated subset of checks");

    RunOptions table_opt;
    auto* table = app.add_subcommand("table", "print CG blocks and orthogonality weights");
    add_run_options(table, table_opt);
    table->add_option("--format", table_opt.format, "text or json");

    CoassocOptions co;
    auto* coassoc = app.add_subcommand("coassoc", "compare the two Krawtchouk recouplings on triple tensors");
    coassoc->add_option("--p", co.p)->required();
    coassoc->add_option("--q", co.q)->required();
    coassoc->add_option("--p2", co.p2)->required();
    coassoc->add_option("--q2", co.q2)->required();
    coassoc->add_option("--nmax", co.n_max, "truncation level (default 4)");

    auto* version = app.add_subcommand("version", "print the version");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }

    try {
        if (*version) {
            out << "cgaskey " << kVersion << "\n";
            return kPass;
        }
        if (*coassoc) return cmd_coassoc(co, out);
        if (*verify) {
            merge_config(verify_opt);
            return cmd_verify(verify_opt, out, err);
        }
        merge_config(table_opt);
        return cmd_table(table_opt, out);
    } catch (const InvalidParameter& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kInvalidParameters;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace cgaskey::cli
