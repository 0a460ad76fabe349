// spreadcode — build linear codes from partial spreads of GF(q)^(2k) and
// decide their minimality.
//
// Subcommands:
//   spread        construct a spread (desarguesian | eb | thm34 | random)
//   code          turn a spread into a defining-set code
//   check         decide minimality (geometric | bruteforce | ab | all)
//   weights       weight distribution of a code
//   verify-paper  run the whole verification matrix
//
// Exit codes: 0 success / Minimal, 1 NotMinimal (or failed verification
// rows), 2 invalid parameters or malformed input, 3 Inconclusive,
// 4 internal cross-check contradiction.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "spreadcode/json_io.hpp"
#include "spreadcode/verify.hpp"

using namespace spreadcode;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& err) {
        throw std::runtime_error(std::string("malformed JSON: ") + err.what());
    }
}

std::vector<felem> parse_subset(const std::string& csv) {
    std::vector<felem> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t used = 0;
        int code = std::stoi(token, &used);
        if (used != token.size() || code < 0)
            throw std::runtime_error("bad subset entry: " + token);
        out.push_back((felem)code);
    }
    return out;
}

std::string spread_table(const PartialSpread& sp) {
    std::ostringstream os;
    os << "q=" << sp.field->q() << " k=" << sp.k << " s=" << sp.size() << "\n";
    for (int i = 0; i < sp.size(); ++i) {
        os << "member " << i << ":";
        for (const auto& row : sp.members[i].basis.to_rows())
            os << " " << vec_to_string(row);
        os << "\n";
    }
    return os.str();
}

std::string report_table(const MinimalityReport& r) {
    std::ostringstream os;
    os << "method: " << to_string(r.method) << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    if (r.witness) os << "witness: " << vec_to_string(*r.witness) << "\n";
    if (r.certificate) os << "certificate: " << vec_to_string(*r.certificate) << "\n";
    os << "checked: " << r.stats.checked << "\n";
    if (r.stats.min_vdim >= 0)
        os << "vdim range: [" << r.stats.min_vdim << ", " << r.stats.max_vdim << "]\n";
    return os.str();
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Minimal: return 0;
        case Verdict::NotMinimal: return 1;
        case Verdict::Inconclusive: return 3;
    }
    return 2;
}

struct CommonOpts {
    std::string in = "-";
    std::string out = "-";
    std::string format = "json";
    int threads = 1;
};

int cmd_spread(int p, int e, int k, const std::string& family, int s,
               const std::string& subset_csv, std::uint64_t seed, const CommonOpts& opt) {
    FieldPtr F = Field::make(p, e);
    PartialSpread sp = [&] {
        if (family == "desarguesian") return desarguesian_spread(F, k);
        if (family == "thm34") return companion_spread(F, k);
        if (family == "eb") {
            std::vector<felem> subset;
            if (subset_csv.empty()) {
                subset.resize(F->q());
                std::iota(subset.begin(), subset.end(), (felem)0);
            } else {
                subset = parse_subset(subset_csv);
            }
            return scalar_graph_family(F, k, subset);
        }
        if (family == "random") {
            if (s < 2) throw std::runtime_error("random family needs --s >= 2");
            return random_partial_spread(F, k, s, seed);
        }
        throw std::runtime_error("unknown family: " + family);
    }();

    if (opt.format == "table")
        write_output(opt.out, spread_table(sp));
    else
        write_output(opt.out, spread_to_json(sp).dump(2) + "\n");
    return 0;
}

int cmd_code(const CommonOpts& opt) {
    PartialSpread sp = spread_from_json(parse_json(read_input(opt.in)));
    DefiningSet D = defining_set(sp);
    // table form is the generator matrix as plain text
    if (opt.format == "table")
        write_output(opt.out, generator_matrix_text(D));
    else
        write_output(opt.out, code_to_json(D).dump(2) + "\n");
    return 0;
}

int cmd_check(const std::string& method, const CommonOpts& opt) {
    DefiningSet D = code_from_json(parse_json(read_input(opt.in)));

    if (method == "geometric" || method == "bruteforce" || method == "ab") {
        MinimalityReport report;
        if (method == "geometric") report = check_geometric(D, opt.threads);
        else if (method == "bruteforce") report = check_bruteforce(D);
        else report = ab_bound(weight_distribution(D, opt.threads), *D.field);
        write_output(opt.out, opt.format == "table" ? report_table(report)
                                                    : report_to_json(report).dump(2) + "\n");
        return exit_code(report.verdict);
    }
    if (method != "all") throw std::runtime_error("unknown method: " + method);

    // cheapest first, then cross-check every claim against the others
    MinimalityReport ab = ab_bound(weight_distribution(D, opt.threads), *D.field);
    MinimalityReport geo = check_geometric(D, opt.threads);
    std::optional<MinimalityReport> brute;
    long long qm = 1;
    for (int i = 0; i < D.m && qm <= (1 << 20); ++i) qm *= D.field->q();
    if (qm <= (1 << 20)) brute = check_bruteforce(D);

    bool contradiction = false;
    if (ab.verdict == Verdict::Minimal && geo.verdict != Verdict::Minimal)
        contradiction = true;
    if (brute && brute->verdict != geo.verdict) contradiction = true;

    Json j;
    j["verdict"] = to_string(geo.verdict);
    j["methods"] = Json::object();
    j["methods"]["ab_bound"] = report_to_json(ab);
    j["methods"]["geometric"] = report_to_json(geo);
    j["methods"]["bruteforce"] = brute ? report_to_json(*brute) : Json(nullptr);
    j["consistent"] = !contradiction;

    if (opt.format == "table") {
        std::ostringstream os;
        os << report_table(ab) << "\n" << report_table(geo);
        if (brute) os << "\n" << report_table(*brute);
        os << "\nverdict: " << to_string(geo.verdict) << "\n";
        write_output(opt.out, os.str());
    } else {
        write_output(opt.out, j.dump(2) + "\n");
    }

    if (contradiction) {
        std::cerr << "error: checkers contradict each other on this input\n";
        return 4;
    }
    return exit_code(geo.verdict);
}

int cmd_weights(const CommonOpts& opt) {
    DefiningSet D = code_from_json(parse_json(read_input(opt.in)));
    WeightDistribution dist = weight_distribution(D, opt.threads);
    if (opt.format == "table") {
        std::ostringstream os;
        for (const auto& [w, count] : dist) os << w << " " << count << "\n";
        write_output(opt.out, os.str());
    } else {
        write_output(opt.out, weights_to_json(dist).dump() + "\n");
    }
    return 0;
}

int cmd_verify(const std::string& rows, const std::string& format, const CommonOpts& opt) {
    auto results = run_verification(rows, opt.threads);
    if (results.empty()) throw std::runtime_error("no verification rows match: " + rows);

    bool all_pass = true;
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back(Json{{"row", r.id},
                             {"pass", r.pass},
                             {"detail", r.detail},
                             {"seconds", r.seconds}});
            all_pass = all_pass && r.pass;
        }
        write_output(opt.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " — " << r.detail << " ("
               << (int)(r.seconds * 1000) << "ms)\n";
            all_pass = all_pass && r.pass;
        }
        write_output(opt.out, os.str());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes from partial spreads and their minimality"};
    app.require_subcommand(1);

    int p = 2, e = 1, k = 1, s = 0;
    std::uint64_t seed = 0;
    std::string family, subset, method = "geometric", rows, verify_format = "table";
    CommonOpts opt;

    auto add_io = [&](CLI::App* cmd, bool with_in) {
        if (with_in) cmd->add_option("--in", opt.in, "input file, - for stdin");
        cmd->add_option("--out", opt.out, "output file, - for stdout");
        cmd->add_option("--format", opt.format, "json | table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* sp = app.add_subcommand("spread", "construct a partial spread");
    sp->add_option("--p", p, "field characteristic (prime)")->required();
    sp->add_option("--e", e, "extension degree");
    sp->add_option("--k", k, "member dimension, ambient is 2k")->required();
    sp->add_option("--family", family, "desarguesian | eb | thm34 | random")
        ->required()
        ->check(CLI::IsMember({"desarguesian", "eb", "thm34", "random"}));
    sp->add_option("--s", s, "target size (random family)");
    sp->add_option("--subset", subset, "comma-separated scalar codes (eb family)");
    sp->add_option("--seed", seed, "random seed");
    add_io(sp, false);

    CLI::App* code = app.add_subcommand("code", "build the defining-set code of a spread");
    add_io(code, true);

    CLI::App* check = app.add_subcommand("check", "decide minimality of a code");
    check->add_option("--method", method, "geometric | bruteforce | ab | all")
        ->check(CLI::IsMember({"geometric", "bruteforce", "ab", "all"}));
    check->add_option("--threads", opt.threads, "worker cap");
    add_io(check, true);

    CLI::App* weights = app.add_subcommand("weights", "weight distribution of a code");
    weights->add_option("--threads", opt.threads, "worker cap");
    add_io(weights, true);

    CLI::App* verify = app.add_subcommand("verify-paper", "run the verification matrix");
    verify->add_option("--rows", rows, "only rows whose id contains this substring");
    verify->add_option("--threads", opt.threads, "worker cap");
    verify->add_option("--out", opt.out, "output file, - for stdout");
    verify->add_option("--format", verify_format, "table | json")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_spread(p, e, k, family, s, subset, seed, opt);
        if (code->parsed()) return cmd_code(opt);
        if (check->parsed()) return cmd_check(method, opt);
        if (weights->parsed()) return cmd_weights(opt);
        if (verify->parsed()) return cmd_verify(rows, verify_format, opt);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
