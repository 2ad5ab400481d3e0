// Command line front end: analyze, rauzy, verify, generate, corpus.
// Exit codes: 0 success, 1 usage or configuration error, 2 property violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetarich/characterize.hpp"
#include "thetarich/complexity.hpp"
#include "thetarich/core.hpp"
#include "thetarich/generators.hpp"
#include "thetarich/palindromic.hpp"
#include "thetarich/rauzy.hpp"
#include "thetarich/reports.hpp"
#include "thetarich/wordspec.hpp"

namespace {

using namespace thetarich;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct SourceFlags {
    std::string word;
    std::string file;
    std::string gen;
    std::string theta;
    std::size_t window = 1000;
    CLI::Option* word_opt = nullptr;
    CLI::Option* file_opt = nullptr;
    CLI::Option* gen_opt = nullptr;
    CLI::Option* theta_opt = nullptr;
    CLI::Option* window_opt = nullptr;

    void attach(CLI::App& cmd) {
        word_opt = cmd.add_option("--word", word, "literal word text");
        file_opt = cmd.add_option("--file", file, "word-spec file path");
        gen_opt = cmd.add_option("--gen", gen, "generator spec");
        theta_opt = cmd.add_option("--theta", theta, "theta spec, e.g. \"a<->a' c\"");
        window_opt = cmd.add_option("--window", window, "generated prefix length");
    }
};

struct Source {
    Word word;
    Antimorphism theta;
    ReportMeta meta;
};

Source resolve_source(const SourceFlags& flags) {
    int given = (flags.word_opt->count() ? 1 : 0) + (flags.file_opt->count() ? 1 : 0) +
                (flags.gen_opt->count() ? 1 : 0);
    if (given != 1)
        throw std::invalid_argument("exactly one of --word, --file, --gen is required");

    std::optional<Antimorphism> theta;
    if (flags.theta_opt->count()) theta = theta_from_spec(flags.theta);

    if (flags.file_opt->count()) {
        std::ifstream in(flags.file);
        if (!in)
            throw std::invalid_argument("cannot read word-spec file '" + flags.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        WordSpec spec = parse_word_spec(buf.str());
        Antimorphism t = theta ? parse_theta_spec(spec.alphabet, flags.theta) : spec.theta;
        Word w = spec.word;
        if (flags.window_opt->count() && flags.window < w.size())
            w = w.prefix(flags.window);
        return {w, t, {"file:" + flags.file, theta_spec_string(t), w.size()}};
    }
    if (flags.gen_opt->count()) {
        ResolvedSource resolved = resolve_generator_spec(flags.gen, theta);
        Antimorphism t = theta ? *theta
                               : (resolved.theta
                                      ? *resolved.theta
                                      : throw std::invalid_argument(
                                            "generator spec '" + flags.gen +
                                            "' does not determine theta; pass --theta"));
        if (resolved.theta && !t.alphabet().compatible_with(resolved.theta->alphabet()))
            throw std::invalid_argument("--theta alphabet does not match generator '" +
                                        flags.gen + "'");
        Word w = resolved.generator->prefix(flags.window);
        return {w, t, {"gen:" + flags.gen, theta_spec_string(t), w.size()}};
    }
    if (!theta)
        throw std::invalid_argument("--word needs --theta to fix the alphabet");
    Word w = theta->alphabet().parse(flags.word);
    if (flags.window_opt->count() && flags.window < w.size()) w = w.prefix(flags.window);
    return {w, *theta, {"word:" + flags.word, theta_spec_string(*theta), w.size()}};
}

/// Explicit ranges are validated, the default range is clamped to the window.
std::pair<std::size_t, std::size_t> resolve_n_range(const Word& w, CLI::Option* n_opt,
                                                    const std::string& n_text) {
    std::size_t limit = w.is_empty() ? 0 : w.size() - 1;
    if (!n_opt->count()) return {0, std::min<std::size_t>(20, limit)};
    auto [lo, hi] = parse_n_range(n_text);
    if (hi > limit)
        throw std::invalid_argument("n range '" + n_text + "' exceeds the window (max n " +
                                    std::to_string(limit) + ")");
    return {lo, hi};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write output file '" + out_path + "'");
    out << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_analyze(const SourceFlags& flags, const std::string& n_text, CLI::Option* n_opt,
                const std::string& format, const std::string& out_path) {
    Source src = resolve_source(flags);
    auto [n_lo, n_hi] = resolve_n_range(src.word, n_opt, n_text);
    RichnessReport rich = richness_report(src.theta, src.word);

    bool violation = rich.pal_count > rich.bound;
    std::optional<ComplexityProfile> profile;
    std::optional<ClosureStatus> closure;
    if (!src.word.is_empty()) {
        FactorIndex idx(src.word, n_hi + 1);
        profile = complexity_profile(src.theta, idx, n_hi);
        closure = closure_under_theta(src.theta, idx, n_hi, ClosureMode::window);
        for (std::size_t n = n_lo; n <= n_hi; ++n)
            if (profile->status(n) == BalanceStatus::violated) violation = true;
    }

    if (format == "json") {
        Json j;
        j["meta"] = meta_json(src.meta);
        j["word_length"] = src.word.size();
        j["richness"] = richness_json(rich);
        j["closure"] = closure ? closure_json(*closure) : Json(nullptr);
        j["balance"] = profile ? balance_rows_json(*profile, n_lo, n_hi) : Json::array();
        j["violation"] = violation;
        write_output(out_path, dump(j));
    } else if (format == "csv") {
        write_output(out_path,
                     profile ? balance_csv(*profile, n_lo, n_hi) : "n,C,dC,P,lhs,rhs,status\n");
    } else if (format == "text") {
        std::ostringstream text;
        text << "source " << src.meta.source << "\n";
        text << "theta " << src.meta.theta_spec << "\n";
        text << "window " << src.meta.window << "\n";
        text << "rich " << (rich.is_rich ? "true" : "false") << " (palindromic factors "
             << rich.pal_count << ", bound " << rich.bound << ", defect " << rich.defect
             << ")\n";
        if (rich.witness)
            text << "witness prefix \"" << rich.witness->prefix.display() << "\" suffix \""
                 << rich.witness->suffix.display() << "\" occurs "
                 << rich.witness->suffix_occurrences << " times\n";
        if (closure)
            text << "closure(n<=" << closure->n_max << ") "
                 << closure_verdict_name(closure->verdict) << "\n";
        if (profile) {
            text << "n,C,dC,P,lhs,rhs,status\n";
            for (std::size_t n = n_lo; n <= n_hi; ++n) {
                ComplexityRow row = profile->row(n);
                text << row.n << ',' << row.c << ',' << row.dc << ',' << row.p << ','
                     << row.lhs << ',' << row.rhs << ','
                     << balance_status_name(row.status) << "\n";
            }
        }
        write_output(out_path, text.str());
    } else {
        throw std::invalid_argument("analyze supports --format text, json or csv; got '" +
                                    format + "'");
    }
    return violation ? kViolation : kOk;
}

int run_rauzy(const SourceFlags& flags, const std::string& n_text, CLI::Option* n_opt,
              const std::string& out_path) {
    Source src = resolve_source(flags);
    if (!n_opt->count()) throw std::invalid_argument("rauzy needs --n");
    auto [n_lo, n_hi] = parse_n_range(n_text);
    if (n_lo != n_hi) throw std::invalid_argument("rauzy takes a single --n, not a range");
    std::size_t n = n_lo;
    if (n + 1 > src.word.size())
        throw std::invalid_argument("n " + std::to_string(n) + " needs factors of length " +
                                    std::to_string(n + 1) + "; window has only " +
                                    std::to_string(src.word.size()) + " letters");
    FactorIndex idx(src.word, n + 1);
    RauzyGraph graph = rauzy_graph(idx, n);
    ReducedGraph reduced = reduced_graph(idx, n);
    SuperReducedGraph super = super_reduced_graph(src.theta, idx, n);

    if (out_path.empty()) {
        std::cout << graph.to_dot() << reduced.to_dot() << super.to_dot();
        return kOk;
    }
    write_output(out_path + ".rauzy.dot", graph.to_dot());
    write_output(out_path + ".reduced.dot", reduced.to_dot());
    write_output(out_path + ".super.dot", super.to_dot());
    std::cout << out_path << ".rauzy.dot\n"
              << out_path << ".reduced.dot\n"
              << out_path << ".super.dot\n";
    return kOk;
}

struct VerifyRow {
    std::string word;
    std::string property;
    bool pass;
    std::string note;
};

void verify_one(const std::string& name, const Antimorphism& theta, const Word& w,
                std::size_t n_lo, std::size_t n_hi, std::vector<VerifyRow>& rows) {
    auto add = [&](const std::string& property, bool pass, const std::string& note) {
        rows.push_back({name, property, pass, note});
    };
    RichnessReport rich = richness_report(theta, w);
    add("palindrome-count-bound", rich.pal_count <= rich.bound,
        "count " + std::to_string(rich.pal_count) + " bound " + std::to_string(rich.bound));
    if (w.is_empty()) return;

    std::size_t n_cap = std::min(n_hi, w.size() - 1);
    FactorIndex idx(w, n_cap + 1);
    auto closure = closure_under_theta(theta, idx, n_cap, ClosureMode::window);
    add("closure", closure.verdict != ClosureVerdict::not_closed,
        closure_verdict_name(closure.verdict));

    auto profile = complexity_profile(theta, idx, n_cap);
    bool bound_ok = true;
    std::size_t worst = 0;
    for (std::size_t n = std::max<std::size_t>(1, n_lo); n <= n_cap; ++n)
        if (profile.status(n) == BalanceStatus::violated) {
            bound_ok = false;
            worst = n;
        }
    add("balance-upper-bound", bound_ok,
        bound_ok ? "lhs <= rhs for n <= " + std::to_string(n_cap)
                 : "violated at n=" + std::to_string(worst));

    bool structure_ok = true;
    std::string structure_note = "predicted == observed for n <= " + std::to_string(n_cap);
    for (std::size_t n = std::max<std::size_t>(1, n_lo); n <= n_cap; ++n) {
        auto verdict = equality_structure_check(theta, idx, n, profile);
        if (verdict.equality_predicted != verdict.equality_observed) {
            structure_ok = false;
            structure_note = "mismatch at n=" + std::to_string(n);
        }
    }
    add("equality-structure", structure_ok, structure_note);

    auto table = cross_check_characterizations(theta, idx);
    std::string joined;
    for (const auto& line : table.inconsistencies) {
        if (!joined.empty()) joined += "; ";
        joined += line;
    }
    add("characterizations", table.inconsistencies.empty(),
        table.inconsistencies.empty() ? "all verdicts coherent" : joined);

    auto eprof = episturmian_profile(theta, idx, n_cap);
    if (eprof.theta_episturmian_on_window) {
        auto report = return_word_structure_check(theta, idx, n_cap);
        std::string note = report.violations.empty() ? "all clauses hold"
                                                     : report.violations.front();
        add("return-structure", report.all_hold(), note);
        if (idx.max_len() >= 3) {
            auto criterion = episturmian_richness_criterion(theta, idx);
            add("episturmian-criterion", criterion.rich_predicted == rich.is_rich,
                "lhs " + std::to_string(criterion.lhs) + " rhs " +
                    std::to_string(criterion.rhs) + " (+1 variant rhs " +
                    std::to_string(criterion.rhs_alternative) + "), rich " +
                    (rich.is_rich ? "true" : "false"));
        }
    } else {
        add("return-structure", true, "not theta-episturmian on window: skipped");
    }
}

int run_verify(const SourceFlags& flags, const std::string& n_text, CLI::Option* n_opt,
               const std::string& format, const std::string& out_path, bool list) {
    if (list) {
        std::ostringstream text;
        for (PropertyId id : all_properties()) text << property_name(id) << "\n";
        write_output(out_path, text.str());
        return kOk;
    }
    std::vector<VerifyRow> rows;
    int given = (flags.word_opt->count() ? 1 : 0) + (flags.file_opt->count() ? 1 : 0) +
                (flags.gen_opt->count() ? 1 : 0);
    if (given > 0) {
        Source src = resolve_source(flags);
        auto [n_lo, n_hi] = resolve_n_range(src.word, n_opt, n_text);
        verify_one(src.meta.source, src.theta, src.word, n_lo, n_hi, rows);
    } else {
        std::pair<std::size_t, std::size_t> range{0, 20};
        if (n_opt->count()) range = parse_n_range(n_text);
        for (const CorpusEntry& entry : builtin_corpus()) {
            Word w = entry.generator->prefix(flags.window);
            std::size_t hi = std::min(range.second, w.size() - 1);
            verify_one("corpus:" + entry.name, entry.theta, w, range.first, hi, rows);
        }
    }

    bool all_pass = true;
    for (const VerifyRow& row : rows) all_pass = all_pass && row.pass;

    if (format == "json") {
        Json j;
        Json out_rows = Json::array();
        for (const VerifyRow& row : rows) {
            Json r;
            r["word"] = row.word;
            r["property"] = row.property;
            r["pass"] = row.pass;
            r["note"] = row.note;
            out_rows.push_back(std::move(r));
        }
        j["rows"] = std::move(out_rows);
        j["all_pass"] = all_pass;
        write_output(out_path, dump(j));
    } else if (format == "text") {
        std::ostringstream text;
        for (const VerifyRow& row : rows)
            text << (row.pass ? "PASS" : "FAIL") << "  " << row.word << "  " << row.property
                 << "  " << row.note << "\n";
        text << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
        write_output(out_path, text.str());
    } else {
        throw std::invalid_argument("verify supports --format text or json; got '" + format +
                                    "'");
    }
    return all_pass ? kOk : kViolation;
}

int run_generate(const SourceFlags& flags, const std::string& format,
                 const std::string& out_path) {
    Source src = resolve_source(flags);
    if (format == "json") {
        Json j;
        j["meta"] = meta_json(src.meta);
        j["word"] = word_json(src.word);
        write_output(out_path, dump(j));
    } else if (format == "text") {
        write_output(out_path, src.word.display() + "\n");
    } else {
        throw std::invalid_argument("generate supports --format text or json; got '" +
                                    format + "'");
    }
    return kOk;
}

int run_corpus(const std::string& format, const std::string& out_path) {
    if (format == "json") {
        Json rows = Json::array();
        for (const CorpusEntry& entry : builtin_corpus()) {
            Json r;
            r["name"] = entry.name;
            r["theta"] = theta_spec_string(entry.theta);
            r["alphabet"] = entry.theta.alphabet().names();
            r["periodic"] = entry.periodic;
            r["summary"] = entry.summary;
            rows.push_back(std::move(r));
        }
        Json j;
        j["corpus"] = std::move(rows);
        write_output(out_path, dump(j));
    } else if (format == "text") {
        std::ostringstream text;
        for (const CorpusEntry& entry : builtin_corpus())
            text << entry.name << "  theta \"" << theta_spec_string(entry.theta) << "\"  "
                 << (entry.periodic ? "periodic" : "aperiodic") << "  " << entry.summary
                 << "\n";
        write_output(out_path, text.str());
    } else {
        throw std::invalid_argument("corpus supports --format text or json; got '" + format +
                                    "'");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-palindromic richness toolkit"};
    app.require_subcommand(1);

    SourceFlags analyze_src, rauzy_src, verify_src, generate_src;
    std::string analyze_n, rauzy_n, verify_n;
    std::string analyze_format = "text", verify_format = "text", generate_format = "text",
                corpus_format = "text";
    std::string analyze_out, rauzy_out, verify_out, generate_out, corpus_out;
    bool verify_list = false;

    CLI::App* analyze = app.add_subcommand("analyze", "richness and balance report");
    analyze_src.attach(*analyze);
    CLI::Option* analyze_n_opt = analyze->add_option("--n", analyze_n, "n range, e.g. 0..20");
    analyze->add_option("--format", analyze_format, "text, json or csv");
    analyze->add_option("--out", analyze_out, "output file (default stdout)");

    CLI::App* rauzy = app.add_subcommand("rauzy", "graph, reduced and quotient DOT output");
    rauzy_src.attach(*rauzy);
    CLI::Option* rauzy_n_opt = rauzy->add_option("--n", rauzy_n, "single factor length n");
    rauzy->add_option("--out", rauzy_out, "output path prefix (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the property suite");
    verify_src.attach(*verify);
    CLI::Option* verify_n_opt = verify->add_option("--n", verify_n, "n range, e.g. 1..30");
    verify->add_option("--format", verify_format, "text or json");
    verify->add_option("--out", verify_out, "output file (default stdout)");
    verify->add_flag("--list", verify_list, "print property ids and exit");

    CLI::App* generate = app.add_subcommand("generate", "print a word prefix");
    generate_src.attach(*generate);
    generate->add_option("--format", generate_format, "text or json");
    generate->add_option("--out", generate_out, "output file (default stdout)");

    CLI::App* corpus = app.add_subcommand("corpus", "list builtin study words");
    corpus->add_option("--format", corpus_format, "text or json");
    corpus->add_option("--out", corpus_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_src, analyze_n, analyze_n_opt, analyze_format,
                               analyze_out);
        if (*rauzy) return run_rauzy(rauzy_src, rauzy_n, rauzy_n_opt, rauzy_out);
        if (*verify)
            return run_verify(verify_src, verify_n, verify_n_opt, verify_format, verify_out,
                              verify_list);
        if (*generate) return run_generate(generate_src, generate_format, generate_out);
        if (*corpus) return run_corpus(corpus_format, corpus_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
