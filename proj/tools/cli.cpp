#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sqf/catalog.hpp"
#include "sqf/circular.hpp"
#include "sqf/error.hpp"
#include "sqf/extremal.hpp"
#include "sqf/substitution.hpp"

namespace sqf::cli {

namespace {

using json = nlohmann::ordered_json;

void print_pairs(std::ostream& out, const json& j) {
    for (const auto& [key, value] : j.items()) {
        out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

int check(const std::string& text, bool circular, bool as_json, std::ostream& out) {
    const Word w = parse_word(text);
    json j;
    j["word"] = w.str();
    j["length"] = w.size();
    if (circular) {
        j["square_free"] = is_circular_square_free(w.letters());
        j["extremal"] = is_extremal_circular(w.letters());
    } else {
        const ExtremalReport r = analyze(w);
        j["square_free"] = r.square_free;
        j["extremal"] = r.square_free && r.extremal;
        j["nearly_extremal"] = r.nearly_extremal;
        j["left_extremal"] = r.square_free && r.left_extremal;
        j["right_extremal"] = r.square_free && r.right_extremal;
    }
    if (as_json) out << j.dump() << '\n';
    else print_pairs(out, j);
    return kOk;
}

int construct(long n, bool circular, const ConstructOptions& options, bool as_json, std::ostream& out) {
    const ConstructionResult r = circular ? construct_extremal_circular(n, options) : construct_extremal(n, options);
    if (as_json) out << to_json(r).dump() << '\n';
    else out << r.word.str() << '\n';
    return r.verified ? kOk : kCheckFailed;
}

int run_spectrum(long max_n, bool circular, const SpectrumOptions& options, bool as_json, std::ostream& out) {
    const Spectrum s = spectrum(max_n, circular, options);
    if (as_json) {
        json j;
        j["max"] = s.max_n;
        j["circular"] = s.circular;
        j["exhaustive"] = s.exhaustive;
        j["admissible"] = s.admissible;
        json witnesses = json::object();
        for (const auto& [n, w] : s.witnesses) witnesses[std::to_string(n)] = w.str();
        j["witnesses"] = witnesses;
        out << j.dump() << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < s.admissible.size(); ++i) out << (i ? " " : "") << s.admissible[i];
    out << '\n';
    return kOk;
}

int verify_catalog_cmd(std::ostream& out) {
    const CatalogReport report = verify_catalog();
    for (const CatalogCheck& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.property;
        if (!c.passed) out << " (" << c.counterexample << ')';
        out << '\n';
    }
    out << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
    return report.passed() ? kOk : kCheckFailed;
}

void print_report(std::ostream& out, const std::string& name, const ConditionReport& r) {
    out << (r.passed() ? "PASS " : "FAIL ") << name << ": " << r.checks << " checks, " << r.violation_count
        << " violations\n";
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) out << "  " << r.violations[i].describe() << '\n';
}

int verify_substitution_cmd(const std::string& file, std::ostream& out) {
    bool ok = true;
    if (file.empty()) {
        for (const Certificate& c : substitution_certificates()) {
            print_report(out, c.name, c.report);
            ok = ok && c.report.passed();
        }
        return ok ? kOk : kCheckFailed;
    }
    std::ifstream in(file);
    if (!in) throw Error(Errc::ParseError, "cannot read " + file);
    std::ostringstream text;
    text << in.rdbuf();
    const Substitution sub = parse_substitution(text.str());
    const Alphabet source = Alphabet::latin(sub.source_size());
    const ConditionReport r = check_universal(sub, [&] { return square_free_words(source, 3); });
    print_report(out, file, r);
    return r.passed() ? kOk : kCheckFailed;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::NotInSpectrum: return kNotInSpectrum;
        case Errc::SearchBudgetExceeded:
        case Errc::BudgetRefused: return kBudget;
        default: return kUsage;
    }
}

}  // namespace

json to_json(const ConstructionResult& r) {
    json j;
    j["length"] = r.length;
    j["circular"] = r.circular;
    j["word"] = r.word.str();
    j["method"] = method_name(r.method);
    if (r.plan) {
        json plan;
        for (int part : {41, 52, 61, 64}) plan[std::to_string(part)] = r.plan->count(part);
        j["plan"] = plan;
    } else {
        j["plan"] = nullptr;
    }
    j["verified"] = r.verified;
    j["seed"] = r.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal square-free ternary words, linear and circular", "sqf"};
    app.require_subcommand(1);

    // Shared by all subcommands, so the default is applied after parsing.
    std::string format;
    auto add_format = [&](CLI::App* sub, const std::string& fallback) {
        sub->add_option("--format", format, "Output format, text or json (default " + fallback + ")")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string word;
    bool circular = false;
    auto* check_cmd = app.add_subcommand("check", "Report square-freeness and extremality of a word");
    check_cmd->add_option("word", word, "Word over a, b, c")->required();
    check_cmd->add_flag("--circular", circular, "Treat the word as circular");
    add_format(check_cmd, "text");

    long length = 0;
    ConstructOptions options;
    auto* construct_cmd = app.add_subcommand("construct", "Build a verified extremal word of a given length");
    construct_cmd->add_option("--length,-n", length, "Word length")->required()->check(CLI::NonNegativeNumber);
    construct_cmd->add_flag("--circular", circular, "Build a circular word");
    construct_cmd->add_option("--seed", options.seed, "Search seed");
    construct_cmd->add_option("--budget", options.budget, "Search node budget");
    add_format(construct_cmd, "json");

    long max_n = 0;
    SpectrumOptions spectrum_options;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Exhaustively list admissible lengths up to a bound");
    spectrum_cmd->add_option("--max", max_n, "Largest length")->required()->check(CLI::NonNegativeNumber);
    spectrum_cmd->add_flag("--circular", circular, "Circular words");
    spectrum_cmd->add_flag("--force", spectrum_options.force, "Run past the default guard");
    spectrum_cmd->add_option("--jobs,-j", spectrum_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_format(spectrum_cmd, "text");

    auto* catalog_cmd = app.add_subcommand("verify-catalog", "Check the seed words and their cap products");

    std::string file;
    auto* substitution_cmd = app.add_subcommand("verify-substitution", "Check substitution conditions");
    substitution_cmd->add_option("--file", file, "Substitution file, one 'a -> w1 | w2' line per letter")
        ->check(CLI::ExistingFile);

    int witness_n = 0;
    auto* witness_cmd = app.add_subcommand("witness", "Print an irreducibly square-free word");
    witness_cmd->add_option("--irreducible", witness_n, "Alphabet size, 4..36")->required();

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const bool as_json = format.empty() ? construct_cmd->parsed() : format == "json";
    try {
        if (check_cmd->parsed()) return check(word, circular, as_json, out);
        if (construct_cmd->parsed()) return construct(length, circular, options, as_json, out);
        if (spectrum_cmd->parsed()) return run_spectrum(max_n, circular, spectrum_options, as_json, out);
        if (catalog_cmd->parsed()) return verify_catalog_cmd(out);
        if (substitution_cmd->parsed()) return verify_substitution_cmd(file, out);
        if (witness_cmd->parsed()) {
            out << irreducible_witness(witness_n).str() << '\n';
            return kOk;
        }
    } catch (const Error& e) {
        err << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsage;
}

}  // namespace sqf::cli
