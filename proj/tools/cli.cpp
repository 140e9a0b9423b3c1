#include "cli.hpp"

#include <bipolar_aba/bipolar_aba.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace baba::cli {

namespace {
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct SolveConfig {
        std::string input;
        std::string format;
        std::string support;
        std::string semantics;
        std::string problem;
        std::string query;
        std::string set;
        bool set_given = false;
        std::string algorithm = "improved";
        double timeout = 0.0;
        std::string output;
        bool oracle = false;
    };

    struct GenerateConfig {
        std::size_t sentences = 16;
        double ratio = 0.37;
        std::size_t rule_heads = 8;
        std::string rules_per_head = "2:2";
        std::uint64_t seed = 1;
        std::string output;
    };

    struct BenchCliConfig {
        std::string sizes;
        std::string semantics = "all";
        std::string csv;
        double timeout = 0.0;
        std::uint64_t seed = 1;
    };

    std::string read_all(const std::string & path, std::istream & in)
    {
        if (path == "-")
            return std::string(std::istreambuf_iterator<char>(in), {});
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
        return std::string(std::istreambuf_iterator<char>(file), {});
    }

    void write_out(const std::string & path, const std::string & text, std::ostream & out)
    {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw UsageError("cannot write '" + path + "'");
        file << text;
    }

    std::vector<std::string> split(const std::string & text, char sep)
    {
        std::vector<std::string> parts;
        std::string cur;
        std::istringstream is(text);
        while (std::getline(is, cur, sep))
            parts.push_back(cur);
        if (!text.empty() && text.back() == sep)
            parts.emplace_back();
        return parts;
    }

    std::size_t to_size(const std::string & s, const char * what)
    {
        try {
            std::size_t used = 0;
            auto v = std::stoull(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return static_cast<std::size_t>(v);
        }
        catch (const std::logic_error &) {
            throw UsageError(std::string("invalid ") + what + " '" + s + "'");
        }
    }

    std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds)
    {
        if (seconds <= 0.0)
            return std::nullopt;
        return std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    }

    Framework load(const SolveConfig & c, std::istream & in)
    {
        auto text = read_all(c.input, in);
        if (c.format == "aba") {
            if (!c.support.empty())
                throw UsageError("--support is only valid with --format baf");
            return parse_aba(text);
        }
        if (c.format == "af") {
            if (!c.support.empty())
                throw UsageError("--support is only valid with --format baf");
            return map_to_bipolar_aba(parse_af(text));
        }
        auto g = parse_baf(text);
        if (c.support.empty())
            throw Error(ErrorCode::MissingInterpretation, "--format baf requires --support {deductive|necessary}");
        g.interpretation = *parse_support(c.support);
        return map_to_bipolar_aba(g);
    }

    std::string yes_no(bool b)
    {
        return b ? "YES\n" : "NO\n";
    }

    std::string solve_with_oracle(const Framework & f, Semantics sem, const std::string & problem, const std::optional<AssumptionSet> & set, std::optional<SentenceId> query)
    {
        auto ext = oracle_enumerate(f, sem);
        if (problem == "EE")
            return write_extensions(f, ext);
        if (problem == "EX")
            return yes_no(!ext.empty());
        if (problem == "NE")
            return yes_no(std::any_of(ext.begin(), ext.end(), [](const auto & e) { return !e.empty(); }));
        if (problem == "VER")
            return yes_no(ext.contains(*set));
        auto derives = [&](const AssumptionSet & e) { return oracle_derived(f, e).test(*query); };
        if (problem == "CA")
            return yes_no(std::any_of(ext.begin(), ext.end(), derives));
        return yes_no(std::all_of(ext.begin(), ext.end(), derives));
    }

    std::string solve(const SolveConfig & c, std::istream & in)
    {
        auto sem = *parse_semantics(c.semantics);
        auto variant = *parse_variant(c.algorithm);
        if (c.problem == "VER" && !c.set_given)
            throw UsageError("--problem VER requires --set");
        if ((c.problem == "CA" || c.problem == "SA") && c.query.empty())
            throw UsageError("--problem " + c.problem + " requires --query");
        if (c.problem == "EE" && variant == Variant::Basic && sem != Semantics::Preferred)
            throw Error(ErrorCode::InvalidVariant, "--algorithm basic is only available for --semantics prf");

        auto f = load(c, in);

        std::optional<AssumptionSet> set;
        if (c.set_given) {
            std::vector<std::string> names;
            for (auto & n : split(c.set, ','))
                if (!n.empty())
                    names.push_back(n);
            set = f.make_set(names);
        }
        std::optional<SentenceId> query;
        if (!c.query.empty()) {
            query = f.find(c.query);
            if (!query)
                throw Error(ErrorCode::UnknownSentence, "unknown sentence '" + c.query + "'");
        }

        if (c.oracle)
            return solve_with_oracle(f, sem, c.problem, set, query);

        SearchOptions options;
        options.deadline = deadline_after(c.timeout);
        if (c.problem == "EE")
            return write_extensions(f, enumerate(f, sem, variant, options));
        if (c.problem == "EX")
            return yes_no(exists(f, sem, options));
        if (c.problem == "NE")
            return yes_no(exists_nonempty(f, sem, options));
        if (c.problem == "VER")
            return yes_no(verify(f, sem, *set));
        if (c.problem == "CA")
            return yes_no(credulous(f, sem, *query, options));
        return yes_no(sceptical(f, sem, *query, options));
    }

    std::string generate_cmd(const GenerateConfig & c)
    {
        auto bounds = split(c.rules_per_head, ':');
        if (bounds.size() != 2)
            throw UsageError("--rules-per-head expects MIN:MAX");
        GeneratorParams p;
        p.n_sentences = c.sentences;
        p.assumption_ratio = c.ratio;
        p.n_rule_heads = c.rule_heads;
        p.rules_min = to_size(bounds[0], "--rules-per-head minimum");
        p.rules_max = to_size(bounds[1], "--rules-per-head maximum");
        p.seed = c.seed;
        return print_aba(generate(p));
    }

    void bench_cmd(const BenchCliConfig & c, std::ostream & out)
    {
        auto parts = split(c.sizes, ':');
        if (parts.size() != 3)
            throw UsageError("--sizes expects START:END:STEP");
        auto start = to_size(parts[0], "size"), end = to_size(parts[1], "size"), step = to_size(parts[2], "step");
        if (step == 0 || start == 0 || start > end)
            throw UsageError("--sizes needs 0 < START <= END and STEP > 0");

        BenchConfig config;
        for (auto n = start; n <= end; n += step)
            config.sizes.push_back(n);
        if (c.semantics != "all")
            config.semantics = {*parse_semantics(c.semantics)};
        if (c.timeout > 0.0)
            config.timeout = std::chrono::duration<double>(c.timeout);
        config.seed = c.seed;

        std::ofstream file;
        std::ostream * sink = &out;
        if (c.csv != "-") {
            file.open(c.csv, std::ios::binary);
            if (!file)
                throw UsageError("cannot write '" + c.csv + "'");
            sink = &file;
        }
        *sink << csv_header() << '\n' << std::flush;
        (void)run_benchmark(config, [&](const BenchRecord & r) { *sink << csv_row(r) << '\n' << std::flush; });
    }
}

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Extension enumeration and reasoning for bipolar assumption-based argumentation", "bipolar-aba"};
    app.require_subcommand(1);

    SolveConfig solve_cfg;
    auto * solve_cmd = app.add_subcommand("solve", "Answer a reasoning problem for an input framework");
    solve_cmd->add_option("--input", solve_cfg.input, "Input file, - for stdin")->required();
    solve_cmd->add_option("--format", solve_cfg.format, "Input format")->required()->check(CLI::IsMember({"aba", "af", "baf"}));
    solve_cmd->add_option("--support", solve_cfg.support, "Support interpretation for BAF input")->check(CLI::IsMember({"deductive", "necessary"}));
    solve_cmd->add_option("--semantics", solve_cfg.semantics, "Semantics")->required()->check(CLI::IsMember({"adm", "prf", "sstb"}));
    solve_cmd->add_option("--problem", solve_cfg.problem, "Reasoning problem")->required()->check(CLI::IsMember({"EE", "EX", "NE", "VER", "CA", "SA"}));
    solve_cmd->add_option("--query", solve_cfg.query, "Sentence for CA/SA");
    auto * set_opt = solve_cmd->add_option("--set", solve_cfg.set, "Comma-separated assumptions for VER");
    solve_cmd->add_option("--algorithm", solve_cfg.algorithm, "Preferred enumeration algorithm")->check(CLI::IsMember({"basic", "improved"}));
    solve_cmd->add_option("--timeout", solve_cfg.timeout, "Search time limit in seconds")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--output", solve_cfg.output, "Output file (default stdout)");
    solve_cmd->add_flag("--oracle", solve_cfg.oracle, "Use the brute-force reference solver (small inputs only)");

    GenerateConfig gen_cfg;
    auto * gen_cmd = app.add_subcommand("generate", "Generate a random bipolar ABA framework");
    gen_cmd->add_option("--sentences", gen_cfg.sentences, "Number of sentences")->required();
    gen_cmd->add_option("--ratio", gen_cfg.ratio, "Fraction of sentences that are assumptions")->required();
    gen_cmd->add_option("--rule-heads", gen_cfg.rule_heads, "Number of distinct rule heads")->required();
    gen_cmd->add_option("--rules-per-head", gen_cfg.rules_per_head, "MIN:MAX rules per head")->required();
    gen_cmd->add_option("--seed", gen_cfg.seed, "Random seed")->required();
    gen_cmd->add_option("--output", gen_cfg.output, "Output file (default stdout)");

    BenchCliConfig bench_cfg;
    auto * bench = app.add_subcommand("bench", "Time enumeration on generated frameworks and write CSV");
    bench->add_option("--sizes", bench_cfg.sizes, "START:END:STEP sentence counts")->required();
    bench->add_option("--semantics", bench_cfg.semantics, "Semantics to time")->check(CLI::IsMember({"adm", "prf", "sstb", "all"}));
    bench->add_option("--csv", bench_cfg.csv, "CSV output file, - for stdout")->required();
    bench->add_option("--timeout", bench_cfg.timeout, "Per-instance time limit in seconds")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", bench_cfg.seed, "Generator seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }

    try {
        if (solve_cmd->parsed()) {
            solve_cfg.set_given = set_opt->count() > 0;
            write_out(solve_cfg.output, solve(solve_cfg, in), out);
        }
        else if (gen_cmd->parsed())
            write_out(gen_cfg.output, generate_cmd(gen_cfg), out);
        else
            bench_cmd(bench_cfg, out);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::Timeout:
            out << "TIMEOUT\n";
            return exit_timeout;
        case ErrorCode::MissingInterpretation:
        case ErrorCode::InvalidVariant: return exit_usage_error;
        default: return exit_input_error;
        }
    }
    return exit_ok;
}

} // namespace baba::cli
