#include <bipolar_aba/benchgen.hpp>
#include <bipolar_aba/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

namespace baba {

namespace {
    // std::uniform_int_distribution is implementation-defined; this keeps generated
    // frameworks identical across standard libraries.
    std::uint64_t below(std::mt19937_64 & rng, std::uint64_t n)
    {
        const std::uint64_t threshold = (0 - n) % n;
        while (true) {
            auto r = rng();
            if (r >= threshold)
                return r % n;
        }
    }

    [[noreturn]] void infeasible(const std::string & why)
    {
        throw Error(ErrorCode::InfeasibleParams, why);
    }
}

GeneratorParams scaling_schedule(std::size_t n_sentences, std::uint64_t seed)
{
    GeneratorParams p;
    p.n_sentences = n_sentences;
    p.assumption_ratio = 0.37;
    p.n_rule_heads = n_sentences / 2;
    p.rules_min = 2;
    p.rules_max = std::max<std::size_t>(2, n_sentences / 8);
    p.seed = seed;
    return p;
}

std::size_t assumption_count(const GeneratorParams & p)
{
    // The epsilon absorbs representation error, e.g. 0.37 * 100 = 37.000000000000007.
    return static_cast<std::size_t>(std::ceil(p.assumption_ratio * static_cast<double>(p.n_sentences) - 1e-9));
}

Framework generate(const GeneratorParams & p, const FrameworkOptions & options)
{
    if (p.n_sentences == 0)
        infeasible("n_sentences must be positive");
    if (!(p.assumption_ratio > 0.0 && p.assumption_ratio <= 1.0))
        infeasible("assumption_ratio must lie in (0, 1]");
    if (p.rules_min < 1 || p.rules_max < p.rules_min)
        infeasible("rules per head must satisfy 1 <= min <= max");
    if (p.n_rule_heads == 0 || p.n_rule_heads > p.n_sentences)
        infeasible("n_rule_heads must lie in [1, n_sentences]");

    const auto n_asm = assumption_count(p);
    const auto n_other = p.n_sentences - n_asm;
    if (n_asm == 0)
        infeasible("no assumptions");

    std::mt19937_64 rng(p.seed);

    FrameworkDecl decl;
    decl.language.reserve(p.n_sentences);
    for (std::size_t i = 0; i < n_asm; ++i)
        decl.language.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n_other; ++i)
        decl.language.push_back("c" + std::to_string(i));
    decl.assumptions.assign(decl.language.begin(), decl.language.begin() + static_cast<std::ptrdiff_t>(n_asm));

    // Sentence ids: assumptions 0..n_asm-1, the rest after them.
    std::vector<std::size_t> contrary(n_asm);
    if (n_other == 0) {
        for (auto & c : contrary)
            c = below(rng, n_asm);
    }
    else {
        std::vector<std::size_t> pool(n_other);
        for (std::size_t i = 0; i < n_other; ++i)
            pool[i] = n_asm + i;
        for (std::size_t i = n_other; i > 1; --i)
            std::swap(pool[i - 1], pool[below(rng, i)]);
        for (std::size_t a = 0; a < n_asm; ++a)
            contrary[a] = a < n_other ? pool[a] : pool[below(rng, n_other)];
    }
    for (std::size_t a = 0; a < n_asm; ++a)
        decl.contraries.emplace_back(decl.language[a], decl.language[contrary[a]]);

    std::set<std::size_t> candidate_set(contrary.begin(), contrary.end());
    for (std::size_t a = 0; a < n_asm; ++a)
        candidate_set.insert(a);
    std::vector<std::size_t> candidates(candidate_set.begin(), candidate_set.end());
    if (candidates.size() < p.n_rule_heads)
        infeasible(std::to_string(p.n_rule_heads) + " rule heads requested but only " + std::to_string(candidates.size()) + " candidate sentences exist");
    for (std::size_t i = 0; i < p.n_rule_heads; ++i)
        std::swap(candidates[i], candidates[i + below(rng, candidates.size() - i)]);

    std::vector<bool> used(n_asm);
    for (std::size_t h = 0; h < p.n_rule_heads; ++h) {
        const auto head = candidates[h];
        const auto k = p.rules_min + below(rng, p.rules_max - p.rules_min + 1);
        if (k > n_asm)
            infeasible("a head needs " + std::to_string(k) + " distinct bodies but there are only " + std::to_string(n_asm) + " assumptions");
        std::fill(used.begin(), used.end(), false);
        std::size_t placed = 0;
        for (std::size_t attempts = 0; placed < k; ++attempts) {
            if (attempts >= 10 * k)
                infeasible("could not place distinct rule bodies after " + std::to_string(attempts) + " attempts");
            auto body = below(rng, n_asm);
            if (used[body])
                continue;
            used[body] = true;
            decl.rules.emplace_back(decl.language[head], decl.language[body]);
            ++placed;
        }
    }

    return build_framework(decl, options);
}

std::vector<BenchRecord> run_benchmark(const BenchConfig & config, const BenchSink & sink)
{
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (auto size : config.sizes) {
        auto gen_start = clock::now();
        auto f = generate(scaling_schedule(size, config.seed));
        auto gen_ms = std::chrono::duration<double, std::milli>(clock::now() - gen_start).count();

        for (auto sem : config.semantics) {
            BenchRecord r;
            r.n_sentences = f.num_sentences();
            r.n_assumptions = f.num_assumptions();
            r.n_rules = f.num_rules();
            r.semantics = sem;
            r.variant = sem == Semantics::Preferred ? config.variant : Variant::Improved;
            r.seed = config.seed;

            SearchOptions options;
            auto start = clock::now();
            if (config.timeout)
                options.deadline = start + std::chrono::duration_cast<clock::duration>(*config.timeout);
            try {
                r.n_extensions = enumerate(f, sem, r.variant, options).size();
                r.status = BenchStatus::Ok;
            }
            catch (const Error & e) {
                if (e.code() != ErrorCode::Timeout)
                    throw;
                r.status = BenchStatus::Timeout;
            }
            r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
            if (config.time_whole_pipeline)
                r.elapsed_ms += gen_ms;

            if (sink)
                sink(r);
            records.push_back(r);
        }
    }
    return records;
}

std::string csv_header()
{
    return "n_sentences,n_assumptions,n_rules,semantics,variant,seed,elapsed_ms,status";
}

std::string csv_row(const BenchRecord & r)
{
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
    return std::to_string(r.n_sentences) + "," + std::to_string(r.n_assumptions) + "," + std::to_string(r.n_rules) + "," + std::string(short_name(r.semantics)) + "," + std::string(to_string(r.variant)) + "," + std::to_string(r.seed) + "," + ms + "," + (r.status == BenchStatus::Ok ? "ok" : "timeout");
}

} // namespace baba
