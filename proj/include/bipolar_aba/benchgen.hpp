#pragma once

#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/framework.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace baba {

/// Random bipolar ABA generator parameters.
struct GeneratorParams {
    std::size_t n_sentences = 16;
    /// Fraction of sentences that are assumptions, in (0, 1].
    double assumption_ratio = 0.37;
    /// Number of distinct sentences used as rule heads.
    std::size_t n_rule_heads = 8;
    /// Rules per head, drawn uniformly from [rules_min, rules_max].
    std::size_t rules_min = 2;
    std::size_t rules_max = 2;
    std::uint64_t seed = 1;
};

/// (N, 37%, N/2, [2, max(2, N/8)]).
[[nodiscard]] GeneratorParams scaling_schedule(std::size_t n_sentences, std::uint64_t seed = 1);

/// ceil(ratio * n_sentences).
[[nodiscard]] std::size_t assumption_count(const GeneratorParams & p);

/// Deterministic in `p.seed`. The first assumption_count(p) sentences (a0, a1, ...) are
/// assumptions, the rest (c0, c1, ...) are not. Contraries are drawn from the
/// non-assumptions, distinct while there are enough of them. Heads are sampled without
/// replacement from the assumptions and the used contraries; each head gets a uniform
/// number of rules with distinct uniformly drawn assumption bodies. Throws
/// InfeasibleParams.
[[nodiscard]] Framework generate(const GeneratorParams & p, const FrameworkOptions & options = {});

enum class BenchStatus { Ok, Timeout };

struct BenchRecord {
    std::size_t n_sentences = 0;
    std::size_t n_assumptions = 0;
    std::size_t n_rules = 0;
    Semantics semantics = Semantics::Preferred;
    Variant variant = Variant::Improved;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    BenchStatus status = BenchStatus::Ok;
    std::size_t n_extensions = 0;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::vector<Semantics> semantics{Semantics::Admissible, Semantics::Preferred, Semantics::SetStable};
    /// Applies to preferred semantics; the other semantics always use the improved search.
    Variant variant = Variant::Improved;
    std::optional<std::chrono::duration<double>> timeout;
    std::uint64_t seed = 1;
    /// Include generation and table construction in elapsed_ms.
    bool time_whole_pipeline = false;
};

using BenchSink = std::function<void(const BenchRecord &)>;

/// Generates one framework per size with scaling_schedule and times enumeration under
/// each semantics. Rows are handed to `sink` as they complete.
std::vector<BenchRecord> run_benchmark(const BenchConfig & config, const BenchSink & sink = {});

/// `n_sentences,n_assumptions,n_rules,semantics,variant,seed,elapsed_ms,status`
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const BenchRecord & r);

} // namespace baba
