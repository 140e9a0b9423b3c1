#pragma once

#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/framework.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace baba {

enum class SupportInterpretation { None, Deductive, Necessary };

[[nodiscard]] std::optional<SupportInterpretation> parse_support(std::string_view text) noexcept;

/// An abstract (supports empty) or bipolar argumentation framework.
struct GraphFramework {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;  ///< (attacker, attacked)
    std::vector<std::pair<std::size_t, std::size_t>> supports; ///< (supporter, supported)
    SupportInterpretation interpretation = SupportInterpretation::None;

    [[nodiscard]] bool is_af() const noexcept { return supports.empty(); }
    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
};

// Text formats: statements `name(arg, ...)` terminated by `.`, names matching
// [A-Za-z0-9_]+, whitespace ignored, `#` comments to end of line.
//   ABA: asm(N)  ctr(N,N)  rule(HEAD,BODY)
//   AF:  arg(N)  att(N,N)
//   BAF: AF plus sup(N,N)

/// Throws ParseError for syntax errors and for framework validation errors (with the
/// line of the offending statement).
[[nodiscard]] Framework parse_aba(std::string_view text, const FrameworkOptions & options = {});
[[nodiscard]] GraphFramework parse_af(std::string_view text);
[[nodiscard]] GraphFramework parse_baf(std::string_view text);

/// Inverse of parse_aba.
[[nodiscard]] std::string print_aba(const Framework & f);

/// Every argument becomes an assumption with a fresh contrary `c_<name>`. Attack (a,b)
/// gives rule c_b <- a; deductive support (a,b) gives b <- a; necessary support (a,b)
/// gives a <- b. Throws MissingInterpretation when supports are present without an
/// interpretation.
[[nodiscard]] Framework map_to_bipolar_aba(const GraphFramework & g, const FrameworkOptions & options = {});

enum class OutputFormat { Lines, Json };

/// Canonical order. Lines: one `{a,b}` per extension, `{}` for the empty set and
/// `NO EXTENSIONS` when there is none. Json: an array of sorted name arrays.
[[nodiscard]] std::string write_extensions(const Framework & f, const ExtensionCollection & e, OutputFormat format = OutputFormat::Lines);

} // namespace baba
