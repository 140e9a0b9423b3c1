#pragma once

#include <bipolar_aba/framework.hpp>
#include <bipolar_aba/labelling.hpp>

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace baba {

enum class Semantics { Admissible, Preferred, SetStable };
enum class Variant { Basic, Improved };

/// "adm", "prf" or "sstb".
[[nodiscard]] std::string_view short_name(Semantics s) noexcept;
[[nodiscard]] std::string_view to_string(Semantics s) noexcept;
[[nodiscard]] std::string_view to_string(Variant v) noexcept;
[[nodiscard]] std::optional<Semantics> parse_semantics(std::string_view text) noexcept;
[[nodiscard]] std::optional<Variant> parse_variant(std::string_view text) noexcept;

/// Duplicate-free, insertion-ordered collection of extensions.
class ExtensionCollection {
public:
    /// Returns false when `s` is already present.
    bool insert(AssumptionSet s);
    [[nodiscard]] bool contains(const AssumptionSet & s) const;

    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
    [[nodiscard]] const AssumptionSet & operator[](std::size_t i) const { return sets_[i]; }
    [[nodiscard]] auto begin() const noexcept { return sets_.begin(); }
    [[nodiscard]] auto end() const noexcept { return sets_.end(); }

    /// Sorts by size, then by the lexicographic list of member names.
    void canonicalize(const Framework & f);
    [[nodiscard]] bool canonical() const noexcept { return canonical_; }

    /// Equality as a set of sets, ignoring order.
    [[nodiscard]] bool same_sets(const ExtensionCollection & other) const;

private:
    std::vector<AssumptionSet> sets_;
    std::unordered_multimap<std::size_t, std::size_t> index_;
    bool canonical_ = false;
};

/// Called once per extension added to the result; returning false stops the search.
using ExtensionVisitor = std::function<bool(const AssumptionSet &)>;

struct SearchOptions {
    Heuristic heuristic = Heuristic::RuleCount;
    ExtensionVisitor visitor;
    /// Throws Error(Timeout) once passed.
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Preferred search: fail with std::logic_error if an extension found later strictly
    /// contains an earlier one.
    bool check_maximality = true;
};

[[nodiscard]] ExtensionCollection enumerate_preferred_basic(const Framework & f, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection enumerate_preferred(const Framework & f, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection enumerate_admissible(const Framework & f, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection enumerate_set_stable(const Framework & f, const SearchOptions & options = {});

/// Dispatches on semantics and variant and canonicalizes the result. The basic variant
/// exists only for preferred semantics; other combinations throw InvalidVariant.
[[nodiscard]] ExtensionCollection enumerate(const Framework & f, Semantics semantics, Variant variant = Variant::Improved,
    const SearchOptions & options = {});

/// Searches below an arbitrary start labelling. `ctx` must outlive the call.
[[nodiscard]] ExtensionCollection search_preferred_basic(const SearchContext & ctx, Labelling start, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection search_preferred(const SearchContext & ctx, Labelling start, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection search_admissible(const SearchContext & ctx, Labelling start, const SearchOptions & options = {});
[[nodiscard]] ExtensionCollection search_set_stable(const SearchContext & ctx, Labelling start, const SearchOptions & options = {});

} // namespace baba
