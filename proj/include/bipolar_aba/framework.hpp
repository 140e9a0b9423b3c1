#pragma once

#include <bipolar_aba/bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace baba {

using SentenceId = std::uint32_t;
using AssumptionId = std::uint32_t;

/// Rule `head <- body`. In bipolar ABA the body is a single assumption.
struct Rule {
    SentenceId head;
    SentenceId body;

    friend bool operator==(const Rule &, const Rule &) = default;
};

/// A subset of the assumptions of one framework, indexed by assumption id.
class AssumptionSet {
public:
    AssumptionSet() = default;
    explicit AssumptionSet(std::size_t universe) : bits_(universe) {}
    AssumptionSet(std::size_t universe, std::initializer_list<AssumptionId> members);
    explicit AssumptionSet(Bitset bits) : bits_(std::move(bits)) {}

    [[nodiscard]] std::size_t universe() const noexcept { return bits_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return bits_.count(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.none(); }

    void insert(AssumptionId a) noexcept { bits_.set(a); }
    void erase(AssumptionId a) noexcept { bits_.reset(a); }
    [[nodiscard]] bool contains(AssumptionId a) const noexcept { return bits_.test(a); }

    [[nodiscard]] bool is_subset_of(const AssumptionSet & other) const noexcept { return bits_.is_subset_of(other.bits_); }
    [[nodiscard]] bool is_strict_subset_of(const AssumptionSet & other) const noexcept
    {
        return bits_.is_subset_of(other.bits_) && bits_ != other.bits_;
    }
    [[nodiscard]] bool intersects(const AssumptionSet & other) const noexcept { return bits_.intersects(other.bits_); }

    AssumptionSet & operator|=(const AssumptionSet & other) noexcept
    {
        bits_ |= other.bits_;
        return *this;
    }

    [[nodiscard]] std::vector<AssumptionId> members() const;
    [[nodiscard]] const Bitset & bits() const noexcept { return bits_; }

    template <typename F_>
    void for_each(F_ && f) const
    {
        bits_.for_each([&](std::size_t i) { f(static_cast<AssumptionId>(i)); });
    }

    friend bool operator==(const AssumptionSet &, const AssumptionSet &) = default;

private:
    Bitset bits_;
};

struct FrameworkOptions {
    /// Per-assumption reachability is memoised when the language has at most this many
    /// sentences; larger frameworks compute reachability on demand.
    std::size_t reach_cache_limit = 4096;
};

/// Text-level declarations of a bipolar ABA framework.
struct FrameworkDecl {
    std::vector<std::string> language;
    std::vector<std::string> assumptions;
    std::vector<std::pair<std::string, std::string>> contraries; ///< (assumption, contrary)
    std::vector<std::pair<std::string, std::string>> rules;      ///< (head, body)
};

/// Validated, immutable bipolar ABA framework.
///
/// Sentence ids are dense in declaration order of the language; assumption ids are
/// dense in declaration order of the assumptions. Edges of the reachability graph run
/// from a rule's body to its head, so only assumptions have successors.
class Framework {
public:
    [[nodiscard]] std::size_t num_sentences() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t num_assumptions() const noexcept { return assumption_sentence_.size(); }
    [[nodiscard]] std::size_t num_rules() const noexcept { return rules_.size(); }

    [[nodiscard]] const std::string & name(SentenceId s) const { return names_.at(s); }
    [[nodiscard]] const std::string & assumption_name(AssumptionId a) const { return names_.at(assumption_sentence_.at(a)); }
    [[nodiscard]] std::optional<SentenceId> find(std::string_view name) const;

    [[nodiscard]] SentenceId sentence_of(AssumptionId a) const { return assumption_sentence_.at(a); }
    [[nodiscard]] std::optional<AssumptionId> assumption_of(SentenceId s) const;
    [[nodiscard]] bool is_assumption(SentenceId s) const { return sentence_assumption_.at(s) != no_assumption; }
    [[nodiscard]] SentenceId contrary(AssumptionId a) const { return contrary_.at(a); }

    [[nodiscard]] std::span<const Rule> rules() const noexcept { return rules_; }
    [[nodiscard]] std::span<const SentenceId> successors(SentenceId s) const { return succ_.at(s); }

    /// Sentences reachable from `a` (including `a` itself) over body -> head edges.
    [[nodiscard]] Bitset reachable(AssumptionId a) const;
    /// Sentences reachable from any member of `s`.
    [[nodiscard]] Bitset reachable(const AssumptionSet & s) const;
    [[nodiscard]] bool reaches(AssumptionId a, SentenceId s) const { return reach_.empty() ? reachable(a).test(s) : reach_.at(a).test(s); }
    [[nodiscard]] bool reach_cached() const noexcept { return !reach_.empty() || num_assumptions() == 0; }

    /// Cl({a}).
    [[nodiscard]] AssumptionSet singleton_closure(AssumptionId a) const;
    /// {b : {a} attacks {b}}, i.e. the assumptions whose contrary is reachable from a.
    [[nodiscard]] AssumptionSet singleton_attacks(AssumptionId a) const;

    [[nodiscard]] AssumptionSet empty_set() const { return AssumptionSet(num_assumptions()); }
    [[nodiscard]] AssumptionSet all_assumptions() const;
    /// Builds a set from assumption names; throws UnknownSentence for names that are not
    /// assumptions.
    [[nodiscard]] AssumptionSet make_set(std::span<const std::string> names) const;
    [[nodiscard]] AssumptionSet make_set(std::initializer_list<std::string_view> names) const;
    /// Member names sorted lexicographically.
    [[nodiscard]] std::vector<std::string> names_of(const AssumptionSet & s) const;

private:
    friend Framework build_framework(const FrameworkDecl &, const FrameworkOptions &);

    static constexpr AssumptionId no_assumption = static_cast<AssumptionId>(-1);

    Bitset bfs(const AssumptionSet & sources) const;
    AssumptionSet restrict_to_assumptions(const Bitset & sentences) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, SentenceId> ids_;
    std::vector<SentenceId> assumption_sentence_;
    std::vector<AssumptionId> sentence_assumption_;
    std::vector<SentenceId> contrary_;
    std::vector<Rule> rules_;
    std::vector<std::vector<SentenceId>> succ_;
    // Filled only when |L| <= reach_cache_limit.
    std::vector<Bitset> reach_;
    std::vector<AssumptionSet> closure_;
    std::vector<AssumptionSet> attacks_;
};

/// Validates the declarations and builds the framework. Throws FrameworkError with
/// EmptyAssumptions, UnknownName, DuplicateContrary, ContraryOfNonAssumption,
/// MissingContrary or NonBipolarRule. Duplicate rules are dropped.
[[nodiscard]] Framework build_framework(const FrameworkDecl & decl, const FrameworkOptions & options = {});

/// Same assumptions, contraries and rules by name; sentence ids and declaration order
/// are ignored, as are sentences no declaration mentions.
[[nodiscard]] bool structurally_equal(const Framework & a, const Framework & b);

[[nodiscard]] bool derivable(const Framework & f, const AssumptionSet & s, SentenceId phi);
[[nodiscard]] AssumptionSet closure(const Framework & f, const AssumptionSet & s);
/// True iff `a` derives the contrary of some member of `b`.
[[nodiscard]] bool attacks(const Framework & f, const AssumptionSet & a, const AssumptionSet & b);
/// {alpha : {alpha} attacks b}; the sources of all minimal attacks on b.
[[nodiscard]] AssumptionSet singleton_attackers(const Framework & f, const AssumptionSet & b);
[[nodiscard]] bool is_conflict_free(const Framework & f, const AssumptionSet & s);
[[nodiscard]] bool is_closed(const Framework & f, const AssumptionSet & s);

} // namespace baba
