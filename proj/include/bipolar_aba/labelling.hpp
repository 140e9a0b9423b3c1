#pragma once

#include <bipolar_aba/bitset.hpp>
#include <bipolar_aba/framework.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace baba {

enum class Label : std::uint8_t { In, Out, Undec, Blank, MustOut };

inline constexpr std::size_t label_count = 5;

[[nodiscard]] std::string_view to_string(Label l) noexcept;

/// Total map from assumptions to labels, with one bit set per label for fast queries.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(std::size_t num_assumptions, Label fill = Label::Blank);

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] Label operator[](AssumptionId a) const { return labels_[a]; }
    void set(AssumptionId a, Label l);

    [[nodiscard]] const Bitset & with(Label l) const noexcept { return sets_[index(l)]; }
    [[nodiscard]] std::size_t count(Label l) const noexcept { return counts_[index(l)]; }

    [[nodiscard]] AssumptionSet in_set() const { return AssumptionSet(with(Label::In)); }

    friend bool operator==(const Labelling & a, const Labelling & b) { return a.labels_ == b.labels_; }

private:
    static constexpr std::size_t index(Label l) noexcept { return static_cast<std::size_t>(l); }

    std::vector<Label> labels_;
    std::array<Bitset, label_count> sets_;
    std::array<std::size_t, label_count> counts_{};
};

enum class Heuristic {
    /// h(x) = number of rules with x as head or body.
    RuleCount,
    /// Additionally counts rules whose head is the contrary of x.
    RuleCountWithContraries,
};

/// Per-framework tables answering the closure and attack queries made by the
/// labelling transitions in O(|A|/64).
class SearchContext {
public:
    explicit SearchContext(const Framework & f, Heuristic heuristic = Heuristic::RuleCount);

    [[nodiscard]] const Framework & framework() const noexcept { return *framework_; }
    [[nodiscard]] std::size_t size() const noexcept { return closure_.size(); }

    /// Cl({a}).
    [[nodiscard]] const Bitset & closure_of(AssumptionId a) const { return closure_[a]; }
    /// {b : a in Cl({b})}.
    [[nodiscard]] const Bitset & closures_containing(AssumptionId a) const { return containing_[a]; }
    /// {g : {a} attacks Cl({g})}.
    [[nodiscard]] const Bitset & closures_attacked_by(AssumptionId a) const { return attacked_by_[a]; }
    /// {d : {d} attacks Cl({a})}.
    [[nodiscard]] const Bitset & closure_attackers(AssumptionId a) const { return attackers_[a]; }
    [[nodiscard]] bool self_attacking(AssumptionId a) const { return attacked_by_[a].test(a); }
    [[nodiscard]] std::size_t score(AssumptionId a) const { return score_[a]; }

private:
    const Framework * framework_;
    std::vector<Bitset> closure_;
    std::vector<Bitset> containing_;
    std::vector<Bitset> attacked_by_;
    std::vector<Bitset> attackers_;
    std::vector<std::size_t> score_;
};

[[nodiscard]] Labelling initial_labelling(const SearchContext & ctx);
[[nodiscard]] Labelling initial_set_stable_labelling(const SearchContext & ctx);

/// Whether `a` may be selected for a left-transition: it is BLANK and every member of
/// its closure is IN or BLANK.
[[nodiscard]] bool can_select_left(const SearchContext & ctx, const Labelling & lab, AssumptionId a);

/// Labels Cl({a}) IN, every g with {a} attacking Cl({g}) OUT, then every d not OUT with
/// {d} attacking Cl({a}) MUST_OUT. Throws IllegalSelection if `a` cannot be selected.
[[nodiscard]] Labelling left_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a);
void apply_left_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a);

/// Labels every BLANK b with a in Cl({b}) UNDEC.
[[nodiscard]] Labelling right_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a);
void apply_right_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a);

/// Labels every b with a in Cl({b}) and label other than OUT as MUST_OUT.
[[nodiscard]] Labelling set_stable_right_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a);
void apply_set_stable_right_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a);

[[nodiscard]] bool is_terminal(const Labelling & lab) noexcept;
/// Some MUST_OUT assumption can no longer be counter-attacked: every attacker of its
/// closure is OUT or UNDEC.
[[nodiscard]] bool is_hopeless(const SearchContext & ctx, const Labelling & lab);
[[nodiscard]] bool is_admissible_labelling(const Labelling & lab) noexcept;
[[nodiscard]] bool is_set_stable_labelling(const Labelling & lab) noexcept;

/// Lowest-id BLANK assumption all of whose closure attackers are OUT or MUST_OUT.
[[nodiscard]] std::optional<AssumptionId> find_must_in(const SearchContext & ctx, const Labelling & lab);
/// Applies left-transitions to must_in assumptions until none remains.
[[nodiscard]] Labelling propagate(const SearchContext & ctx, const Labelling & lab);
void apply_propagate(const SearchContext & ctx, Labelling & lab);

/// BLANK assumption of maximal score, lowest id on ties. Throws NoBlank.
[[nodiscard]] AssumptionId influential(const SearchContext & ctx, const Labelling & lab);

} // namespace baba
