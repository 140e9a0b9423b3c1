#pragma once

#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/frontends.hpp>
#include <bipolar_aba/framework.hpp>

#include <string>
#include <vector>

namespace baba {

// Brute-force reference semantics. These routines use only the declarations of a
// framework (assumptions, contraries, rule list) and never its reachability tables:
// derivations are forward-chaining fixpoints over the rule list.

inline constexpr std::size_t oracle_max_assumptions = 20;
inline constexpr std::size_t oracle_literal_max_assumptions = 8;
inline constexpr std::size_t af_oracle_max_arguments = 16;

/// Sentences derivable from `s` by applying rules until nothing changes.
[[nodiscard]] Bitset oracle_derived(const Framework & f, const AssumptionSet & s);
[[nodiscard]] AssumptionSet oracle_closure(const Framework & f, const AssumptionSet & s);
[[nodiscard]] bool oracle_attacks(const Framework & f, const AssumptionSet & a, const AssumptionSet & b);

/// Searches for a deduction chain phi <- ... <- alpha with alpha in `s`, trying every
/// simple path backwards through the rules.
[[nodiscard]] bool oracle_deduction_exists(const Framework & f, const AssumptionSet & s, SentenceId phi);

/// Admissibility with defence checked against Cl({b}) for every singleton attacker b.
[[nodiscard]] bool oracle_admissible_singleton(const Framework & f, const AssumptionSet & s);
/// Admissibility with defence checked against every closed attacking set. Exponential;
/// throws TooLarge above oracle_literal_max_assumptions.
[[nodiscard]] bool oracle_admissible_literal(const Framework & f, const AssumptionSet & s);

/// Enumerates all subsets. For admissible semantics on frameworks within the literal
/// bound both admissibility checks run and any disagreement throws std::logic_error.
/// Throws TooLarge above oracle_max_assumptions.
[[nodiscard]] ExtensionCollection oracle_enumerate(const Framework & f, Semantics semantics);

enum class AfSemantics { Admissible, Preferred, Stable };

/// Extensions of an abstract argumentation framework as sorted lists of argument
/// names, in canonical order. Throws NotAnAF or TooLarge.
[[nodiscard]] std::vector<std::vector<std::string>> af_oracle(const GraphFramework & g, AfSemantics semantics);

} // namespace baba
