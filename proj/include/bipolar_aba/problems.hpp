#pragma once

#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/framework.hpp>

#include <string_view>

namespace baba {

// Facades for the standard reasoning problems. Only `heuristic` and `deadline` of the
// search options are honoured; each facade installs its own visitor.

/// EX: admissible and preferred extensions always exist (the empty set is admissible).
[[nodiscard]] bool exists(const Framework & f, Semantics s, const SearchOptions & options = {});

/// NE: is there a non-empty extension? Preferred is answered through admissible.
[[nodiscard]] bool exists_nonempty(const Framework & f, Semantics s, const SearchOptions & options = {});

/// VER.
[[nodiscard]] bool verify(const Framework & f, Semantics s, const AssumptionSet & candidate);

/// CA: some extension derives `sentence`. Throws UnknownSentence.
[[nodiscard]] bool credulous(const Framework & f, Semantics s, SentenceId sentence, const SearchOptions & options = {});
[[nodiscard]] bool credulous(const Framework & f, Semantics s, std::string_view sentence, const SearchOptions & options = {});

/// SA: every extension derives `sentence`; vacuously true when there are no
/// extensions, which can only happen under set-stable semantics. Throws UnknownSentence.
[[nodiscard]] bool sceptical(const Framework & f, Semantics s, SentenceId sentence, const SearchOptions & options = {});
[[nodiscard]] bool sceptical(const Framework & f, Semantics s, std::string_view sentence, const SearchOptions & options = {});

/// DER. Throws UnknownSentence.
[[nodiscard]] bool derivable_query(const Framework & f, const AssumptionSet & s, SentenceId sentence);
[[nodiscard]] bool derivable_query(const Framework & f, const AssumptionSet & s, std::string_view sentence);

} // namespace baba
