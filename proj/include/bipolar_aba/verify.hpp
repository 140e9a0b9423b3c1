#pragma once

#include <bipolar_aba/framework.hpp>

namespace baba {

/// True iff `s` attacks Cl({b}) for every assumption b with {b} attacking {alpha}.
/// Every closed attacker of alpha contains such a closure, so this decides defence
/// against all closed attackers.
[[nodiscard]] bool defends(const Framework & f, const AssumptionSet & s, AssumptionId alpha);

/// Closed, conflict-free and defends each member.
[[nodiscard]] bool verify_admissible(const Framework & f, const AssumptionSet & s);

/// Closed, conflict-free and attacks Cl({alpha}) for every excluded alpha.
[[nodiscard]] bool verify_set_stable(const Framework & f, const AssumptionSet & s);

/// Admissible and not strictly contained in another admissible set. Runs the preferred
/// search from a labelling with every member of `s` forced IN.
[[nodiscard]] bool verify_preferred(const Framework & f, const AssumptionSet & s);

} // namespace baba
