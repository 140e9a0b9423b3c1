#include <bipolar_aba/error.hpp>
#include <bipolar_aba/oracle.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace baba {

Bitset oracle_derived(const Framework & f, const AssumptionSet & s)
{
    Bitset derived(f.num_sentences());
    s.for_each([&](AssumptionId a) { derived.set(f.sentence_of(a)); });
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto & r : f.rules())
            if (derived.test(r.body) && !derived.test(r.head)) {
                derived.set(r.head);
                changed = true;
            }
    }
    return derived;
}

AssumptionSet oracle_closure(const Framework & f, const AssumptionSet & s)
{
    auto derived = oracle_derived(f, s);
    AssumptionSet out = f.empty_set();
    for (std::size_t a = 0; a < f.num_assumptions(); ++a)
        if (derived.test(f.sentence_of(static_cast<AssumptionId>(a))))
            out.insert(static_cast<AssumptionId>(a));
    return out;
}

bool oracle_attacks(const Framework & f, const AssumptionSet & a, const AssumptionSet & b)
{
    auto derived = oracle_derived(f, a);
    bool hit = false;
    b.for_each([&](AssumptionId x) { hit = hit || derived.test(f.contrary(x)); });
    return hit;
}

namespace {
    bool chain_to(const Framework & f, const AssumptionSet & s, SentenceId target, std::vector<bool> & on_path)
    {
        if (auto a = f.assumption_of(target); a && s.contains(*a))
            return true;
        on_path[target] = true;
        bool found = false;
        for (const auto & r : f.rules()) {
            if (r.head != target || on_path[r.body])
                continue;
            if (chain_to(f, s, r.body, on_path)) {
                found = true;
                break;
            }
        }
        on_path[target] = false;
        return found;
    }

    AssumptionSet subset_from_mask(std::size_t n, std::uint64_t mask)
    {
        AssumptionSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U)
                s.insert(static_cast<AssumptionId>(i));
        return s;
    }

    AssumptionSet singleton(const Framework & f, AssumptionId a)
    {
        AssumptionSet s = f.empty_set();
        s.insert(a);
        return s;
    }

    bool closed_and_conflict_free(const Framework & f, const AssumptionSet & s)
    {
        return oracle_closure(f, s) == s && !oracle_attacks(f, s, s);
    }

    bool is_set_stable(const Framework & f, const AssumptionSet & s)
    {
        if (!closed_and_conflict_free(f, s))
            return false;
        for (std::size_t a = 0; a < f.num_assumptions(); ++a) {
            auto id = static_cast<AssumptionId>(a);
            if (!s.contains(id) && !oracle_attacks(f, s, oracle_closure(f, singleton(f, id))))
                return false;
        }
        return true;
    }
}

bool oracle_deduction_exists(const Framework & f, const AssumptionSet & s, SentenceId phi)
{
    std::vector<bool> on_path(f.num_sentences(), false);
    return chain_to(f, s, phi, on_path);
}

bool oracle_admissible_singleton(const Framework & f, const AssumptionSet & s)
{
    if (!closed_and_conflict_free(f, s))
        return false;
    for (std::size_t b = 0; b < f.num_assumptions(); ++b) {
        auto attacker = singleton(f, static_cast<AssumptionId>(b));
        if (oracle_attacks(f, attacker, s) && !oracle_attacks(f, s, oracle_closure(f, attacker)))
            return false;
    }
    return true;
}

bool oracle_admissible_literal(const Framework & f, const AssumptionSet & s)
{
    const auto n = f.num_assumptions();
    if (n > oracle_literal_max_assumptions)
        throw Error(ErrorCode::TooLarge, "literal admissibility check is limited to " + std::to_string(oracle_literal_max_assumptions) + " assumptions");
    if (!closed_and_conflict_free(f, s))
        return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto b = subset_from_mask(n, mask);
        if (oracle_closure(f, b) != b)
            continue;
        if (oracle_attacks(f, b, s) && !oracle_attacks(f, s, b))
            return false;
    }
    return true;
}

ExtensionCollection oracle_enumerate(const Framework & f, Semantics semantics)
{
    const auto n = f.num_assumptions();
    if (n > oracle_max_assumptions)
        throw Error(ErrorCode::TooLarge, "oracle is limited to " + std::to_string(oracle_max_assumptions) + " assumptions");

    ExtensionCollection out;
    std::vector<AssumptionSet> admissible;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto s = subset_from_mask(n, mask);
        if (semantics == Semantics::SetStable) {
            if (is_set_stable(f, s))
                out.insert(std::move(s));
            continue;
        }
        bool adm = oracle_admissible_singleton(f, s);
        if (n <= oracle_literal_max_assumptions && adm != oracle_admissible_literal(f, s))
            throw std::logic_error("oracle admissibility checks disagree");
        if (adm)
            admissible.push_back(std::move(s));
    }

    if (semantics == Semantics::Admissible)
        for (auto & s : admissible)
            out.insert(std::move(s));
    else if (semantics == Semantics::Preferred)
        for (const auto & s : admissible)
            if (std::none_of(admissible.begin(), admissible.end(), [&](const auto & t) { return s.is_strict_subset_of(t); }))
                out.insert(s);

    out.canonicalize(f);
    return out;
}

std::vector<std::vector<std::string>> af_oracle(const GraphFramework & g, AfSemantics semantics)
{
    if (!g.is_af())
        throw Error(ErrorCode::NotAnAF, "the AF oracle does not handle supports");
    const auto n = g.arguments.size();
    if (n > af_oracle_max_arguments)
        throw Error(ErrorCode::TooLarge, "AF oracle is limited to " + std::to_string(af_oracle_max_arguments) + " arguments");

    std::vector<std::uint32_t> attackers(n, 0), attacked(n, 0);
    for (auto [a, b] : g.attacks) {
        attackers[b] |= 1U << a;
        attacked[a] |= 1U << b;
    }
    auto hits = [&](std::uint32_t s) {
        std::uint32_t out = 0;
        for (std::size_t a = 0; a < n; ++a)
            if ((s >> a) & 1U)
                out |= attacked[a];
        return out;
    };

    std::vector<std::uint32_t> chosen, admissible;
    const std::uint32_t full = (1U << n) - 1;
    for (std::uint32_t s = 0; s <= full; ++s) {
        auto h = hits(s);
        if ((h & s) != 0)
            continue;
        bool defended = true;
        for (std::size_t a = 0; a < n && defended; ++a)
            if ((s >> a) & 1U)
                defended = (attackers[a] & ~h) == 0;
        if (semantics == AfSemantics::Stable) {
            if ((s | h) == full)
                chosen.push_back(s);
        }
        else if (defended)
            admissible.push_back(s);
    }
    if (semantics == AfSemantics::Admissible)
        chosen = admissible;
    else if (semantics == AfSemantics::Preferred)
        for (auto s : admissible)
            if (std::none_of(admissible.begin(), admissible.end(), [&](auto t) { return t != s && (s & t) == s; }))
                chosen.push_back(s);

    std::vector<std::vector<std::string>> out;
    for (auto s : chosen) {
        std::vector<std::string> names;
        for (std::size_t a = 0; a < n; ++a)
            if ((s >> a) & 1U)
                names.push_back(g.arguments[a]);
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace baba
