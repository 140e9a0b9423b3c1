#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/verify.hpp>

namespace baba {

bool defends(const Framework & f, const AssumptionSet & s, AssumptionId alpha)
{
    AssumptionSet target = f.empty_set();
    target.insert(alpha);
    bool ok = true;
    singleton_attackers(f, target).for_each([&](AssumptionId beta) {
        if (ok && !attacks(f, s, f.singleton_closure(beta)))
            ok = false;
    });
    return ok;
}

bool verify_admissible(const Framework & f, const AssumptionSet & s)
{
    if (!is_closed(f, s) || !is_conflict_free(f, s))
        return false;
    bool ok = true;
    s.for_each([&](AssumptionId a) { ok = ok && defends(f, s, a); });
    return ok;
}

bool verify_set_stable(const Framework & f, const AssumptionSet & s)
{
    if (!is_closed(f, s) || !is_conflict_free(f, s))
        return false;
    for (std::size_t a = 0; a < f.num_assumptions(); ++a) {
        auto id = static_cast<AssumptionId>(a);
        if (!s.contains(id) && !attacks(f, s, f.singleton_closure(id)))
            return false;
    }
    return true;
}

bool verify_preferred(const Framework & f, const AssumptionSet & s)
{
    if (!verify_admissible(f, s))
        return false;

    SearchContext ctx(f);
    Labelling lab = initial_labelling(ctx);
    bool forced = true;
    s.for_each([&](AssumptionId a) {
        if (!forced || lab[a] == Label::In)
            return;
        if (!can_select_left(ctx, lab, a)) {
            forced = false;
            return;
        }
        apply_left_transition(ctx, lab, a);
    });
    if (!forced || is_hopeless(ctx, lab))
        return false;

    bool larger = false;
    SearchOptions options;
    options.visitor = [&](const AssumptionSet & found) {
        larger = found != s;
        return !larger;
    };
    (void)search_preferred(ctx, std::move(lab), options);
    return !larger;
}

} // namespace baba
