#include <bipolar_aba/error.hpp>
#include <bipolar_aba/labelling.hpp>

namespace baba {

std::string_view to_string(Label l) noexcept
{
    switch (l) {
    case Label::In: return "IN";
    case Label::Out: return "OUT";
    case Label::Undec: return "UNDEC";
    case Label::Blank: return "BLANK";
    case Label::MustOut: return "MUST_OUT";
    }
    return "?";
}

Labelling::Labelling(std::size_t num_assumptions, Label fill) : labels_(num_assumptions, fill)
{
    for (auto & s : sets_)
        s = Bitset(num_assumptions);
    for (std::size_t a = 0; a < num_assumptions; ++a)
        sets_[index(fill)].set(a);
    counts_[index(fill)] = num_assumptions;
}

void Labelling::set(AssumptionId a, Label l)
{
    auto old = labels_[a];
    if (old == l)
        return;
    sets_[index(old)].reset(a);
    --counts_[index(old)];
    sets_[index(l)].set(a);
    ++counts_[index(l)];
    labels_[a] = l;
}

SearchContext::SearchContext(const Framework & f, Heuristic heuristic) : framework_(&f)
{
    const auto n = f.num_assumptions();
    closure_.reserve(n);
    std::vector<Bitset> singleton_attacks;
    singleton_attacks.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        closure_.push_back(f.singleton_closure(static_cast<AssumptionId>(a)).bits());
        singleton_attacks.push_back(f.singleton_attacks(static_cast<AssumptionId>(a)).bits());
    }

    containing_.assign(n, Bitset(n));
    for (std::size_t b = 0; b < n; ++b)
        closure_[b].for_each([&](std::size_t a) { containing_[a].set(b); });

    attacked_by_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        singleton_attacks[a].for_each([&](std::size_t b) { attacked_by_[a] |= containing_[b]; });

    attackers_.assign(n, Bitset(n));
    for (std::size_t d = 0; d < n; ++d)
        attacked_by_[d].for_each([&](std::size_t a) { attackers_[a].set(d); });

    score_.assign(n, 0);
    for (const auto & r : f.rules()) {
        auto head = f.assumption_of(r.head);
        auto body = *f.assumption_of(r.body);
        ++score_[body];
        if (head && *head != body)
            ++score_[*head];
    }
    if (heuristic == Heuristic::RuleCountWithContraries) {
        std::vector<std::vector<AssumptionId>> contrary_of(f.num_sentences());
        for (std::size_t a = 0; a < n; ++a)
            contrary_of[f.contrary(static_cast<AssumptionId>(a))].push_back(static_cast<AssumptionId>(a));
        for (const auto & r : f.rules())
            for (auto a : contrary_of[r.head])
                ++score_[a];
    }
}

namespace {
    Labelling initial_with(const SearchContext & ctx, Label self_attacker_label)
    {
        Labelling lab(ctx.size());
        for (std::size_t a = 0; a < ctx.size(); ++a)
            if (ctx.self_attacking(static_cast<AssumptionId>(a)))
                lab.set(static_cast<AssumptionId>(a), self_attacker_label);
        return lab;
    }

    void require_blank(const Labelling & lab, AssumptionId a, const char * what)
    {
        if (a >= lab.size() || lab[a] != Label::Blank)
            throw Error(ErrorCode::IllegalSelection, std::string(what) + ": assumption " + std::to_string(a) + " is not BLANK");
    }
}

Labelling initial_labelling(const SearchContext & ctx)
{
    return initial_with(ctx, Label::Undec);
}

Labelling initial_set_stable_labelling(const SearchContext & ctx)
{
    return initial_with(ctx, Label::MustOut);
}

bool can_select_left(const SearchContext & ctx, const Labelling & lab, AssumptionId a)
{
    if (lab[a] != Label::Blank)
        return false;
    const auto & cl = ctx.closure_of(a);
    return !cl.intersects(lab.with(Label::Out)) && !cl.intersects(lab.with(Label::Undec)) && !cl.intersects(lab.with(Label::MustOut));
}

void apply_left_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a)
{
    if (!can_select_left(ctx, lab, a))
        throw Error(ErrorCode::IllegalSelection, "left-transition on assumption " + std::to_string(a));

    ctx.closure_of(a).for_each([&](std::size_t b) { lab.set(static_cast<AssumptionId>(b), Label::In); });

    // The guard on IN below is a search invariant: an IN assumption is never attacked by
    // a selectable one.
    ctx.closures_attacked_by(a).for_each([&](std::size_t g) {
        if (lab[static_cast<AssumptionId>(g)] == Label::In)
            throw Error(ErrorCode::IllegalSelection, "left-transition would label an IN assumption OUT");
        lab.set(static_cast<AssumptionId>(g), Label::Out);
    });

    ctx.closure_attackers(a).for_each([&](std::size_t d) {
        auto id = static_cast<AssumptionId>(d);
        if (lab[id] == Label::Out)
            return;
        if (lab[id] == Label::In)
            throw Error(ErrorCode::IllegalSelection, "left-transition would label an IN assumption MUST_OUT");
        lab.set(id, Label::MustOut);
    });
}

Labelling left_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a)
{
    Labelling out = lab;
    apply_left_transition(ctx, out, a);
    return out;
}

void apply_right_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a)
{
    require_blank(lab, a, "right-transition");
    auto targets = ctx.closures_containing(a) & lab.with(Label::Blank);
    targets.for_each([&](std::size_t b) { lab.set(static_cast<AssumptionId>(b), Label::Undec); });
}

Labelling right_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a)
{
    Labelling out = lab;
    apply_right_transition(ctx, out, a);
    return out;
}

void apply_set_stable_right_transition(const SearchContext & ctx, Labelling & lab, AssumptionId a)
{
    require_blank(lab, a, "set-stable right-transition");
    auto targets = ctx.closures_containing(a) - lab.with(Label::Out);
    targets.for_each([&](std::size_t b) {
        if (lab[static_cast<AssumptionId>(b)] == Label::In)
            throw Error(ErrorCode::IllegalSelection, "set-stable right-transition would exclude an IN assumption");
        lab.set(static_cast<AssumptionId>(b), Label::MustOut);
    });
}

Labelling set_stable_right_transition(const SearchContext & ctx, const Labelling & lab, AssumptionId a)
{
    Labelling out = lab;
    apply_set_stable_right_transition(ctx, out, a);
    return out;
}

bool is_terminal(const Labelling & lab) noexcept
{
    return lab.count(Label::Blank) == 0;
}

bool is_hopeless(const SearchContext & ctx, const Labelling & lab)
{
    if (lab.count(Label::MustOut) == 0)
        return false;
    auto unusable = lab.with(Label::Out) | lab.with(Label::Undec);
    bool hopeless = false;
    lab.with(Label::MustOut).for_each([&](std::size_t a) {
        if (!hopeless && ctx.closure_attackers(static_cast<AssumptionId>(a)).is_subset_of(unusable))
            hopeless = true;
    });
    return hopeless;
}

bool is_admissible_labelling(const Labelling & lab) noexcept
{
    return is_terminal(lab) && lab.count(Label::MustOut) == 0;
}

bool is_set_stable_labelling(const Labelling & lab) noexcept
{
    return is_admissible_labelling(lab) && lab.count(Label::Undec) == 0;
}

namespace {
    bool must_in(const SearchContext & ctx, const Bitset & handled, AssumptionId a)
    {
        return ctx.closure_attackers(a).is_subset_of(handled);
    }
}

std::optional<AssumptionId> find_must_in(const SearchContext & ctx, const Labelling & lab)
{
    auto handled = lab.with(Label::Out) | lab.with(Label::MustOut);
    const auto & blank = lab.with(Label::Blank);
    for (auto a = blank.find_first(); a != Bitset::npos; a = blank.find_next(a))
        if (must_in(ctx, handled, static_cast<AssumptionId>(a)))
            return static_cast<AssumptionId>(a);
    return std::nullopt;
}

void apply_propagate(const SearchContext & ctx, Labelling & lab)
{
    // OUT and MUST_OUT only grow while propagating, and applying one must_in assumption
    // never disqualifies another, so a sweep in id order reaches the same fixpoint as
    // repeatedly picking the lowest must_in assumption.
    bool changed = true;
    while (changed) {
        changed = false;
        auto handled = lab.with(Label::Out) | lab.with(Label::MustOut);
        for (auto a = lab.with(Label::Blank).find_first(); a != Bitset::npos; a = lab.with(Label::Blank).find_next(a)) {
            if (must_in(ctx, handled, static_cast<AssumptionId>(a))) {
                apply_left_transition(ctx, lab, static_cast<AssumptionId>(a));
                handled = lab.with(Label::Out) | lab.with(Label::MustOut);
                changed = true;
            }
        }
    }
}

Labelling propagate(const SearchContext & ctx, const Labelling & lab)
{
    Labelling out = lab;
    apply_propagate(ctx, out);
    return out;
}

AssumptionId influential(const SearchContext & ctx, const Labelling & lab)
{
    const auto & blank = lab.with(Label::Blank);
    auto best = blank.find_first();
    if (best == Bitset::npos)
        throw Error(ErrorCode::NoBlank, "no BLANK assumption to select");
    for (auto a = blank.find_next(best); a != Bitset::npos; a = blank.find_next(a))
        if (ctx.score(static_cast<AssumptionId>(a)) > ctx.score(static_cast<AssumptionId>(best)))
            best = a;
    return static_cast<AssumptionId>(best);
}

} // namespace baba
