#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/error.hpp>

#include <algorithm>
#include <stdexcept>

namespace baba {

std::string_view short_name(Semantics s) noexcept
{
    switch (s) {
    case Semantics::Admissible: return "adm";
    case Semantics::Preferred: return "prf";
    case Semantics::SetStable: return "sstb";
    }
    return "?";
}

std::string_view to_string(Semantics s) noexcept
{
    switch (s) {
    case Semantics::Admissible: return "admissible";
    case Semantics::Preferred: return "preferred";
    case Semantics::SetStable: return "set-stable";
    }
    return "?";
}

std::string_view to_string(Variant v) noexcept
{
    return v == Variant::Basic ? "basic" : "improved";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept
{
    if (text == "adm" || text == "admissible")
        return Semantics::Admissible;
    if (text == "prf" || text == "preferred")
        return Semantics::Preferred;
    if (text == "sstb" || text == "set-stable")
        return Semantics::SetStable;
    return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) noexcept
{
    if (text == "basic")
        return Variant::Basic;
    if (text == "improved")
        return Variant::Improved;
    return std::nullopt;
}

bool ExtensionCollection::insert(AssumptionSet s)
{
    if (contains(s))
        return false;
    index_.emplace(s.bits().hash(), sets_.size());
    sets_.push_back(std::move(s));
    canonical_ = false;
    return true;
}

bool ExtensionCollection::contains(const AssumptionSet & s) const
{
    auto [lo, hi] = index_.equal_range(s.bits().hash());
    for (auto it = lo; it != hi; ++it)
        if (sets_[it->second] == s)
            return true;
    return false;
}

void ExtensionCollection::canonicalize(const Framework & f)
{
    std::vector<std::pair<std::vector<std::string>, std::size_t>> keyed;
    keyed.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i)
        keyed.emplace_back(f.names_of(sets_[i]), i);
    std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<AssumptionSet> sorted;
    sorted.reserve(sets_.size());
    for (auto & [_, i] : keyed)
        sorted.push_back(std::move(sets_[i]));
    sets_ = std::move(sorted);
    index_.clear();
    for (std::size_t i = 0; i < sets_.size(); ++i)
        index_.emplace(sets_[i].bits().hash(), i);
    canonical_ = true;
}

bool ExtensionCollection::same_sets(const ExtensionCollection & other) const
{
    if (size() != other.size())
        return false;
    return std::all_of(sets_.begin(), sets_.end(), [&](const auto & s) { return other.contains(s); });
}

namespace {
    enum class Mode { Preferred, Admissible, SetStable };

    class Collector {
    public:
        Collector(Mode mode, const SearchOptions & options) : mode_(mode), options_(options) {}

        /// Returns false once the visitor asks to stop.
        bool offer(AssumptionSet s)
        {
            if (mode_ == Mode::Preferred) {
                for (const auto & e : result_)
                    if (s.is_subset_of(e))
                        return true;
                if (options_.check_maximality)
                    for (const auto & e : result_)
                        if (e.is_strict_subset_of(s))
                            throw std::logic_error("preferred search found a strict superset of an earlier extension");
            }
            if (!result_.insert(s))
                return true;
            if (options_.visitor && !options_.visitor(s)) {
                stopped_ = true;
                return false;
            }
            return true;
        }

        void tick() const
        {
            if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline)
                throw Error(ErrorCode::Timeout, "search deadline exceeded");
        }

        [[nodiscard]] bool stopped() const noexcept { return stopped_; }
        ExtensionCollection take() { return std::move(result_); }

    private:
        Mode mode_;
        const SearchOptions & options_;
        ExtensionCollection result_;
        bool stopped_ = false;
    };

    struct Frame {
        Labelling lab;
        bool entered = false;
        bool doomed = false;
    };

    // Improved search: propagation on entry (preferred, set-stable), influential
    // selection, right descent as a loop inside the frame, hopeless checks after every
    // labelling change.
    ExtensionCollection improved_search(const SearchContext & ctx, Labelling start, Mode mode, const SearchOptions & options)
    {
        Collector out(mode, options);
        const bool propagate_on_entry = mode != Mode::Admissible;

        std::vector<Frame> stack;
        stack.reserve(ctx.size() + 2);
        stack.push_back(Frame{std::move(start)});

        while (!stack.empty() && !out.stopped()) {
            out.tick();
            auto & top = stack.back();
            if (!top.entered) {
                top.entered = true;
                if (propagate_on_entry)
                    apply_propagate(ctx, top.lab);
                if (is_hopeless(ctx, top.lab))
                    stack.pop_back();
                continue;
            }
            if (top.doomed) {
                stack.pop_back();
                continue;
            }
            if (is_terminal(top.lab)) {
                if (is_admissible_labelling(top.lab))
                    out.offer(top.lab.in_set());
                stack.pop_back();
                continue;
            }

            auto alpha = influential(ctx, top.lab);
            std::optional<Labelling> child;
            if (can_select_left(ctx, top.lab, alpha)) {
                child = left_transition(ctx, top.lab, alpha);
                if (is_hopeless(ctx, *child))
                    child.reset();
            }
            if (mode == Mode::SetStable)
                apply_set_stable_right_transition(ctx, top.lab, alpha);
            else
                apply_right_transition(ctx, top.lab, alpha);
            top.doomed = is_hopeless(ctx, top.lab);

            if (child)
                stack.push_back(Frame{std::move(*child)});
        }
        return out.take();
    }
}

ExtensionCollection search_preferred_basic(const SearchContext & ctx, Labelling start, const SearchOptions & options)
{
    Collector out(Mode::Preferred, options);
    std::vector<Labelling> stack;
    stack.push_back(std::move(start));

    while (!stack.empty() && !out.stopped()) {
        out.tick();
        Labelling lab = std::move(stack.back());
        stack.pop_back();
        if (is_hopeless(ctx, lab))
            continue;
        if (is_terminal(lab)) {
            if (is_admissible_labelling(lab))
                out.offer(lab.in_set());
            continue;
        }
        auto alpha = static_cast<AssumptionId>(lab.with(Label::Blank).find_first());
        // Pushed right first so the left branch is explored first.
        stack.push_back(right_transition(ctx, lab, alpha));
        if (can_select_left(ctx, lab, alpha))
            stack.push_back(left_transition(ctx, lab, alpha));
    }
    return out.take();
}

ExtensionCollection search_preferred(const SearchContext & ctx, Labelling start, const SearchOptions & options)
{
    return improved_search(ctx, std::move(start), Mode::Preferred, options);
}

ExtensionCollection search_admissible(const SearchContext & ctx, Labelling start, const SearchOptions & options)
{
    return improved_search(ctx, std::move(start), Mode::Admissible, options);
}

ExtensionCollection search_set_stable(const SearchContext & ctx, Labelling start, const SearchOptions & options)
{
    return improved_search(ctx, std::move(start), Mode::SetStable, options);
}

ExtensionCollection enumerate_preferred_basic(const Framework & f, const SearchOptions & options)
{
    SearchContext ctx(f, options.heuristic);
    return search_preferred_basic(ctx, initial_labelling(ctx), options);
}

ExtensionCollection enumerate_preferred(const Framework & f, const SearchOptions & options)
{
    SearchContext ctx(f, options.heuristic);
    return search_preferred(ctx, initial_labelling(ctx), options);
}

ExtensionCollection enumerate_admissible(const Framework & f, const SearchOptions & options)
{
    SearchContext ctx(f, options.heuristic);
    return search_admissible(ctx, initial_labelling(ctx), options);
}

ExtensionCollection enumerate_set_stable(const Framework & f, const SearchOptions & options)
{
    SearchContext ctx(f, options.heuristic);
    return search_set_stable(ctx, initial_set_stable_labelling(ctx), options);
}

ExtensionCollection enumerate(const Framework & f, Semantics semantics, Variant variant, const SearchOptions & options)
{
    if (variant == Variant::Basic && semantics != Semantics::Preferred)
        throw Error(ErrorCode::InvalidVariant, "the basic algorithm is only defined for preferred semantics");

    ExtensionCollection result;
    switch (semantics) {
    case Semantics::Admissible: result = enumerate_admissible(f, options); break;
    case Semantics::Preferred:
        result = variant == Variant::Basic ? enumerate_preferred_basic(f, options) : enumerate_preferred(f, options);
        break;
    case Semantics::SetStable: result = enumerate_set_stable(f, options); break;
    }
    result.canonicalize(f);
    return result;
}

} // namespace baba
