#include <bipolar_aba/error.hpp>
#include <bipolar_aba/framework.hpp>

#include <algorithm>
#include <set>
#include <unordered_set>

namespace baba {

AssumptionSet::AssumptionSet(std::size_t universe, std::initializer_list<AssumptionId> members) : bits_(universe)
{
    for (auto a : members)
        bits_.set(a);
}

std::vector<AssumptionId> AssumptionSet::members() const
{
    std::vector<AssumptionId> out;
    for_each([&](AssumptionId a) { out.push_back(a); });
    return out;
}

namespace {
    struct RuleHash {
        std::size_t operator()(const Rule & r) const noexcept
        {
            return (static_cast<std::size_t>(r.head) << 32) ^ r.body;
        }
    };
}

Framework build_framework(const FrameworkDecl & decl, const FrameworkOptions & options)
{
    if (decl.assumptions.empty())
        throw FrameworkError(ErrorCode::EmptyAssumptions, "a framework needs at least one assumption");

    Framework f;
    for (const auto & n : decl.language)
        if (f.ids_.emplace(n, static_cast<SentenceId>(f.names_.size())).second)
            f.names_.push_back(n);

    auto lookup = [&](const std::string & n, DeclKind kind, std::size_t index) {
        auto it = f.ids_.find(n);
        if (it == f.ids_.end())
            throw FrameworkError(ErrorCode::UnknownName, "undeclared sentence '" + n + "'", kind, index);
        return it->second;
    };

    f.sentence_assumption_.assign(f.names_.size(), Framework::no_assumption);
    std::vector<std::size_t> first_decl;
    for (std::size_t i = 0; i < decl.assumptions.size(); ++i) {
        auto s = lookup(decl.assumptions[i], DeclKind::Assumption, i);
        if (f.sentence_assumption_[s] != Framework::no_assumption)
            continue;
        first_decl.push_back(i);
        f.sentence_assumption_[s] = static_cast<AssumptionId>(f.assumption_sentence_.size());
        f.assumption_sentence_.push_back(s);
    }

    const auto num_a = f.assumption_sentence_.size();
    constexpr auto unset = static_cast<SentenceId>(-1);
    f.contrary_.assign(num_a, unset);
    for (std::size_t i = 0; i < decl.contraries.size(); ++i) {
        const auto & [asm_name, ctr_name] = decl.contraries[i];
        auto s = lookup(asm_name, DeclKind::Contrary, i);
        auto c = lookup(ctr_name, DeclKind::Contrary, i);
        auto a = f.sentence_assumption_[s];
        if (a == Framework::no_assumption)
            throw FrameworkError(ErrorCode::ContraryOfNonAssumption, "'" + asm_name + "' is not an assumption", DeclKind::Contrary, i);
        if (f.contrary_[a] != unset && f.contrary_[a] != c)
            throw FrameworkError(ErrorCode::DuplicateContrary, "assumption '" + asm_name + "' has two contraries", DeclKind::Contrary, i);
        f.contrary_[a] = c;
    }
    for (std::size_t a = 0; a < num_a; ++a)
        if (f.contrary_[a] == unset)
            throw FrameworkError(ErrorCode::MissingContrary, "assumption '" + f.names_[f.assumption_sentence_[a]] + "' has no contrary", DeclKind::Assumption, first_decl[a]);

    std::vector<bool> is_contrary(f.names_.size(), false);
    for (auto c : f.contrary_)
        is_contrary[c] = true;

    std::unordered_set<Rule, RuleHash> seen;
    f.succ_.assign(f.names_.size(), {});
    for (std::size_t i = 0; i < decl.rules.size(); ++i) {
        const auto & [head_name, body_name] = decl.rules[i];
        auto head = lookup(head_name, DeclKind::Rule, i);
        auto body = lookup(body_name, DeclKind::Rule, i);
        if (f.sentence_assumption_[body] == Framework::no_assumption)
            throw FrameworkError(ErrorCode::NonBipolarRule, "rule body '" + body_name + "' is not an assumption", DeclKind::Rule, i);
        if (f.sentence_assumption_[head] == Framework::no_assumption && !is_contrary[head])
            throw FrameworkError(ErrorCode::NonBipolarRule, "rule head '" + head_name + "' is neither an assumption nor a contrary", DeclKind::Rule, i);
        Rule r{head, body};
        if (!seen.insert(r).second)
            continue;
        f.rules_.push_back(r);
        f.succ_[body].push_back(head);
    }

    if (f.names_.size() <= options.reach_cache_limit) {
        f.reach_.reserve(num_a);
        f.closure_.reserve(num_a);
        f.attacks_.reserve(num_a);
        for (std::size_t a = 0; a < num_a; ++a) {
            AssumptionSet src(num_a);
            src.insert(static_cast<AssumptionId>(a));
            f.reach_.push_back(f.bfs(src));
        }
        for (std::size_t a = 0; a < num_a; ++a) {
            f.closure_.push_back(f.restrict_to_assumptions(f.reach_[a]));
            AssumptionSet att(num_a);
            for (std::size_t b = 0; b < num_a; ++b)
                if (f.reach_[a].test(f.contrary_[b]))
                    att.insert(static_cast<AssumptionId>(b));
            f.attacks_.push_back(std::move(att));
        }
    }
    return f;
}

std::optional<SentenceId> Framework::find(std::string_view name) const
{
    auto it = ids_.find(std::string(name));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

std::optional<AssumptionId> Framework::assumption_of(SentenceId s) const
{
    auto a = sentence_assumption_.at(s);
    if (a == no_assumption)
        return std::nullopt;
    return a;
}

Bitset Framework::bfs(const AssumptionSet & sources) const
{
    Bitset seen(names_.size());
    std::vector<SentenceId> queue;
    sources.for_each([&](AssumptionId a) {
        auto s = assumption_sentence_[a];
        if (!seen.test(s)) {
            seen.set(s);
            queue.push_back(s);
        }
    });
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (auto next : succ_[queue[head]])
            if (!seen.test(next)) {
                seen.set(next);
                queue.push_back(next);
            }
    return seen;
}

AssumptionSet Framework::restrict_to_assumptions(const Bitset & sentences) const
{
    AssumptionSet out(num_assumptions());
    sentences.for_each([&](std::size_t s) {
        auto a = sentence_assumption_[s];
        if (a != no_assumption)
            out.insert(a);
    });
    return out;
}

Bitset Framework::reachable(AssumptionId a) const
{
    if (!reach_.empty())
        return reach_.at(a);
    AssumptionSet src(num_assumptions());
    src.insert(a);
    return bfs(src);
}

Bitset Framework::reachable(const AssumptionSet & s) const
{
    if (reach_.empty())
        return bfs(s);
    Bitset out(names_.size());
    s.for_each([&](AssumptionId a) { out |= reach_[a]; });
    return out;
}

AssumptionSet Framework::singleton_closure(AssumptionId a) const
{
    if (!closure_.empty())
        return closure_.at(a);
    return restrict_to_assumptions(reachable(a));
}

AssumptionSet Framework::singleton_attacks(AssumptionId a) const
{
    if (!attacks_.empty())
        return attacks_.at(a);
    auto r = reachable(a);
    AssumptionSet att(num_assumptions());
    for (std::size_t b = 0; b < num_assumptions(); ++b)
        if (r.test(contrary_[b]))
            att.insert(static_cast<AssumptionId>(b));
    return att;
}

AssumptionSet Framework::all_assumptions() const
{
    AssumptionSet s(num_assumptions());
    for (std::size_t a = 0; a < num_assumptions(); ++a)
        s.insert(static_cast<AssumptionId>(a));
    return s;
}

AssumptionSet Framework::make_set(std::span<const std::string> names) const
{
    AssumptionSet s(num_assumptions());
    for (const auto & n : names) {
        auto id = find(n);
        if (!id || !is_assumption(*id))
            throw Error(ErrorCode::UnknownSentence, "'" + n + "' is not an assumption");
        s.insert(sentence_assumption_[*id]);
    }
    return s;
}

AssumptionSet Framework::make_set(std::initializer_list<std::string_view> names) const
{
    std::vector<std::string> v(names.begin(), names.end());
    return make_set(v);
}

std::vector<std::string> Framework::names_of(const AssumptionSet & s) const
{
    std::vector<std::string> out;
    s.for_each([&](AssumptionId a) { out.push_back(assumption_name(a)); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
    struct Shape {
        std::set<std::string> assumptions;
        std::set<std::pair<std::string, std::string>> contraries;
        std::set<std::pair<std::string, std::string>> rules;

        friend bool operator==(const Shape &, const Shape &) = default;
    };

    Shape shape_of(const Framework & f)
    {
        Shape s;
        for (std::size_t a = 0; a < f.num_assumptions(); ++a) {
            auto id = static_cast<AssumptionId>(a);
            s.assumptions.insert(f.assumption_name(id));
            s.contraries.emplace(f.assumption_name(id), f.name(f.contrary(id)));
        }
        for (const auto & r : f.rules())
            s.rules.emplace(f.name(r.head), f.name(r.body));
        return s;
    }
}

bool structurally_equal(const Framework & a, const Framework & b)
{
    return shape_of(a) == shape_of(b);
}

bool derivable(const Framework & f, const AssumptionSet & s, SentenceId phi)
{
    if (s.empty())
        return false;
    if (f.reach_cached()) {
        bool found = false;
        s.for_each([&](AssumptionId a) { found = found || f.reaches(a, phi); });
        return found;
    }
    return f.reachable(s).test(phi);
}

AssumptionSet closure(const Framework & f, const AssumptionSet & s)
{
    AssumptionSet out = f.empty_set();
    s.for_each([&](AssumptionId a) { out |= f.singleton_closure(a); });
    return out;
}

bool attacks(const Framework & f, const AssumptionSet & a, const AssumptionSet & b)
{
    bool found = false;
    a.for_each([&](AssumptionId x) {
        if (!found && f.singleton_attacks(x).intersects(b))
            found = true;
    });
    return found;
}

AssumptionSet singleton_attackers(const Framework & f, const AssumptionSet & b)
{
    AssumptionSet out = f.empty_set();
    for (std::size_t a = 0; a < f.num_assumptions(); ++a)
        if (f.singleton_attacks(static_cast<AssumptionId>(a)).intersects(b))
            out.insert(static_cast<AssumptionId>(a));
    return out;
}

bool is_conflict_free(const Framework & f, const AssumptionSet & s)
{
    return !attacks(f, s, s);
}

bool is_closed(const Framework & f, const AssumptionSet & s)
{
    return closure(f, s) == s;
}

} // namespace baba
