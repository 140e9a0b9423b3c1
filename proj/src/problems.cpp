#include <bipolar_aba/error.hpp>
#include <bipolar_aba/problems.hpp>
#include <bipolar_aba/verify.hpp>

#include <string>

namespace baba {

namespace {
    SentenceId checked(const Framework & f, SentenceId s)
    {
        if (s >= f.num_sentences())
            throw Error(ErrorCode::UnknownSentence, "sentence id " + std::to_string(s) + " out of range");
        return s;
    }

    SentenceId lookup(const Framework & f, std::string_view name)
    {
        auto id = f.find(name);
        if (!id)
            throw Error(ErrorCode::UnknownSentence, "unknown sentence '" + std::string(name) + "'");
        return *id;
    }

    SearchOptions with_visitor(const SearchOptions & base, ExtensionVisitor visitor)
    {
        SearchOptions o;
        o.heuristic = base.heuristic;
        o.deadline = base.deadline;
        o.visitor = std::move(visitor);
        return o;
    }

    /// Runs the search for `s` (admissible in place of preferred when `via_admissible`)
    /// until `stop_when` holds for some extension; reports whether it did.
    bool any_extension(const Framework & f, Semantics s, bool via_admissible, const SearchOptions & base,
        const std::function<bool(const AssumptionSet &)> & stop_when)
    {
        bool hit = false;
        auto options = with_visitor(base, [&](const AssumptionSet & e) {
            hit = stop_when(e);
            return !hit;
        });
        switch (s) {
        case Semantics::Admissible: (void)enumerate_admissible(f, options); break;
        case Semantics::Preferred:
            if (via_admissible)
                (void)enumerate_admissible(f, options);
            else
                (void)enumerate_preferred(f, options);
            break;
        case Semantics::SetStable: (void)enumerate_set_stable(f, options); break;
        }
        return hit;
    }
}

bool exists(const Framework & f, Semantics s, const SearchOptions & options)
{
    if (s != Semantics::SetStable)
        return true;
    return any_extension(f, s, false, options, [](const AssumptionSet &) { return true; });
}

bool exists_nonempty(const Framework & f, Semantics s, const SearchOptions & options)
{
    return any_extension(f, s, true, options, [](const AssumptionSet & e) { return !e.empty(); });
}

bool verify(const Framework & f, Semantics s, const AssumptionSet & candidate)
{
    switch (s) {
    case Semantics::Admissible: return verify_admissible(f, candidate);
    case Semantics::Preferred: return verify_preferred(f, candidate);
    case Semantics::SetStable: return verify_set_stable(f, candidate);
    }
    return false;
}

bool credulous(const Framework & f, Semantics s, SentenceId sentence, const SearchOptions & options)
{
    checked(f, sentence);
    return any_extension(f, s, true, options, [&](const AssumptionSet & e) { return derivable(f, e, sentence); });
}

bool credulous(const Framework & f, Semantics s, std::string_view sentence, const SearchOptions & options)
{
    return credulous(f, s, lookup(f, sentence), options);
}

bool sceptical(const Framework & f, Semantics s, SentenceId sentence, const SearchOptions & options)
{
    checked(f, sentence);
    if (s == Semantics::Admissible)
        return false;
    return !any_extension(f, s, false, options, [&](const AssumptionSet & e) { return !derivable(f, e, sentence); });
}

bool sceptical(const Framework & f, Semantics s, std::string_view sentence, const SearchOptions & options)
{
    return sceptical(f, s, lookup(f, sentence), options);
}

bool derivable_query(const Framework & f, const AssumptionSet & s, SentenceId sentence)
{
    return derivable(f, s, checked(f, sentence));
}

bool derivable_query(const Framework & f, const AssumptionSet & s, std::string_view sentence)
{
    return derivable(f, s, lookup(f, sentence));
}

} // namespace baba
