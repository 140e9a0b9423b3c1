#pragma once

#include <bipolar_aba/bipolar_aba.hpp>

#include <string>
#include <vector>

namespace baba::testing {

/// a attacks b.
inline Framework f1()
{
    return build_framework({{"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"b", "y"}}, {{"y", "a"}}});
}

/// a supports b.
inline Framework f2()
{
    return build_framework({{"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"b", "y"}}, {{"b", "a"}}});
}

/// a attacks itself.
inline Framework f3()
{
    return build_framework({{"a", "x"}, {"a"}, {{"a", "x"}}, {{"x", "a"}}});
}

/// Support chain a, b, c.
inline Framework f4()
{
    return build_framework({{"a", "b", "c", "x", "y", "z"}, {"a", "b", "c"}, {{"a", "x"}, {"b", "y"}, {"c", "z"}}, {{"b", "a"}, {"c", "b"}}});
}

/// a and b attack each other.
inline Framework f5()
{
    return build_framework({{"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"b", "y"}}, {{"y", "a"}, {"x", "b"}}});
}

/// Attack chain c, b, a.
inline Framework f6()
{
    return build_framework({{"a", "b", "c", "x", "y", "z"}, {"a", "b", "c"}, {{"a", "x"}, {"b", "y"}, {"c", "z"}}, {{"x", "b"}, {"y", "c"}}});
}

/// Two assumptions, no rules.
inline Framework no_rules()
{
    return build_framework({{"a", "b", "x", "y"}, {"a", "b"}, {{"a", "x"}, {"b", "y"}}, {}});
}

using NameSets = std::vector<std::vector<std::string>>;

/// Extensions as sorted name lists in canonical order.
inline NameSets names(const Framework & f, ExtensionCollection e)
{
    e.canonicalize(f);
    NameSets out;
    for (const auto & s : e)
        out.push_back(f.names_of(s));
    return out;
}

inline AssumptionSet set_of(const Framework & f, std::initializer_list<std::string_view> n)
{
    return f.make_set(n);
}

} // namespace baba::testing
