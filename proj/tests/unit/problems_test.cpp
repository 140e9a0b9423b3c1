#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace baba;
using namespace baba::testing;

TEST(Exists, Examples)
{
    EXPECT_TRUE(exists(f3(), Semantics::Admissible));
    EXPECT_TRUE(exists(f3(), Semantics::Preferred));
    EXPECT_FALSE(exists(f3(), Semantics::SetStable));
    EXPECT_TRUE(exists(f1(), Semantics::SetStable));
}

TEST(ExistsNonempty, Examples)
{
    EXPECT_TRUE(exists_nonempty(f1(), Semantics::Admissible));
    EXPECT_FALSE(exists_nonempty(f3(), Semantics::Preferred));
    EXPECT_FALSE(exists_nonempty(f3(), Semantics::SetStable));
}

TEST(Verify, Examples)
{
    auto f = f1();
    EXPECT_TRUE(verify(f, Semantics::Preferred, set_of(f, {"a"})));
    EXPECT_TRUE(verify(f, Semantics::Admissible, f.empty_set()));
    auto g = f2();
    EXPECT_FALSE(verify(g, Semantics::SetStable, set_of(g, {"b"})));
}

TEST(Credulous, Examples)
{
    EXPECT_TRUE(credulous(f1(), Semantics::Preferred, "y"));
    EXPECT_FALSE(credulous(f1(), Semantics::Preferred, "b"));
    EXPECT_FALSE(credulous(f3(), Semantics::SetStable, "a"));
    EXPECT_FALSE(credulous(f3(), Semantics::SetStable, "x"));
}

TEST(Sceptical, Examples)
{
    EXPECT_FALSE(sceptical(f1(), Semantics::Admissible, "y"));
    EXPECT_TRUE(sceptical(f1(), Semantics::Preferred, "y"));
    EXPECT_FALSE(sceptical(f5(), Semantics::Preferred, "y"));
    // No set-stable extension: vacuously true.
    EXPECT_TRUE(sceptical(f3(), Semantics::SetStable, "a"));
}

TEST(DerivableQuery, Examples)
{
    auto f = f4();
    EXPECT_TRUE(derivable_query(f, set_of(f, {"a"}), "c"));
    EXPECT_FALSE(derivable_query(f, f.empty_set(), "a"));
    EXPECT_FALSE(derivable_query(f, set_of(f, {"b"}), "a"));
}

TEST(Problems, UnknownSentence)
{
    for (auto call : {+[] { (void)credulous(f1(), Semantics::Preferred, "nope"); }, +[] { (void)sceptical(f1(), Semantics::Preferred, "nope"); },
                      +[] { (void)derivable_query(f1(), f1().empty_set(), "nope"); }}) {
        try {
            call();
            ADD_FAILURE();
        }
        catch (const Error & e) {
            EXPECT_EQ(e.code(), ErrorCode::UnknownSentence);
        }
    }
}
