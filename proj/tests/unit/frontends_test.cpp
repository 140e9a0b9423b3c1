#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace baba;
using namespace baba::testing;

namespace {

template <class F_>
ErrorCode error_of(F_ && f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Timeout;
}

} // namespace

TEST(ParseAba, Fixtures)
{
    EXPECT_TRUE(structurally_equal(parse_aba("asm(a). asm(b). ctr(a,x). ctr(b,y). rule(y,a)."), f1()));
    EXPECT_TRUE(structurally_equal(parse_aba("asm(a). ctr(a,x). rule(x,a)."), f3()));
}

TEST(ParseAba, WhitespaceAndComments)
{
    auto text = "# fixture one\n asm( a ) .\nasm(b).ctr(a, x). # trailing\nctr(b,y).\n\trule(y , a).\n";
    EXPECT_TRUE(structurally_equal(parse_aba(text), f1()));
}

TEST(ParseAba, Errors)
{
    EXPECT_EQ(error_of([] { (void)parse_aba("rule(y,a)."); }), ErrorCode::UnknownName);
    EXPECT_EQ(error_of([] { (void)parse_aba("asm(a). ctr(a,x). rule(z,a)."); }), ErrorCode::UnknownName);
    EXPECT_EQ(error_of([] { (void)parse_aba("ctr(a,x)."); }), ErrorCode::EmptyAssumptions);
    EXPECT_EQ(error_of([] { (void)parse_aba("asm(a)"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([] { (void)parse_aba("assume(a)."); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([] { (void)parse_aba("asm(a-b)."); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([] { (void)parse_aba("asm(a). ctr(a,x). rule(a,x)."); }), ErrorCode::NonBipolarRule);
    EXPECT_EQ(error_of([] { (void)parse_aba("asm(a). asm(b). ctr(a,x)."); }), ErrorCode::MissingContrary);
}

TEST(ParseAba, ErrorPosition)
{
    try {
        (void)parse_aba("asm(a).\nctr(a,x).\nrule(x a).");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    }
}

TEST(PrintAba, RoundTrip)
{
    for (const auto & f : {f1(), f2(), f3(), f4(), f5(), f6(), no_rules()})
        EXPECT_TRUE(structurally_equal(parse_aba(print_aba(f)), f));
}

TEST(ParseAf, Examples)
{
    auto g = parse_af("arg(a). arg(b). att(a,b).");
    EXPECT_EQ(g.arguments.size(), 2u);
    EXPECT_EQ(g.attacks.size(), 1u);
    EXPECT_TRUE(g.is_af());
    auto h = parse_baf("arg(a). arg(b). att(a,b). sup(b,a).");
    EXPECT_EQ(h.supports.size(), 1u);
    EXPECT_EQ(error_of([] { (void)parse_af("att(a,b)."); }), ErrorCode::UnknownArgument);
    EXPECT_EQ(error_of([] { (void)parse_af("arg(a). arg(b). sup(a,b)."); }), ErrorCode::SyntaxError);
}

TEST(Mapping, AfToF1)
{
    auto f = map_to_bipolar_aba(parse_af("arg(a). arg(b). att(a,b)."));
    auto expected = build_framework({{"a", "b", "c_a", "c_b"}, {"a", "b"}, {{"a", "c_a"}, {"b", "c_b"}}, {{"c_b", "a"}}});
    EXPECT_TRUE(structurally_equal(f, expected));
    EXPECT_EQ(names(f, enumerate(f, Semantics::Preferred)), (NameSets{{"a"}}));
}

TEST(Mapping, Supports)
{
    auto g = parse_baf("arg(a). arg(b). sup(a,b).");
    EXPECT_EQ(error_of([&] { (void)map_to_bipolar_aba(g); }), ErrorCode::MissingInterpretation);
    g.interpretation = SupportInterpretation::Deductive;
    auto d = map_to_bipolar_aba(g);
    EXPECT_TRUE(structurally_equal(d, build_framework({{"a", "b", "c_a", "c_b"}, {"a", "b"}, {{"a", "c_a"}, {"b", "c_b"}}, {{"b", "a"}}})));
    g.interpretation = SupportInterpretation::Necessary;
    auto n = map_to_bipolar_aba(g);
    EXPECT_TRUE(structurally_equal(n, build_framework({{"a", "b", "c_a", "c_b"}, {"a", "b"}, {{"a", "c_a"}, {"b", "c_b"}}, {{"a", "b"}}})));
}

TEST(Mapping, FreshContraryAvoidsCollisions)
{
    auto f = map_to_bipolar_aba(parse_af("arg(a). arg(c_a). att(a,c_a)."));
    EXPECT_EQ(f.num_assumptions(), 2u);
    EXPECT_EQ(f.num_sentences(), 4u);
    for (AssumptionId a = 0; a < 2; ++a)
        EXPECT_FALSE(f.is_assumption(f.contrary(a)));
}

TEST(Mapping, ShapeProperty)
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = parse_baf("arg(p). arg(q). arg(r). att(p,q). att(q,r). att(r,r). sup(p,r). sup(q,p).");
        g.interpretation = seed % 2 ? SupportInterpretation::Deductive : SupportInterpretation::Necessary;
        auto f = map_to_bipolar_aba(g);
        EXPECT_EQ(f.num_rules(), g.attacks.size() + g.supports.size());
        EXPECT_EQ(f.num_sentences(), 2 * g.arguments.size());
    }
}

TEST(WriteExtensions, Formats)
{
    auto f = f5();
    ExtensionCollection e;
    EXPECT_EQ(write_extensions(f, e), "NO EXTENSIONS\n");
    e.insert(set_of(f, {"a"}));
    EXPECT_EQ(write_extensions(f, e), "{a}\n");
    e.insert(f.empty_set());
    e.canonicalize(f);
    EXPECT_EQ(write_extensions(f, e), "{}\n{a}\n");
    EXPECT_EQ(write_extensions(f, e, OutputFormat::Json), "[[],[\"a\"]]\n");
    auto g = f2();
    EXPECT_EQ(write_extensions(g, enumerate(g, Semantics::Preferred)), "{a,b}\n");
}

TEST(ParseSupport, Names)
{
    EXPECT_EQ(parse_support("deductive"), SupportInterpretation::Deductive);
    EXPECT_EQ(parse_support("necessary"), SupportInterpretation::Necessary);
    EXPECT_EQ(parse_support("evidential"), std::nullopt);
}
