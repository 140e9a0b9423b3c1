// Seeded random-corpus properties; the acceptance binary repeats the headline checks at full size.
#include "corpus.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace baba;
using namespace baba::testing;

namespace {

const std::vector<Framework> & small_corpus()
{
    static const auto c = corpus(120, 777);
    return c;
}

} // namespace

TEST(Properties, EnumerationMatchesOracle)
{
    for (const auto & f : small_corpus()) {
        auto adm = oracle_enumerate(f, Semantics::Admissible);
        auto prf = oracle_enumerate(f, Semantics::Preferred);
        auto stb = oracle_enumerate(f, Semantics::SetStable);
        ASSERT_TRUE(enumerate_admissible(f).same_sets(adm)) << print_aba(f);
        ASSERT_TRUE(enumerate_preferred(f).same_sets(prf)) << print_aba(f);
        ASSERT_TRUE(enumerate_preferred_basic(f).same_sets(prf)) << print_aba(f);
        ASSERT_TRUE(enumerate_set_stable(f).same_sets(stb)) << print_aba(f);
    }
}

TEST(Properties, VerifiersAcceptEnumeratedAndMatchOracle)
{
    for (const auto & f : small_corpus()) {
        auto adm = enumerate_admissible(f);
        auto prf = enumerate_preferred(f);
        auto stb = enumerate_set_stable(f);
        for (const auto & s : adm)
            EXPECT_TRUE(verify_admissible(f, s));
        for (const auto & s : prf)
            EXPECT_TRUE(verify_preferred(f, s));
        for (const auto & s : stb) {
            EXPECT_TRUE(verify_set_stable(f, s));
            EXPECT_TRUE(prf.contains(s));
        }
        for (const auto & s : adm) {
            EXPECT_TRUE(std::any_of(prf.begin(), prf.end(), [&](const auto & p) { return s.is_subset_of(p); }));
            // Non-maximal admissible sets are rejected by the preferred verifier.
            EXPECT_EQ(verify_preferred(f, s), prf.contains(s));
        }
        for (std::size_t i = 0; i < prf.size(); ++i)
            for (std::size_t j = 0; j < prf.size(); ++j)
                if (i != j)
                    EXPECT_FALSE(prf[i].is_subset_of(prf[j]));
    }
}

TEST(Properties, CoreModelMatchesOracle)
{
    for (const auto & f : small_corpus()) {
        if (f.num_assumptions() > 6)
            continue;
        for (std::uint32_t m = 0; m < (1u << f.num_assumptions()); ++m) {
            AssumptionSet s(f.num_assumptions());
            for (AssumptionId a = 0; a < f.num_assumptions(); ++a)
                if (m >> a & 1u)
                    s.insert(a);
            ASSERT_EQ(closure(f, s), oracle_closure(f, s));
            ASSERT_EQ(verify_admissible(f, s), oracle_admissible_singleton(f, s));
            for (SentenceId phi = 0; phi < f.num_sentences(); ++phi)
                ASSERT_EQ(derivable(f, s, phi), oracle_deduction_exists(f, s, phi));
            for (AssumptionId b = 0; b < f.num_assumptions(); ++b)
                ASSERT_EQ(attacks(f, s, AssumptionSet(f.num_assumptions(), {b})), oracle_attacks(f, s, AssumptionSet(f.num_assumptions(), {b})));
        }
    }
}

TEST(Properties, ProblemFacadesAgreeWithEnumeration)
{
    for (const auto & f : small_corpus()) {
        for (auto sem : {Semantics::Admissible, Semantics::Preferred, Semantics::SetStable}) {
            auto ext = enumerate(f, sem);
            EXPECT_EQ(exists(f, sem), !ext.empty());
            EXPECT_EQ(exists_nonempty(f, sem), std::any_of(ext.begin(), ext.end(), [](const auto & e) { return !e.empty(); }));
            for (SentenceId s = 0; s < f.num_sentences(); ++s) {
                auto derives = [&](const AssumptionSet & e) { return derivable(f, e, s); };
                EXPECT_EQ(credulous(f, sem, s), std::any_of(ext.begin(), ext.end(), derives));
                if (sem == Semantics::Admissible)
                    EXPECT_FALSE(sceptical(f, sem, s));
                else
                    EXPECT_EQ(sceptical(f, sem, s), std::all_of(ext.begin(), ext.end(), derives));
            }
        }
        EXPECT_EQ(exists_nonempty(f, Semantics::Admissible), exists_nonempty(f, Semantics::Preferred));
        EXPECT_EQ(exists(f, Semantics::SetStable), exists_nonempty(f, Semantics::SetStable));
    }
}

TEST(Properties, RoundTripAndHeuristicIndependence)
{
    for (const auto & f : small_corpus()) {
        EXPECT_TRUE(structurally_equal(parse_aba(print_aba(f)), f));
        SearchOptions alt;
        alt.heuristic = Heuristic::RuleCountWithContraries;
        EXPECT_TRUE(enumerate_preferred(f, alt).same_sets(enumerate_preferred(f)));
        EXPECT_TRUE(enumerate_set_stable(f, alt).same_sets(enumerate_set_stable(f)));
    }
}

TEST(Properties, AfMappingMatchesAfOracle)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(seed);
        auto f = map_to_bipolar_aba(g);
        EXPECT_EQ(names(f, enumerate(f, Semantics::Admissible)), af_oracle(g, AfSemantics::Admissible));
        EXPECT_EQ(names(f, enumerate(f, Semantics::Preferred)), af_oracle(g, AfSemantics::Preferred));
        EXPECT_EQ(names(f, enumerate(f, Semantics::SetStable)), af_oracle(g, AfSemantics::Stable));
    }
}

TEST(Properties, BafMappingMatchesOracle)
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(seed, 7, true);
        g.interpretation = seed % 2 ? SupportInterpretation::Deductive : SupportInterpretation::Necessary;
        auto f = map_to_bipolar_aba(g);
        for (auto sem : {Semantics::Admissible, Semantics::Preferred, Semantics::SetStable})
            EXPECT_TRUE(enumerate(f, sem).same_sets(oracle_enumerate(f, sem)));
    }
}

TEST(Properties, UncachedFrameworkAgrees)
{
    for (std::size_t i = 0; i < 30; ++i) {
        auto decl = random_decl(4242 + i);
        auto cached = build_framework(decl);
        auto uncached = build_framework(decl, FrameworkOptions{0});
        for (auto sem : {Semantics::Admissible, Semantics::Preferred, Semantics::SetStable})
            EXPECT_TRUE(enumerate(cached, sem).same_sets(enumerate(uncached, sem)));
    }
}
