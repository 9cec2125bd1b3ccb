#include "gaussdiag/realizability.hpp"

#include "gaussdiag/smoothing.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gaussdiag;
using namespace testing_support;

namespace {

const char* const planar_seven = "1 2 3 4 5 1 6 3 7 5 4 7 2 6";
const char* const virtual_four = "1 2 3 1 4 2 4 3";
const char* const even_six = "1 2 3 4 5 6 2 1 4 3 6 5";
const char* const even_eight = "0 1 2 3 4 5 6 0 1 7 3 2 5 6 7 4";

std::pair<std::string, std::string> pair_labels(const ChordDiagram& d, const EvenViolation& v) {
    return {d.label(v.first), d.label(v.second)};
}

}  // namespace

TEST(EvenCondition, TrefoilHolds) { EXPECT_TRUE(even_condition(diagram("1 2 3 1 2 3")).holds()); }

TEST(EvenCondition, VirtualTrefoilFailsOnBothChords) {
    auto r = even_condition(diagram("1 2 1 2"));
    ASSERT_EQ(r.violations.size(), 2u);
    EXPECT_EQ(r.violations[0].kind, EvenViolation::Kind::OddChord);
}

TEST(EvenCondition, VirtualShadowNamesChordTwo) {
    auto d = diagram(virtual_four);
    auto r = even_condition(d);
    ASSERT_FALSE(r.holds());
    const auto& v = r.violations.front();
    EXPECT_EQ(v.kind, EvenViolation::Kind::OddChord);
    EXPECT_EQ(d.label(v.first), "2");
    EXPECT_EQ(labels(d, v.odd_set), (std::vector<std::string>{"1", "3", "4"}));
}

TEST(EvenCondition, MatchesDefinitionOnRandomWords) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(1 + trial % 9, rng);
        auto d = from_ints(w);
        bool expect = true;
        const int n = static_cast<int>(d.chord_count());
        for (int a = 1; a <= n && expect; ++a) {
            int deg = 0;
            for (int c = 1; c <= n; ++c) deg += brute_cross(w, a, c);
            if (deg % 2) expect = false;
            for (int b = a + 1; b <= n && expect; ++b) {
                if (brute_cross(w, a, b)) continue;
                int common = 0;
                for (int c = 1; c <= n; ++c) common += brute_cross(w, a, c) && brute_cross(w, b, c);
                if (common % 2) expect = false;
            }
        }
        ASSERT_EQ(even_condition(d).holds(), expect) << text(d);
    }
}

TEST(Realizability, PlanarSevenRealizable) {
    auto d = diagram(planar_seven);
    auto r = is_realizable(d);
    EXPECT_EQ(r.verdict, Verdict::Realizable);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(r.witness));
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, VirtualShadowFailsEvenCondition) {
    auto d = diagram(virtual_four);
    auto r = is_realizable(d);
    ASSERT_EQ(r.verdict, Verdict::NonRealizable);
    const auto* w = std::get_if<EvenConditionViolation>(&r.witness);
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(d.label(w->report.violations.front().first), "2");
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, EvenSixNotRealizable) {
    auto d = diagram(even_six);
    EXPECT_TRUE(even_condition(d).holds());
    auto r = is_realizable(d);
    ASSERT_EQ(r.verdict, Verdict::NonRealizable);
    const auto* w = std::get_if<SmoothingViolation>(&r.witness);
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(d.label(w->chord), "1");

    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& v : w->report.violations) {
        EXPECT_EQ(v.kind, EvenViolation::Kind::OddPair);
        EXPECT_EQ(labels(d, v.odd_set), (std::vector<std::string>{"2"}));
        pairs.push_back(pair_labels(d, v));
    }
    const std::vector<std::pair<std::string, std::string>> expect{
        {"3", "5"}, {"3", "6"}, {"4", "5"}, {"4", "6"}};
    EXPECT_EQ(pairs, expect);
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, EvenEightNotRealizable) {
    auto d = diagram(even_eight);
    EXPECT_TRUE(even_condition(d).holds());
    auto r = is_realizable(d);
    EXPECT_EQ(r.verdict, Verdict::NonRealizable);
    EXPECT_TRUE(std::holds_alternative<SmoothingViolation>(r.witness));
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, FabricatedWitnessIsRejected) {
    auto d = diagram(even_six);
    const auto two = d.index_of("2");

    // Chord 2 crosses an even number of chords here.
    RealizabilityReport fake;
    fake.verdict = Verdict::NonRealizable;
    fake.witness = EvenConditionViolation{{{{EvenViolation::Kind::OddChord, two, two, {}}}}};
    EXPECT_THROW(verify_witness(d, fake), WitnessMismatch);

    // Smoothing chord 2 leaves chord 3 crossing an even number of chords.
    fake.witness = SmoothingViolation{two, {{{EvenViolation::Kind::OddChord, d.index_of("3"),
                                              d.index_of("3"), {}}}}};
    EXPECT_THROW(verify_witness(d, fake), WitnessMismatch);

    // Naming the smoothed chord itself as a survivor is rejected too.
    fake.witness = SmoothingViolation{two, {{{EvenViolation::Kind::OddChord, two, two, {}}}}};
    EXPECT_THROW(verify_witness(d, fake), WitnessMismatch);
}

TEST(Realizability, SmoothingChordTwoAlsoBreaksEvenSix) {
    // The diagram is symmetric under swapping chords 1 and 2, so this witness is genuine.
    auto d = diagram(even_six);
    RealizabilityReport r;
    r.verdict = Verdict::NonRealizable;
    r.witness = SmoothingViolation{d.index_of("2"), {{{EvenViolation::Kind::OddPair, d.index_of("3"),
                                                       d.index_of("5"), {d.index_of("1")}}}}};
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, EmptyVerdictWitnessIsRejected) {
    auto d = diagram(virtual_four);
    RealizabilityReport r;
    r.verdict = Verdict::NonRealizable;
    EXPECT_THROW(verify_witness(d, r), WitnessMismatch);
    r.witness = EvenConditionViolation{{{{EvenViolation::Kind::OddChord, d.index_of("1"), 0, {}}}}};
    EXPECT_THROW(verify_witness(d, r), WitnessMismatch);
}

TEST(Realizability, KinksAreRemovedAndReported) {
    auto d = diagram("k 1 2 3 1 2 3 k j j");
    auto r = is_realizable(d);
    EXPECT_EQ(r.verdict, Verdict::Realizable);
    EXPECT_EQ(labels(d, r.removed_kinks), (std::vector<std::string>{"k", "j"}));
}

TEST(Realizability, InsertingAKinkKeepsTheVerdict) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(1 + trial % 7, rng);
        std::uniform_int_distribution<std::size_t> at(0, w.size());
        auto v = w;
        v.insert(v.begin() + static_cast<long>(at(rng)), {99, 99});
        ASSERT_EQ(is_realizable(from_ints(w)).verdict, is_realizable(from_ints(v)).verdict);
    }
}

TEST(Realizability, WitnessIndicesReferToInput) {
    // The kink shifts indices of the core diagram; the witness must still name input chords.
    auto d = diagram("k k 1 2 3 4 5 6 2 1 4 3 6 5");
    auto r = is_realizable(d);
    const auto& w = std::get<SmoothingViolation>(r.witness);
    EXPECT_EQ(d.label(w.chord), "1");
    EXPECT_EQ(pair_labels(d, w.report.violations.front()), std::make_pair(std::string("3"), std::string("5")));
    EXPECT_TRUE(verify_witness(d, r));
}

TEST(Realizability, AgreesWithOracleOnRandomWords) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = from_ints(random_word(1 + trial % 9, rng));
        auto r = is_realizable(d);
        attach_cross_check(r, d);
        ASSERT_EQ(r.verdict == Verdict::Realizable, r.cross_check->oracle_realizable) << text(d);
        ASSERT_TRUE(verify_witness(d, r));
    }
}
