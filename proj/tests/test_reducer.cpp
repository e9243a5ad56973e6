#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "profgen/reducer.hpp"
#include "test_support.hpp"

using namespace profgen;
using testsupport::load_corpus;

namespace {

Family eval_joined(const std::vector<Generator>& gs) {
    std::vector<Family> parts;
    for (const auto& g : gs) parts.push_back(eval_generator(g));
    return union_product(parts);
}

double brute_max(const DisorderSpec& a, const DisorderSpec& b) {
    auto table = SymbolTable::intern(a, b);
    ProfileMatrix ma = materialize(a, table);
    ProfileMatrix mb = materialize(b, table);
    return mpcs(ma, mb, Aggregation::Max).value;
}

}  // namespace

TEST_CASE("segmentation of the toy pair") {
    auto a = load_corpus("toy_a.gen");
    auto b = load_corpus("toy_b.gen");
    Segmentation s = segment(a, b);
    CHECK(s.shared == SymptomSet{"d", "e"});
    CHECK(s.minimize_a == SymptomSet{"a", "b", "c"});
    CHECK(s.minimize_b == SymptomSet{"f", "g", "h"});
    CHECK(s.untouched == SymptomSet{});
    CHECK(s.forced_a == SymptomSet{"d", "e"});
}

TEST_CASE("toy pair reduces to single representatives") {
    auto a = load_corpus("toy_a.gen");
    auto b = load_corpus("toy_b.gen");
    ReducedPair pair = conditional_pair(a, b);
    REQUIRE(pair.a.criteria.size() == 1);
    REQUIRE(pair.b.criteria.size() == 1);
    CHECK(pair.a.criteria[0].gen == Generator::g0({"a", "d", "e"}));
    CHECK(pair.b.criteria[0].gen == Generator::g0({"d", "e", "f"}));

    ReductionReport rep = mpcs_max_conditional(a, b);
    CHECK(rep.mpcs.value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rep.comparisons_before == 256);
    CHECK(rep.comparisons_after == 1);
}

TEST_CASE("forcing symptoms rewrites a G1 exactly") {
    auto g = Generator::g1({"a", "b", "c", "d", "e"}, 3);
    SymptomSet f{"d", "e"};
    auto forced = force_symptoms(g, f);
    REQUIRE(forced.size() == 2);
    CHECK(forced[0] == Generator::g0({"d", "e"}));
    CHECK(forced[1] == Generator::g1({"a", "b", "c"}, 1));

    Family got = eval_joined(forced);
    Family want;
    for (const auto& p : eval_generator(g))
        if (p.contains_all(f)) want.push_back(p);
    canonicalize(want);
    CHECK(got == want);
}

TEST_CASE("forcing a G3 is rejected") {
    auto g = Generator::g3({{"a"}}, {{"b"}});
    CHECK_THROWS_AS(force_symptoms(g, SymptomSet{"a"}), G3NotReducible);
}

TEST_CASE("forcing outside the domain is unsatisfiable") {
    auto g = Generator::g1({"a", "b"}, 1);
    CHECK_THROWS_AS(force_symptoms(g, SymptomSet{"z"}), Unsatisfiable);
}

TEST_CASE("minimize_fillers picks the graded-lex minimal representative") {
    auto g = Generator::g1({"a", "b", "c", "d", "e"}, 3);
    auto forced = force_symptoms(g, {"d", "e"});
    auto rep = minimize_fillers(forced, {"d", "e"});
    REQUIRE(rep.size() == 1);
    CHECK(rep[0] == Generator::g0({"a", "d", "e"}));
}

TEST_CASE("conditional equals brute on small disjoint pairs") {
    auto flu = load_corpus("flu.gen");
    auto cold = load_corpus("cold.gen");
    ReductionReport rep = mpcs_max_conditional(flu, cold);
    CHECK(rep.mpcs.value == doctest::Approx(brute_max(flu, cold)).epsilon(1e-12));

    auto ssd = load_corpus("ssd.gen");
    auto gad = load_corpus("gad.gen");
    ReductionReport rep2 = mpcs_max_conditional(ssd, gad);
    CHECK(rep2.mpcs.value == doctest::Approx(brute_max(ssd, gad)).epsilon(1e-12));
}

TEST_CASE("identical disorders reduce to similarity one") {
    auto d = load_corpus("ssd.gen");
    ReductionReport rep = mpcs_max_conditional(d, d);
    CHECK(rep.mpcs.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.comparisons_after == 1);
}

TEST_CASE("published counts feed the comparison baseline") {
    auto a = load_corpus("toy_a.gen");
    auto b = load_corpus("toy_b.gen");
    ConditionalOptions opt;
    opt.published_counts["ToyA"] = BigInt("1000000");
    ReductionReport rep = mpcs_max_conditional(a, b, opt);
    CHECK(rep.comparisons_before == BigInt("16000000"));
}

TEST_CASE("pdd vs gad reproduces the published conditional result") {
    auto pdd = load_corpus("pdd.gen");
    auto gad = load_corpus("gad.gen");
    ReductionReport rep = mpcs_max_conditional(pdd, gad);
    CHECK(rep.mpcs.value == doctest::Approx(11.0 / std::sqrt(450.0)).epsilon(1e-15));
    CHECK(rep.comparisons_before == BigInt("1722030030"));
    CHECK(rep.comparisons_after == 1);
    REQUIRE(rep.mpcs.witness.has_value());
    CHECK(rep.mpcs.witness->first.popcount() == 18);
    CHECK(rep.mpcs.witness->second.popcount() == 25);
}

TEST_CASE("pairs with G3 criteria keep per-combination representatives") {
    // A: G3 over {x,y} plus a shared-symptom criterion; B: plain G1.
    auto a = make_disorder(
        "A", {Criterion{"", Generator::g3({{"x"}, {"y"}}, {SymptomSet{}})},
              Criterion{"", Generator::g1({"s", "t", "u"}, 1)}});
    auto b = make_disorder(
        "B", {Criterion{"", Generator::g1({"s", "t", "v"}, 2)}});
    ReductionReport rep = mpcs_max_conditional(a, b);
    CHECK(rep.mpcs.value == doctest::Approx(brute_max(a, b)).epsilon(1e-12));
}

TEST_CASE("overlapping criteria cannot be reduced") {
    auto a = make_disorder(
        "A", {Criterion{"", Generator::g1({"a", "b"}, 1)},
              Criterion{"", Generator::g1({"b", "c"}, 1)}});
    auto b = load_corpus("toy_b.gen");
    CHECK_THROWS_AS(conditional_pair(a, b), OverlappingCriteria);
}
