#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "profgen/spec_io.hpp"
#include "test_support.hpp"

using namespace profgen;

TEST_CASE("dsl shape inference covers all five variants") {
    auto g0 = parse_dsl_generator("[{a, b, c, d}]");
    REQUIRE(g0.spec);
    CHECK(g0.spec->criteria[0].gen == Generator::g0({"a", "b", "c", "d"}));

    auto g1 = parse_dsl_generator("[{a,b,c}, 2]");
    REQUIRE(g1.spec);
    CHECK(g1.spec->criteria[0].gen == Generator::g1({"a", "b", "c"}, 2));

    auto g2 = parse_dsl_generator("[{a,b}, {c,d}, {e,f}, 2]");
    REQUIRE(g2.spec);
    CHECK(g2.spec->criteria[0].gen ==
          Generator::g2({{"a", "b"}, {"c", "d"}, {"e", "f"}}, 2));

    auto g3 = parse_dsl_generator("[[{a,b}, {c}], [{d}, {e,f}]]");
    REQUIRE(g3.spec);
    CHECK(g3.spec->criteria[0].gen ==
          Generator::g3({{"a", "b"}, {"c"}}, {{"d"}, {"e", "f"}}));

    auto g4 = parse_dsl_generator("[[{a,b}, {c}], [{d}, {e,f}], (1,0,3)]");
    REQUIRE(g4.spec);
    CHECK(g4.spec->criteria[0].gen ==
          Generator::g4({{"a", "b"}, {"c"}}, {{"d"}, {"e", "f"}}, 1, 0, 3));
}

TEST_CASE("empty-set sentinel parses inside a G3 second list") {
    auto res = parse_dsl_generator("[[{a}, {b}], [{}]]");
    REQUIRE(res.spec);
    CHECK(res.spec->criteria[0].gen ==
          Generator::g3({{"a"}, {"b"}}, {SymptomSet{}}));
}

TEST_CASE("unmatchable bracket shapes are ambiguous") {
    auto res = parse_dsl_generator("[{a}, {b}]");  // two sets, no trailing count
    CHECK_FALSE(res.spec);
    REQUIRE_FALSE(res.diagnostics.entries.empty());
    CHECK(res.diagnostics.entries.front().code == "AmbiguousVariant");
}

TEST_CASE("structural violations carry the constraint text") {
    auto res = parse_dsl_generator("[{a}, {b}, 3]");  // G2 with k > m
    CHECK_FALSE(res.spec);
    bool found = false;
    for (const auto& e : res.diagnostics.entries)
        if (e.code == "InvalidGenerator" &&
            e.message.find("k <= m") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("dsl disorder with name, labels, and comments") {
    std::string text =
        "name: demo\n"
        "# header remark that is not a label\n"
        "[{alpha, beta}]  # A\n"
        "[{gamma, delta}, 1]  # B\n";
    auto res = parse_dsl(text);
    REQUIRE(res.spec);
    CHECK(res.spec->name == "demo");
    REQUIRE(res.spec->criteria.size() == 2);
    CHECK(res.spec->criteria[0].label == "A");
    CHECK(res.spec->criteria[1].label == "B");
    std::vector<std::string> order{"alpha", "beta", "gamma", "delta"};
    CHECK(res.spec->domain_order == order);
}

TEST_CASE("canonical format parses every variant") {
    std::string text =
        "name: demo\n"
        "criterion:\n"
        "  label: A\n"
        "  gen: G1\n"
        "  set: {x, y, z}\n"
        "  k: 2\n"
        "criterion:\n"
        "  gen: G4\n"
        "  list1: [{p}, {q}]\n"
        "  list2: [{r, s}]\n"
        "  req: (1, 0, 2)\n";
    auto res = parse_canonical(text);
    REQUIRE(res.spec);
    CHECK(res.spec->criteria[0].label == "A");
    CHECK(res.spec->criteria[0].gen == Generator::g1({"x", "y", "z"}, 2));
    CHECK(res.spec->criteria[1].gen ==
          Generator::g4({{"p"}, {"q"}}, {{"r", "s"}}, 1, 0, 2));
    std::vector<std::string> order{"x", "y", "z", "p", "q", "r", "s"};
    CHECK(res.spec->domain_order == order);
}

TEST_CASE("canonical format rejects mismatched fields") {
    std::string text =
        "criterion:\n"
        "  gen: G0\n"
        "  set: {a}\n"
        "  k: 1\n";
    auto res = parse_canonical(text);
    CHECK_FALSE(res.spec);
}

TEST_CASE("auto detection distinguishes the two formats") {
    std::string dsl = "name: x\n[{a}, 1]\n";
    std::string canon = "name: x\ncriterion:\n  gen: G1\n  set: {a}\n  k: 1\n";
    auto r1 = parse_auto(dsl);
    auto r2 = parse_auto(canon);
    REQUIRE(r1.spec);
    REQUIRE(r2.spec);
    CHECK(r1.spec->criteria == r2.spec->criteria);
}

TEST_CASE("round trips over the corpus in both formats") {
    for (const char* file :
         {"pdd.gen", "gad.gen", "ssd.gen", "flu.gen", "cold.gen", "toy_a.gen",
          "toy_b.gen", "schizophrenia_crit_a_g2.gen",
          "schizophrenia_crit_a_g4.gen"}) {
        auto d = testsupport::load_corpus(file);
        for (SpecFormat fmt : {SpecFormat::Dsl, SpecFormat::Canonical}) {
            auto back = parse_auto(serialize(d, fmt), d.name);
            REQUIRE(back.spec);
            CHECK(back.spec->name == d.name);
            CHECK(back.spec->criteria == d.criteria);
        }
    }
}

TEST_CASE("warnings do not block parsing") {
    auto res = parse_dsl("[{a, b}, 0]\n");
    REQUIRE(res.spec);
    bool warned = false;
    for (const auto& e : res.diagnostics.entries)
        if (!e.is_error) warned = true;
    CHECK(warned);
}

TEST_CASE("overlapping criterion domains warn but parse") {
    auto res = parse_dsl("[{a, b}]\n[{b, c}, 1]\n");
    REQUIRE(res.spec);
    CHECK_FALSE(res.spec->disjoint_criteria);
}

TEST_CASE("bad characters are reported with positions") {
    auto res = parse_dsl("[{a-b}]\n");
    CHECK_FALSE(res.spec);
    REQUIRE_FALSE(res.diagnostics.entries.empty());
    CHECK(res.diagnostics.entries.front().line == 1);
}

TEST_CASE("symptom name charset") {
    CHECK(valid_symptom_name("Runny_Nose"));
    CHECK(valid_symptom_name("x2"));
    CHECK_FALSE(valid_symptom_name(""));
    CHECK_FALSE(valid_symptom_name("a,b"));
    CHECK_FALSE(valid_symptom_name("a b"));
}

TEST_CASE("serialize emits the sentinel explicitly") {
    auto d = make_disorder(
        "s", {Criterion{"", Generator::g3({{"a"}}, {SymptomSet{}})}});
    std::string dsl = serialize(d, SpecFormat::Dsl);
    CHECK(dsl.find("[{}]") != std::string::npos);
    auto back = parse_auto(dsl, "s");
    REQUIRE(back.spec);
    CHECK(back.spec->criteria == d.criteria);
}
