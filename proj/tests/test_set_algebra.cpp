#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "profgen/set_algebra.hpp"
#include "profgen/errors.hpp"

using namespace profgen;

TEST_CASE("powerset of a three-element set") {
    Family f = powerset(SymptomSet{"a", "b", "c"});
    CHECK(f.size() == 8);
    CHECK(f.front() == SymptomSet{});
    CHECK(f.back() == SymptomSet{"a", "b", "c"});
    // graded-lex order
    for (std::size_t i = 1; i < f.size(); ++i)
        CHECK(SymptomSet::graded_less(f[i - 1], f[i]));
}

TEST_CASE("powerset element cap") {
    std::vector<std::string> big;
    for (int i = 0; i < 25; ++i) big.push_back("s" + std::to_string(i));
    CHECK_THROWS_AS(powerset(SymptomSet(big)), CapExceeded);
}

TEST_CASE("size filter keeps members at or above the threshold") {
    Family f{{"a"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "c", "d"}};
    Family kept = size_filter(f, 3);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == SymptomSet{"a", "b", "c"});
    CHECK(kept[1] == SymptomSet{"a", "b", "c", "d"});
}

TEST_CASE("extended powerset drops only the empty set") {
    auto fams = powerset_extended({{"a", "b"}, {"c", "d"}});
    REQUIRE(fams.size() == 2);
    CHECK(fams[0] == Family{{"a"}, {"b"}, {"a", "b"}});
    CHECK(fams[1] == Family{{"c"}, {"d"}, {"c", "d"}});
}

TEST_CASE("union product pairs one member from each collection") {
    Family left{{"a", "b"}, {"c"}};
    Family right{{"d", "e"}, {"f"}};
    Family got = union_product({left, right});
    Family want{{"c", "f"}, {"a", "b", "f"}, {"c", "d", "e"}, {"a", "b", "d", "e"}};
    canonicalize(want);
    CHECK(got == want);
}

TEST_CASE("union product of no collections is the singleton empty set") {
    Family got = union_product({});
    REQUIRE(got.size() == 1);
    CHECK(got[0] == SymptomSet{});
}

TEST_CASE("union product with an empty collection is empty") {
    Family got = union_product({Family{{"a"}}, Family{}});
    CHECK(got.empty());
}

TEST_CASE("extended union product merges per-group products") {
    // groups: ({{a,b},{c}} x {{d}}) and ({{a,b},{c}} x {{e}})
    std::vector<std::vector<Family>> groups{
        {Family{{"a", "b"}, {"c"}}, Family{{"d"}}},
        {Family{{"a", "b"}, {"c"}}, Family{{"e"}}},
    };
    Family got = union_product_extended(groups);
    Family want{{"a", "b", "d"}, {"c", "d"}, {"a", "b", "e"}, {"c", "e"}};
    canonicalize(want);
    CHECK(got == want);
}

TEST_CASE("union product deduplicates across choices") {
    Family left{{"a"}, {"a", "b"}};
    Family right{{"b"}};
    Family got = union_product({left, right});
    Family want{{"a", "b"}};
    CHECK(got == want);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(6, 7) == 0);
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

TEST_CASE("count_at_least equals the tail sum of binomials") {
    for (std::size_t n = 0; n <= 16; ++n) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
            BigInt sum = 0;
            for (std::size_t i = k; i <= n; ++i) sum += binomial(n, i);
            CHECK(count_at_least(n, k) == sum);
        }
    }
}

TEST_CASE("count_at_least matches subset enumeration") {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            std::size_t brute = 0;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) >= k)
                    ++brute;
            CHECK(count_at_least(n, k) == brute);
        }
    }
}

TEST_CASE("canonicalize sorts graded-lex and deduplicates") {
    Family f{{"b", "c"}, {"a"}, {"b", "c"}, {"z"}, {"a", "b", "c"}};
    canonicalize(f);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == SymptomSet{"a"});
    CHECK(f[1] == SymptomSet{"z"});
    CHECK(f[2] == SymptomSet{"b", "c"});
    CHECK(f[3] == SymptomSet{"a", "b", "c"});
}
