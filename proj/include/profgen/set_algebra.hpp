#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "profgen/symptom_set.hpp"

namespace profgen {

using BigInt = boost::multiprecision::cpp_int;

// Families of symptom sets are kept sorted (graded-lexicographic) and
// duplicate-free, so they behave as sets under equality.
using Family = std::vector<SymptomSet>;

// Sorts and deduplicates in place.
void canonicalize(Family& f);

inline constexpr std::size_t kDefaultPowersetCap = 24;

// All 2^|s| subsets, including the empty set. Throws CapExceeded if |s|
// exceeds the element cap.
Family powerset(const SymptomSet& s, std::size_t cap_elems = kDefaultPowersetCap);

// Keeps the members of size >= m.
Family size_filter(const Family& f, std::size_t m);

// For each input set, its nonempty subsets; input order preserved.
std::vector<Family> powerset_extended(const std::vector<SymptomSet>& sets,
                                      std::size_t cap_elems = kDefaultPowersetCap);

// One member from each collection, unioned; deduplicated.
Family union_product(const std::vector<Family>& collections);

// Union of union_product over each group, deduplicated.
Family union_product_extended(const std::vector<std::vector<Family>>& groups);

// Sum_{i=k}^{n} C(n, i), exact.
BigInt count_at_least(std::size_t n, std::size_t k);

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace profgen
