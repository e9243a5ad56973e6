#pragma once

#include "profgen/generator.hpp"
#include "profgen/set_algebra.hpp"

namespace profgen {

// Evaluation refuses to materialize more than this many combinations;
// callers with larger generators must use the streaming engine.
inline constexpr std::size_t kDefaultEvalCap = std::size_t{1} << 24;

// Exact upper bound on the number of selection tuples the generator
// produces (equals the exact profile count when its sets are disjoint).
BigInt eval_size_bound(const Generator& g);

// The full, duplicate-free set of symptom combinations of g, in
// graded-lexicographic order. Throws CapExceeded / InvalidGenerator.
Family eval_generator(const Generator& g, std::size_t cap = kDefaultEvalCap);

// Union of all symptom names occurring in g; equals the union over
// eval_generator(g) for any valid generator.
SymptomSet generator_domain(const Generator& g);

// Intersection of all combinations of g, computed by enumeration.
SymptomSet necessary_symptoms(const Generator& g, std::size_t cap = kDefaultEvalCap);

SymptomSet disorder_domain(const DisorderSpec& d);

}  // namespace profgen
