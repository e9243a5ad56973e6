#pragma once

#include <map>
#include <optional>
#include <string>

#include "profgen/engine.hpp"
#include "profgen/similarity.hpp"

namespace profgen {

// Symptom classes for the conditional-generator rewrite of a disorder pair.
struct Segmentation {
    SymptomSet shared;       // relevant to both disorders, G3-free
    SymptomSet minimize_a;   // only in A, G3-free
    SymptomSet minimize_b;   // only in B, G3-free
    SymptomSet untouched;    // appears in a G3 generator of either disorder
    SymptomSet necessary_a;  // present in every profile of A
    SymptomSet necessary_b;
    SymptomSet forced_a;     // shared + necessary_a
    SymptomSet forced_b;
};

struct ReductionReport {
    Segmentation segmentation;
    DisorderSpec reduced_a;
    DisorderSpec reduced_b;
    MpcsResult mpcs;
    BigInt comparisons_before = 0;
    bool comparisons_before_known = false;
    BigInt comparisons_after = 0;
};

Segmentation segment(const DisorderSpec& a, const DisorderSpec& b);

// Rewrites a non-G3 generator so that its joint evaluation is exactly
// {p in eval(g) : f subseteq p}. The returned generators are joined by the
// union product. Throws Unsatisfiable if f is not within the domain,
// G3NotReducible for G3.
std::vector<Generator> force_symptoms(const Generator& g, const SymptomSet& f);

// Collapses all free choice in a post-force generator list to one canonical
// minimal-cardinality representative containing `keep`.
std::vector<Generator> minimize_fillers(const std::vector<Generator>& gs,
                                        const SymptomSet& keep);

struct ReducedPair {
    DisorderSpec a;
    DisorderSpec b;
    Segmentation segmentation;
};

// Applies segment + per-criterion force/minimize; G3 criteria pass through
// verbatim. Criteria whose domain meets the untouched class keep one
// minimal representative per untouched combination.
ReducedPair conditional_pair(const DisorderSpec& a, const DisorderSpec& b);

struct ConditionalOptions {
    // Published profile counts by disorder name, used for
    // comparisons_before when a count is injected rather than computed.
    std::map<std::string, BigInt> published_counts;
    std::size_t eval_cap = kDefaultEvalCap;
    unsigned threads = 1;
};

// Full conditional MPCS_max: reduce, enumerate the reduced pair over the
// shared table of the original disorders, and run the max-aggregation MPCS.
ReductionReport mpcs_max_conditional(const DisorderSpec& a, const DisorderSpec& b,
                                     const ConditionalOptions& opt = {});

}  // namespace profgen
