#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "profgen/symptom_set.hpp"

namespace profgen {

enum class GenKind { G0, G1, G2, G3, G4 };

const char* to_string(GenKind k);

// A profile generator. Which fields are meaningful depends on the kind:
//   G0: set                    -- the symptoms, reproduced verbatim
//   G1: set, k                 -- subsets of `set` with size >= k
//   G2: sets, k                -- at least k of the sets must contribute
//   G3: list1, list2           -- one set from each list, unioned
//   G4: list1, list2, req_*    -- per-list and total set-count thresholds
// The only place an empty set is legal is inside a G3 list, where it acts
// as a sentinel yielding each set of the other list on its own.
struct Generator {
    GenKind kind = GenKind::G0;
    SymptomSet set;
    std::size_t k = 0;
    std::vector<SymptomSet> sets;
    std::vector<SymptomSet> list1;
    std::vector<SymptomSet> list2;
    std::size_t req_r = 0;
    std::size_t req_s = 0;
    std::size_t req_t = 0;

    static Generator g0(SymptomSet s);
    static Generator g1(SymptomSet s, std::size_t k);
    static Generator g2(std::vector<SymptomSet> sets, std::size_t k);
    static Generator g3(std::vector<SymptomSet> l1, std::vector<SymptomSet> l2);
    static Generator g4(std::vector<SymptomSet> l1, std::vector<SymptomSet> l2,
                        std::size_t r, std::size_t s, std::size_t t);

    bool operator==(const Generator&) const = default;
};

// Throws InvalidGenerator if a structural constraint is violated.
void validate(const Generator& g);

// Non-fatal oddities (e.g. a zero threshold, which makes the empty profile
// valid and is almost certainly a transcription error).
std::vector<std::string> lint(const Generator& g);

struct Criterion {
    std::string label;  // optional ("A", "B", ...)
    Generator gen;

    bool operator==(const Criterion&) const = default;
};

// A named disorder: one generator per diagnostic criterion.
struct DisorderSpec {
    std::string name;
    std::vector<Criterion> criteria;
    // First-appearance order of symptoms; fixes the column order when the
    // disorder is interned into a symbol table.
    std::vector<std::string> domain_order;
    bool disjoint_criteria = true;

    bool operator==(const DisorderSpec&) const = default;
};

// Fills in domain_order (if empty, from the criteria in canonical set order)
// and the disjoint_criteria flag. Throws InvalidGenerator if a criterion is
// invalid or the criteria list is empty.
DisorderSpec make_disorder(std::string name, std::vector<Criterion> criteria,
                           std::vector<std::string> domain_order = {});

}  // namespace profgen
