#pragma once

#include <set>
#include <string>

#include "profgen/generator.hpp"
#include "profgen/set_algebra.hpp"

// Deliberately naive reference implementations used to validate the fast
// paths. No interning, no bitsets; everything is literal set-of-sets algebra
// over strings so a shared bug with the main modules is structurally unlikely.
namespace profgen::oracle {

using NSet = std::set<std::string>;
using NFamily = std::set<NSet>;

struct NaiveMpcs {
    double value = 0.0;
    NSet witness_a;
    NSet witness_b;
    BigInt comparisons = 0;
    double phi_ab = 0.0;
    double phi_ba = 0.0;
};

inline constexpr std::size_t kOracleFamilyCap = std::size_t{1} << 20;
inline constexpr std::size_t kOracleRowCap = 100000;

// Literal composition of ps / sf / ps* / up / up* per generator kind.
NFamily naive_eval(const Generator& g);

// Full Cartesian enumeration of a disorder's profiles.
NFamily naive_profiles(const DisorderSpec& d, std::size_t row_cap = kOracleRowCap);

enum class Agg { Mean, Max };

// Exhaustive double loop over both profile families.
NaiveMpcs naive_mpcs(const DisorderSpec& a, const DisorderSpec& b, Agg agg,
                     std::size_t row_cap = kOracleRowCap);

// min{|p| : p in naive_eval(g), f subseteq p}; throws Unsatisfiable if none.
std::size_t min_superset_size(const Generator& g, const SymptomSet& f);

double naive_cosine(const NSet& a, const NSet& b);

}  // namespace profgen::oracle
