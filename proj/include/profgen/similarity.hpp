#pragma once

#include <optional>
#include <utility>

#include "profgen/profile.hpp"
#include "profgen/set_algebra.hpp"

namespace profgen {

enum class Aggregation { Mean, Max };

const char* to_string(Aggregation a);

struct MpcsResult {
    double value = 0.0;
    Aggregation agg = Aggregation::Max;
    // Present for max aggregation: first maximizing pair in canonical order.
    std::optional<std::pair<Profile, Profile>> witness;
    std::size_t witness_a_index = 0;
    std::size_t witness_b_index = 0;
    BigInt comparisons = 0;  // |A|*|B| for max, 2*|A|*|B| for mean
    double phi_ab = 0.0;
    double phi_ba = 0.0;
    // An all-zero profile was compared; its cosine is defined as 0.
    bool empty_profile_seen = false;
};

struct SimilarityOptions {
    unsigned threads = 1;
    std::size_t block_rows = 4096;
};

// Binary cosine: |p AND q| / sqrt(|p| * |q|); 0 if either operand is empty.
double cosine(const Profile& p, const Profile& q);

// Maximum cosine of p against every row of m, with the index of the first
// maximizing row in canonical order. Throws EmptyMatrix.
std::pair<double, std::size_t> max_cosine(const Profile& p, const ProfileMatrix& m);

// MPCS over two matrices sharing a symbol table. The max aggregation runs a
// single |A|*|B| pass (phi_max is symmetric); mean runs both directions.
MpcsResult mpcs(const ProfileMatrix& a, const ProfileMatrix& b, Aggregation agg,
                const SimilarityOptions& opt = {});

// Cosine of two maximum-profile vectors.
double mpcs_mp(const Profile& a, const Profile& b);

// Exact pairwise comparison count for the naive path.
BigInt comparison_count(const BigInt& count_a, const BigInt& count_b);

}  // namespace profgen
