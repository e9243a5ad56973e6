#pragma once

#include <functional>
#include <iosfwd>
#include <memory>

#include "profgen/eval.hpp"
#include "profgen/profile.hpp"

namespace profgen {

inline constexpr std::size_t kDefaultRowCap = std::size_t{1} << 26;

struct EnumerateOptions {
    std::size_t eval_cap = kDefaultEvalCap;
    // Bound on materialized rows when overlapping criteria force a global
    // dedup pass.
    std::size_t row_cap = kDefaultRowCap;
};

// Streams every profile of the disorder exactly once. Iteration is
// odometer-style over the criteria in listed order, each criterion's
// combinations in canonical order. When criterion domains overlap the
// stream materializes and deduplicates up front (bounded by row_cap).
class ProfileStream {
public:
    ProfileStream(const DisorderSpec& d, std::shared_ptr<const SymbolTable> table,
                  EnumerateOptions opt = {});

    // Restricts the stream to a sub-range of the odometer index space
    // [begin, end); chunked streams partition the full enumeration.
    ProfileStream(const DisorderSpec& d, std::shared_ptr<const SymbolTable> table,
                  std::uint64_t begin, std::uint64_t end, EnumerateOptions opt = {});

    bool next(Profile& out);
    std::uint64_t total() const { return end_ - begin_; }

private:
    std::shared_ptr<const SymbolTable> table_;
    std::vector<std::vector<Profile>> per_criterion_;
    std::vector<Profile> deduped_;  // used when criteria overlap
    bool use_dedup_ = false;
    std::uint64_t begin_ = 0;
    std::uint64_t end_ = 0;
    std::uint64_t cursor_ = 0;
};

ProfileStream enumerate_profiles(const DisorderSpec& d,
                                 std::shared_ptr<const SymbolTable> table,
                                 EnumerateOptions opt = {});

// Exact number of distinct profiles. Requires pairwise-disjoint criterion
// domains (throws OverlappingCriteria otherwise).
BigInt count_profiles(const DisorderSpec& d, std::size_t eval_cap = kDefaultEvalCap);

// Bit-or over all profiles, computed directly from the generator domains.
Profile max_profile(const DisorderSpec& d, const SymbolTable& table);

// Materializes the full enumeration as a canonical matrix.
ProfileMatrix materialize(const DisorderSpec& d,
                          std::shared_ptr<const SymbolTable> table,
                          EnumerateOptions opt = {});

// Writes the AP matrix as CSV (header row of symptom names, then 0/1 rows in
// canonical order). Returns the number of data rows written.
std::size_t export_matrix(const ProfileMatrix& m, std::ostream& sink,
                          bool with_header = true);

// Writes the header plus one MP row.
std::size_t export_max_profile(const DisorderSpec& d, const SymbolTable& table,
                               std::ostream& sink, bool with_header = true);

}  // namespace profgen
