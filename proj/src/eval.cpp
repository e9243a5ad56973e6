#include "profgen/eval.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "profgen/errors.hpp"

namespace profgen {

namespace {

// Selection-count DP: number of ways to touch exactly j of the sets, where a
// touched set of size n contributes one of its 2^n - 1 nonempty subsets.
// Returns the vector N[j], j = 0..m.
std::vector<BigInt> touch_counts(const std::vector<SymptomSet>& sets) {
    std::vector<BigInt> dp(1, BigInt(1));
    for (const auto& s : sets) {
        BigInt w = (BigInt(1) << s.size()) - 1;
        dp.push_back(0);
        for (std::size_t j = dp.size() - 1; j > 0; --j) dp[j] += dp[j - 1] * w;
    }
    return dp;
}

std::vector<SymptomSet> unique_sets(const std::vector<SymptomSet>& sets) {
    std::vector<SymptomSet> out;
    for (const auto& s : sets)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
}

// Enumerates all index subsets of {0..m-1} of each size in [lo, hi],
// invoking fn on each.
template <class Fn>
void for_each_index_subset(std::size_t m, std::size_t lo, std::size_t hi, Fn&& fn) {
    for (std::size_t size = lo; size <= hi && size <= m; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        if (size == 0) {
            fn(idx);
            continue;
        }
        while (true) {
            fn(idx);
            std::size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + m - size) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
}

// Nonempty subsets of each selected set, odometer-joined into unions.
void emit_selections(const std::vector<const SymptomSet*>& chosen, Family& out) {
    std::vector<std::uint64_t> mask(chosen.size(), 1);
    if (chosen.empty()) {
        out.push_back(SymptomSet{});
        return;
    }
    while (true) {
        std::vector<std::string> u;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const auto& elems = chosen[i]->elements();
            for (std::size_t b = 0; b < elems.size(); ++b)
                if (mask[i] & (std::uint64_t{1} << b)) u.push_back(elems[b]);
        }
        out.push_back(SymptomSet(std::move(u)));

        std::size_t pos = chosen.size();
        while (pos > 0) {
            --pos;
            std::uint64_t full = (std::uint64_t{1} << chosen[pos]->size()) - 1;
            if (++mask[pos] <= full) break;
            mask[pos] = 1;
            if (pos == 0) return;
        }
    }
}

void check_cap(const BigInt& bound, std::size_t cap, const char* what) {
    if (bound > BigInt(cap))
        throw CapExceeded(std::string(what) + ": predicted " + bound.str() +
                          " combinations exceed cap of " + std::to_string(cap));
}

void check_subset_width(const std::vector<SymptomSet>& sets, const char* what) {
    for (const auto& s : sets)
        if (s.size() > 63)
            throw CapExceeded(std::string(what) +
                              ": individual sets above 63 symptoms unsupported");
}

Family eval_g2(const Generator& g, std::size_t cap) {
    // Duplicate inputs collapse (the formula operates on a *set* of sets).
    std::vector<SymptomSet> sets = unique_sets(g.sets);
    check_subset_width(sets, "G2");
    const std::size_t m = sets.size();
    // Duplicates collapse, so the threshold can become unreachable.
    if (g.k > m) return {};
    const std::size_t k = g.k;

    auto dp = touch_counts(sets);
    BigInt bound = 0;
    for (std::size_t j = k; j <= m; ++j) bound += dp[j];
    check_cap(bound, cap, "G2");

    Family out;
    for_each_index_subset(m, k, m, [&](const std::vector<std::size_t>& idx) {
        std::vector<const SymptomSet*> chosen;
        for (std::size_t i : idx) chosen.push_back(&sets[i]);
        emit_selections(chosen, out);
    });
    canonicalize(out);
    return out;
}

Family eval_g3(const Generator& g) {
    Family out;
    for (const auto& a : g.list1)
        for (const auto& b : g.list2) out.push_back(a.unified(b));
    canonicalize(out);
    return out;
}

Family eval_g4(const Generator& g, std::size_t cap) {
    std::vector<SymptomSet> l1 = unique_sets(g.list1);
    std::vector<SymptomSet> l2 = unique_sets(g.list2);
    check_subset_width(l1, "G4");
    check_subset_width(l2, "G4");
    const std::size_t n1 = l1.size(), n2 = l2.size();

    // A set present in both lists counts once toward the total threshold.
    std::vector<std::size_t> cross(n2, n1);  // index into l1, or n1 if absent
    bool has_cross = false;
    for (std::size_t j = 0; j < n2; ++j) {
        auto it = std::find(l1.begin(), l1.end(), l2[j]);
        if (it != l1.end()) {
            cross[j] = static_cast<std::size_t>(it - l1.begin());
            has_cross = true;
        }
    }

    if (!has_cross) {
        auto dp1 = touch_counts(l1);
        auto dp2 = touch_counts(l2);
        BigInt bound = 0;
        for (std::size_t j1 = g.req_r; j1 <= n1; ++j1)
            for (std::size_t j2 = g.req_s; j2 <= n2; ++j2)
                if (j1 + j2 >= g.req_t) bound += dp1[j1] * dp2[j2];
        check_cap(bound, cap, "G4");
    } else if (n1 + n2 > 24) {
        throw CapExceeded("G4: duplicate sets across lists with more than 24 sets");
    }

    Family out;
    for_each_index_subset(n1, g.req_r, n1, [&](const std::vector<std::size_t>& t1) {
        for_each_index_subset(n2, g.req_s, n2, [&](const std::vector<std::size_t>& t2) {
            // Distinct selected sets (cross-list duplicates merge).
            std::vector<const SymptomSet*> chosen;
            for (std::size_t i : t1) chosen.push_back(&l1[i]);
            for (std::size_t j : t2) {
                if (cross[j] < n1 &&
                    std::find(t1.begin(), t1.end(), cross[j]) != t1.end())
                    continue;
                chosen.push_back(&l2[j]);
            }
            if (chosen.size() < g.req_t) return;
            emit_selections(chosen, out);
            if (out.size() > cap * 2 + 64)
                throw CapExceeded("G4: combination cap exceeded during enumeration");
        });
    });
    canonicalize(out);
    return out;
}

}  // namespace

BigInt eval_size_bound(const Generator& g) {
    switch (g.kind) {
        case GenKind::G0:
            return 1;
        case GenKind::G1:
            return count_at_least(g.set.size(), g.k);
        case GenKind::G2: {
            auto sets = unique_sets(g.sets);
            if (g.k > sets.size()) return 0;
            auto dp = touch_counts(sets);
            BigInt bound = 0;
            for (std::size_t j = g.k; j < dp.size(); ++j) bound += dp[j];
            return bound;
        }
        case GenKind::G3:
            return BigInt(g.list1.size()) * BigInt(g.list2.size());
        case GenKind::G4: {
            auto l1 = unique_sets(g.list1);
            auto l2 = unique_sets(g.list2);
            auto dp1 = touch_counts(l1);
            auto dp2 = touch_counts(l2);
            BigInt bound = 0;
            for (std::size_t j1 = g.req_r; j1 < dp1.size(); ++j1)
                for (std::size_t j2 = g.req_s; j2 < dp2.size(); ++j2)
                    if (j1 + j2 >= g.req_t) bound += dp1[j1] * dp2[j2];
            return bound;
        }
    }
    return 0;
}

Family eval_generator(const Generator& g, std::size_t cap) {
    validate(g);
    switch (g.kind) {
        case GenKind::G0:
            return Family{g.set};
        case GenKind::G1: {
            check_cap(count_at_least(g.set.size(), g.k), cap, "G1");
            const auto& elems = g.set.elements();
            Family out;
            for_each_index_subset(elems.size(), g.k, elems.size(),
                                  [&](const std::vector<std::size_t>& idx) {
                                      std::vector<std::string> subset;
                                      for (std::size_t i : idx)
                                          subset.push_back(elems[i]);
                                      out.push_back(SymptomSet(std::move(subset)));
                                  });
            canonicalize(out);
            return out;
        }
        case GenKind::G2:
            return eval_g2(g, cap);
        case GenKind::G3:
            return eval_g3(g);
        case GenKind::G4:
            return eval_g4(g, cap);
    }
    return {};
}

SymptomSet generator_domain(const Generator& g) {
    SymptomSet d = g.set;
    for (const auto& s : g.sets) d = d.unified(s);
    for (const auto& s : g.list1) d = d.unified(s);
    for (const auto& s : g.list2) d = d.unified(s);
    return d;
}

SymptomSet necessary_symptoms(const Generator& g, std::size_t cap) {
    Family profiles = eval_generator(g, cap);
    if (profiles.empty()) return {};
    SymptomSet common = profiles.front();
    for (std::size_t i = 1; i < profiles.size() && !common.empty(); ++i)
        common = common.intersected(profiles[i]);
    return common;
}

SymptomSet disorder_domain(const DisorderSpec& d) {
    SymptomSet out;
    for (const auto& c : d.criteria) out = out.unified(generator_domain(c.gen));
    return out;
}

}  // namespace profgen
