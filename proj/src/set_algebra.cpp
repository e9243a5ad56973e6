#include "profgen/set_algebra.hpp"

#include <algorithm>

#include "profgen/errors.hpp"

namespace profgen {

void canonicalize(Family& f) {
    std::sort(f.begin(), f.end(), SymptomSet::graded_less);
    f.erase(std::unique(f.begin(), f.end()), f.end());
}

Family powerset(const SymptomSet& s, std::size_t cap_elems) {
    if (s.size() > cap_elems)
        throw CapExceeded("powerset: |S| = " + std::to_string(s.size()) +
                          " exceeds cap of " + std::to_string(cap_elems));
    const auto& elems = s.elements();
    const std::size_t n = elems.size();
    Family out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::string> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.push_back(elems[i]);
        out.push_back(SymptomSet(std::move(subset)));
    }
    canonicalize(out);
    return out;
}

Family size_filter(const Family& f, std::size_t m) {
    Family out;
    for (const auto& r : f)
        if (r.size() >= m) out.push_back(r);
    canonicalize(out);
    return out;
}

std::vector<Family> powerset_extended(const std::vector<SymptomSet>& sets,
                                      std::size_t cap_elems) {
    std::vector<Family> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(size_filter(powerset(s, cap_elems), 1));
    return out;
}

Family union_product(const std::vector<Family>& collections) {
    Family out;
    if (collections.empty()) {
        out.push_back(SymptomSet{});  // empty product: one empty union
        return out;
    }
    for (const auto& c : collections)
        if (c.empty()) return out;  // no way to pick a member

    std::vector<std::size_t> idx(collections.size(), 0);
    while (true) {
        SymptomSet u;
        for (std::size_t i = 0; i < collections.size(); ++i)
            u = u.unified(collections[i][idx[i]]);
        out.push_back(std::move(u));

        std::size_t pos = collections.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < collections[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) {
                canonicalize(out);
                return out;
            }
        }
    }
}

Family union_product_extended(const std::vector<std::vector<Family>>& groups) {
    Family out;
    for (const auto& g : groups) {
        Family part = union_product(g);
        out.insert(out.end(), part.begin(), part.end());
    }
    canonicalize(out);
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);
    }
    return result;
}

BigInt count_at_least(std::size_t n, std::size_t k) {
    BigInt total = 0;
    for (std::size_t i = k; i <= n; ++i) total += binomial(n, i);
    return total;
}

}  // namespace profgen
