#include "profgen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "profgen/errors.hpp"

namespace profgen::oracle {

namespace {

// Generic powerset over any ordered element type.
template <class T>
std::set<std::set<T>> ps(const std::set<T>& s) {
    if (s.size() > 20) throw OracleTooLarge("oracle powerset over 20 elements");
    std::vector<T> elems(s.begin(), s.end());
    std::set<std::set<T>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
        std::set<T> subset;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) subset.insert(elems[i]);
        out.insert(std::move(subset));
    }
    return out;
}

template <class T>
std::set<std::set<T>> sf(const std::set<std::set<T>>& f, std::size_t m) {
    std::set<std::set<T>> out;
    for (const auto& r : f)
        if (r.size() >= m) out.insert(r);
    return out;
}

// A group is a set of collections; up picks one set from each collection and
// unions the picks.
using Group = std::set<NFamily>;

NFamily up(const Group& group) {
    std::vector<NFamily> collections(group.begin(), group.end());
    NFamily out;
    std::vector<NFamily::const_iterator> pick;
    for (const auto& c : collections) {
        if (c.empty()) return out;
        pick.push_back(c.begin());
    }
    while (true) {
        NSet u;
        for (const auto& it : pick) u.insert(it->begin(), it->end());
        out.insert(std::move(u));
        if (pick.empty()) return out;
        std::size_t pos = pick.size();
        while (pos > 0) {
            --pos;
            if (++pick[pos] != collections[pos].end()) break;
            pick[pos] = collections[pos].begin();
            if (pos == 0) return out;
        }
    }
}

NFamily up_star(const std::set<Group>& groups) {
    NFamily out;
    for (const auto& g : groups) {
        NFamily part = up(g);
        out.insert(part.begin(), part.end());
    }
    return out;
}

NSet to_nset(const SymptomSet& s) { return NSet(s.begin(), s.end()); }

Group ps_star(const std::vector<SymptomSet>& sets) {
    Group out;
    for (const auto& s : sets) out.insert(sf(ps(to_nset(s)), 1));
    return out;
}

}  // namespace

NFamily naive_eval(const Generator& g) {
    switch (g.kind) {
        case GenKind::G0:
            return NFamily{to_nset(g.set)};
        case GenKind::G1:
            return sf(ps(to_nset(g.set)), g.k);
        case GenKind::G2:
            return up_star(sf(ps(ps_star(g.sets)), g.k));
        case GenKind::G3: {
            Group pair;
            NFamily f1, f2;
            for (const auto& s : g.list1) f1.insert(to_nset(s));
            for (const auto& s : g.list2) f2.insert(to_nset(s));
            pair.insert(f1);
            pair.insert(f2);
            return up(pair);
        }
        case GenKind::G4: {
            auto groups1 = sf(ps(ps_star(g.list1)), g.req_r);
            auto groups2 = sf(ps(ps_star(g.list2)), g.req_s);
            std::set<Group> merged;
            for (const auto& a : groups1)
                for (const auto& b : groups2) {
                    Group u = a;
                    u.insert(b.begin(), b.end());
                    merged.insert(std::move(u));
                }
            return up_star(sf(merged, g.req_t));
        }
    }
    return {};
}

NFamily naive_profiles(const DisorderSpec& d, std::size_t row_cap) {
    std::vector<NFamily> per_criterion;
    for (const auto& c : d.criteria) per_criterion.push_back(naive_eval(c.gen));

    NFamily acc{NSet{}};
    for (const auto& fam : per_criterion) {
        NFamily next;
        for (const auto& base : acc)
            for (const auto& p : fam) {
                NSet u = base;
                u.insert(p.begin(), p.end());
                next.insert(std::move(u));
                if (next.size() > row_cap)
                    throw OracleTooLarge("naive enumeration exceeds row cap");
            }
        acc = std::move(next);
    }
    return acc;
}

double naive_cosine(const NSet& a, const NSet& b) {
    if (a.empty() || b.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& s : a) inter += b.count(s);
    return static_cast<double>(inter) /
           std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

NaiveMpcs naive_mpcs(const DisorderSpec& a, const DisorderSpec& b, Agg agg,
                     std::size_t row_cap) {
    NFamily fa = naive_profiles(a, row_cap);
    NFamily fb = naive_profiles(b, row_cap);
    if (fa.empty() || fb.empty()) throw EmptyMatrix("naive_mpcs: empty profile set");

    NaiveMpcs res;
    auto directional_mean = [](const NFamily& xs, const NFamily& ys) {
        double sum = 0.0;
        for (const auto& x : xs) {
            double best = 0.0;
            for (const auto& y : ys) best = std::max(best, naive_cosine(x, y));
            sum += best;
        }
        return sum / static_cast<double>(xs.size());
    };

    if (agg == Agg::Max) {
        double best = -1.0;
        for (const auto& x : fa)
            for (const auto& y : fb) {
                double c = naive_cosine(x, y);
                if (c > best) {
                    best = c;
                    res.witness_a = x;
                    res.witness_b = y;
                }
            }
        res.value = res.phi_ab = res.phi_ba = best;
        res.comparisons = BigInt(fa.size()) * BigInt(fb.size());
    } else {
        res.phi_ab = directional_mean(fa, fb);
        res.phi_ba = directional_mean(fb, fa);
        res.value = std::max(res.phi_ab, res.phi_ba);
        res.comparisons = BigInt(2) * BigInt(fa.size()) * BigInt(fb.size());
    }
    return res;
}

std::size_t min_superset_size(const Generator& g, const SymptomSet& f) {
    NFamily fam = naive_eval(g);
    NSet need = NSet(f.begin(), f.end());
    std::size_t best = SIZE_MAX;
    for (const auto& p : fam) {
        if (!std::includes(p.begin(), p.end(), need.begin(), need.end())) continue;
        best = std::min(best, p.size());
    }
    if (best == SIZE_MAX)
        throw Unsatisfiable("min_superset_size: no profile contains the given set");
    return best;
}

}  // namespace profgen::oracle
