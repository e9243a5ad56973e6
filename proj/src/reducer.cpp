#include "profgen/reducer.hpp"

#include <algorithm>
#include <map>

namespace profgen {

namespace {

SymptomSet disorder_necessary(const DisorderSpec& d, std::size_t eval_cap) {
    SymptomSet out;
    for (const auto& c : d.criteria)
        out = out.unified(necessary_symptoms(c.gen, eval_cap));
    return out;
}

SymptomSet g3_domains(const DisorderSpec& d) {
    SymptomSet out;
    for (const auto& c : d.criteria)
        if (c.gen.kind == GenKind::G3) out = out.unified(generator_domain(c.gen));
    return out;
}

// Splits forced symptoms off a list of sets. Returns the host-set indices.
std::vector<std::size_t> host_indices(const std::vector<SymptomSet>& sets,
                                      const SymptomSet& f) {
    std::vector<std::size_t> hosts;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].intersects(f)) hosts.push_back(i);
    return hosts;
}

// Thresholds count *distinct* sets, so duplicates must collapse first.
std::vector<SymptomSet> unique_sets(const std::vector<SymptomSet>& sets) {
    std::vector<SymptomSet> out;
    for (const auto& s : sets)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
}

// Evaluates a post-force generator list (union product of its members).
Family eval_list(const std::vector<Generator>& gs, std::size_t cap) {
    std::vector<Family> parts;
    parts.reserve(gs.size());
    for (const auto& g : gs) parts.push_back(eval_generator(g, cap));
    return union_product(parts);
}

// One minimal-cardinality member of a family, ties broken graded-lex.
SymptomSet minimal_member(const Family& fam) {
    const SymptomSet* best = nullptr;
    for (const auto& p : fam)
        if (!best || SymptomSet::graded_less(p, *best)) best = &p;
    return *best;
}

// Encodes an explicit finite family as a single generator. Families that
// contain the empty profile need the pairwise-union empty-set sentinel.
Generator encode_family(Family fam) {
    canonicalize(fam);
    if (fam.size() == 1 && !fam.front().empty()) return Generator::g0(fam.front());
    return Generator::g3(std::move(fam), {SymptomSet{}});
}

}  // namespace

Segmentation segment(const DisorderSpec& a, const DisorderSpec& b) {
    Segmentation s;
    SymptomSet dom_a = disorder_domain(a);
    SymptomSet dom_b = disorder_domain(b);
    s.untouched = g3_domains(a).unified(g3_domains(b));
    s.shared = dom_a.intersected(dom_b).minus(s.untouched);
    s.minimize_a = dom_a.minus(dom_b).minus(s.untouched);
    s.minimize_b = dom_b.minus(dom_a).minus(s.untouched);
    s.necessary_a = disorder_necessary(a, kDefaultEvalCap);
    s.necessary_b = disorder_necessary(b, kDefaultEvalCap);
    s.forced_a = s.shared.unified(s.necessary_a);
    s.forced_b = s.shared.unified(s.necessary_b);
    return s;
}

std::vector<Generator> force_symptoms(const Generator& g, const SymptomSet& f) {
    if (g.kind == GenKind::G3)
        throw G3NotReducible("force_symptoms: G3 criteria are not reducible");
    if (!generator_domain(g).contains_all(f))
        throw Unsatisfiable("force_symptoms: forced set outside generator domain");
    if (f.empty()) return {g};

    std::vector<Generator> out;
    switch (g.kind) {
        case GenKind::G0:
            out.push_back(g);
            break;
        case GenKind::G1: {
            out.push_back(Generator::g0(f));
            SymptomSet rest = g.set.minus(f);
            std::size_t residual = g.k > f.size() ? g.k - f.size() : 0;
            if (!rest.empty()) out.push_back(Generator::g1(rest, residual));
            break;
        }
        case GenKind::G2: {
            std::vector<SymptomSet> sets = unique_sets(g.sets);
            if (g.k > sets.size())
                throw Unsatisfiable(
                    "force_symptoms: threshold exceeds distinct set count");
            auto hosts = host_indices(sets, f);
            std::size_t residual = g.k > hosts.size() ? g.k - hosts.size() : 0;
            out.push_back(Generator::g0(f));

            std::vector<SymptomSet> nonhost;
            SymptomSet nonhost_domain;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (std::find(hosts.begin(), hosts.end(), i) == hosts.end()) {
                    nonhost.push_back(sets[i]);
                    nonhost_domain = nonhost_domain.unified(sets[i]);
                }
            // Host leftovers that touch no non-host set are freely optional.
            SymptomSet host_only;
            for (std::size_t i : hosts)
                host_only = host_only.unified(sets[i]);
            host_only = host_only.minus(f).minus(nonhost_domain);
            if (!host_only.empty()) out.push_back(Generator::g1(host_only, 0));
            if (!nonhost.empty()) out.push_back(Generator::g2(nonhost, residual));
            break;
        }
        case GenKind::G4: {
            std::vector<SymptomSet> l1 = unique_sets(g.list1);
            std::vector<SymptomSet> l2 = unique_sets(g.list2);
            // Total-threshold accounting merges sets shared across the lists.
            std::size_t distinct_total = l1.size();
            for (const auto& set2 : l2)
                if (std::find(l1.begin(), l1.end(), set2) == l1.end())
                    ++distinct_total;
            if (g.req_r > l1.size() || g.req_s > l2.size() ||
                g.req_t > distinct_total)
                throw Unsatisfiable(
                    "force_symptoms: threshold exceeds distinct set count");
            auto hosts1 = host_indices(l1, f);
            auto hosts2 = host_indices(l2, f);
            std::size_t r = g.req_r > hosts1.size() ? g.req_r - hosts1.size() : 0;
            std::size_t s = g.req_s > hosts2.size() ? g.req_s - hosts2.size() : 0;
            std::size_t touched = hosts1.size();
            for (std::size_t j : hosts2)
                if (std::find(l1.begin(), l1.end(), l2[j]) == l1.end()) ++touched;
            std::size_t t = g.req_t > touched ? g.req_t - touched : 0;
            out.push_back(Generator::g0(f));

            auto split = [&](const std::vector<SymptomSet>& list,
                             const std::vector<std::size_t>& hosts,
                             std::vector<SymptomSet>& nonhost, SymptomSet& host_all,
                             SymptomSet& nonhost_domain) {
                for (std::size_t i = 0; i < list.size(); ++i) {
                    if (std::find(hosts.begin(), hosts.end(), i) == hosts.end()) {
                        nonhost.push_back(list[i]);
                        nonhost_domain = nonhost_domain.unified(list[i]);
                    } else {
                        host_all = host_all.unified(list[i]);
                    }
                }
            };
            std::vector<SymptomSet> nonhost1, nonhost2;
            SymptomSet host_all, nonhost_domain;
            split(l1, hosts1, nonhost1, host_all, nonhost_domain);
            split(l2, hosts2, nonhost2, host_all, nonhost_domain);
            SymptomSet host_only = host_all.minus(f).minus(nonhost_domain);
            if (!host_only.empty()) out.push_back(Generator::g1(host_only, 0));

            if (!nonhost1.empty() && !nonhost2.empty()) {
                out.push_back(Generator::g4(nonhost1, nonhost2, r, s, t));
            } else if (!nonhost1.empty()) {
                out.push_back(Generator::g2(nonhost1, std::max(r, t)));
            } else if (!nonhost2.empty()) {
                out.push_back(Generator::g2(nonhost2, std::max(s, t)));
            }
            break;
        }
        case GenKind::G3:
            break;  // unreachable
    }
    return out;
}

std::vector<Generator> minimize_fillers(const std::vector<Generator>& gs,
                                        const SymptomSet& keep) {
    Family fam = eval_list(gs, kDefaultEvalCap);
    Family containing;
    for (const auto& p : fam)
        if (p.contains_all(keep)) containing.push_back(p);
    if (containing.empty())
        throw Unsatisfiable("minimize_fillers: no profile contains the kept set");
    return {encode_family({minimal_member(containing)})};
}

namespace {

// Reduces one non-G3 criterion: force, then keep one minimal representative
// per untouched-symptom combination.
Generator reduce_criterion(const Generator& g, const SymptomSet& forced,
                           const SymptomSet& untouched, std::size_t eval_cap) {
    SymptomSet dom = generator_domain(g);
    SymptomSet f = forced.intersected(dom);
    std::vector<Generator> forced_list = force_symptoms(g, f);

    if (!dom.intersects(untouched)) {
        auto rep = minimize_fillers(forced_list, f);
        return rep.front();
    }

    Family fam = eval_list(forced_list, eval_cap);
    std::map<SymptomSet, SymptomSet> best_per_projection;
    for (const auto& p : fam) {
        SymptomSet u = p.intersected(untouched);
        auto [it, inserted] = best_per_projection.try_emplace(u, p);
        if (!inserted && SymptomSet::graded_less(p, it->second)) it->second = p;
    }
    Family reps;
    for (auto& [u, p] : best_per_projection) reps.push_back(p);
    return encode_family(std::move(reps));
}

DisorderSpec reduce_spec(const DisorderSpec& d, const SymptomSet& forced,
                         const SymptomSet& untouched, std::size_t eval_cap) {
    std::vector<Criterion> criteria;
    criteria.reserve(d.criteria.size());
    for (const auto& c : d.criteria) {
        if (c.gen.kind == GenKind::G3) {
            criteria.push_back(c);
        } else {
            criteria.push_back(
                Criterion{c.label, reduce_criterion(c.gen, forced, untouched,
                                                    eval_cap)});
        }
    }
    DisorderSpec out = make_disorder(d.name, std::move(criteria));
    return out;
}

}  // namespace

ReducedPair conditional_pair(const DisorderSpec& a, const DisorderSpec& b) {
    if (!a.disjoint_criteria || !b.disjoint_criteria)
        throw OverlappingCriteria(
            "conditional generators require disjoint criterion domains");
    ReducedPair out;
    out.segmentation = segment(a, b);
    out.a = reduce_spec(a, out.segmentation.forced_a, out.segmentation.untouched,
                        kDefaultEvalCap);
    out.b = reduce_spec(b, out.segmentation.forced_b, out.segmentation.untouched,
                        kDefaultEvalCap);
    return out;
}

ReductionReport mpcs_max_conditional(const DisorderSpec& a, const DisorderSpec& b,
                                     const ConditionalOptions& opt) {
    ReducedPair pair = conditional_pair(a, b);

    auto table = SymbolTable::intern(a, b);
    EnumerateOptions eopt;
    eopt.eval_cap = opt.eval_cap;
    ProfileMatrix ma = materialize(pair.a, table, eopt);
    ProfileMatrix mb = materialize(pair.b, table, eopt);

    ReductionReport report;
    report.segmentation = pair.segmentation;
    report.reduced_a = pair.a;
    report.reduced_b = pair.b;
    SimilarityOptions sopt;
    sopt.threads = opt.threads;
    report.mpcs = mpcs(ma, mb, Aggregation::Max, sopt);
    report.comparisons_after = BigInt(ma.rows()) * BigInt(mb.rows());

    auto count_of = [&](const DisorderSpec& d) -> std::optional<BigInt> {
        auto it = opt.published_counts.find(d.name);
        if (it != opt.published_counts.end()) return it->second;
        try {
            return count_profiles(d, opt.eval_cap);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    auto ca = count_of(a);
    auto cb = count_of(b);
    if (ca && cb) {
        report.comparisons_before = comparison_count(*ca, *cb);
        report.comparisons_before_known = true;
    }
    return report;
}

}  // namespace profgen
