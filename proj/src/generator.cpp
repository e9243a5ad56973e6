#include "profgen/generator.hpp"

#include <algorithm>

#include "profgen/errors.hpp"
#include "profgen/eval.hpp"

namespace profgen {

const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::G0: return "G0";
        case GenKind::G1: return "G1";
        case GenKind::G2: return "G2";
        case GenKind::G3: return "G3";
        case GenKind::G4: return "G4";
    }
    return "?";
}

Generator Generator::g0(SymptomSet s) {
    Generator g;
    g.kind = GenKind::G0;
    g.set = std::move(s);
    return g;
}

Generator Generator::g1(SymptomSet s, std::size_t k) {
    Generator g;
    g.kind = GenKind::G1;
    g.set = std::move(s);
    g.k = k;
    return g;
}

Generator Generator::g2(std::vector<SymptomSet> sets, std::size_t k) {
    Generator g;
    g.kind = GenKind::G2;
    g.sets = std::move(sets);
    g.k = k;
    return g;
}

Generator Generator::g3(std::vector<SymptomSet> l1, std::vector<SymptomSet> l2) {
    Generator g;
    g.kind = GenKind::G3;
    g.list1 = std::move(l1);
    g.list2 = std::move(l2);
    return g;
}

Generator Generator::g4(std::vector<SymptomSet> l1, std::vector<SymptomSet> l2,
                        std::size_t r, std::size_t s, std::size_t t) {
    Generator g;
    g.kind = GenKind::G4;
    g.list1 = std::move(l1);
    g.list2 = std::move(l2);
    g.req_r = r;
    g.req_s = s;
    g.req_t = t;
    return g;
}

void validate(const Generator& g) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw InvalidGenerator(msg);
    };
    switch (g.kind) {
        case GenKind::G0:
            require(!g.set.empty(), "G0: symptom set must be nonempty");
            break;
        case GenKind::G1:
            require(!g.set.empty(), "G1: symptom set must be nonempty");
            require(g.k <= g.set.size(), "G1: k <= |S| violated");
            break;
        case GenKind::G2:
            require(!g.sets.empty(), "G2: needs at least one set");
            for (const auto& s : g.sets)
                require(!s.empty(), "G2: sets must be nonempty");
            require(g.k <= g.sets.size(), "G2: k <= m violated");
            break;
        case GenKind::G3:
            // The empty-set sentinel is legal in either list; a pairing of two
            // sentinels yields the empty profile.
            require(!g.list1.empty() && !g.list2.empty(),
                    "G3: both lists must be nonempty");
            break;
        case GenKind::G4: {
            require(!g.list1.empty() && !g.list2.empty(),
                    "G4: both lists must be nonempty");
            for (const auto& s : g.list1)
                require(!s.empty(), "G4: sets in L1 must be nonempty");
            for (const auto& s : g.list2)
                require(!s.empty(), "G4: sets in L2 must be nonempty");
            require(g.req_r <= g.list1.size(), "G4: r <= n1 violated");
            require(g.req_s <= g.list2.size(), "G4: s <= n2 violated");
            require(g.req_t <= g.list1.size() + g.list2.size(),
                    "G4: t <= n1 + n2 violated");
            break;
        }
    }
}

std::vector<std::string> lint(const Generator& g) {
    std::vector<std::string> warnings;
    switch (g.kind) {
        case GenKind::G1:
            if (g.k == 0)
                warnings.push_back(
                    "G1 with k = 0: the empty profile satisfies this criterion");
            break;
        case GenKind::G2:
            if (g.k == 0)
                warnings.push_back(
                    "G2 with k = 0: the empty profile satisfies this criterion");
            break;
        case GenKind::G4:
            if (g.req_r == 0 && g.req_s == 0 && g.req_t == 0)
                warnings.push_back(
                    "G4 with (0,0,0): the empty profile satisfies this criterion");
            break;
        default:
            break;
    }
    return warnings;
}

DisorderSpec make_disorder(std::string name, std::vector<Criterion> criteria,
                           std::vector<std::string> domain_order) {
    if (criteria.empty())
        throw InvalidGenerator("disorder '" + name + "' has no criteria");
    for (const auto& c : criteria) validate(c.gen);

    DisorderSpec d;
    d.name = std::move(name);
    d.criteria = std::move(criteria);

    if (domain_order.empty()) {
        for (const auto& c : d.criteria)
            for (const auto& s : generator_domain(c.gen))
                if (std::find(domain_order.begin(), domain_order.end(), s) ==
                    domain_order.end())
                    domain_order.push_back(s);
    }
    d.domain_order = std::move(domain_order);

    d.disjoint_criteria = true;
    std::vector<SymptomSet> domains;
    for (const auto& c : d.criteria) domains.push_back(generator_domain(c.gen));
    for (std::size_t i = 0; i < domains.size() && d.disjoint_criteria; ++i)
        for (std::size_t j = i + 1; j < domains.size(); ++j)
            if (domains[i].intersects(domains[j])) {
                d.disjoint_criteria = false;
                break;
            }
    return d;
}

}  // namespace profgen
