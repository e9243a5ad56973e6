#include "profgen/engine.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

namespace profgen {

namespace {

std::vector<std::vector<Profile>> encode_criteria(const DisorderSpec& d,
                                                  const SymbolTable& table,
                                                  std::size_t eval_cap) {
    std::vector<std::vector<Profile>> out;
    out.reserve(d.criteria.size());
    for (const auto& c : d.criteria) {
        Family fam = eval_generator(c.gen, eval_cap);
        std::vector<Profile> rows;
        rows.reserve(fam.size());
        for (const auto& s : fam) rows.push_back(Profile::from_set(s, table));
        // eval order is graded by name; matrix canonical order is graded by
        // column index, so re-sort the bit-encoded rows.
        std::sort(rows.begin(), rows.end(), Profile::canonical_less);
        out.push_back(std::move(rows));
    }
    return out;
}

}  // namespace

ProfileStream::ProfileStream(const DisorderSpec& d,
                             std::shared_ptr<const SymbolTable> table,
                             EnumerateOptions opt)
    : ProfileStream(d, std::move(table), 0, UINT64_MAX, opt) {}

ProfileStream::ProfileStream(const DisorderSpec& d,
                             std::shared_ptr<const SymbolTable> table,
                             std::uint64_t begin, std::uint64_t end,
                             EnumerateOptions opt)
    : table_(std::move(table)) {
    per_criterion_ = encode_criteria(d, *table_, opt.eval_cap);

    std::uint64_t tuples = 1;
    for (const auto& rows : per_criterion_) {
        if (rows.empty()) {
            tuples = 0;
            break;
        }
        if (tuples > UINT64_MAX / rows.size())
            throw CapExceeded("enumeration index space exceeds 64 bits");
        tuples *= rows.size();
    }

    if (!d.disjoint_criteria) {
        // Overlapping criteria can collapse distinct tuples; materialize a
        // deduplicated row list up front.
        use_dedup_ = true;
        if (tuples / 16 > opt.row_cap)
            throw DedupCapExceeded(
                "overlapping-criteria enumeration too large to deduplicate");
        std::unordered_set<std::string> seen;
        for (std::uint64_t t = 0; t < tuples; ++t) {
            Profile row(static_cast<std::uint32_t>(table_->size()));
            std::uint64_t rest = t;
            for (std::size_t i = per_criterion_.size(); i > 0;) {
                --i;
                const auto& rows = per_criterion_[i];
                row.or_with(rows[rest % rows.size()]);
                rest /= rows.size();
            }
            std::string key(reinterpret_cast<const char*>(row.words().data()),
                            row.words().size() * sizeof(std::uint64_t));
            if (seen.insert(std::move(key)).second) {
                deduped_.push_back(std::move(row));
                if (deduped_.size() > opt.row_cap)
                    throw DedupCapExceeded(
                        "overlapping-criteria dedup exceeded the row cap");
            }
        }
        std::sort(deduped_.begin(), deduped_.end(), Profile::canonical_less);
        tuples = deduped_.size();
    }

    begin_ = std::min(begin, tuples);
    end_ = std::min(end, tuples);
    cursor_ = begin_;
}

bool ProfileStream::next(Profile& out) {
    if (cursor_ >= end_) return false;
    if (use_dedup_) {
        out = deduped_[cursor_++];
        return true;
    }
    Profile row(static_cast<std::uint32_t>(table_->size()));
    std::uint64_t rest = cursor_;
    for (std::size_t i = per_criterion_.size(); i > 0;) {
        --i;
        const auto& rows = per_criterion_[i];
        row.or_with(rows[rest % rows.size()]);
        rest /= rows.size();
    }
    out = std::move(row);
    ++cursor_;
    return true;
}

ProfileStream enumerate_profiles(const DisorderSpec& d,
                                 std::shared_ptr<const SymbolTable> table,
                                 EnumerateOptions opt) {
    return ProfileStream(d, std::move(table), opt);
}

BigInt count_profiles(const DisorderSpec& d, std::size_t eval_cap) {
    if (!d.disjoint_criteria)
        throw OverlappingCriteria(
            "count_profiles requires pairwise-disjoint criterion domains; "
            "enumerate with dedup instead");
    BigInt total = 1;
    for (const auto& c : d.criteria) {
        const Generator& g = c.gen;
        bool disjoint_sets = true;
        auto check = [&](const std::vector<SymptomSet>& sets) {
            for (std::size_t i = 0; i < sets.size() && disjoint_sets; ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j)
                    if (sets[i].intersects(sets[j])) {
                        disjoint_sets = false;
                        break;
                    }
        };
        if (g.kind == GenKind::G2) check(g.sets);
        if (g.kind == GenKind::G4) {
            std::vector<SymptomSet> all = g.list1;
            all.insert(all.end(), g.list2.begin(), g.list2.end());
            check(all);
        }
        if (disjoint_sets && g.kind != GenKind::G3) {
            // Selection tuples biject onto distinct profiles.
            total *= eval_size_bound(g);
        } else {
            total *= BigInt(eval_generator(g, eval_cap).size());
        }
    }
    return total;
}

Profile max_profile(const DisorderSpec& d, const SymbolTable& table) {
    return Profile::from_set(disorder_domain(d), table);
}

ProfileMatrix materialize(const DisorderSpec& d,
                          std::shared_ptr<const SymbolTable> table,
                          EnumerateOptions opt) {
    ProfileMatrix m(table, d.name);
    ProfileStream stream(d, table, opt);
    Profile p;
    while (stream.next(p)) m.add_row(p);
    m.finalize();
    return m;
}

std::size_t export_matrix(const ProfileMatrix& m, std::ostream& sink,
                          bool with_header) {
    const SymbolTable& t = m.table();
    if (with_header) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) sink << ',';
            sink << t.name(static_cast<std::uint32_t>(i));
        }
        sink << '\n';
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::uint64_t* row = m.row_data(r);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) sink << ',';
            sink << (((row[i / 64] >> (i % 64)) & 1u) ? '1' : '0');
        }
        sink << '\n';
    }
    return m.rows();
}

std::size_t export_max_profile(const DisorderSpec& d, const SymbolTable& table,
                               std::ostream& sink, bool with_header) {
    if (with_header) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (i) sink << ',';
            sink << table.name(static_cast<std::uint32_t>(i));
        }
        sink << '\n';
    }
    Profile mp = max_profile(d, table);
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i) sink << ',';
        sink << (mp.test(static_cast<std::uint32_t>(i)) ? '1' : '0');
    }
    sink << '\n';
    return 1;
}

}  // namespace profgen
