#include "profgen/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "profgen/kernels.hpp"

namespace profgen {

const char* to_string(Aggregation a) {
    return a == Aggregation::Mean ? "mean" : "max";
}

namespace {

// Candidate pair value c / sqrt(n), compared exactly in integers so ties are
// ties and witnesses are reproducible.
struct Candidate {
    std::uint32_t c = 0;
    std::uint64_t n = 0;  // product of the two popcounts
    std::size_t ai = 0;
    std::size_t bi = 0;
};

bool strictly_better(std::uint32_t c1, std::uint64_t n1, std::uint32_t c2,
                     std::uint64_t n2) {
    if (c1 == 0) return false;
    if (c2 == 0) return true;
    using u128 = unsigned __int128;
    return u128(c1) * c1 * n2 > u128(c2) * c2 * n1;
}

// Prefers higher value; ties resolved toward the earlier canonical pair.
void merge_candidate(Candidate& best, const Candidate& cand) {
    if (strictly_better(cand.c, cand.n, best.c, best.n)) {
        best = cand;
        return;
    }
    if (strictly_better(best.c, best.n, cand.c, cand.n)) return;
    if (cand.ai < best.ai || (cand.ai == best.ai && cand.bi < best.bi)) best = cand;
}

double candidate_value(const Candidate& c) {
    if (c.c == 0 || c.n == 0) return 0.0;
    return static_cast<double>(c.c) / std::sqrt(static_cast<double>(c.n));
}

// Deterministic pairwise (tree) summation.
double pairwise_sum(const double* xs, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(xs, half) + pairwise_sum(xs + half, n - half);
}

// Best match of query row ai of A over all rows of B.
Candidate best_match(const ProfileMatrix& a, std::size_t ai, const ProfileMatrix& b,
                     std::vector<std::uint32_t>& counts, std::size_t block_rows) {
    const std::uint64_t* q = a.row_data(ai);
    const std::uint64_t na = a.row_popcount(ai);
    auto kernel = kernels::active_kernel();

    Candidate best{0, 0, ai, 0};
    bool have = false;
    for (std::size_t base = 0; base < b.rows(); base += block_rows) {
        std::size_t n = std::min(block_rows, b.rows() - base);
        counts.resize(n);
        kernel(q, b.row_data(base), n, b.words_per_row(), counts.data());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t nprod = na * std::uint64_t(b.row_popcount(base + i));
            if (!have) {
                best = Candidate{counts[i], nprod, ai, base + i};
                have = true;
            } else if (strictly_better(counts[i], nprod, best.c, best.n)) {
                best = Candidate{counts[i], nprod, ai, base + i};
            }
        }
    }
    return best;
}

void check_compatible(const ProfileMatrix& a, const ProfileMatrix& b) {
    if (a.rows() == 0 || b.rows() == 0)
        throw EmptyMatrix("mpcs: empty profile matrix");
    if (&a.table() != &b.table() && a.table().names() != b.table().names())
        throw TableMismatch("mpcs: matrices use different symbol tables");
}

bool has_empty_row(const ProfileMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.row_popcount(i) == 0) return true;
    return false;
}

template <class Fn>
void parallel_ranges(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2 * threads) {
        fn(0, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = std::min<std::size_t>(std::size_t(t) * chunk, n);
        std::size_t hi = std::min(lo + chunk, n);
        if (lo >= hi) break;
        pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

double cosine(const Profile& p, const Profile& q) {
    if (p.popcount() == 0 || q.popcount() == 0) return 0.0;
    std::uint32_t c = p.and_popcount(q);
    return static_cast<double>(c) /
           std::sqrt(static_cast<double>(p.popcount()) *
                     static_cast<double>(q.popcount()));
}

std::pair<double, std::size_t> max_cosine(const Profile& p, const ProfileMatrix& m) {
    if (m.rows() == 0) throw EmptyMatrix("max_cosine: empty matrix");
    if (p.bits() != m.table().size())
        throw TableMismatch("max_cosine: profile width does not match matrix");

    auto kernel = kernels::active_kernel();
    std::vector<std::uint32_t> counts(m.rows());
    kernel(p.words().data(), m.data(), m.rows(), m.words_per_row(), counts.data());

    Candidate best{counts[0], std::uint64_t(p.popcount()) * m.row_popcount(0), 0, 0};
    for (std::size_t i = 1; i < m.rows(); ++i) {
        std::uint64_t nprod = std::uint64_t(p.popcount()) * m.row_popcount(i);
        if (strictly_better(counts[i], nprod, best.c, best.n))
            best = Candidate{counts[i], nprod, 0, i};
    }
    return {candidate_value(best), best.bi};
}

MpcsResult mpcs(const ProfileMatrix& a, const ProfileMatrix& b, Aggregation agg,
                const SimilarityOptions& opt) {
    check_compatible(a, b);

    MpcsResult res;
    res.agg = agg;
    res.empty_profile_seen = has_empty_row(a) || has_empty_row(b);

    if (agg == Aggregation::Max) {
        // phi_max(A,B) = phi_max(B,A) = global max pair cosine: one pass.
        unsigned threads = std::max(1u, opt.threads);
        std::vector<Candidate> bests(threads);
        std::vector<bool> used(threads, false);
        parallel_ranges(a.rows(), threads,
                        [&](unsigned t, std::size_t lo, std::size_t hi) {
                            std::vector<std::uint32_t> counts;
                            Candidate local{0, 0, lo, 0};
                            bool have = false;
                            for (std::size_t ai = lo; ai < hi; ++ai) {
                                Candidate c =
                                    best_match(a, ai, b, counts, opt.block_rows);
                                if (!have) {
                                    local = c;
                                    have = true;
                                } else if (strictly_better(c.c, c.n, local.c,
                                                           local.n)) {
                                    local = c;
                                }
                            }
                            bests[t] = local;
                            used[t] = have;
                        });
        Candidate best;
        bool have = false;
        for (unsigned t = 0; t < threads; ++t) {
            if (!used[t]) continue;
            if (!have) {
                best = bests[t];
                have = true;
            } else {
                merge_candidate(best, bests[t]);
            }
        }
        res.value = res.phi_ab = res.phi_ba = candidate_value(best);
        res.witness = std::make_pair(a.row(best.ai), b.row(best.bi));
        res.witness_a_index = best.ai;
        res.witness_b_index = best.bi;
        res.comparisons = BigInt(a.rows()) * BigInt(b.rows());
        return res;
    }

    // Mean aggregation: both directions, per-row maxima then a deterministic
    // tree sum (independent of the thread partition).
    auto directional = [&](const ProfileMatrix& x, const ProfileMatrix& y) {
        std::vector<double> smc(x.rows());
        parallel_ranges(x.rows(), opt.threads,
                        [&](unsigned, std::size_t lo, std::size_t hi) {
                            std::vector<std::uint32_t> counts;
                            for (std::size_t i = lo; i < hi; ++i) {
                                Candidate c =
                                    best_match(x, i, y, counts, opt.block_rows);
                                smc[i] = candidate_value(c);
                            }
                        });
        return pairwise_sum(smc.data(), smc.size()) /
               static_cast<double>(x.rows());
    };
    res.phi_ab = directional(a, b);
    res.phi_ba = directional(b, a);
    res.value = std::max(res.phi_ab, res.phi_ba);
    res.comparisons = BigInt(2) * BigInt(a.rows()) * BigInt(b.rows());
    return res;
}

double mpcs_mp(const Profile& a, const Profile& b) { return cosine(a, b); }

BigInt comparison_count(const BigInt& count_a, const BigInt& count_b) {
    return count_a * count_b;
}

}  // namespace profgen
