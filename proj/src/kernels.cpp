#include "profgen/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace profgen::kernels {

void and_popcount_scalar(const std::uint64_t* query, const std::uint64_t* rows,
                         std::size_t n_rows, std::size_t words,
                         std::uint32_t* out) {
    for (std::size_t r = 0; r < n_rows; ++r) {
        const std::uint64_t* row = rows + r * words;
        std::uint32_t c = 0;
        for (std::size_t w = 0; w < words; ++w)
            c += static_cast<std::uint32_t>(std::popcount(query[w] & row[w]));
        out[r] = c;
    }
}

#if defined(__x86_64__) || defined(_M_X64)

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) static inline __m256i popcount_epi64(__m256i v) {
    // Nibble lookup (Mula): per-byte popcounts summed per 64-bit lane.
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                         3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                         2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                  _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) void and_popcount_avx2(const std::uint64_t* query,
                                                       const std::uint64_t* rows,
                                                       std::size_t n_rows,
                                                       std::size_t words,
                                                       std::uint32_t* out) {
    if (words != 1) {
        and_popcount_scalar(query, rows, n_rows, words, out);
        return;
    }
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    std::size_t r = 0;
    for (; r + 4 <= n_rows; r += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
        __m256i counts = popcount_epi64(_mm256_and_si256(v, q));
        alignas(32) std::uint64_t tmp[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), counts);
        out[r] = static_cast<std::uint32_t>(tmp[0]);
        out[r + 1] = static_cast<std::uint32_t>(tmp[1]);
        out[r + 2] = static_cast<std::uint32_t>(tmp[2]);
        out[r + 3] = static_cast<std::uint32_t>(tmp[3]);
    }
    for (; r < n_rows; ++r)
        out[r] = static_cast<std::uint32_t>(std::popcount(query[0] & rows[r]));
}

#endif  // x86-64

AndPopcountFn active_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
    static const AndPopcountFn fn =
        avx2_available() ? &and_popcount_avx2 : &and_popcount_scalar;
#else
    static const AndPopcountFn fn = &and_popcount_scalar;
#endif
    return fn;
}

const char* active_kernel_name() {
#if defined(__x86_64__) || defined(_M_X64)
    return avx2_available() ? "avx2" : "scalar";
#else
    return "scalar";
#endif
}

}  // namespace profgen::kernels
