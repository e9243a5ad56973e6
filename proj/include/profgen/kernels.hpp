#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels for binary cosine: popcount of the AND of one query
// row against a block of matrix rows. A scalar reference implementation is
// always available; on x86-64 an AVX2 variant is selected at runtime and
// equivalence-tested against the scalar one.
namespace profgen::kernels {

using AndPopcountFn = void (*)(const std::uint64_t* query,
                               const std::uint64_t* rows, std::size_t n_rows,
                               std::size_t words, std::uint32_t* out);

void and_popcount_scalar(const std::uint64_t* query, const std::uint64_t* rows,
                         std::size_t n_rows, std::size_t words,
                         std::uint32_t* out);

#if defined(__x86_64__) || defined(_M_X64)
// Vectorizes the single-word-row case four rows at a time; wider rows fall
// back to the scalar loop.
void and_popcount_avx2(const std::uint64_t* query, const std::uint64_t* rows,
                       std::size_t n_rows, std::size_t words, std::uint32_t* out);
bool avx2_available();
#endif

// Best kernel for this machine, decided once per process.
AndPopcountFn active_kernel();
const char* active_kernel_name();

}  // namespace profgen::kernels
