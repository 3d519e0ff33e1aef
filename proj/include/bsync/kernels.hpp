#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the alignment pipeline: binary-column
// overlap counting (cost matrices), byte summation (row projections, ink
// fractions) and the DTW row relaxation. Each has a scalar reference
// implementation and an AVX2 variant selected at runtime; the two are
// equivalence-tested bit for bit.
namespace bsync::kernels {

// Sentinel for DTW cells no step sequence reaches. Candidate computation
// saturates at this value so unreachability survives any accumulation of
// negative costs.
inline constexpr std::int64_t kUnreachable = std::int64_t(1) << 62;
inline constexpr std::int64_t kUnreachableThreshold = std::int64_t(1) << 61;

struct KernelSet {
    const char* name;

    // out[c] = sum over w in [0, n_words) of popcount(col[w] & mat[w * stride + c])
    // for c in [0, n_cols). `mat` is a word-major bit matrix: row w holds word w
    // of every column.
    void (*overlap_counts)(const std::uint64_t* col, std::size_t n_words,
                           const std::uint64_t* mat, std::size_t stride,
                           std::int32_t* out, std::size_t n_cols);

    std::uint64_t (*byte_sum)(const std::uint8_t* data, std::size_t n);

    // One DTW row update for steps {(1,1),(1,2),(2,1)} with weights {2,3,3},
    // over j in [2, n):
    //   out[j] = min(prev1[j-1] + 2c, prev1[j-2] + 3c, prev2[j-1] + 3c), c = cost[j]
    // Candidates whose predecessor is kUnreachable stay kUnreachable. codes[j]
    // records the winning step (0 = (1,1), 1 = (1,2), 2 = (2,1), 3 = none),
    // ties resolved in that order. The caller fills j = 0 and j = 1.
    void (*dtw_relax_row)(const std::int64_t* prev1, const std::int64_t* prev2,
                          const std::int32_t* cost, std::int64_t* out,
                          std::uint8_t* codes, std::size_t n);
};

const KernelSet& scalar_kernels();

// nullptr when the executing CPU lacks AVX2/POPCNT or the build target is not x86.
const KernelSet* avx2_kernels();

// Chosen once per process: AVX2 when available, else scalar. The BSYNC_KERNELS
// environment variable ("scalar" or "avx2") overrides; an unavailable request
// falls back to scalar.
const KernelSet& active_kernels();

}  // namespace bsync::kernels
