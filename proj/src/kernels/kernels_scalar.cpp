#include "bsync/kernels.hpp"

#include <bit>

namespace bsync::kernels {
namespace {

void overlap_counts_scalar(const std::uint64_t* col, std::size_t n_words,
                           const std::uint64_t* mat, std::size_t stride,
                           std::int32_t* out, std::size_t n_cols) {
    for (std::size_t c = 0; c < n_cols; ++c) out[c] = 0;
    for (std::size_t w = 0; w < n_words; ++w) {
        const std::uint64_t b = col[w];
        if (b == 0) continue;
        const std::uint64_t* row = mat + w * stride;
        for (std::size_t c = 0; c < n_cols; ++c) {
            out[c] += std::popcount(b & row[c]);
        }
    }
}

std::uint64_t byte_sum_scalar(const std::uint8_t* data, std::size_t n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += data[i];
    return sum;
}

inline std::int64_t step_from(std::int64_t pred, std::int64_t add) {
    return pred >= kUnreachableThreshold ? kUnreachable : pred + add;
}

void dtw_relax_row_scalar(const std::int64_t* prev1, const std::int64_t* prev2,
                          const std::int32_t* cost, std::int64_t* out,
                          std::uint8_t* codes, std::size_t n) {
    for (std::size_t j = 2; j < n; ++j) {
        const std::int64_t c = cost[j];
        const std::int64_t c2 = 2 * c;
        const std::int64_t c3 = 3 * c;
        std::int64_t best = step_from(prev1[j - 1], c2);
        std::uint8_t code = 0;
        std::int64_t cand = step_from(prev1[j - 2], c3);
        if (cand < best) { best = cand; code = 1; }
        cand = step_from(prev2[j - 1], c3);
        if (cand < best) { best = cand; code = 2; }
        if (best >= kUnreachableThreshold) { best = kUnreachable; code = 3; }
        out[j] = best;
        codes[j] = code;
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static constexpr KernelSet kSet{"scalar", overlap_counts_scalar, byte_sum_scalar,
                                    dtw_relax_row_scalar};
    return kSet;
}

}  // namespace bsync::kernels
