#include "bsync/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace bsync::kernels {
namespace {

// Per-64-bit-lane popcount: nibble LUT shuffle, then SAD folds the byte
// counts of each 64-bit half into its lane.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

void overlap_counts_avx2(const std::uint64_t* col, std::size_t n_words,
                         const std::uint64_t* mat, std::size_t stride,
                         std::int32_t* out, std::size_t n_cols) {
    std::size_t c = 0;
    for (; c + 4 <= n_cols; c += 4) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t w = 0; w < n_words; ++w) {
            const std::uint64_t b = col[w];
            if (b == 0) continue;
            const __m256i bb = _mm256_set1_epi64x(static_cast<long long>(b));
            const __m256i a =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mat + w * stride + c));
            acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(bb, a)));
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        out[c + 0] = static_cast<std::int32_t>(lanes[0]);
        out[c + 1] = static_cast<std::int32_t>(lanes[1]);
        out[c + 2] = static_cast<std::int32_t>(lanes[2]);
        out[c + 3] = static_cast<std::int32_t>(lanes[3]);
    }
    for (; c < n_cols; ++c) {
        std::int32_t sum = 0;
        for (std::size_t w = 0; w < n_words; ++w) {
            sum += std::popcount(col[w] & mat[w * stride + c]);
        }
        out[c] = sum;
    }
}

std::uint64_t byte_sum_avx2(const std::uint8_t* data, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, _mm256_setzero_si256()));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t sum = static_cast<std::uint64_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    for (; i < n; ++i) sum += data[i];
    return sum;
}

inline std::int64_t step_from(std::int64_t pred, std::int64_t add) {
    return pred >= kUnreachableThreshold ? kUnreachable : pred + add;
}

void dtw_relax_row_avx2(const std::int64_t* prev1, const std::int64_t* prev2,
                        const std::int32_t* cost, std::int64_t* out,
                        std::uint8_t* codes, std::size_t n) {
    const __m256i inf = _mm256_set1_epi64x(kUnreachable);
    const __m256i thresh = _mm256_set1_epi64x(kUnreachableThreshold);
    const __m256i code1 = _mm256_set1_epi64x(1);
    const __m256i code2 = _mm256_set1_epi64x(2);
    const __m256i code3 = _mm256_set1_epi64x(3);
    std::size_t j = 2;
    for (; j + 4 <= n; j += 4) {
        const __m128i c32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cost + j));
        const __m256i c = _mm256_cvtepi32_epi64(c32);
        const __m256i c2 = _mm256_add_epi64(c, c);
        const __m256i c3 = _mm256_add_epi64(c2, c);

        const __m256i p11 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev1 + j - 1));
        const __m256i p12 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev1 + j - 2));
        const __m256i p21 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev2 + j - 1));

        // reachable predecessor <=> pred < threshold
        const __m256i r11 = _mm256_cmpgt_epi64(thresh, p11);
        const __m256i r12 = _mm256_cmpgt_epi64(thresh, p12);
        const __m256i r21 = _mm256_cmpgt_epi64(thresh, p21);

        const __m256i cand0 = _mm256_blendv_epi8(inf, _mm256_add_epi64(p11, c2), r11);
        const __m256i cand1 = _mm256_blendv_epi8(inf, _mm256_add_epi64(p12, c3), r12);
        const __m256i cand2 = _mm256_blendv_epi8(inf, _mm256_add_epi64(p21, c3), r21);

        __m256i best = cand0;
        __m256i code = _mm256_setzero_si256();
        const __m256i m1 = _mm256_cmpgt_epi64(best, cand1);
        best = _mm256_blendv_epi8(best, cand1, m1);
        code = _mm256_blendv_epi8(code, code1, m1);
        const __m256i m2 = _mm256_cmpgt_epi64(best, cand2);
        best = _mm256_blendv_epi8(best, cand2, m2);
        code = _mm256_blendv_epi8(code, code2, m2);
        const __m256i none = _mm256_cmpeq_epi64(best, inf);
        code = _mm256_blendv_epi8(code, code3, none);

        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), best);
        alignas(32) std::int64_t lane_codes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane_codes), code);
        codes[j + 0] = static_cast<std::uint8_t>(lane_codes[0]);
        codes[j + 1] = static_cast<std::uint8_t>(lane_codes[1]);
        codes[j + 2] = static_cast<std::uint8_t>(lane_codes[2]);
        codes[j + 3] = static_cast<std::uint8_t>(lane_codes[3]);
    }
    for (; j < n; ++j) {
        const std::int64_t c = cost[j];
        std::int64_t best = step_from(prev1[j - 1], 2 * c);
        std::uint8_t code = 0;
        std::int64_t cand = step_from(prev1[j - 2], 3 * c);
        if (cand < best) { best = cand; code = 1; }
        cand = step_from(prev2[j - 1], 3 * c);
        if (cand < best) { best = cand; code = 2; }
        if (best >= kUnreachableThreshold) { best = kUnreachable; code = 3; }
        out[j] = best;
        codes[j] = code;
    }
}

}  // namespace

const KernelSet* avx2_kernels() {
    static constexpr KernelSet kSet{"avx2", overlap_counts_avx2, byte_sum_avx2,
                                    dtw_relax_row_avx2};
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) {
        return &kSet;
    }
    return nullptr;
}

}  // namespace bsync::kernels

#else  // non-x86 build targets have no AVX2 variant

namespace bsync::kernels {
const KernelSet* avx2_kernels() { return nullptr; }
}  // namespace bsync::kernels

#endif
