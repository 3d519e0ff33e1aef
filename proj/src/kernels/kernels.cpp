#include "bsync/kernels.hpp"

#include <cstdlib>
#include <string>

namespace bsync::kernels {

const KernelSet& active_kernels() {
    static const KernelSet& chosen = []() -> const KernelSet& {
        const char* env = std::getenv("BSYNC_KERNELS");
        const std::string pref = env ? env : "auto";
        if (pref == "scalar") return scalar_kernels();
        const KernelSet* avx2 = avx2_kernels();
        if (avx2 != nullptr) return *avx2;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace bsync::kernels
