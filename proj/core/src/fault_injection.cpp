#include "hpf/fault_injection.hpp"

#include "hpf/errors.hpp"

namespace hpf {

void FaultInjectingBackend::gate() {
    std::lock_guard lock(mutex_);
    std::uint64_t index = mutation_count_++;
    if (fail_from_.has_value() && index >= *fail_from_) {
        throw_error(ErrorCode::injected_failure,
                    "write #" + std::to_string(index) + " failed by schedule");
    }
}

}  // namespace hpf
