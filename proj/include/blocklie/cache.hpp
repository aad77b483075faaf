#pragma once

#include "blocklie/block_algebra.hpp"

#include <string>

namespace blocklie {

// On-disk cache of graded-component matrices, one CSV-style file per
// (algebra, weight, degree), keyed additionally by the enumeration
// scheme version so ordering changes invalidate old entries. Payloads
// carry an FNV-1a checksum; a corrupt or stale file is recomputed and
// rewritten. Writes are atomic (write to a temp file, then rename).
class ComponentCache {
public:
    // An empty directory string disables caching entirely.
    explicit ComponentCache(std::string dir) : dir_(std::move(dir)) {}

    static constexpr const char* kSchemaVersion = "v1";

    bool enabled() const { return !dir_.empty(); }
    std::string path_for(AlgebraKind algebra, int weight, int degree) const;

    // Cache-hit load or compute-and-store. Cold and warm results are
    // identical, entry for entry.
    GradedComponent get(AlgebraKind algebra, int weight, int degree) const;

private:
    std::string dir_;
};

uint64_t fnv1a64(const std::string& data);

} // namespace blocklie
