#pragma once

#include "leaky/profile.hpp"
#include "leaky/rational.hpp"

#include <optional>
#include <string>

namespace leaky {

inline constexpr const char* kArtifactVersion = "0.1.0";

// One computed count, keyed by input, pipeline, normalization and artifact
// version.
struct ComputationRecord {
    RamificationProfile profile;
    std::string method;         // enumerate | fock | xgraph
    std::string normalization;  // labeled | centralizer (empty when n/a)
    Rational value;
    std::string version = kArtifactVersion;
    std::string timestamp;  // UTC ISO-8601, filled by store when empty
};

// Append-only JSON-lines store. Lookups return the newest record matching
// the key; store never rewrites history.
class CacheStore {
public:
    explicit CacheStore(std::string directory);

    void store(ComputationRecord record) const;
    std::optional<ComputationRecord> lookup(const RamificationProfile& profile,
                                            const std::string& method,
                                            const std::string& normalization,
                                            const std::string& version
                                            = kArtifactVersion) const;

    const std::string& path() const { return file_; }

private:
    std::string file_;
};

}  // namespace leaky
