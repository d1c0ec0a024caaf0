#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaudin {

inline constexpr const char* kToolVersion = "gaudin 0.1.0";

// FNV-1a over the canonical instance serialization.
std::uint64_t digest64(const std::string& text);
std::string digest_hex(const std::string& text);

struct CheckResult {
    std::string name;   // traceable to a module operation
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

struct RunReport {
    std::string instance_digest;
    std::string subcommand;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
    std::string version = kToolVersion;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string to_json() const;
    std::string to_human() const;
};

}  // namespace gaudin
