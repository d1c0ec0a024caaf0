#include "gaudin/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gaudin {

std::uint64_t digest64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(const std::string& text) {
    std::ostringstream os;
    os << std::hex << digest64(text);
    return os.str();
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["instance_digest"] = instance_digest;
    j["subcommand"] = subcommand;
    j["seed"] = seed;
    j["version"] = version;
    j["elapsed_ms"] = elapsed_ms;
    nlohmann::json checks_j = nlohmann::json::array();
    for (const auto& c : checks)
        checks_j.push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"residual", c.residual},
                            {"detail", c.detail}});
    j["checks"] = checks_j;
    j["all_pass"] = all_pass();
    return j.dump(2);
}

std::string RunReport::to_human() const {
    std::ostringstream os;
    os << version << " | " << subcommand << " | instance " << instance_digest << " | seed "
       << seed << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (c.residual != 0.0) os << "  residual=" << c.residual;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "  ["
       << elapsed_ms << " ms]\n";
    return os.str();
}

}  // namespace gaudin
