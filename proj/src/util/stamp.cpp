#include "fracton/util/stamp.hpp"

#include <cstdint>
#include <cstdio>

namespace fracton::util {

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string config_hash(const nlohmann::json& config) { return fnv1a_hex(config.dump()); }

std::string OutputStamp::comment_line() const { return "# fracton " + tool_version + " config " + config_hash; }

OutputStamp stamp_for(const nlohmann::json& config) { return OutputStamp{kToolVersion, config_hash(config)}; }

}  // namespace fracton::util
