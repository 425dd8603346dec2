#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace fracton::util {

inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a of `bytes` as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// fnv1a_hex of the compact JSON dump, as 16 hex digits. Object keys are sorted by the
/// JSON library, so equal configs hash equally regardless of how they were written.
std::string config_hash(const nlohmann::json& config);

/// Provenance carried by every output file.
struct OutputStamp {
    std::string tool_version = kToolVersion;
    std::string config_hash;

    /// "# fracton <version> config <hash>", used as the first line of CSV files.
    std::string comment_line() const;
};

OutputStamp stamp_for(const nlohmann::json& config);

}  // namespace fracton::util
