#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracton/codes/classical_code.hpp"
#include "fracton/codes/css_code.hpp"

namespace fracton::codes {

struct SavedFiles {
    std::vector<std::filesystem::path> paths;
};

/// Writes `<stem>.mtx` (matrix format) and `<stem>.json` (metadata plus `extra`).
SavedFiles save_code(const std::filesystem::path& dir, const std::string& stem, const ClassicalCode& code,
                     const nlohmann::json& extra = nlohmann::json::object());

/// Writes `<stem>_hx.mtx`, `<stem>_hz.mtx` and `<stem>.json`.
SavedFiles save_code(const std::filesystem::path& dir, const std::string& stem, const CssCode& code,
                     const nlohmann::json& extra = nlohmann::json::object());

/// Reads a parity-check matrix file. The sidecar `<stem>.json`, when present, supplies the
/// provenance; otherwise the construction is recorded as "file".
ClassicalCode load_code(const std::filesystem::path& matrix_path, const CodeOptions& options = {});

}  // namespace fracton::codes
