#include "fracton/codes/serialization.hpp"

#include <fstream>
#include <stdexcept>

#include "fracton/gf2/io.hpp"

namespace fracton::codes {

namespace {

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

nlohmann::json merged(nlohmann::json base, const nlohmann::json& extra) {
    for (const auto& [key, value] : extra.items()) {
        base[key] = value;
    }
    return base;
}

}  // namespace

SavedFiles save_code(const std::filesystem::path& dir, const std::string& stem, const ClassicalCode& code,
                     const nlohmann::json& extra) {
    std::filesystem::create_directories(dir);
    SavedFiles saved;
    saved.paths.push_back(dir / (stem + ".mtx"));
    gf2::save_matrix(saved.paths.back().string(), code.h());
    saved.paths.push_back(dir / (stem + ".json"));
    write_json(saved.paths.back(), merged(code.metadata(), extra));
    return saved;
}

SavedFiles save_code(const std::filesystem::path& dir, const std::string& stem, const CssCode& code,
                     const nlohmann::json& extra) {
    std::filesystem::create_directories(dir);
    SavedFiles saved;
    saved.paths.push_back(dir / (stem + "_hx.mtx"));
    gf2::save_matrix(saved.paths.back().string(), gf2::SparseBitMatrix::from_dense(code.hx()));
    saved.paths.push_back(dir / (stem + "_hz.mtx"));
    gf2::save_matrix(saved.paths.back().string(), gf2::SparseBitMatrix::from_dense(code.hz()));
    saved.paths.push_back(dir / (stem + ".json"));
    write_json(saved.paths.back(), merged(code.metadata(), extra));
    return saved;
}

ClassicalCode load_code(const std::filesystem::path& matrix_path, const CodeOptions& options) {
    gf2::SparseBitMatrix h = gf2::load_matrix(matrix_path.string());
    Provenance p{"file", {{"path", matrix_path.filename().string()}}, std::nullopt};
    std::filesystem::path sidecar = matrix_path;
    sidecar.replace_extension(".json");
    if (std::filesystem::exists(sidecar)) {
        std::ifstream in(sidecar);
        const nlohmann::json meta = nlohmann::json::parse(in);
        p.construction = meta.value("construction", std::string("file"));
        p.parameters = meta.value("parameters", nlohmann::json::object());
        if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
            p.seed = meta["seed"].get<std::uint64_t>();
        }
    }
    return ClassicalCode(std::move(h), std::move(p), options);
}

}  // namespace fracton::codes
