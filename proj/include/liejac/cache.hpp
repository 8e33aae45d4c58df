#pragma once

#include "liejac/pbw.hpp"
#include "liejac/polyring.hpp"

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

namespace liejac {

inline constexpr int kCacheSchemaVersion = 1;

/// On-disk store of expensive derived artifacts (P_i^[1], R_i).
///
/// One text file per key. A file is used only when its stamp matches the
/// caller's stamp; writes go to a temporary file that is then renamed.
class ArtifactCache {
public:
    explicit ArtifactCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<std::string> load(const std::string& key, const std::string& stamp) const;
    void store(const std::string& key, const std::string& stamp, const std::string& payload) const;

    std::optional<CommPoly> load_poly(const std::string& key, const std::string& stamp) const;
    void store_poly(const std::string& key, const std::string& stamp, const CommPoly& p) const;
    std::optional<NCElement> load_nc(const std::string& key, const std::string& stamp) const;
    void store_nc(const std::string& key, const std::string& stamp, const NCElement& e) const;

    unsigned hits() const { return hits_; }
    unsigned misses() const { return misses_; }

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    mutable std::atomic<unsigned> hits_{0};
    mutable std::atomic<unsigned> misses_{0};
};

/// 16-hex-digit FNV-1a digest.
std::string digest(const std::string& text);

} // namespace liejac
