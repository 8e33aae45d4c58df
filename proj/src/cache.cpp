#include "liejac/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace liejac {

std::string digest(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

ArtifactCache::ArtifactCache(std::filesystem::path dir) : dir_(std::move(dir))
{
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ArtifactCache::path_for(const std::string& key) const
{
    return dir_ / (key + ".txt");
}

std::optional<std::string> ArtifactCache::load(const std::string& key, const std::string& stamp) const
{
    std::ifstream in(path_for(key));
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    std::string header, stamp_line, payload;
    std::getline(in, header);
    std::getline(in, stamp_line);
    std::getline(in, payload);
    if (header != "lie-jacobi-cache " + std::to_string(kCacheSchemaVersion) || stamp_line != "stamp " + stamp ||
        !in) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return payload;
}

void ArtifactCache::store(const std::string& key, const std::string& stamp, const std::string& payload) const
{
    thread_local std::mt19937_64 rng{std::random_device{}()};
    auto final_path = path_for(key);
    auto tmp = final_path;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "lie-jacobi-cache " << kCacheSchemaVersion << '\n' << "stamp " << stamp << '\n' << payload << '\n';
        if (!out) {
            throw Error("cache write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, final_path);
}

std::optional<CommPoly> ArtifactCache::load_poly(const std::string& key, const std::string& stamp) const
{
    auto text = load(key, stamp);
    if (!text) return std::nullopt;
    try {
        return CommPoly::parse(*text);
    } catch (const InvalidArgument&) {
        --hits_;
        ++misses_;
        return std::nullopt;
    }
}

void ArtifactCache::store_poly(const std::string& key, const std::string& stamp, const CommPoly& p) const
{
    store(key, stamp, p.text());
}

std::optional<NCElement> ArtifactCache::load_nc(const std::string& key, const std::string& stamp) const
{
    auto text = load(key, stamp);
    if (!text) return std::nullopt;
    try {
        return NCElement::parse(*text);
    } catch (const InvalidArgument&) {
        --hits_;
        ++misses_;
        return std::nullopt;
    }
}

void ArtifactCache::store_nc(const std::string& key, const std::string& stamp, const NCElement& e) const
{
    store(key, stamp, e.text());
}

} // namespace liejac
