#include "parhiggs/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef _WIN32
#include <unistd.h>
#endif

namespace parhiggs {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ResultCache ResultCache::from_env() {
    const char* dir = std::getenv("PARHIGGS_CACHE_DIR");
    return ResultCache(dir != nullptr && *dir != '\0'
                           ? std::filesystem::path(dir)
                           : std::filesystem::path());
}

std::filesystem::path ResultCache::entry_path(
    const std::string& key_material) const {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0')
         << fnv1a64(key_material);
    return dir_ / (name.str() + ".json");
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key_material,
                                                std::ostream& warn) const {
    if (!enabled()) return std::nullopt;
    const auto path = entry_path(key_material);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    std::ifstream in(path);
    if (!in) {
        warn << "warning: cache entry " << path.string()
             << " is unreadable; recomputing\n";
        return std::nullopt;
    }
    nlohmann::json value = nlohmann::json::parse(in, nullptr, false);
    if (value.is_discarded() || !value.is_object()) {
        warn << "warning: cache entry " << path.string()
             << " is corrupt; recomputing\n";
        return std::nullopt;
    }
    return value;
}

void ResultCache::store(const std::string& key_material,
                        const nlohmann::json& value,
                        std::ostream& warn) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        warn << "warning: cannot create cache directory " << dir_.string()
             << ": " << ec.message() << "\n";
        return;
    }
    const auto path = entry_path(key_material);
    // Unique temporary per process so concurrent writers never interleave;
    // rename() is atomic within a filesystem.
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(static_cast<long long>(
#ifdef _WIN32
                        0
#else
                        ::getpid()
#endif
                        ));
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            warn << "warning: cannot write cache entry " << tmp.string()
                 << "\n";
            return;
        }
        out << value.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        warn << "warning: cannot finalize cache entry " << path.string()
             << ": " << ec.message() << "\n";
        std::filesystem::remove(tmp, ec);
    }
}

} // namespace parhiggs
