#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace parhiggs {

/// 64-bit FNV-1a over raw bytes.  Chosen over std::hash because the digest
/// must be stable across runs, platforms, and standard-library
/// implementations: it names files in a persistent cache.
std::uint64_t fnv1a64(std::string_view bytes);

/// Persistent content-addressed store for computed results, keyed by a
/// canonical description of the computation.  The directory comes from the
/// PARHIGGS_CACHE_DIR environment variable; when the variable is unset the
/// cache is disabled and every call degrades to a no-op.  Writes are atomic
/// (write to a temporary, then rename), so concurrent invocations are safe;
/// readers treat missing entries as cache misses.  A corrupt entry is
/// reported on the warning stream and treated as a miss, after which the
/// caller's store() overwrites it.
class ResultCache {
public:
    /// Cache rooted at PARHIGGS_CACHE_DIR, or a disabled cache when unset.
    static ResultCache from_env();
    /// Explicit root; an empty path disables the cache.
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    /// The entry file for a canonical key string, named by its FNV-1a hash.
    std::filesystem::path entry_path(const std::string& key_material) const;

    /// Stored JSON value, or nullopt on miss/corruption (corruption warns).
    std::optional<nlohmann::json> load(const std::string& key_material,
                                       std::ostream& warn) const;

    /// Store a value atomically.  Failures are reported on the warning
    /// stream and swallowed: a broken cache must never break a computation.
    void store(const std::string& key_material, const nlohmann::json& value,
               std::ostream& warn) const;

private:
    std::filesystem::path dir_;
};

} // namespace parhiggs
