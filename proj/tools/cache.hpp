#ifndef Z2COH_TOOLS_CACHE_HPP
#define Z2COH_TOOLS_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace z2coh::cli {

/// One computed group, addressed by (complex hash, theory, coefficients, degree, level).
struct CacheEntry
{
    std::string space;   // catalog name, empty for complexes read from files
    std::string complex_hash;
    std::string theory;
    std::string coeff;
    int degree = 0;
    int level = 0;       // approximation level for Borel theories, 0 otherwise
    std::string group;

    std::string key() const;
};

/// $Z2COH_CACHE_DIR, else $XDG_CACHE_HOME/z2coh, else ~/.cache/z2coh.
std::filesystem::path default_cache_dir();

class ResultCache
{
    public:
        explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

        const std::filesystem::path& dir() const { return dir_; }
        /// The cached group for the entry's key, if a readable entry with the same key exists.
        std::optional<std::string> lookup(const CacheEntry& request) const;
        /// Atomic: write to a temporary file in the same directory, then rename.
        void store(const CacheEntry& entry) const;

        struct Scan
        {
            std::vector<CacheEntry> entries;
            std::vector<std::string> unreadable;
        };
        Scan scan() const;

    private:
        std::filesystem::path dir_;

        std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }
};

}   // namespace z2coh::cli

#endif
