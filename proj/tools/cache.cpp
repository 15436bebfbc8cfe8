#include "cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace z2coh::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fnv1a(const std::string& text)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text)
    {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const CacheEntry& e)
{
    return json{{"key", e.key()},     {"space", e.space},   {"complex_hash", e.complex_hash},
                {"theory", e.theory}, {"coeff", e.coeff},   {"degree", e.degree},
                {"level", e.level},   {"group", e.group}};
}

std::optional<CacheEntry> read_entry(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try
    {
        const json j = json::parse(ss.str());
        CacheEntry e;
        e.space = j.at("space").get<std::string>();
        e.complex_hash = j.at("complex_hash").get<std::string>();
        e.theory = j.at("theory").get<std::string>();
        e.coeff = j.at("coeff").get<std::string>();
        e.degree = j.at("degree").get<int>();
        e.level = j.at("level").get<int>();
        e.group = j.at("group").get<std::string>();
        if (j.at("key").get<std::string>() != e.key())
            return std::nullopt;
        return e;
    }
    catch (const json::exception&)
    {
        return std::nullopt;
    }
}

}   // namespace

std::string CacheEntry::key() const
{
    return fnv1a(complex_hash + "|" + theory + "|" + coeff + "|" + std::to_string(degree) + "|" +
                 std::to_string(level));
}

fs::path default_cache_dir()
{
    if (const char* dir = std::getenv("Z2COH_CACHE_DIR"); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "z2coh";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "z2coh";
    return fs::temp_directory_path() / "z2coh-cache";
}

std::optional<std::string> ResultCache::lookup(const CacheEntry& request) const
{
    const auto entry = read_entry(path_for(request.key()));
    if (!entry || entry->complex_hash != request.complex_hash || entry->theory != request.theory ||
        entry->coeff != request.coeff || entry->degree != request.degree || entry->level != request.level)
        return std::nullopt;
    return entry->group;
}

void ResultCache::store(const CacheEntry& entry) const
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        return;
    std::random_device rd;
    const fs::path final_path = path_for(entry.key());
    const fs::path tmp = dir_ / (entry.key() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << to_json(entry).dump(2) << "\n";
        if (!out)
        {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, final_path, ec);
    if (ec)
        fs::remove(tmp, ec);
}

ResultCache::Scan ResultCache::scan() const
{
    Scan out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec))
        return out;
    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(dir_, ec))
    {
        if (item.path().extension() == ".json")
            files.push_back(item.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
    {
        if (auto e = read_entry(f); e && f.stem() == e->key())
            out.entries.push_back(*e);
        else
            out.unreadable.push_back(f.filename().string());
    }
    return out;
}

}   // namespace z2coh::cli
