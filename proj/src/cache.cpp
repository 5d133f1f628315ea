#include "leaky/cache.hpp"

#include "leaky/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace leaky {

namespace {

std::string utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json record_to_json(const ComputationRecord& r)
{
    return Json{{"genus", r.profile.genus},
                {"entries", r.profile.entries},
                {"leak", r.profile.leak},
                {"method", r.method},
                {"normalization", r.normalization},
                {"value", rational_to_string(r.value)},
                {"version", r.version},
                {"timestamp", r.timestamp}};
}

ComputationRecord record_from_json(const Json& j)
{
    ComputationRecord r;
    r.profile = make_profile(j.at("genus").get<int>(),
                             j.at("entries").get<std::vector<int>>(),
                             j.at("leak").get<int>());
    r.method = j.at("method").get<std::string>();
    r.normalization = j.at("normalization").get<std::string>();
    auto value = parse_rational(j.at("value").get<std::string>());
    if (!value)
        throw std::runtime_error("cache: bad rational " + j.at("value").dump());
    r.value = *value;
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
}

}  // namespace

CacheStore::CacheStore(std::string directory)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec)
        throw std::runtime_error("cache: cannot create directory " + directory +
                                 ": " + ec.message());
    file_ = (fs::path(directory) / "cache.jsonl").string();
}

void CacheStore::store(ComputationRecord record) const
{
    if (record.timestamp.empty())
        record.timestamp = utc_now();
    std::ofstream out(file_, std::ios::app);
    if (!out)
        throw std::runtime_error("cache: cannot open " + file_ + " for append");
    out << record_to_json(record).dump() << "\n";
    if (!out)
        throw std::runtime_error("cache: write failed on " + file_);
}

std::optional<ComputationRecord> CacheStore::lookup(
    const RamificationProfile& profile, const std::string& method,
    const std::string& normalization, const std::string& version) const
{
    std::ifstream in(file_);
    if (!in)
        return std::nullopt;  // cold cache
    std::optional<ComputationRecord> newest;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        ComputationRecord r = record_from_json(Json::parse(line));
        if (r.profile == profile && r.method == method &&
            r.normalization == normalization && r.version == version)
            newest = std::move(r);  // later lines win
    }
    return newest;
}

}  // namespace leaky
