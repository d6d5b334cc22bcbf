#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "version.hpp"

namespace dicolor {

// Running FNV-1a over emitted records; order-sensitive on purpose so resumed
// runs must replay the identical output sequence.
inline constexpr std::uint64_t kFnvSeed = 1469598103934665603ull;

inline std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Write-then-rename so readers never observe a half-written file.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw structural_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

struct ScenarioReport {
    std::string scenario;
    std::string config;
    std::string status; // verified / refuted / partial
    std::vector<std::pair<std::string, std::string>> records;
    double wall_ms = 0.0;

    void add(std::string key, std::string value) { records.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }

    int exit_code() const {
        if (status == "verified") return 0;
        if (status == "refuted") return 2;
        return 3;
    }

    // Everything except wall time, which legitimately differs run to run.
    std::string deterministic_text() const {
        std::ostringstream os;
        os << "scenario=" << scenario << "\n";
        os << "version=" << kVersion << "\n";
        os << "config=" << config << "\n";
        os << "status=" << status << "\n";
        for (const auto& [k, v] : records) os << k << "=" << v << "\n";
        return os.str();
    }

    std::string to_text() const {
        std::ostringstream os;
        os << deterministic_text();
        os << "wall_ms=" << wall_ms << "\n";
        return os.str();
    }
};

struct Checkpoint {
    std::string scenario;
    std::string config;
    std::uint64_t item = 0;     // outer loop position, next item to process
    std::uint64_t progress = 0; // monotone work counter
    std::uint64_t digest = kFnvSeed;
    std::vector<std::pair<std::string, std::string>> counters;
    std::vector<std::string> frontier;

    void set_counter(const std::string& key, std::uint64_t value) {
        for (auto& [k, v] : counters)
            if (k == key) {
                v = std::to_string(value);
                return;
            }
        counters.emplace_back(key, std::to_string(value));
    }

    std::uint64_t counter(const std::string& key, std::uint64_t fallback = 0) const {
        for (const auto& [k, v] : counters)
            if (k == key) return std::stoull(v);
        return fallback;
    }

    void save(const std::filesystem::path& path) const {
        std::ostringstream os;
        os << "scenario=" << scenario << "\n";
        os << "config=" << config << "\n";
        os << "item=" << item << "\n";
        os << "progress=" << progress << "\n";
        os << "digest=" << digest << "\n";
        for (const auto& [k, v] : counters) os << "counter " << k << "=" << v << "\n";
        for (const std::string& line : frontier) os << "frontier " << line << "\n";
        atomic_write(path, os.str());
    }

    static std::optional<Checkpoint> load(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        Checkpoint ck;
        ck.counters.clear();
        std::string line;
        auto value_of = [](const std::string& l, std::size_t at) { return l.substr(at); };
        while (std::getline(in, line)) {
            if (line.rfind("scenario=", 0) == 0) ck.scenario = value_of(line, 9);
            else if (line.rfind("config=", 0) == 0) ck.config = value_of(line, 7);
            else if (line.rfind("item=", 0) == 0) ck.item = std::stoull(value_of(line, 5));
            else if (line.rfind("progress=", 0) == 0) ck.progress = std::stoull(value_of(line, 9));
            else if (line.rfind("digest=", 0) == 0) ck.digest = std::stoull(value_of(line, 7));
            else if (line.rfind("counter ", 0) == 0) {
                std::string rest = value_of(line, 8);
                std::size_t eq = rest.find('=');
                if (eq == std::string::npos) throw structural_error("malformed checkpoint counter line");
                ck.counters.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
            } else if (line.rfind("frontier ", 0) == 0)
                ck.frontier.push_back(value_of(line, 9));
            else if (!line.empty())
                throw structural_error("malformed checkpoint line: " + line);
        }
        return ck;
    }
};

// Checkpoint cadence: whichever of the node and time thresholds fires first.
class Throttle {
public:
    Throttle(std::uint64_t every_nodes, double every_seconds)
        : every_nodes_(every_nodes), every_seconds_(every_seconds),
          last_time_(std::chrono::steady_clock::now()) {}

    bool due(std::uint64_t nodes_now) {
        bool hit = nodes_now - last_nodes_ >= every_nodes_;
        auto now = std::chrono::steady_clock::now();
        if (!hit) hit = std::chrono::duration<double>(now - last_time_).count() >= every_seconds_;
        if (hit) {
            last_nodes_ = nodes_now;
            last_time_ = now;
        }
        return hit;
    }

private:
    std::uint64_t every_nodes_;
    double every_seconds_;
    std::uint64_t last_nodes_ = 0;
    std::chrono::steady_clock::time_point last_time_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace dicolor
