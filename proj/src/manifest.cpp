#include "tgvlab/manifest.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tgvlab {

namespace {

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot hash missing file: " + path);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ull;
        }
        if (got < static_cast<std::streamsize>(sizeof buf)) break;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

RunManifest::RunManifest(std::string command, std::string config_echo)
    : command_(std::move(command)), config_echo_(std::move(config_echo)), started_(utc_now()) {}

void RunManifest::add_file(const std::string& path) { files_.push_back(path); }

void RunManifest::finish(const std::string& manifest_path) {
    std::ostringstream out;
    out << "tgvlab run manifest\n";
    out << "version: " << kVersion << "\n";
    out << "command: " << command_ << "\n";
    out << "started: " << started_ << "\n";
    out << "finished: " << utc_now() << "\n";
    out << "config:\n";
    std::istringstream echo(config_echo_);
    std::string line;
    while (std::getline(echo, line)) out << "  " << line << "\n";
    out << "outputs:\n";
    for (const auto& path : files_) {
        const auto size = std::filesystem::file_size(path);
        out << "  " << std::filesystem::path(path).filename().string() << " bytes=" << size
            << " fnv1a64=" << fnv1a64_file(path) << "\n";
    }
    std::ofstream file(manifest_path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write manifest: " + manifest_path);
    file << out.str();
}

}  // namespace tgvlab
