#pragma once

#include <string>
#include <vector>

namespace tgvlab {

inline constexpr const char* kVersion = "1.0.0";

/// Plain-text run manifest: config echo, code version, wall-clock span and
/// an inventory of every produced file with size and FNV-1a 64 content hash.
class RunManifest {
public:
    RunManifest(std::string command, std::string config_echo);

    void add_file(const std::string& path);
    void finish(const std::string& manifest_path);  // writes the manifest itself

private:
    std::string command_;
    std::string config_echo_;
    std::string started_;
    std::vector<std::string> files_;
};

/// FNV-1a 64-bit hash of a file's bytes, lowercase hex.
std::string fnv1a64_file(const std::string& path);

}  // namespace tgvlab
