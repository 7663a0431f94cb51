#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace symhom {

// Content-checked file cache for expensive intermediate results (boundary
// matrices, Smith normal forms).  Entries carry an FNV-1a hash of the
// payload; a mismatch is treated as a miss and reported on stderr, so a
// corrupted cache can only cost recomputation, never a wrong answer.
class Cache {
public:
    Cache() = default;  // disabled
    explicit Cache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

    static std::string hash_hex(const std::string& payload);

private:
    std::filesystem::path dir_;
    std::filesystem::path path_for(const std::string& key) const;
};

}  // namespace symhom
