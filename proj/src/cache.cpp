#include "symhom/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symhom {

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string Cache::hash_hex(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::filesystem::path Cache::path_for(const std::string& key) const {
    std::string safe;
    for (char c : key) safe += (std::isalnum((unsigned char)c) || c == '-') ? c : '_';
    return dir_ / (safe + ".cache");
}

std::optional<std::string> Cache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string magic, hash;
    std::size_t size = 0;
    if (!(in >> magic >> hash >> size) || magic != "symhomcache1") {
        std::cerr << "warning: cache entry " << key << " malformed; recomputing\n";
        return std::nullopt;
    }
    in.get();  // newline
    std::string payload(size, '\0');
    in.read(payload.data(), (std::streamsize)size);
    if ((std::size_t)in.gcount() != size || hash_hex(payload) != hash) {
        std::cerr << "warning: cache entry " << key << " corrupt; recomputing\n";
        return std::nullopt;
    }
    return payload;
}

void Cache::put(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    std::ofstream out(path_for(key), std::ios::binary);
    out << "symhomcache1 " << hash_hex(payload) << ' ' << payload.size() << '\n';
    out.write(payload.data(), (std::streamsize)payload.size());
}

}  // namespace symhom
