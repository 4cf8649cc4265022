#pragma once

#include "abcprat/factor.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace abcprat {

/// Persistent factorization cache. The on-disk form is an append-only text
/// file, one entry per line:
///
///     value<TAB>p1^e1,p2^e2,...<TAB>cofactor
///
/// value is |N| in decimal, the prime list may be empty, and cofactor is 1
/// for complete factorizations. Only complete entries are persisted, so a
/// later run with a larger budget can still improve a partial result.
class FactorCache {
  public:
    FactorCache() = default;

    /// Loads entries from path; unreadable files and corrupt lines produce a
    /// warning on the returned list and are otherwise ignored. Later writes
    /// append to the same path.
    std::vector<std::string> load(std::filesystem::path const& path);

    std::optional<Factorization> lookup(mpz_class const& magnitude) const;
    void store(Factorization const& f);

    std::size_t size() const;
    std::uint64_t hits() const { return hits_.load(); }

    /// Serialized line for one entry (no trailing newline).
    static std::string format_line(Factorization const& f);
    /// Parses one line; nullopt on malformed input or a product mismatch.
    static std::optional<Factorization> parse_line(std::string const& line);

  private:
    mutable std::mutex mu_;
    std::map<mpz_class, Factorization> entries_;
    std::optional<std::filesystem::path> path_;
    mutable std::atomic<std::uint64_t> hits_{0};
};

} // namespace abcprat
