#include "abcprat/cache.hpp"

#include <fstream>
#include <sstream>

namespace abcprat {

std::string FactorCache::format_line(Factorization const& f) {
    std::string line = mpz_class(abs(f.value)).get_str();
    line += '\t';
    bool first = true;
    for (auto const& [p, e] : f.factors) {
        if (!first)
            line += ',';
        first = false;
        line += p.get_str() + "^" + std::to_string(e);
    }
    line += '\t';
    line += f.cofactor.get_str();
    return line;
}

std::optional<Factorization> FactorCache::parse_line(std::string const& line) {
    auto tab1 = line.find('\t');
    if (tab1 == std::string::npos)
        return std::nullopt;
    auto tab2 = line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
        return std::nullopt;
    Factorization f;
    try {
        f.value = mpz_class(line.substr(0, tab1));
        f.cofactor = mpz_class(line.substr(tab2 + 1));
        std::string list = line.substr(tab1 + 1, tab2 - tab1 - 1);
        std::stringstream ss(list);
        std::string item;
        while (!list.empty() && std::getline(ss, item, ',')) {
            auto caret = item.find('^');
            if (caret == std::string::npos)
                return std::nullopt;
            mpz_class p(item.substr(0, caret));
            int e = std::stoi(item.substr(caret + 1));
            if (p < 2 || e <= 0)
                return std::nullopt;
            f.factors.emplace_back(p, static_cast<unsigned>(e));
        }
    } catch (std::exception const&) {
        return std::nullopt;
    }
    if (f.value <= 0 || f.cofactor <= 0)
        return std::nullopt;
    mpz_class product = f.cofactor;
    for (auto const& [p, e] : f.factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        product *= pe;
    }
    if (product != f.value)
        return std::nullopt;
    f.status = f.cofactor == 1 ? FactorStatus::Complete : FactorStatus::Partial;
    return f;
}

std::vector<std::string> FactorCache::load(std::filesystem::path const& path) {
    std::vector<std::string> warnings;
    std::lock_guard lock(mu_);
    path_ = path;
    std::error_code ec;
    bool present = std::filesystem::exists(path, ec);
    std::ifstream in(path);
    if (!in || (present && !std::filesystem::is_regular_file(path, ec))) {
        if (present)
            warnings.push_back("cache file " + path.string() + " is unreadable; running cold");
        return warnings;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto parsed = parse_line(line);
        if (!parsed) {
            warnings.push_back("cache line " + std::to_string(lineno) + " is corrupt; skipped");
            continue;
        }
        if (parsed->complete())
            entries_.insert_or_assign(parsed->value, std::move(*parsed));
    }
    return warnings;
}

std::optional<Factorization> FactorCache::lookup(mpz_class const& magnitude) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(magnitude);
    if (it == entries_.end())
        return std::nullopt;
    ++hits_;
    return it->second;
}

void FactorCache::store(Factorization const& f) {
    if (!f.complete())
        return;
    Factorization entry = f;
    entry.value = abs(f.value);
    entry.sign = 1;
    std::lock_guard lock(mu_);
    auto [it, inserted] = entries_.emplace(entry.value, entry);
    if (!inserted || !path_)
        return;
    std::ofstream out(*path_, std::ios::app);
    if (out)
        out << format_line(entry) << '\n';
}

std::size_t FactorCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

} // namespace abcprat
