#include "abcprat/cli.hpp"

#include "abcprat/abc.hpp"
#include "abcprat/cache.hpp"
#include "abcprat/error.hpp"
#include "abcprat/scans.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace abcprat {

namespace {

struct RunConfig {
    std::int64_t d = 0;
    std::string minpoly;
    std::uint64_t n_max = 0;
    std::string X_text;
    std::uint64_t alpha = 2;
    std::uint64_t seed = 0;
    std::uint64_t factor_budget = FactorOptions{}.rho_budget;
    std::string cache_path;
    std::string format = "csv";
    std::string out_path;
    std::optional<std::uint64_t> class_number;
    long precision_cap = default_precision_cap;
    unsigned threads = 1;
    bool strict = false;
};

std::string yes_no(bool b) { return b ? "1" : "0"; }

std::string num(double x) { return fmt::format("{:.12g}", x); }

/// Accepts "1000", "1e12", "2.5e6"; the value must be a positive integer.
mpz_class parse_bound(std::string const& text) {
    auto fail = [&] { return Error(ErrorKind::InvalidArgument, "not a positive integer: '" + text + "'"); };
    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mant = text.substr(0, e);
        std::string tail = text.substr(e + 1);
        if (tail.empty() || tail.find_first_not_of("+0123456789") != std::string::npos)
            throw fail();
        exp10 = std::stol(tail);
    }
    std::string digits = mant;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw fail();
    mpz_class v(digits);
    for (; exp10 > 0; --exp10)
        v *= 10;
    for (; exp10 < 0; ++exp10) {
        if (v % 10 != 0)
            throw fail();
        v /= 10;
    }
    if (v <= 0)
        throw fail();
    return v;
}

/// Leading coefficient first, comma separated: "1,0,-1,-1" is x^3 - x - 1.
IntPoly parse_minpoly(std::string const& text) {
    std::vector<mpz_class> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(' ');
        auto e = tok.find_last_not_of(' ');
        if (b == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "empty coefficient in '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        mpz_class v;
        if (v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
            throw Error(ErrorKind::InvalidArgument, "bad coefficient '" + tok + "'");
        c.push_back(v);
    }
    std::reverse(c.begin(), c.end());
    IntPoly f(c);
    if (f.degree() < 1)
        throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have positive degree");
    return f;
}

std::string residue_text(Residue const& r) {
    if (r.split)
        return r.a.get_str();
    return r.a.get_str() + ":" + r.b.get_str();
}

struct Session {
    RunConfig cfg;
    FactorCache cache;
    bool cache_enabled = false;

    ScanOptions scan_options() {
        ScanOptions o;
        o.factor.seed = cfg.seed;
        o.factor.rho_budget = cfg.factor_budget;
        o.cache = cache_enabled ? &cache : nullptr;
        o.threads = cfg.threads;
        return o;
    }

    QuadField field() const { return make_field(cfg.d, cfg.class_number); }

    AlgebraicUnit certify(IntPoly const& f, std::string label) const {
        return certify_roots(f, 1e-30, static_cast<mpfr_prec_t>(cfg.precision_cap), std::move(label));
    }
};

void add_constants(Table& t, GrowthConstants const& c) {
    t.summary.emplace_back("k", std::to_string(c.k));
    t.summary.emplace_back("a", num(c.a));
    t.summary.emplace_back("beta", num(c.beta));
    t.summary.emplace_back("beta_k", num(c.beta_k));
    t.summary.emplace_back("c", num(c.c));
    t.summary.emplace_back("epsilon_max", num(c.epsilon_max));
    t.summary.emplace_back("epsilon", num(c.epsilon));
    t.summary.emplace_back("n0", std::to_string(c.n0));
    t.summary.emplace_back("gamma0", num(c.gamma0));
    t.summary.emplace_back("gamma", num(c.gamma));
}

Table cmd_field_info(Session& s) {
    QuadField F = s.field();
    AlgebraicUnit u = s.certify(quad_minpoly(F.fundamental_unit), F.fundamental_unit.to_string());
    Table t;
    t.command = "field-info";
    t.columns = {"key", "value"};
    auto row = [&](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
    row("d", std::to_string(F.d));
    row("disc", std::to_string(F.disc));
    row("omega", F.omega_label());
    row("fundamental_unit", F.fundamental_unit.to_string());
    row("unit_x", F.fundamental_unit.x.get_str());
    row("unit_y", F.fundamental_unit.y.get_str());
    row("unit_norm", std::to_string(F.unit_norm));
    row("unit_minpoly", u.minpoly.to_string());
    row("class_number", std::to_string(F.class_number));
    row("class_number_source", F.class_number_supplied ? "supplied" : "computed");
    row("p0", std::to_string(F.p0()));
    row("in_S", std::string(to_string(is_in_S(u))));
    row("pisot", yes_no(is_pisot(u)));
    Table c;
    add_constants(c, growth_constants(u));
    for (auto& [k, v] : c.summary)
        row(k, v);
    return t;
}

std::vector<std::string> record_row(ScanRecord const& r) {
    std::vector<std::string> row{
        std::to_string(r.n),
        yes_no(r.phi_ok),
        std::to_string(r.k),
        r.norm_phi.get_str(),
        r.factor_status == FactorStatus::Complete ? "Complete" : "Partial",
    };
    if (r.chosen) {
        row.push_back(r.chosen->p.get_str());
        row.push_back(std::to_string(r.chosen->residue_degree));
        row.push_back(r.chosen->norm.get_str());
        row.push_back(r.chosen->splitting == Splitting::Split ? r.chosen->hensel_root.get_str() : "");
    } else {
        row.insert(row.end(), {"", "", "", ""});
    }
    row.push_back(yes_no(r.order_is_n));
    row.push_back(yes_no(r.wieferich_ok));
    row.push_back(yes_no(r.not_dividing_n));
    row.push_back(yes_no(r.norm_bound_ok));
    row.emplace_back(to_string(r.status));
    row.emplace_back(to_string(r.reason));
    return row;
}

Table cmd_scan_wieferich(Session& s, bool& incomplete) {
    Table t;
    t.command = "scan-wieferich";
    t.columns = {"n",        "phi_ok", "k",     "norm_phi",    "factor_status",  "p",          "f",
                 "norm_p",   "root",   "order_is_n", "wieferich_ok", "not_dividing_n", "norm_bound_ok",
                 "status",   "reason"};
    ScanOptions opts = s.scan_options();
    std::vector<ScanRecord> records;
    GrowthConstants c;
    if (!s.cfg.minpoly.empty()) {
        IntPoly f = parse_minpoly(s.cfg.minpoly);
        AlgebraicUnit u = s.certify(f, f.to_string());
        c = growth_constants(u);
        records = generic_unit_scan(u, c, s.cfg.n_max, opts);
        t.summary.emplace_back("unit_minpoly", f.to_string());
        t.summary.emplace_back("mode", "rational-primes");
    } else {
        QuadField F = s.field();
        AlgebraicUnit u = s.certify(quad_minpoly(F.fundamental_unit), F.fundamental_unit.to_string());
        c = growth_constants(u);
        records = wieferich_scan(F, F.fundamental_unit, c, s.cfg.n_max, opts);
        t.summary.emplace_back("d", std::to_string(F.d));
        t.summary.emplace_back("unit", F.fundamental_unit.to_string());
        t.summary.emplace_back("mode", "prime-ideals");
    }
    for (auto const& r : records) {
        t.rows.push_back(record_row(r));
        incomplete = incomplete || r.reason == SkipReason::PartialFactorization;
    }
    add_constants(t, c);
    mpz_class X = s.cfg.X_text.empty() ? ceil_gamma_power(c.gamma, s.cfg.n_max) : parse_bound(s.cfg.X_text);
    if (X < 2)
        throw Error(ErrorKind::InvalidArgument, "X must be at least 2");
    CountReport rep = count_report(records, c, X);
    t.summary.emplace_back("X", rep.X.get_str());
    t.summary.emplace_back("n1", std::to_string(rep.n1));
    t.summary.emplace_back("eligible_n", std::to_string(rep.eligible_n));
    t.summary.emplace_back("successes", std::to_string(rep.successes));
    t.summary.emplace_back("distinct_rational_primes", std::to_string(rep.distinct_rational_primes));
    t.summary.emplace_back("lower_bound", std::to_string(rep.lower_bound));
    t.summary.emplace_back("c_hat", num(rep.c_hat));
    std::uint64_t total = 0, partial = 0;
    for (auto const& r : records) {
        total += r.status == ScanStatus::Success;
        partial += r.reason == SkipReason::PartialFactorization;
    }
    t.summary.emplace_back("total_successes", std::to_string(total));
    t.summary.emplace_back("partial_rows", std::to_string(partial));
    return t;
}

Table cmd_scan_prational(Session& s) {
    QuadField F = s.field();
    mpz_class Xz = parse_bound(s.cfg.X_text);
    if (!Xz.fits_ulong_p())
        throw Error(ErrorKind::InvalidArgument, "X too large for a prime sieve");
    std::uint64_t X = Xz.get_ui();
    auto verdicts = prationality_scan(F, X, s.scan_options());
    Table t;
    t.command = "scan-prational";
    t.columns = {"p", "splitting", "verdict", "reason", "norms", "fq_nonzero", "residues"};
    std::uint64_t prat = 0, nonprat = 0, excluded = 0;
    for (auto const& v : verdicts) {
        std::vector<std::string> norms, bits, residues;
        for (auto const& w : v.witnesses) {
            norms.push_back(w.prime.norm.get_str());
            bits.push_back(yes_no(w.fermat_quotient_nonzero));
            residues.push_back(residue_text(w.power));
        }
        auto splitting = split_prime(F, mpz_class(std::to_string(v.p))).front().splitting;
        t.rows.push_back({std::to_string(v.p), std::string(to_string(splitting)), std::string(to_string(v.verdict)),
                          std::string(to_string(v.reason)), fmt::format("{}", fmt::join(norms, ";")),
                          fmt::format("{}", fmt::join(bits, ";")), fmt::format("{}", fmt::join(residues, ";"))});
        prat += v.verdict == Verdict::PRational;
        nonprat += v.verdict == Verdict::NonPRational;
        excluded += v.verdict == Verdict::Excluded;
    }
    double logX = std::log(static_cast<double>(std::max<std::uint64_t>(X, 1)));
    t.summary = {{"d", std::to_string(F.d)},
                 {"unit", F.fundamental_unit.to_string()},
                 {"class_number", std::to_string(F.class_number)},
                 {"p0", std::to_string(F.p0())},
                 {"X", std::to_string(X)},
                 {"primes", std::to_string(verdicts.size())},
                 {"p_rational", std::to_string(prat)},
                 {"non_p_rational", std::to_string(nonprat)},
                 {"excluded", std::to_string(excluded)},
                 {"log_X", num(logX)},
                 {"p_rational_ge_log_X", yes_no(static_cast<double>(prat) >= logX)},
                 {"non_p_rational_basis", "criterion-level"}};
    return t;
}

Table cmd_abc_quality(Session& s, bool& incomplete) {
    QuadField F = s.field();
    ScanOptions opts = s.scan_options();
    QuadInt u = F.fundamental_unit;
    auto rows = jn_exponent_report(F, u, s.cfg.n_max, opts.factor, opts.cache);
    Table t;
    t.command = "abc-quality";
    t.columns = {"n", "norm", "norm_I", "norm_J", "theta", "radical", "height", "height_width", "quality", "status"};
    for (auto const& r : rows) {
        std::vector<std::string> row{std::to_string(r.n), r.norm.get_str(), r.norm_I.get_str(), r.norm_J.get_str(),
                                     num(r.theta)};
        if (r.status == FactorStatus::Complete) {
            AbcTriple tr = unit_triple(F, u, r.n, opts.factor, opts.cache);
            row.push_back(tr.radical.get_str());
            row.push_back(num(tr.height.value));
            row.push_back(num(tr.height.width));
            row.push_back(tr.quality ? num(*tr.quality) : "");
            row.emplace_back("Complete");
        } else {
            incomplete = true;
            row.insert(row.end(), {"", "", "", "", "Partial"});
        }
        t.rows.push_back(std::move(row));
    }
    t.summary = {{"d", std::to_string(F.d)}, {"unit", u.to_string()}, {"n_max", std::to_string(s.cfg.n_max)}};
    return t;
}

Table cmd_rational_wieferich(Session& s) {
    mpz_class Xz = parse_bound(s.cfg.X_text);
    if (!Xz.fits_ulong_p())
        throw Error(ErrorKind::InvalidArgument, "X too large for a prime sieve");
    auto primes = rational_wieferich_scan(s.cfg.alpha, Xz.get_ui());
    Table t;
    t.command = "rational-wieferich";
    t.columns = {"p"};
    for (auto p : primes)
        t.rows.push_back({std::to_string(p)});
    t.summary = {{"alpha", std::to_string(s.cfg.alpha)}, {"X", Xz.get_str()}, {"count", std::to_string(primes.size())}};
    return t;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonConvergence:
    case ErrorKind::PartialFactorization:
    case ErrorKind::RamifiedUnsupported:
        return exit_failure;
    default:
        return exit_usage;
    }
}

} // namespace

std::string to_csv(Table const& t) {
    std::string out = fmt::format("{}\n", fmt::join(t.columns, ","));
    for (auto const& r : t.rows)
        out += fmt::format("{}\n", fmt::join(r, ","));
    for (auto const& [k, v] : t.summary)
        out += fmt::format("# {}={}\n", k, v);
    return out;
}

std::string to_json(Table const& t) {
    nlohmann::ordered_json j;
    j["schema_version"] = json_schema_version;
    j["command"] = t.command;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (auto const& r : t.rows) {
        nlohmann::ordered_json o;
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            o[t.columns[i]] = r[i];
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (auto const& [k, v] : t.summary)
        summary[k] = v;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Session s;
    RunConfig& cfg = s.cfg;
    CLI::App app{"Wieferich prime ideals, p-rationality and abc audits for units"};
    app.name("abcprat");
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed for randomized subroutines");
        sub->add_option("--factor-budget", cfg.factor_budget, "Pollard rho iterations per factorization")
            ->check(CLI::PositiveNumber);
        sub->add_option("--cache", cfg.cache_path, "Factorization cache file")->envname("ABCPRAT_CACHE");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_path, "Write the table to this file");
        sub->add_option("--class-number", cfg.class_number, "Class number (skips the computation)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--precision-cap", cfg.precision_cap, "Maximum MPFR precision in bits")
            ->check(CLI::Range(128L, 1L << 20));
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_flag("--strict", cfg.strict, "Exit 3 when any row is incomplete");
    };

    auto* info = app.add_subcommand("field-info", "Field invariants and growth constants of the fundamental unit");
    info->add_option("--d", cfg.d, "Squarefree d > 1")->required();
    common(info);

    auto* wief = app.add_subcommand("scan-wieferich", "Wieferich prime ideals from Phi_n(u^k)");
    auto* dopt = wief->add_option("--d", cfg.d, "Squarefree d > 1 (uses the fundamental unit)");
    auto* mopt = wief->add_option("--minpoly", cfg.minpoly, "Unit minimal polynomial, leading coefficient first");
    dopt->excludes(mopt);
    wief->add_option("--n-max", cfg.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    wief->add_option("--X", cfg.X_text, "Counting bound (default ceil(gamma^n_max))");
    common(wief);

    auto* prat = app.add_subcommand("scan-prational", "p-rationality verdicts for all p <= X");
    prat->add_option("--d", cfg.d, "Squarefree d > 1")->required();
    prat->add_option("--X", cfg.X_text, "Prime bound")->required();
    common(prat);

    auto* abcq = app.add_subcommand("abc-quality", "I_n / J_n splits and abc qualities of u^n - 1 + 1 = u^n");
    abcq->add_option("--d", cfg.d, "Squarefree d > 1")->required();
    abcq->add_option("--n-max", cfg.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    common(abcq);

    auto* rw = app.add_subcommand("rational-wieferich", "Primes p <= X with alpha^(p-1) = 1 mod p^2");
    rw->add_option("--alpha", cfg.alpha, "Base")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    rw->add_option("--X", cfg.X_text, "Prime bound")->required();
    common(rw);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (wief->parsed() && cfg.d == 0 && cfg.minpoly.empty()) {
        err << "abcprat: scan-wieferich needs --d or --minpoly\n";
        return exit_usage;
    }

    try {
        if (!cfg.cache_path.empty()) {
            s.cache_enabled = true;
            for (auto const& w : s.cache.load(cfg.cache_path))
                err << "warning: " << w << "\n";
        }
        bool incomplete = false;
        Table t;
        if (info->parsed())
            t = cmd_field_info(s);
        else if (wief->parsed())
            t = cmd_scan_wieferich(s, incomplete);
        else if (prat->parsed())
            t = cmd_scan_prational(s);
        else if (abcq->parsed())
            t = cmd_abc_quality(s, incomplete);
        else
            t = cmd_rational_wieferich(s);

        std::string text = cfg.format == "json" ? to_json(t) : to_csv(t);
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!(f << text))
                throw Error(ErrorKind::Io, "cannot write " + cfg.out_path);
        }
        if (s.cache_enabled)
            err << "# cache_hits=" << s.cache.hits() << " cache_entries=" << s.cache.size() << "\n";
        if (incomplete && cfg.strict) {
            err << "abcprat: incomplete rows under --strict\n";
            return exit_failure;
        }
        return exit_ok;
    } catch (Error const& e) {
        err << "abcprat: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

} // namespace abcprat
