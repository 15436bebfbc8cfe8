#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "engine.hpp"
#include "verify.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/coeff.hpp"
#include "z2coh/errors.hpp"
#include "z2coh/serialize.hpp"

namespace z2coh::cli {

using nlohmann::json;

namespace {

struct Source
{
    std::string space;
    std::string file;
};

struct Loaded
{
    Z2CwComplex complex;
    std::string space;   // empty for files
};

class UsageProblem : public Error
{
    public:
        using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageProblem("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Loaded load(const Source& src)
{
    if (!src.space.empty() && !src.file.empty())
        throw UsageProblem("give either a space name or --file, not both");
    if (!src.file.empty())
    {
        Z2CwComplex x = from_json(read_file(src.file));
        require_valid(x);
        return {std::move(x), {}};
    }
    if (src.space.empty())
        throw UsageProblem("a space name or --file is required");
    return {build(src.space), src.space};
}

std::string cell_counts(const Z2CwComplex& x, bool fixed_only)
{
    std::string out;
    for (int n = 0; n <= x.dimension(); ++n)
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < x.num_cells(n); ++i)
            k += !fixed_only || x.is_fixed(n, i);
        out += (n ? "," : "") + std::to_string(k);
    }
    return out.empty() ? "-" : out;
}

std::vector<std::size_t> cell_count_list(const Z2CwComplex& x, bool fixed_only)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= x.dimension(); ++n)
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < x.num_cells(n); ++i)
            k += !fixed_only || x.is_fixed(n, i);
        out.push_back(k);
    }
    return out;
}

json integer_json(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

json group_json(const FgAbGroup& g)
{
    json torsion = json::array();
    for (const Integer& d : g.torsion())
        torsion.push_back(integer_json(d));
    return json{{"group", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", torsion}};
}

/// "2", "0-3", "0,2,4"
std::vector<int> parse_degrees(const std::vector<std::string>& specs, int top)
{
    std::vector<int> out;
    if (specs.empty())
    {
        for (int n = 0; n <= top; ++n)
            out.push_back(n);
        return out;
    }
    auto number = [](const std::string& s) {
        if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
            throw UsageProblem("bad degree '" + s + "'");
        return std::stoi(s);
    };
    for (const std::string& spec : specs)
    {
        std::stringstream ss(spec);
        std::string part;
        while (std::getline(ss, part, ','))
        {
            const auto dash = part.find('-');
            if (dash == std::string::npos)
            {
                out.push_back(number(part));
                continue;
            }
            const int lo = number(part.substr(0, dash));
            const int hi = number(part.substr(dash + 1));
            if (hi < lo)
                throw UsageProblem("empty degree range '" + part + "'");
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_list(bool systems, const std::string& format, std::ostream& out)
{
    if (systems)
    {
        json arr = json::array();
        for (const std::string& name : std_system_names())
        {
            const CoefficientSystem m = std_system(name);
            if (format == "json")
                arr.push_back(json{{"name", name}, {"m0_rank", m.m0_rank}, {"m1_rank", m.m1_rank}});
            else
                out << std::left << std::setw(12) << name << "M(Z0) = Z^" << m.m0_rank << "  M(Z1) = Z^"
                    << m.m1_rank << "  action " << (m.m0_rank == 1 && m.action(0, 0) == -1 ? "-1" : "+1") << "\n";
        }
        if (format == "json")
            out << arr.dump(2) << "\n";
        return Success;
    }
    json arr = json::array();
    if (format != "json")
        out << std::left << std::setw(20) << "name" << std::setw(5) << "dim" << std::setw(16) << "cells"
            << "fixed cells\n";
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        if (format == "json")
        {
            arr.push_back(json{{"name", name},
                               {"dimension", x.dimension()},
                               {"cells", cell_count_list(x, false)},
                               {"fixed_cells", cell_count_list(x, true)}});
        }
        else
        {
            out << std::left << std::setw(20) << name << std::setw(5) << x.dimension() << std::setw(16)
                << cell_counts(x, false) << cell_counts(x, true) << "\n";
        }
    }
    if (format == "json")
        out << arr.dump(2) << "\n";
    return Success;
}

struct ComputeOptions
{
    Source source;
    std::string theory = "bredon";
    std::optional<std::string> coeff;
    std::optional<int> twist;
    std::vector<std::string> degrees;
    std::string format = "table";
    bool no_cache = false;
    std::string cache_dir;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out)
{
    const Loaded loaded = load(opt.source);
    const Z2CwComplex& x = loaded.complex;
    std::string coeff;
    if (opt.theory == "bredon")
    {
        if (opt.twist)
            throw UsageProblem("--twist applies to Borel theories; use --coeff with bredon");
        coeff = opt.coeff.value_or("0~Ztilde");
        (void)std_system(coeff);
    }
    else if (is_borel_theory(opt.theory))
    {
        if (opt.coeff && opt.twist)
            throw UsageProblem("give --twist or --coeff, not both");
        coeff = opt.coeff ? twist_name(parse_twist(*opt.coeff)) : twist_name(opt.twist.value_or(1));
    }
    else
    {
        throw UsageProblem("unknown theory '" + opt.theory + "' (bredon, borel, borel-relative)");
    }

    const std::vector<int> degrees = parse_degrees(opt.degrees, x.dimension() + 1);
    const std::string hash = content_hash(x);
    const ResultCache cache(opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir));

    json results = json::array();
    std::vector<std::pair<int, FgAbGroup>> groups;
    for (int n : degrees)
    {
        CacheEntry entry{loaded.space, hash, opt.theory, coeff, n,
                         is_borel_theory(opt.theory) ? approximation_level(n) : 0, {}};
        std::optional<FgAbGroup> g;
        if (!opt.no_cache)
        {
            if (auto hit = cache.lookup(entry))
            {
                try
                {
                    g = parse_group(*hit);
                }
                catch (const Error&)
                {
                }
            }
        }
        if (!g)
        {
            g = evaluate_theory(x, opt.theory, coeff, n);
            if (!opt.no_cache)
            {
                entry.group = g->to_string();
                cache.store(entry);
            }
        }
        json r = group_json(*g);
        r["degree"] = n;
        results.push_back(std::move(r));
        groups.emplace_back(n, *g);
    }

    if (opt.format == "json")
    {
        json doc;
        doc["space"] = loaded.space.empty() ? json(nullptr) : json(loaded.space);
        doc["complex_hash"] = hash;
        doc["theory"] = opt.theory;
        doc["coeff"] = coeff;
        doc["results"] = std::move(results);
        out << doc.dump(2) << "\n";
    }
    else if (groups.size() == 1)
    {
        out << groups.front().second.to_string() << "\n";
    }
    else
    {
        for (const auto& [n, g] : groups)
            out << "H^" << n << " = " << g.to_string() << "\n";
    }
    return Success;
}

int cmd_classify(const Source& src, const std::string& format, std::ostream& out, std::ostream& err)
{
    const Loaded loaded = load(src);
    const Z2CwComplex& x = loaded.complex;
    const int d = x.dimension();
    if (d > 4)
    {
        err << "error: dimension " << d
            << " is above 4; H^2_Z2(X|X^tau; Z(1)) is not known to classify Quaternionic bundles there\n";
        return UsageError;
    }
    const FgAbGroup g = borel_cohomology(x, 1, 2, labels_of(fixed_subcomplex(x).complex));
    const bool fixed_empty = fixed_subcomplex(x).complex.empty();

    std::string phases;
    if (!g.is_finite())
        phases = "infinite";
    else
        phases = g.order().str();
    std::vector<std::string> notes;
    if (d == 4)
        notes.push_back("dimension 4: the FKMM invariant is surjective but not known to be injective, so " +
                        phases + " is a lower bound");
    if (fixed_empty)
        notes.push_back("X^tau is empty: odd-rank Quaternionic bundles also exist and are not counted here");

    if (format == "json")
    {
        json doc;
        doc["space"] = loaded.space.empty() ? json(nullptr) : json(loaded.space);
        doc["dimension"] = d;
        doc["h2_relative"] = group_json(g);
        doc["phases"] = g.is_finite() ? integer_json(g.order()) : json(nullptr);
        doc["bijective"] = d <= 3;
        doc["notes"] = notes;
        out << doc.dump(2) << "\n";
        return Success;
    }
    out << "space: " << (loaded.space.empty() ? src.file : loaded.space) << "\n";
    out << "dimension: " << d << "\n";
    out << "H^2_Z2(X|X^tau; Z(1)) = " << g.to_string() << "\n";
    if (g.is_finite())
        out << "rank-2k Quaternionic phases: " << phases << (d == 4 ? " (at least)" : "") << "\n";
    else
        out << "rank-2k Quaternionic phases: infinitely many\n";
    for (const std::string& n : notes)
        out << "note: " << n << "\n";
    return Success;
}

int cmd_verify(const std::string& suite, const std::string& cache_dir, std::ostream& out)
{
    const ResultCache cache(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
    const auto results = run_suite(suite, cache);
    std::size_t failed = 0;
    for (const CheckResult& r : results)
    {
        failed += !r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
        if (!r.detail.empty())
            out << "  " << r.detail;
        out << "\n";
    }
    out << results.size() - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? Success : VerificationFailure;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err)
{
    Z2CwComplex x;
    try
    {
        x = from_json(read_file(path));
    }
    catch (const ParseError& e)
    {
        err << "error: " << path << ": " << e.what() << "\n";
        return UsageError;
    }
    catch (const InvalidComplex& e)
    {
        err << "error: " << path << ": " << e.what() << "\n";
        return UsageError;
    }
    const auto violations = validate(x);
    if (violations.empty())
    {
        out << "valid: dimension " << x.dimension() << ", cells " << cell_counts(x, false) << ", fixed "
            << cell_counts(x, true) << "\n";
        return Success;
    }
    for (const std::string& v : violations)
        out << "violation: " << v << "\n";
    return VerificationFailure;
}

int cmd_export(const Source& src, const std::string& output, std::ostream& out)
{
    const std::string text = to_json(load(src).complex);
    if (output.empty())
    {
        out << text;
        return Success;
    }
    std::ofstream f(output);
    if (!f || !(f << text))
        throw UsageProblem("cannot write '" + output + "'");
    return Success;
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bredon and Borel Z2-equivariant cohomology of finite Z2-CW complexes", "z2coh"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    bool list_systems = false;
    std::string list_format = "table";
    auto* list = app.add_subcommand("list", "List catalog spaces or coefficient systems");
    list->add_flag("--systems", list_systems, "List coefficient systems instead of spaces");
    list->add_option("--format", list_format)->check(CLI::IsMember({"table", "json"}));

    ComputeOptions copt;
    std::string twist_text;
    auto* compute = app.add_subcommand("compute", "Compute equivariant cohomology groups");
    compute->add_option("--space", copt.source.space, "Catalog space");
    compute->add_option("--file", copt.source.file, "Complex in z2cw JSON form");
    compute->add_option("--theory", copt.theory)->check(CLI::IsMember({"bredon", "borel", "borel-relative"}));
    compute->add_option("--coeff", copt.coeff, "Coefficient system (bredon) or Z(0)/Z(1)");
    compute->add_option("--twist", copt.twist, "Twist parity j of Z(j) (borel theories)")
        ->check(CLI::IsMember({0, 1}));
    compute->add_option("--deg", copt.degrees, "Degrees: 2, 0-3 or 0,2 (default 0..dim+1)");
    compute->add_option("--format", copt.format)->check(CLI::IsMember({"table", "json"}));
    compute->add_flag("--no-cache", copt.no_cache, "Neither read nor write the result cache");
    compute->add_option("--cache-dir", copt.cache_dir, "Cache directory (default $Z2COH_CACHE_DIR)");

    Source csrc;
    std::string classify_format = "table";
    auto* classify = app.add_subcommand("classify", "Classify rank-2k Quaternionic phases");
    classify->add_option("space", csrc.space, "Catalog space");
    classify->add_option("--file", csrc.file, "Complex in z2cw JSON form");
    classify->add_option("--format", classify_format)->check(CLI::IsMember({"table", "json"}));

    std::string suite;
    std::string verify_cache;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "paper-tables | theorem-3-3 | exactness | cache | all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--cache-dir", verify_cache, "Cache directory to audit");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Validate a complex in z2cw JSON form");
    validate_cmd->add_option("file", validate_path)->required();

    Source esrc;
    std::string export_out;
    auto* exp = app.add_subcommand("export", "Write a catalog complex as z2cw JSON");
    exp->add_option("space", esrc.space, "Catalog space");
    exp->add_option("--file", esrc.file, "Re-export a complex read from a file");
    exp->add_option("-o,--output", export_out, "Output file (default stdout)");

    std::vector<std::string> argv_storage{"z2coh"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return Success;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    try
    {
        if (*list)
            return cmd_list(list_systems, list_format, out);
        if (*compute)
            return cmd_compute(copt, out);
        if (*classify)
            return cmd_classify(csrc, classify_format, out, err);
        if (*verify)
            return cmd_verify(suite, verify_cache, out);
        if (*validate_cmd)
            return cmd_validate(validate_path, out, err);
        if (*exp)
            return cmd_export(esrc, export_out, out);
    }
    catch (const UnknownSpace& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    catch (const InvalidSystem& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    catch (const UsageProblem& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    catch (const ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    catch (const InvalidComplex& e)
    {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << "\n";
        return VerificationFailure;
    }
    return UsageError;
}

}   // namespace z2coh::cli
