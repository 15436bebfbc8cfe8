#include "verify.hpp"

#include "engine.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/bredon.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/coeff.hpp"
#include "z2coh/errors.hpp"
#include "z2coh/sequences.hpp"
#include "z2coh/serialize.hpp"

namespace z2coh::cli {

namespace {

class Recorder
{
    public:
        explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

        void check(const std::string& name, bool pass, const std::string& detail = {})
        {
            out_.push_back(CheckResult{suite_, name, pass, detail});
        }
        void expect_group(const std::string& name, const FgAbGroup& got, const std::string& want)
        {
            const bool pass = got == parse_group(want);
            check(name, pass, pass ? got.to_string() : "got " + got.to_string() + ", expected " + want);
        }
        std::vector<CheckResult> take() { return std::move(out_); }

    private:
        std::string suite_;
        std::vector<CheckResult> out_;
};

CellLabels fixed_labels(const Z2CwComplex& x)
{
    return labels_of(fixed_subcomplex(x).complex);
}

std::vector<CheckResult> paper_tables()
{
    Recorder r("paper-tables");
    for (int q = 1; q <= 3; ++q)
    {
        const std::string name = "lens-" + std::to_string(2 * q);
        const Z2CwComplex x = build(name);
        const FgAbGroup h2 = bredon_cohomology(x, zero_to_ztilde(), 2);
        r.expect_group(name + " bredon 0~Ztilde H^2", h2, "Z/" + std::to_string(2 * q));
        if (q == 2)
        {
            const bool pass = h2.free_rank() == 0 && h2.torsion() == std::vector<Integer>{4};
            r.check("lens-4 invariant factors [4], not [2, 2]", pass, h2.to_string());
        }
        r.expect_group(name + " borel Z(1) H^1", borel_cohomology(x, 1, 1), "Z/2");
        r.expect_group(name + " fixed set borel Z(1) H^1", borel_cohomology(fixed_subcomplex(x).complex, 1, 1),
                       "Z/2 + Z/2");
        const GroupHom i1 = restriction_map(x, fixed_labels(x), 1, 1);
        r.check(name + " i* in degree 1 injective", is_injective(i1));
        r.expect_group(name + " coker i* in degree 1", cokernel(i1), "Z/2");
        const GroupHom i2 = restriction_map(x, fixed_labels(x), 1, 2);
        const FgAbGroup k2 = kernel(i2);
        r.check(name + " ker i* in degree 2 has order " + std::to_string(q), k2.is_finite() && k2.order() == q,
                k2.to_string());
    }

    for (int j = 0; j <= 1; ++j)
    {
        for (int n = 0; n <= 3; ++n)
        {
            const std::string suffix = " h_" + std::to_string(j) + "^" + std::to_string(n);
            r.expect_group("Z1" + suffix, h_theory(point_complex(), {}, j, n), "0");
            r.expect_group("Z0" + suffix, h_theory(free_pair(), {}, j, n), n == 0 ? "Z" : "0");
        }
    }

    const IntegerMatrix plus{{1}};
    const IntegerMatrix minus{{-1}};
    const char* trivial_row[] = {"Z", "0", "Z/2", "0", "Z/2"};
    const char* twisted_row[] = {"0", "Z/2", "0", "Z/2", "0"};
    for (int p = 0; p <= 4; ++p)
    {
        r.expect_group("H^" + std::to_string(p) + "(Z2; Z)", group_cohomology_z2(1, plus, p), trivial_row[p]);
        r.expect_group("H^" + std::to_string(p) + "(Z2; Ztilde)", group_cohomology_z2(1, minus, p),
                       twisted_row[p]);
    }

    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        int failures = 0;
        std::string first;
        const auto table = oracle_table(name);
        for (const OracleEntry& e : table)
        {
            const FgAbGroup got = evaluate_theory(x, e.theory, e.coeff, e.degree);
            if (!(got == parse_group(e.expected)) && failures++ == 0)
                first = e.theory + " " + e.coeff + " H^" + std::to_string(e.degree) + ": got " + got.to_string() +
                        ", expected " + e.expected;
        }
        r.check(name + " oracle table (" + std::to_string(table.size()) + " entries)", failures == 0, first);
    }
    return r.take();
}

std::vector<CheckResult> theorem_3_3()
{
    Recorder r("theorem-3-3");
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        const CellLabels fixed = fixed_labels(x);
        for (int j = 0; j <= 1; ++j)
        {
            const CoefficientSystem m = j == 0 ? zero_to_z() : zero_to_ztilde();
            std::string detail;
            bool pass = true;
            for (int n = 0; n <= x.dimension() + 1; ++n)
            {
                const FgAbGroup borel = borel_cohomology(x, j, n, fixed);
                const FgAbGroup bredon = bredon_cohomology(x, m, n);
                if (!(borel == bredon))
                {
                    pass = false;
                    detail = "H^" + std::to_string(n) + ": borel " + borel.to_string() + ", bredon " +
                             bredon.to_string();
                    break;
                }
                detail += (n ? " " : "") + bredon.to_string();
            }
            r.check(name + " j=" + std::to_string(j), pass, "[" + detail + "]");
        }
    }
    return r.take();
}

std::vector<CheckResult> exactness()
{
    Recorder r("exactness");
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        for (int j = 0; j <= 1; ++j)
        {
            const ExactnessReport rep = check_exactness(les_of_pair(x, fixed_labels(x), j, x.dimension()));
            r.check(name + " (X, X^tau) j=" + std::to_string(j), rep.exact,
                    rep.exact ? std::string() : rep.violations.front());
        }
    }
    for (int q = 1; q <= 3; ++q)
    {
        const std::string name = "lens-" + std::to_string(2 * q);
        const Z2CwComplex x = build(name);
        const ExactSequence seq = reduced_sequence(x, fixed_labels(x), 1, 2);
        const ExactnessReport rep = check_exactness(seq);
        std::string shape;
        for (const auto& g : seq.groups)
            shape += (shape.empty() ? "0 -> " : " -> ") + g.to_string();
        r.check(name + " reduced sequence", rep.exact, shape + " -> 0");
    }
    return r.take();
}

std::vector<CheckResult> cache_audit(const ResultCache& cache)
{
    Recorder r("cache");
    const auto scan = cache.scan();
    for (const std::string& f : scan.unreadable)
        r.check("entry " + f, false, "unreadable or inconsistent cache entry");
    std::size_t audited = 0;
    for (const CacheEntry& e : scan.entries)
    {
        if (e.space.empty() || !is_known_space(e.space))
            continue;
        const Z2CwComplex x = build(e.space);
        if (content_hash(x) != e.complex_hash)
            continue;
        ++audited;
        FgAbGroup got;
        try
        {
            got = evaluate_theory(x, e.theory, e.coeff, e.degree);
        }
        catch (const Error& err)
        {
            r.check("entry " + e.key(), false, err.what());
            continue;
        }
        FgAbGroup cached;
        bool parsed = true;
        try
        {
            cached = parse_group(e.group);
        }
        catch (const Error&)
        {
            parsed = false;
        }
        if (!parsed || !(cached == got))
            r.check("entry " + e.key(), false,
                    e.space + " " + e.theory + " " + e.coeff + " H^" + std::to_string(e.degree) + ": cached '" +
                        e.group + "', recomputed " + got.to_string());
    }
    r.check("cache entries recomputed", true,
            std::to_string(audited) + " audited in " + cache.dir().string());
    return r.take();
}

}   // namespace

std::vector<std::string> suite_names()
{
    return {"paper-tables", "theorem-3-3", "exactness", "cache", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const ResultCache& cache)
{
    if (suite == "paper-tables")
        return paper_tables();
    if (suite == "theorem-3-3")
        return theorem_3_3();
    if (suite == "exactness")
        return exactness();
    if (suite == "cache")
        return cache_audit(cache);
    if (suite == "all")
    {
        std::vector<CheckResult> out;
        for (const std::string& s : {"paper-tables", "theorem-3-3", "exactness", "cache"})
        {
            auto part = run_suite(s, cache);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw Error("unknown suite '" + suite + "'");
}

}   // namespace z2coh::cli
