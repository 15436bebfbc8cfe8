// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/bredon.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/sequences.hpp"
#include "z2coh/smith.hpp"

using namespace z2coh;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

class Recorder
{
    public:
        void expect(bool ok, const std::string& what)
        {
            ++checks_;
            if (!ok && first_failure_.empty())
                first_failure_ = what;
            pass_ = pass_ && ok;
        }
        Outcome done(const std::string& summary) const
        {
            std::ostringstream s;
            s << summary << " (" << checks_ << " checks)";
            if (!pass_)
                s << "; first failure: " << first_failure_;
            return {pass_, s.str()};
        }

    private:
        bool pass_ = true;
        int checks_ = 0;
        std::string first_failure_;
};

CellLabels fixed_labels(const Z2CwComplex& x)
{
    return labels_of(fixed_subcomplex(x).complex);
}

std::string show(const FgAbGroup& g)
{
    return g.to_string();
}

std::vector<Integer> ints(std::initializer_list<int> v)
{
    return {v.begin(), v.end()};
}

Outcome lens_classification()
{
    Recorder r;
    std::string values;
    for (int q = 1; q <= 3; ++q)
    {
        const Z2CwComplex x = lens(2 * q);
        const FgAbGroup g = bredon_cohomology(x, zero_to_ztilde(), 2);
        const FgAbGroup o = oracle::bredon_zero_system(x, 1, 2);
        r.expect(g.free_rank() == 0 && g.torsion() == ints({2 * q}), "q=" + std::to_string(q) + " gave " + show(g));
        r.expect(o == g, "oracle disagrees at q=" + std::to_string(q));
        values += (q > 1 ? ", " : "") + show(g);
    }
    return r.done("H^2 for q = 1, 2, 3: " + values);
}

Outcome non_splitting()
{
    Recorder r;
    const FgAbGroup g = bredon_cohomology(lens(4), zero_to_ztilde(), 2);
    r.expect(g.torsion() == ints({4}), "got " + show(g));
    r.expect(!(g == FgAbGroup::from_orders({2, 2})), "split");
    const ExactSequence red = reduced_sequence(lens(4), fixed_labels(lens(4)), 1, 2);
    r.expect(check_exactness(red).exact, "reduced sequence not exact");
    r.expect(red.groups[0] == FgAbGroup::cyclic(2) && red.groups[2] == FgAbGroup::cyclic(2),
             "ends are not Z/2");
    return r.done("invariant factors [4]");
}

Outcome theorem_3_3()
{
    Recorder r;
    int spaces = 0;
    for (const std::string& name : list_names())
    {
        ++spaces;
        const Z2CwComplex x = build(name);
        const CellLabels fixed = fixed_labels(x);
        for (int j = 0; j <= 1; ++j)
        {
            const CoefficientSystem m = j == 0 ? zero_to_z() : zero_to_ztilde();
            for (int n = 0; n <= x.dimension() + 1; ++n)
            {
                const FgAbGroup borel = borel_cohomology(x, j, n, fixed);
                const FgAbGroup bredon = bredon_cohomology(x, m, n);
                r.expect(borel == bredon, name + " j=" + std::to_string(j) + " n=" + std::to_string(n) + ": " +
                                              show(borel) + " vs " + show(bredon));
            }
        }
    }
    r.expect(spaces >= 10, "fewer than 10 spaces");
    return r.done(std::to_string(spaces) + " spaces, both twists");
}

Outcome lens_borel_table()
{
    Recorder r;
    for (int q = 1; q <= 3; ++q)
    {
        const std::string tag = "q=" + std::to_string(q);
        const Z2CwComplex x = lens(2 * q);
        const CellLabels y = fixed_labels(x);
        r.expect(borel_cohomology(x, 1, 1) == FgAbGroup::cyclic(2), tag + " H^1(L)");
        r.expect(borel_cohomology(fixed_subcomplex(x).complex, 1, 1) == FgAbGroup::from_orders({2, 2}),
                 tag + " H^1(L^tau)");
        const GroupHom i1 = restriction_map(x, y, 1, 1);
        r.expect(is_injective(i1), tag + " i* not injective");
        r.expect(cokernel(i1) == FgAbGroup::cyclic(2), tag + " coker " + show(cokernel(i1)));
    }
    return r.done("H^1 = Z/2, H^1(fixed) = Z/2 + Z/2, i* injective, coker Z/2");
}

Outcome restriction_kernel()
{
    Recorder r;
    std::string orders;
    for (int q = 1; q <= 3; ++q)
    {
        const Z2CwComplex x = lens(2 * q);
        const GroupHom i2 = restriction_map(x, fixed_labels(x), 1, 2);
        const FgAbGroup k = kernel(i2);
        r.expect(k.is_finite() && k.order() == q, "q=" + std::to_string(q) + " kernel " + show(k));
        orders += (q > 1 ? ", " : "") + show(k);
    }
    return r.done("kernels " + orders);
}

Outcome orbit_evaluations()
{
    Recorder r;
    const Z2CwComplex z0 = free_pair();
    const Z2CwComplex z1 = point_complex();
    for (int j = 0; j <= 1; ++j)
    {
        const CoefficientSystem m = j == 0 ? zero_to_z() : zero_to_ztilde();
        for (int n = 0; n <= 3; ++n)
        {
            const std::string tag = "j=" + std::to_string(j) + " n=" + std::to_string(n);
            const FgAbGroup on_free = h_theory(z0, {}, j, n);
            const FgAbGroup on_point = h_theory(z1, {}, j, n);
            r.expect(on_free == (n == 0 ? FgAbGroup::free(1) : FgAbGroup::trivial()), tag + " Z0: " + show(on_free));
            r.expect(on_point.is_trivial(), tag + " Z1: " + show(on_point));
            r.expect(on_free == bredon_cohomology(z0, m, n), tag + " Z0 vs Bredon");
            r.expect(on_point == bredon_cohomology(z1, m, n), tag + " Z1 vs Bredon");
        }
    }
    return r.done("h(Z0) = Z in degree 0, h(Z1) = 0");
}

Outcome group_cohomology_rows()
{
    Recorder r;
    const std::vector<std::string> trivial{"Z", "0", "Z/2", "0", "Z/2"};
    const std::vector<std::string> sign{"0", "Z/2", "0", "Z/2", "0"};
    for (int p = 0; p <= 4; ++p)
    {
        const auto up = static_cast<std::size_t>(p);
        const FgAbGroup a = group_cohomology_z2(1, IntegerMatrix{{1}}, p);
        const FgAbGroup b = group_cohomology_z2(1, IntegerMatrix{{-1}}, p);
        r.expect(show(a) == trivial[up], "H^" + std::to_string(p) + "(Z2, Z) = " + show(a));
        r.expect(show(b) == sign[up], "H^" + std::to_string(p) + "(Z2, Ztilde) = " + show(b));
        r.expect(borel_cohomology(point_complex(), 0, p) == a, "Borel point Z(0)");
        r.expect(borel_cohomology(point_complex(), 1, p) == b, "Borel point Z(1)");
    }
    return r.done("Z,0,Z/2,0,Z/2 and 0,Z/2,0,Z/2,0");
}

Outcome degenerations()
{
    Recorder r;
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        const CwComplex q = quotient_complex(x).complex;
        const CwComplex f = fixed_subcomplex(x).complex.underlying();
        for (int n = 0; n <= x.dimension() + 1; ++n)
        {
            const std::string tag = name + " n=" + std::to_string(n);
            const FgAbGroup c = bredon_cohomology(x, constant_z(), n);
            r.expect(c == cellular_cohomology(q, n), tag + " constant vs quotient");
            r.expect(c == oracle::bredon_constant(x, n), tag + " constant vs invariant cochains");
            r.expect(bredon_cohomology(x, fixed_point_z(), n) == cellular_cohomology(f, n), tag + " fixed set");
        }
    }
    return r.done("whole catalog");
}

Outcome exactness()
{
    Recorder r;
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        for (int j = 0; j <= 1; ++j)
        {
            const ExactnessReport rep = check_exactness(les_of_pair(x, fixed_labels(x), j, x.dimension()));
            r.expect(rep.exact, name + " j=" + std::to_string(j) + ": " +
                                    (rep.violations.empty() ? std::string() : rep.violations.front()));
        }
    }
    return r.done("(X, X^tau) for the whole catalog");
}

Outcome stability()
{
    Recorder r;
    for (const std::string& name : list_names())
    {
        const Z2CwComplex x = build(name);
        const CellLabels fixed = fixed_labels(x);
        const Z2CwComplex xf = fixed_subcomplex(x).complex;
        for (int j = 0; j <= 1; ++j)
        {
            for (int n = 0; n <= x.dimension() + 1; ++n)
            {
                const std::string tag = name + " j=" + std::to_string(j) + " n=" + std::to_string(n);
                r.expect(stability_check(x, j, n).stable, tag);
                r.expect(stability_check(x, j, n, fixed).stable, tag + " relative");
                r.expect(stability_check(xf, j, n).stable, tag + " fixed set");
            }
        }
    }
    return r.done("N = n+2 versus n+3");
}

bool smith_ok(const IntegerMatrix& a)
{
    const SmithDecomposition s = smith_normal_form(a);
    if (!(s.u * a * s.v == s.d) || !(s.u * s.u_inv == IntegerMatrix::identity(a.rows())) ||
        !(s.v * s.v_inv == IntegerMatrix::identity(a.cols())))
        return false;
    const auto f = s.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        if (f[i] <= 0 || (i > 0 && f[i] % f[i - 1] != 0))
            return false;
    }
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j && s.d(i, j) != 0)
                return false;
    return true;
}

bool structurally_sound(const Z2CwComplex& x)
{
    if (!validate(x).empty())
        return false;
    for (int n = 0; n <= x.dimension(); ++n)
    {
        const IntegerMatrix t = x.action_matrix(n);
        if (!(t * t == IntegerMatrix::identity(x.num_cells(n))))
            return false;
        if (n > 0 && !(x.boundary(n) * t == x.action_matrix(n - 1) * x.boundary(n)))
            return false;
        if (n > 1 && !(x.boundary(n - 1) * x.boundary(n)).is_zero())
            return false;
    }
    return true;
}

Outcome structural()
{
    Recorder r;
    std::mt19937 rng(1729);
    std::uniform_int_distribution<std::size_t> size(0, 6);
    for (int i = 0; i < 200; ++i)
    {
        const IntegerMatrix a = oracle::random_matrix(size(rng), size(rng), 12, rng);
        r.expect(smith_ok(a), "Smith form of " + a.to_string());
    }
    for (int i = 0; i < 50; ++i)
    {
        const IntegerMatrix a = oracle::random_matrix(4, 3, 6, rng);
        const IntegerMatrix b = oracle::random_unimodular(4, 10, rng) * a * oracle::random_unimodular(3, 10, rng);
        r.expect(smith_normal_form(a).invariant_factors() == smith_normal_form(b).invariant_factors(),
                 "invariant factors not conjugation invariant");
    }

    const auto names = list_names();
    for (const std::string& name : names)
    {
        const Z2CwComplex x = build(name);
        r.expect(structurally_sound(x), name + " structure");
        if (x.is_free())
            r.expect(2 * quotient_complex(x).complex.euler_characteristic() == x.euler_characteristic(),
                     name + " quotient chi");
    }
    const std::vector<std::string> small{"point", "free-pair", "circle-reflection", "circle-antipodal",
                                         "cp1-conjugation", "tr-sphere-2"};
    for (const auto& a : small)
    {
        for (const auto& b : small)
        {
            const Z2CwComplex x = build(a);
            const Z2CwComplex y = build(b);
            const Z2CwComplex p = product(x, y);
            r.expect(structurally_sound(p), a + " x " + b + " structure");
            r.expect(p.euler_characteristic() == x.euler_characteristic() * y.euler_characteristic(),
                     a + " x " + b + " chi");
        }
        for (int level = 0; level <= 3; ++level)
        {
            const Z2CwComplex p = product(build(a), ez2_skeleton(level));
            r.expect(p.is_free() && structurally_sound(p), a + " x S^" + std::to_string(level));
            r.expect(2 * quotient_complex(p).complex.euler_characteristic() == p.euler_characteristic(),
                     a + " x S^" + std::to_string(level) + " quotient chi");
        }
    }
    return r.done("Smith form, boundary, involution and Euler characteristic properties");
}

}   // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"lens classification", lens_classification},
        {"non-splitting", non_splitting},
        {"Borel-relative equals Bredon", theorem_3_3},
        {"lens Borel table", lens_borel_table},
        {"restriction kernel", restriction_kernel},
        {"orbit evaluations", orbit_evaluations},
        {"group cohomology rows", group_cohomology_rows},
        {"degenerate coefficient systems", degenerations},
        {"exactness", exactness},
        {"stability", stability},
        {"structural properties", structural},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria)
    {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = check();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << " ["
                  << secs << "s]\n";
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
