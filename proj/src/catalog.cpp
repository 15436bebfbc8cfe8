#include "z2coh/catalog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "z2coh/borel.hpp"
#include "z2coh/errors.hpp"

namespace z2coh {

namespace {

Z2CwComplex::Cells make_cells(std::vector<std::string> labels, std::vector<SignedCell> action, IntegerMatrix boundary,
                              std::vector<bool> fixed)
{
    return Z2CwComplex::Cells{std::move(labels), std::move(action), std::move(boundary), std::move(fixed)};
}

}   // namespace

Z2CwComplex point_complex()
{
    return Z2CwComplex({make_cells({"pt"}, {{0, 1}}, IntegerMatrix(0, 1), {true})});
}

Z2CwComplex free_pair()
{
    return Z2CwComplex({make_cells({"z+", "z-"}, {{1, 1}, {0, 1}}, IntegerMatrix(0, 2), {false, false})});
}

Z2CwComplex circle_trivial()
{
    return Z2CwComplex({
        make_cells({"v"}, {{0, 1}}, IntegerMatrix(0, 1), {true}),
        make_cells({"e"}, {{0, 1}}, IntegerMatrix{{0}}, {true}),
    });
}

Z2CwComplex circle_reflection()
{
    return Z2CwComplex({
        make_cells({"v0", "v1"}, {{0, 1}, {1, 1}}, IntegerMatrix(0, 2), {true, true}),
        make_cells({"e+", "e-"}, {{1, 1}, {0, 1}}, IntegerMatrix{{-1, -1}, {1, 1}}, {false, false}),
    });
}

Z2CwComplex circle_antipodal()
{
    return ez2_skeleton(1);
}

Z2CwComplex cp1_conjugation()
{
    // equator v, e fixed; hemispheres D+, D- swapped, both bounded by e
    return Z2CwComplex({
        make_cells({"v"}, {{0, 1}}, IntegerMatrix(0, 1), {true}),
        make_cells({"e"}, {{0, 1}}, IntegerMatrix{{0}}, {true}),
        make_cells({"D+", "D-"}, {{1, 1}, {0, 1}}, IntegerMatrix{{1, 1}}, {false, false}),
    });
}

Z2CwComplex tr_sphere(int d)
{
    if (d < 1)
        throw UnknownSpace("tr-sphere needs d >= 1");
    const Z2CwComplex equator = ez2_skeleton(d - 1);
    std::vector<Z2CwComplex::Cells> cells;
    cells.push_back(make_cells({"north", "south"}, {{0, 1}, {1, 1}}, IntegerMatrix(0, 2), {true, true}));
    for (int k = 0; k < d; ++k)
    {
        Z2CwComplex::Cells c;
        for (std::size_t i = 0; i < equator.num_cells(k); ++i)
        {
            c.labels.push_back("sus(" + equator.label(k, i) + ")");
            c.action.push_back(equator.action(k)[i]);
            c.fixed.push_back(false);
        }
        if (k == 0)
        {
            // d sus(v) = north - south
            c.boundary = IntegerMatrix(2, equator.num_cells(0));
            for (std::size_t i = 0; i < equator.num_cells(0); ++i)
            {
                c.boundary(0, i) = 1;
                c.boundary(1, i) = -1;
            }
        }
        else
        {
            // d sus(e) = -sus(de)
            c.boundary = -1 * equator.boundary(k);
        }
        cells.push_back(std::move(c));
    }
    return Z2CwComplex(std::move(cells));
}

Z2CwComplex tr_torus(int d)
{
    if (d < 1)
        throw UnknownSpace("tr-torus needs d >= 1");
    Z2CwComplex x = circle_reflection();
    for (int k = 1; k < d; ++k)
        x = product(x, circle_reflection());
    return x;
}

Z2CwComplex sphere_antipodal(int n)
{
    if (n < 0)
        throw UnknownSpace("sphere-antipodal needs n >= 0");
    return ez2_skeleton(n);
}

// ---------------------------------------------------------------------------
// Lens spaces
// ---------------------------------------------------------------------------

namespace {

using Simplex = std::vector<int>;

class LensBuilder
{
    public:
        explicit LensBuilder(int p) : p_(p), n_(2 * p) {}

        Z2CwComplex build()
        {
            enumerate();
            std::vector<Z2CwComplex::Cells> cells(4);
            for (int k = 0; k <= 3; ++k)
            {
                auto& c = cells[static_cast<std::size_t>(k)];
                const auto& reps = reps_[static_cast<std::size_t>(k)];
                for (const Simplex& r : reps)
                    c.labels.push_back(name(r));
                for (std::size_t i = 0; i < reps.size(); ++i)
                {
                    // T[r] = [c(r)] with c(r) in the vertex order of r
                    const auto [target, sign] = classify(k, apply([this](int v) { return conjugate(v); }, reps[i]));
                    c.action.push_back(SignedCell{target, sign});
                    c.fixed.push_back(target == i);
                }
                c.boundary = IntegerMatrix(k == 0 ? 0 : reps_[static_cast<std::size_t>(k - 1)].size(), reps.size());
                if (k == 0)
                    continue;
                for (std::size_t i = 0; i < reps.size(); ++i)
                {
                    for (int f = 0; f <= k; ++f)
                    {
                        Simplex face = reps[i];
                        face.erase(face.begin() + f);
                        const auto [row, sign] = classify(k - 1, face);
                        c.boundary(row, i) += (f % 2 == 0 ? 1 : -1) * sign;
                    }
                }
            }
            return Z2CwComplex(std::move(cells));
        }

    private:
        int p_;
        int n_;
        std::vector<std::vector<Simplex>> reps_{4};
        std::map<Simplex, std::pair<std::size_t, int>> orbit_of_;

        std::string name(const Simplex& s) const
        {
            std::string out;
            for (int v : s)
                out += v < n_ ? "a" + std::to_string(v) : "b" + std::to_string(v - n_);
            return out;
        }

        int rotate(int v, int m) const
        {
            const int base = v < n_ ? 0 : n_;
            return base + ((v - base + 2 * m) % n_ + n_) % n_;
        }
        int conjugate(int v) const
        {
            const int base = v < n_ ? 0 : n_;
            return base + (n_ - (v - base)) % n_;
        }
        template <class F>
        static Simplex apply(F f, const Simplex& s)
        {
            Simplex out;
            for (int v : s)
                out.push_back(f(v));
            return out;
        }

        static std::pair<Simplex, int> sorted_with_sign(Simplex s)
        {
            int sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
                {
                    if (s[j] > s[j + 1])
                    {
                        std::swap(s[j], s[j + 1]);
                        sign = -sign;
                    }
                }
            }
            return {s, sign};
        }

        std::vector<Simplex> arcs(int base) const
        {
            std::vector<Simplex> out{{}};
            for (int j = 0; j < n_; ++j)
                out.push_back({base + j});
            for (int j = 0; j < n_; ++j)
                out.push_back({base + j, base + (j + 1) % n_});
            return out;
        }

        void enumerate()
        {
            std::vector<std::vector<Simplex>> all(4);
            for (const Simplex& a : arcs(0))
            {
                for (const Simplex& b : arcs(n_))
                {
                    if (a.empty() && b.empty())
                        continue;
                    Simplex s = a;
                    s.insert(s.end(), b.begin(), b.end());
                    std::sort(s.begin(), s.end());
                    all[s.size() - 1].push_back(s);
                }
            }
            for (int k = 0; k <= 3; ++k)
            {
                auto& simplices = all[static_cast<std::size_t>(k)];
                std::sort(simplices.begin(), simplices.end());
                for (const Simplex& s : simplices)
                {
                    if (orbit_of_.count(s))
                        continue;
                    // s is the smallest member of its orbit
                    const std::size_t idx = reps_[static_cast<std::size_t>(k)].size();
                    reps_[static_cast<std::size_t>(k)].push_back(s);
                    for (int m = 0; m < p_; ++m)
                    {
                        auto [image, sign] = sorted_with_sign(apply([this, m](int v) { return rotate(v, m); }, s));
                        if (!orbit_of_.emplace(image, std::make_pair(idx, sign)).second && m != 0)
                            throw InvalidComplex("lens: rotation does not act freely on simplices");
                    }
                }
            }
        }

        // oriented simplex (any vertex order) -> (orbit, sign)
        std::pair<std::size_t, int> classify(int, const Simplex& s) const
        {
            auto [sorted, sign] = sorted_with_sign(s);
            const auto& [orbit, orbit_sign] = orbit_of_.at(sorted);
            return {orbit, sign * orbit_sign};
        }
};

}   // namespace

Z2CwComplex lens(int p)
{
    if (p < 2 || p % 2 != 0)
        throw UnknownSpace("lens-p needs an even p >= 2");
    return LensBuilder(p).build();
}

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

namespace {

std::optional<int> parse_suffix(const std::string& name, const std::string& prefix)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.size() > 3 || rest.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    return std::stoi(rest);
}

}   // namespace

Z2CwComplex build(const std::string& name)
{
    if (name == "point")
        return point_complex();
    if (name == "free-pair")
        return free_pair();
    if (name == "circle-trivial")
        return circle_trivial();
    if (name == "circle-reflection")
        return circle_reflection();
    if (name == "circle-antipodal")
        return circle_antipodal();
    if (name == "cp1-conjugation")
        return cp1_conjugation();
    if (auto d = parse_suffix(name, "tr-sphere-"); d && *d >= 1)
        return tr_sphere(*d);
    if (auto d = parse_suffix(name, "tr-torus-"); d && *d >= 1)
        return tr_torus(*d);
    if (auto d = parse_suffix(name, "sphere-antipodal-"); d)
        return sphere_antipodal(*d);
    if (auto p = parse_suffix(name, "lens-"); p && *p >= 2 && *p % 2 == 0)
        return lens(*p);
    throw UnknownSpace("unknown space '" + name + "'");
}

std::vector<std::string> list_names()
{
    std::vector<std::string> names{
        "point",       "free-pair",   "circle-trivial", "circle-reflection", "circle-antipodal", "cp1-conjugation",
        "tr-sphere-1", "tr-sphere-2", "tr-sphere-3",    "tr-torus-1",        "tr-torus-2",       "tr-torus-3",
        "sphere-antipodal-2", "sphere-antipodal-3", "lens-2", "lens-4", "lens-6",
    };
    std::sort(names.begin(), names.end());
    return names;
}

bool is_known_space(const std::string& name)
{
    try
    {
        (void)build(name);
        return true;
    }
    catch (const UnknownSpace&)
    {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

namespace {

std::string free_group(long long rank)
{
    if (rank == 0)
        return "0";
    return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
}

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<std::string> sphere_row(int d)
{
    std::vector<std::string> row(static_cast<std::size_t>(d) + 1, "0");
    row.front() = "Z";
    row.back() = d == 0 ? "Z^2" : "Z";
    return row;
}

void add_row(std::vector<OracleEntry>& out, const std::string& theory, const std::string& coeff,
             const std::vector<std::string>& row)
{
    for (std::size_t k = 0; k < row.size(); ++k)
        out.push_back(OracleEntry{theory, coeff, static_cast<int>(k), row[k]});
}

}   // namespace

std::vector<OracleEntry> oracle_table(const std::string& name)
{
    const Z2CwComplex x = build(name);
    const int d = x.dimension();
    std::vector<std::string> cellular;
    std::vector<std::string> fixed;
    std::vector<OracleEntry> out;

    auto empty_fixed = [&] { fixed.assign(static_cast<std::size_t>(d) + 1, "0"); };
    auto points_fixed = [&](long long count) {
        fixed.assign(static_cast<std::size_t>(d) + 1, "0");
        fixed[0] = free_group(count);
    };

    if (name == "point")
    {
        cellular = {"Z"};
        points_fixed(1);
        // group cohomology of Z2 with Z and Z~ coefficients
        add_row(out, "borel", "Z(0)", {"Z", "0", "Z/2", "0", "Z/2"});
        add_row(out, "borel", "Z(1)", {"0", "Z/2", "0", "Z/2", "0"});
        add_row(out, "borel-relative", "Z(0)", {"0", "0", "0", "0"});
        add_row(out, "borel-relative", "Z(1)", {"0", "0", "0", "0"});
    }
    else if (name == "free-pair")
    {
        cellular = {"Z^2"};
        empty_fixed();
        add_row(out, "borel-relative", "Z(0)", {"Z", "0", "0", "0"});
        add_row(out, "borel-relative", "Z(1)", {"Z", "0", "0", "0"});
        add_row(out, "bredon", "0~Ztilde", {"Z", "0"});
        add_row(out, "bredon", "0~Z", {"Z", "0"});
    }
    else if (name == "circle-trivial")
    {
        cellular = {"Z", "Z"};
        fixed = {"Z", "Z"};
    }
    else if (name == "circle-reflection" || name == "tr-sphere-1" || name == "tr-torus-1")
    {
        cellular = {"Z", "Z"};
        points_fixed(2);
        // one free edge orbit relative to the two fixed points
        add_row(out, "bredon", "0~Ztilde", {"0", "Z", "0"});
    }
    else if (name == "cp1-conjugation")
    {
        cellular = {"Z", "0", "Z"};
        fixed = {"Z", "Z", "0"};
    }
    else if (auto s = parse_suffix(name, "tr-sphere-"))
    {
        cellular = sphere_row(*s);
        points_fixed(2);
        if (*s == 2)
            out.push_back(OracleEntry{"bredon", "0~Ztilde", 2, "Z/2"});
    }
    else if (auto t = parse_suffix(name, "tr-torus-"))
    {
        for (int k = 0; k <= *t; ++k)
            cellular.push_back(free_group(binomial(*t, k)));
        points_fixed(1LL << *t);
        if (*t == 2)
            out.push_back(OracleEntry{"bredon", "0~Ztilde", 2, "Z/2"});
        if (*t == 3)
            out.push_back(OracleEntry{"bredon", "0~Ztilde", 2, "Z/2 + Z/2 + Z/2 + Z/2"});
    }
    else if (name == "circle-antipodal" || parse_suffix(name, "sphere-antipodal-"))
    {
        cellular = sphere_row(d);
        empty_fixed();
    }
    else if (auto p = parse_suffix(name, "lens-"))
    {
        const std::string zp = "Z/" + std::to_string(*p);
        cellular = {"Z", "0", zp, "Z"};
        fixed = {"Z^2", "Z^2", "0", "0"};
        out.push_back(OracleEntry{"borel", "Z(1)", 1, "Z/2"});
        out.push_back(OracleEntry{"borel", "Z(1)", 2, zp});
        out.push_back(OracleEntry{"borel-fixed", "Z(1)", 1, "Z/2 + Z/2"});
        out.push_back(OracleEntry{"borel-fixed", "Z(1)", 2, "Z/2 + Z/2"});
        out.push_back(OracleEntry{"borel-relative", "Z(1)", 2, zp});
        out.push_back(OracleEntry{"bredon", "0~Ztilde", 2, zp});
    }

    std::vector<OracleEntry> all;
    add_row(all, "cellular", "", cellular);
    add_row(all, "fixed", "", fixed);
    all.insert(all.end(), out.begin(), out.end());
    return all;
}

}   // namespace z2coh
