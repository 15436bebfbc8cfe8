#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "printing.hpp"
#include "z2coh/borel.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/errors.hpp"
#include "z2coh/zcw.hpp"

using namespace z2coh;

namespace {

long long orbit_count_chi(const Z2CwComplex& x)
{
    long long chi = 0;
    for (int n = 0; n <= x.dimension(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(x.free_orbits(n).size() + x.fixed_cells(n).size());
    return chi;
}

// Random free complex: a free graph made of k antipodal pairs of edges on m vertex pairs.
Z2CwComplex random_free_graph(std::mt19937& rng)
{
    std::uniform_int_distribution<int> pairs(1, 4);
    const auto m = static_cast<std::size_t>(pairs(rng));
    const auto k = static_cast<std::size_t>(pairs(rng));
    std::uniform_int_distribution<std::size_t> vertex(0, 2 * m - 1);
    Z2CwComplex::Cells c0;
    Z2CwComplex::Cells c1;
    for (std::size_t i = 0; i < 2 * m; ++i)
    {
        c0.labels.push_back("v" + std::to_string(i));
        c0.action.push_back({i ^ 1U, 1});
        c0.fixed.push_back(false);
    }
    c0.boundary = IntegerMatrix(0, 2 * m);
    c1.boundary = IntegerMatrix(2 * m, 2 * k);
    for (std::size_t e = 0; e < k; ++e)
    {
        const std::size_t a = vertex(rng);
        const std::size_t b = vertex(rng);
        for (std::size_t side = 0; side < 2; ++side)
        {
            const std::size_t idx = 2 * e + side;
            c1.labels.push_back("e" + std::to_string(idx));
            c1.action.push_back({idx ^ 1U, 1});
            c1.fixed.push_back(false);
            const std::size_t head = side == 0 ? a : (a ^ 1U);
            const std::size_t tail = side == 0 ? b : (b ^ 1U);
            c1.boundary(head, idx) += 1;
            c1.boundary(tail, idx) -= 1;
        }
    }
    return Z2CwComplex({c0, c1});
}

}   // namespace

TEST_CASE("catalog complexes satisfy the structural invariants")
{
    for (const std::string& name : list_names())
    {
        CAPTURE(name);
        const Z2CwComplex x = build(name);
        REQUIRE(validate(x).empty());
        for (int n = 1; n <= x.dimension(); ++n)
            REQUIRE((x.boundary(n - 1) * x.boundary(n)).is_zero());
        for (int n = 0; n <= x.dimension(); ++n)
        {
            const IntegerMatrix t = x.action_matrix(n);
            REQUIRE(t * t == IntegerMatrix::identity(x.num_cells(n)));
            if (n > 0)
                REQUIRE(x.boundary(n) * t == x.action_matrix(n - 1) * x.boundary(n));
        }
    }
}

TEST_CASE("quotient Euler characteristic")
{
    for (const std::string& name : list_names())
    {
        CAPTURE(name);
        const Z2CwComplex x = build(name);
        const long long chi_fixed = fixed_subcomplex(x).complex.euler_characteristic();
        REQUIRE(quotient_complex(x).complex.euler_characteristic() == orbit_count_chi(x));
        REQUIRE(2 * orbit_count_chi(x) == x.euler_characteristic() + chi_fixed);
        if (x.is_free())
            REQUIRE(2 * quotient_complex(x).complex.euler_characteristic() == x.euler_characteristic());
    }
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial)
    {
        const Z2CwComplex x = random_free_graph(rng);
        REQUIRE(validate(x).empty());
        REQUIRE(2 * quotient_complex(x).complex.euler_characteristic() == x.euler_characteristic());
    }
}

TEST_CASE("product Euler characteristic is multiplicative")
{
    const std::vector<std::string> names{"point", "free-pair", "circle-reflection", "circle-antipodal",
                                         "cp1-conjugation", "tr-sphere-2"};
    for (const auto& a : names)
    {
        for (const auto& b : names)
        {
            CAPTURE(a, b);
            const Z2CwComplex x = build(a);
            const Z2CwComplex y = build(b);
            const Z2CwComplex p = product(x, y);
            REQUIRE(validate(p).empty());
            REQUIRE(p.euler_characteristic() == x.euler_characteristic() * y.euler_characteristic());
        }
    }
}

TEST_CASE("products with a free factor are free")
{
    const Z2CwComplex p = product(tr_sphere(2), ez2_skeleton(3));
    REQUIRE(p.is_free());
    REQUIRE(validate(p).empty());
}

TEST_CASE("validation catches broken complexes")
{
    SECTION("non-involutive action")
    {
        auto cells = circle_antipodal().all_cells();
        cells[0].action[0] = {0, 1};
        const auto v = validate(Z2CwComplex(cells));
        REQUIRE(!v.empty());
        REQUIRE_THROWS_AS(require_valid(Z2CwComplex(cells)), InvalidComplex);
    }
    SECTION("boundary squared nonzero")
    {
        auto cells = cp1_conjugation().all_cells();
        for (std::size_t i = 0; i < cells[1].boundary.rows(); ++i)
            cells[1].boundary(i, 0) = 1;
        REQUIRE(!validate(Z2CwComplex(cells)).empty());
    }
    SECTION("fixed cell with a reversing action")
    {
        auto cells = point_complex().all_cells();
        cells[0].action[0] = {0, -1};
        REQUIRE(!validate(Z2CwComplex(cells)).empty());
    }
    SECTION("non-equivariant boundary")
    {
        auto cells = circle_reflection().all_cells();
        cells[1].boundary = IntegerMatrix(cells[1].boundary.rows(), cells[1].boundary.cols());
        cells[1].boundary(0, 0) = 1;
        cells[1].boundary(1, 0) = -1;
        REQUIRE(!validate(Z2CwComplex(cells)).empty());
    }
}

TEST_CASE("fixed subcomplex and subcomplex checks")
{
    const Z2CwComplex x = lens(4);
    const Subcomplex f = fixed_subcomplex(x);
    REQUIRE(f.complex.num_cells(0) == 4);
    REQUIRE(f.complex.num_cells(1) == 4);
    REQUIRE(f.complex.dimension() == 1);
    REQUIRE(f.inclusion.check().empty());

    const Z2CwComplex s = circle_antipodal();
    REQUIRE_THROWS_AS(subcomplex(s, {{s.label(0, 0)}}), SubcomplexNotInvariant);
    REQUIRE_THROWS_AS(subcomplex(s, {{}, {s.label(1, 0), s.label(1, 1)}}), InvalidComplex);
}

TEST_CASE("cell maps")
{
    const Z2CwComplex x = tr_torus(2);
    REQUIRE(identity_map(x).check().empty());
    REQUIRE(collapse_to_point(x).check().empty());
    const CellMap c = compose(collapse_to_point(x), identity_map(x));
    REQUIRE(c.check().empty());
    const CellMap sphere_to_point = collapse_to_point(sphere_antipodal(2));
    REQUIRE(sphere_to_point.check().empty());
}

TEST_CASE("underlying cohomology of catalog spaces")
{
    REQUIRE(cellular_cohomology(lens(4).underlying(), 2) == FgAbGroup::cyclic(4));
    REQUIRE(cellular_cohomology(lens(6).underlying(), 3) == FgAbGroup::free(1));
    REQUIRE(cellular_cohomology(tr_torus(3).underlying(), 2) == FgAbGroup::free(3));
    REQUIRE(cellular_cohomology(sphere_antipodal(3).underlying(), 3) == FgAbGroup::free(1));
}

TEST_CASE("lens cell counts")
{
    for (int q = 1; q <= 3; ++q)
    {
        const Z2CwComplex x = lens(2 * q);
        const auto uq = static_cast<std::size_t>(q);
        REQUIRE(x.num_cells(0) == 4);
        REQUIRE(x.num_cells(1) == 4 + 8 * uq);
        REQUIRE(x.num_cells(2) == 16 * uq);
        REQUIRE(x.num_cells(3) == 8 * uq);
        REQUIRE(x.euler_characteristic() == 0);
    }
}
