#include "oracles.hpp"

#include "lattice_forge/errors.hpp"
#include "lattice_forge/lattice.hpp"
#include "lattice_forge/metrics.hpp"
#include "lattice_forge/pointset.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace lattice_forge;

namespace {

GeneratingVector random_vector(std::mt19937_64& rng, std::size_t d, std::uint64_t n)
{
    std::vector<std::uint64_t> z(d);
    for (auto& c : z)
        c = 1 + rng() % (n - 1);
    return GeneratingVector(z, PrimeModulus(n));
}

std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    for (;;) {
        const std::uint64_t n = lo + rng() % (hi - lo + 1);
        if (oracle::is_prime(n))
            return n;
    }
}

std::vector<std::uint64_t> comps_of(const GeneratingVector& z)
{
    return {z.components().begin(), z.components().end()};
}

} // namespace

TEST_CASE("census of z = [1, 4, 3], n = 13")
{
    const GeneratingVector z({1, 4, 3}, PrimeModulus(13));
    const auto l1 = lattice_min_distance(z, Norm::l1);
    REQUIRE(l1.distinct_count() == 2);
    CHECK(l1.census[0].key == 8);
    CHECK(l1.census[0].multiplicity == 6);
    CHECK(l1.census[1].key == 13);
    CHECK(l1.census[1].multiplicity == 6);
    CHECK(l1.min_key == 8);
    CHECK(l1.argmin_k == 1);
    CHECK(l1.min_distance == Catch::Approx(8.0 / 13.0).epsilon(1e-15));

    const auto l2 = lattice_min_distance(z, Norm::l2);
    REQUIRE(l2.distinct_count() == 2);
    CHECK(l2.census[0].key == 26);
    CHECK(l2.census[1].key == 65);
    CHECK(l2.census[0].multiplicity == 6);
    CHECK(l2.min_distance == Catch::Approx(std::sqrt(26.0) / 13.0).epsilon(1e-15));
}

TEST_CASE("frozen minimum distances of subgroup lattices")
{
    const auto z = subgroup_generating_vector(50, 101);
    CHECK(lattice_min_distance(z, Norm::l1).min_distance == Catch::Approx(12.623762376237623).epsilon(1e-14));
    CHECK(lattice_min_distance(z, Norm::l2).min_distance == Catch::Approx(2.0513217183267982).epsilon(1e-14));
    const auto z2 = subgroup_generating_vector(50, 401);
    CHECK(lattice_min_distance(z2, Norm::l1).min_distance == Catch::Approx(11.41895).epsilon(1e-6));
    CHECK(lattice_min_distance(z2, Norm::l2).min_distance == Catch::Approx(1.90746).epsilon(1e-5));
    const auto z3 = subgroup_generating_vector(100, 401);
    CHECK(lattice_min_distance(z3, Norm::l1).min_distance == Catch::Approx(24.0973).epsilon(1e-5));
    CHECK(lattice_min_distance(z3, Norm::l2).min_distance == Catch::Approx(2.83415).epsilon(1e-5));
    CHECK(lattice_min_distance(subgroup_generating_vector(2, 5), Norm::l1).min_distance == Catch::Approx(0.6));
}

TEST_CASE("census matches full enumeration on random vectors")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint64_t n = random_prime(rng, 2, 400);
        const std::size_t d = 1 + rng() % 12;
        const auto z = random_vector(rng, d, n);
        const std::vector<std::uint64_t> zc(z.components().begin(), z.components().end());
        for (int p : {1, 2}) {
            const auto expect = oracle::census(zc, n, p);
            const auto report = lattice_min_distance(z, p == 1 ? Norm::l1 : Norm::l2);
            REQUIRE(report.census.size() == expect.size());
            std::uint64_t total = 0;
            std::size_t i = 0;
            for (const auto& [key, count] : expect) {
                REQUIRE(report.census[i].key == key);
                REQUIRE(report.census[i].multiplicity == count);
                REQUIRE(report.census[i].distance == oracle::key_distance(key, n, p));
                total += report.census[i].multiplicity;
                ++i;
            }
            REQUIRE(total == n - 1);
            REQUIRE(report.min_key == expect.begin()->first);
            REQUIRE(oracle::point_key(zc, n, report.argmin_k, p) == report.min_key);
            for (std::uint64_t k = 1; k < report.argmin_k; ++k)
                REQUIRE(oracle::point_key(zc, n, k, p) > report.min_key);
        }
    }
}

TEST_CASE("lattice path agrees with pairwise brute force")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t n = random_prime(rng, 3, 150);
        const auto z = random_vector(rng, 1 + rng() % 8, n);
        const auto points = generate(z);
        for (auto norm : {Norm::l1, Norm::l2}) {
            const double fast = lattice_min_distance(z, norm).min_distance;
            double slow = 1e300;
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = i + 1; j < points.size(); ++j)
                    slow = std::min(slow, oracle::torus_distance(points.point(i).data(), points.point(j).data(),
                                                                 points.dimension(), static_cast<int>(norm)));
            REQUIRE(std::abs(fast - slow) <= 1e-12);
            REQUIRE(std::abs(brute_force_min_distance(points, norm) - fast) <= 1e-12);
        }
    }
}

TEST_CASE("lattice_min_key early stop")
{
    const auto z = subgroup_generating_vector(50, 401);
    const auto exact = lattice_min_key(z, Norm::l1);
    CHECK(exact == lattice_min_distance(z, Norm::l1).min_key);
    CHECK(lattice_min_key(z, Norm::l1, exact) == exact);
    CHECK(lattice_min_key(z, Norm::l1, exact + 1) <= exact);
}

TEST_CASE("toroidal_distance")
{
    const std::vector<double> x{0.1, 0.9}, y{0.9, 0.1}, o{0.0, 0.0};
    CHECK(toroidal_distance(x, y, Norm::l1) == Catch::Approx(0.4));
    CHECK(toroidal_distance(x, y, Norm::l2) == Catch::Approx(std::sqrt(0.08)));
    CHECK(toroidal_distance(x, y, Norm::l1) == toroidal_distance(y, x, Norm::l1));
    CHECK(toroidal_distance(x, x, Norm::l2) == 0.0);
    const std::vector<double> one{1.0, 1.0};
    CHECK(toroidal_distance(one, o, Norm::l1) == 0.0);
    const std::vector<double> bad{1.5, 0.0}, short_{0.1};
    CHECK_THROWS_AS(toroidal_distance(bad, o, Norm::l1), DomainError);
    CHECK_THROWS_AS(toroidal_distance(short_, o, Norm::l1), DomainError);
    CHECK(parse_norm("l1") == Norm::l1);
    CHECK(parse_norm("T2") == Norm::l2);
    CHECK_THROWS_AS(parse_norm("l3"), DomainError);
}

TEST_CASE("bounds hold for subgroup lattices and match their formulas")
{
    for (std::uint64_t n = 3; n < 1200; ++n) {
        if (!oracle::is_prime(n))
            continue;
        for (std::size_t d = 1; 2 * d + 1 <= n && d <= 40; ++d) {
            if ((n - 1) % (2 * d) != 0)
                continue;
            const auto z = subgroup_generating_vector(d, PrimeModulus(n));
            for (auto norm : {Norm::l1, Norm::l2})
                REQUIRE(check_bounds_exact(lattice_min_distance(z, norm).min_key, d, n, norm).both());
        }
    }
    const auto b = theorem2_bounds(3, PrimeModulus(13));
    CHECK(b.l1_lower == Catch::Approx(12.0 / 26.0));
    CHECK(b.l1_upper == Catch::Approx(14.0 * 3 / 52.0));
    CHECK(b.l2_lower == Catch::Approx(std::sqrt(3.0 * 4 * 7 / 6.0) / 13.0));
    CHECK(b.l2_upper == Catch::Approx(std::sqrt(14.0 * 3 / (12.0 * 13))));
    CHECK_THROWS_AS(theorem2_bounds(7, PrimeModulus(13)), AdmissibilityError);
}

TEST_CASE("lower bound can fail when two components are negatives of each other")
{
    const GeneratingVector z({1, 4}, PrimeModulus(5));
    REQUIRE(has_antipodal_pair(z));
    const auto key = lattice_min_distance(z, Norm::l1).min_key;
    CHECK(key == 2);
    CHECK_FALSE(check_bounds_exact(key, 2, 5, Norm::l1).lower);
    CHECK(check_bounds_exact(key, 2, 5, Norm::l1).upper);
}

TEST_CASE("constant distances when n = 2d + 1")
{
    const auto c = corollary1_values(3);
    CHECK(c.n.value() == 7);
    CHECK(c.l1 == Catch::Approx(0.857142857142857).epsilon(1e-14));
    CHECK(c.l2 == Catch::Approx(0.5345224838248488).epsilon(1e-14));
    for (std::size_t d : {1, 2, 3, 5, 6, 8, 9, 11}) {
        const auto v = corollary1_values(d);
        const auto z = subgroup_generating_vector(d, v.n);
        const auto l1 = lattice_min_distance(z, Norm::l1);
        const auto l2 = lattice_min_distance(z, Norm::l2);
        REQUIRE(l1.distinct_count() == 1);
        REQUIRE(l2.distinct_count() == 1);
        REQUIRE(std::abs(l1.min_distance - v.l1) <= 1e-12);
        REQUIRE(std::abs(l2.min_distance - v.l2) <= 1e-12);
    }
    CHECK_THROWS_AS(corollary1_values(4), AdmissibilityError);
}

TEST_CASE("brute force refuses large inputs")
{
    const auto big = generate(subgroup_generating_vector(1, 10007));
    CHECK_THROWS_AS(brute_force_min_distance(big, Norm::l1), PreconditionError);
    const auto one = generate(GeneratingVector({1}, PrimeModulus(2)));
    CHECK(brute_force_min_distance(one, Norm::l1) == Catch::Approx(0.5));
}

TEST_CASE("subgroup census is constant on cosets")
{
    // Each coset k H of H = {z, -z} carries one key, so there are at most
    // (n-1)/(2d) values and every multiplicity is a multiple of 2d. Distinct
    // cosets may share a key, so "at most" is all that holds.
    for (std::uint64_t n = 3; n <= 1000; ++n) {
        if (!oracle::is_prime(n))
            continue;
        const std::uint64_t g = oracle::primitive_root(n);
        for (std::size_t d = 1; 2 * d + 1 <= n; ++d) {
            if ((n - 1) % (2 * d) != 0)
                continue;
            const auto z = subgroup_generating_vector(d, PrimeModulus(n));
            const std::vector<std::uint64_t> zc(z.components().begin(), z.components().end());
            const std::uint64_t cosets = (n - 1) / (2 * d);
            for (int p : {1, 2}) {
                std::set<std::uint64_t> coset_keys;
                for (std::uint64_t h = 0; h < cosets; ++h) {
                    const std::uint64_t rep = oracle::pow_mod(g, h, n);
                    const auto key = oracle::point_key(zc, n, rep, p);
                    for (auto c : zc) {
                        REQUIRE(oracle::point_key(zc, n, rep * c % n, p) == key);
                        REQUIRE(oracle::point_key(zc, n, rep * (n - c) % n, p) == key);
                    }
                    coset_keys.insert(key);
                }
                const auto report = lattice_min_distance(z, p == 1 ? Norm::l1 : Norm::l2);
                REQUIRE(report.distinct_count() == coset_keys.size());
                REQUIRE(report.distinct_count() <= cosets);
                for (const auto& e : report.census)
                    REQUIRE(e.multiplicity % (2 * d) == 0);
            }
        }
    }
}

TEST_CASE("coset sums can coincide")
{
    const auto z = subgroup_generating_vector(2, PrimeModulus(29));
    CHECK(comps_of(z) == std::vector<std::uint64_t>{1, 12});
    const auto l2 = lattice_min_distance(z, Norm::l2);
    CHECK(l2.distinct_count() == 6); // 7 cosets
    std::multiset<std::uint64_t> mult;
    for (const auto& e : l2.census)
        mult.insert(e.multiplicity);
    CHECK(mult == std::multiset<std::uint64_t>{4, 4, 4, 4, 4, 8});
    CHECK(lattice_min_distance(z, Norm::l1).distinct_count() == 7);
    CHECK(lattice_min_distance(subgroup_generating_vector(3, PrimeModulus(31)), Norm::l1).distinct_count() == 4);
}
