#include <doctest.h>

#include "affweights/errors.hpp"
#include "affweights/weyl_action.hpp"

#include <random>

using namespace affweights;

namespace {

HighestWeight weight(const char* type, std::initializer_list<long> labels)
{
    return HighestWeight(make_cartan(AffineType::parse(type)), labels);
}

} // namespace

TEST_CASE("reflections on contents")
{
    const auto lam = weight("A1~2", {1, 2, 1});
    CHECK(reflect(lam, {0, 0, 0}, 1) == Content{0, 2, 0});
    CHECK(reflect(lam, {0, 0, 0}, 2) == Content{0, 0, 1});
    CHECK(reflect(lam, {0, 2, 0}, 2) == Content{0, 2, 3});
    CHECK(reflect(lam, {1, 4, 1}, 2) == Content{1, 4, 5});
    CHECK(apply_word(lam, {0, 0, 0}, {1, 2}) == Content{0, 2, 3});
    CHECK(apply_word(lam, {0, 0, 0}, {2, 1}) == Content{0, 3, 1});
}

TEST_CASE("reflections are involutions and preserve defect")
{
    const auto lam = weight("B1~3", {1, 0, 0, 1});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-5, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Content b = Content::zero(4);
        for (std::size_t i = 0; i < 4; ++i)
            b[i] = entry(rng);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(reflect(lam, reflect(lam, b, i), i) == b);
            CHECK(defect(lam, reflect(lam, b, i)) == defect(lam, b));
        }
    }
}

TEST_CASE("root reflections respect the form")
{
    const auto data = make_cartan(AffineType::parse("G1~2"));
    const auto x = RootVector::from({1, 2, 1});
    const auto y = RootVector::from({0, 1, 3});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(bilinear_rr(*data, reflect_root(*data, x, i), reflect_root(*data, y, i)) == bilinear_rr(*data, x, y));
        CHECK(reflect_root(*data, reflect_root(*data, x, i), i) == x);
    }
    CHECK(reflect_root(*data, RootVector::simple(3, 1), 1) == -RootVector::simple(3, 1));
}

TEST_CASE("finite orbits")
{
    const auto tw = weight("A2~4", {1, 1, 0});
    const auto orbits = finite_orbit(tw, {{0, 0, 0}, {1, 1, 0}, {1, 2, 1}});
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].elements.size() == 4);
    CHECK(orbits[1].elements.size() == 4);
    CHECK(orbits[2].elements.size() == 1);

    const auto lam = weight("A1~2", {1, 2, 1});
    const auto five = finite_orbit(lam, {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    std::size_t total = 0;
    for (const auto& o : five)
        total += o.elements.size();
    CHECK(five.size() == 5);
    CHECK(total == 21);
    CHECK(finite_orbit(lam, {{0, 0, 0}, {0, 2, 0}}).size() == 1);
    CHECK_THROWS_AS(finite_orbit(lam, {{0, 0, 0}}, 3), ConsistencyError);
}

TEST_CASE("translations")
{
    const auto lam = weight("A1~2", {1, 2, 1});
    const auto a1 = RootVector::simple(3, 1);
    CHECK(translate(lam, {0, 1, 1}, -a1) == Content{3, 8, 4});
    CHECK(translate(lam, translate(lam, {0, 1, 1}, -a1), a1) == Content{0, 1, 1});
    CHECK_THROWS_AS(translate(lam, {0, 0, 0}, RootVector::simple(3, 0)), NotInLattice);
    CHECK(in_translation_lattice(lam.data(), a1));
    CHECK_FALSE(in_translation_lattice(lam.data(), RootVector::from({1, 0, 0})));

    const auto c = weight("C1~2", {1, 0, 1});
    CHECK_FALSE(in_translation_lattice(c.data(), RootVector::simple(3, 1)));
    CHECK(in_translation_lattice(c.data(), Rational(2) * RootVector::simple(3, 1)));
    CHECK(in_translation_lattice(c.data(), RootVector::simple(3, 2)));
}

TEST_CASE("translations preserve defect")
{
    const auto lam = weight("D2~3", {1, 0, 0});
    const auto& d = lam.data();
    for (std::size_t i = 1; i < d.size(); ++i) {
        RootVector alpha = RootVector::simple(d.size(), i);
        alpha = Rational(d.d(i), d.mark(0)) * alpha;
        const Content b{0, 1, 1};
        CHECK(defect(lam, translate(lam, b, alpha)) == defect(lam, b));
    }
}

TEST_CASE("dominant reduction")
{
    const auto lam = weight("A1~2", {1, 2, 1});
    const auto r = to_dominant(lam, {0, 2, 0});
    CHECK(r.content == Content{0, 0, 0});
    CHECK(r.word == ReflectionWord{1});
    CHECK(to_dominant(lam, {1, 4, 5}).content == Content{1, 0, 1});
    CHECK(to_dominant(lam, {0, 0, 0}).word.empty());
    const auto back = to_dominant(lam, {1, 5, 4});
    CHECK(apply_word(lam, Content{1, 5, 4}, back.word) == back.content);
    CHECK(content_to_hub(lam, back.content).positive());
}

TEST_CASE("orbit cap from the environment")
{
    CHECK(default_orbit_cap() >= 1);
}
