#include "affweights/class_congruence.hpp"
#include "affweights/max_weights.hpp"
#include "affweights/membership.hpp"
#include "affweights/oracle.hpp"
#include "affweights/serialize.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace affweights;

namespace {

HighestWeight weight(const char* type, std::vector<Integer> labels)
{
    return HighestWeight(make_cartan(AffineType::parse(type)), std::move(labels));
}

HighestWeight sl3_example() { return weight("A1~2", {1, 2, 1}); }

struct Outcome {
    bool pass = true;
    std::string note;
    void fail(const std::string& why)
    {
        if (pass)
            note = why;
        pass = false;
    }
};

template <typename T>
std::set<T> as_set(const std::vector<T>& xs)
{
    return {xs.begin(), xs.end()};
}

Outcome maximal_hubs()
{
    Outcome o;
    const auto n = maximal_dominant_weights(sl3_example());
    std::set<HubVector> hubs;
    std::map<Content, Rational> defects;
    for (const auto& m : n) {
        hubs.insert(m.hub);
        defects[m.content] = m.defect;
    }
    if (n.size() != 5)
        o.fail("expected 5 maximal dominant weights");
    if (hubs != std::set<HubVector>{{1, 2, 1}, {2, 0, 2}, {3, 1, 0}, {0, 4, 0}, {0, 1, 3}})
        o.fail("hub set differs");
    const std::map<Content, Rational> expected = {
        {{0, 0, 0}, 0}, {{0, 1, 0}, 1}, {{0, 1, 1}, 2}, {{1, 0, 1}, 1}, {{1, 1, 0}, 2}};
    if (defects != expected)
        o.fail("contents or defects differ");
    return o;
}

Outcome orbit_structure()
{
    Outcome o;
    const auto table = build_nbar(sl3_example());
    struct Row {
        const char* name;
        Content content;
        HubVector hub;
        EtaTilde eta;
    };
    // c0 residue is (a0 b1 - a1 b0, a0 b2 - a2 b0) mod 4 = (2,3).
    const std::vector<Row> rows = {
        {"a0", {0, 0, 0}, {1, 2, 1}, {0, 0}},
        {"b0", {0, 2, 0}, {3, -2, 3}, {2, 0}},
        {"c0", {0, 2, 3}, {6, 1, -3}, {2, 3}},
        {"d0", {0, 0, 1}, {2, 3, -1}, {0, 1}},
        {"e0", {0, 3, 1}, {5, -3, 2}, {3, 1}},
        {"f0", {0, 3, 3}, {7, -1, -2}, {3, 3}},
        {"a1", {0, 1, 0}, {2, 0, 2}, {1, 0}},
        {"b1", {0, 1, 2}, {4, 2, -2}, {1, 2}},
        {"c1", {0, 3, 2}, {6, -2, 0}, {3, 2}},
        {"a2", {0, 1, 1}, {3, 1, 0}, {1, 1}},
        {"b2", {0, 2, 1}, {4, -1, 1}, {2, 1}},
        {"c2", {0, 2, 2}, {5, 0, -1}, {2, 2}},
        {"A1", {1, 0, 1}, {0, 4, 0}, {3, 0}},
        {"B1", {1, 4, 1}, {4, -4, 4}, {3, 0}},
        {"C1", {1, 4, 5}, {8, 0, -4}, {3, 0}},
        {"A2", {1, 1, 0}, {0, 1, 3}, {0, 3}},
        {"B2", {1, 2, 0}, {1, -1, 4}, {1, 3}},
        {"C2", {1, 2, 4}, {5, 3, -4}, {1, 3}},
        {"D2", {1, 1, 3}, {3, 4, -3}, {0, 2}},
        {"E2", {1, 5, 3}, {7, -4, 1}, {0, 2}},
        {"F2", {1, 5, 4}, {8, -3, -1}, {0, 3}},
    };
    if (table.elements().size() != 21)
        o.fail("closure has " + std::to_string(table.elements().size()) + " elements");
    std::map<Content, std::string> names;
    for (const auto& row : rows) {
        names[row.content] = row.name;
        const auto it = std::find_if(table.elements().begin(), table.elements().end(),
            [&](const OrbitElement& e) { return e.content == row.content; });
        if (it == table.elements().end() || it->hub != row.hub || it->eta != row.eta)
            o.fail(std::string("row ") + row.name + " differs");
    }
    if (table.entries().size() != 16)
        o.fail("|Nbar| = " + std::to_string(table.entries().size()));
    std::set<std::set<std::string>> merged;
    for (const auto& [key, entry] : table.entries()) {
        if (entry.t_class.size() < 2)
            continue;
        std::set<std::string> cls;
        for (const auto& b : entry.t_class)
            cls.insert(names[b]);
        merged.insert(cls);
    }
    const std::set<std::set<std::string>> expected = {{"A1", "B1", "C1"}, {"A2", "F2"}, {"B2", "C2"}, {"D2", "E2"}};
    if (merged != expected)
        o.fail("merged T-classes differ");
    if (table.orbit_count() != 4)
        o.fail("closure has " + std::to_string(table.orbit_count())
            + " finite Weyl orbits, not 4 (one per maximal dominant weight a0,a1,a2,A1,A2)");
    return o;
}

Outcome worked_membership()
{
    Outcome o;
    const auto table = build_nbar(sl3_example());
    const auto c = delta_shift(table, {2, 7, 3});
    if (c.representative != Content{0, 1, 1})
        o.fail("zeta = " + format_content(c.representative));
    if (c.alpha != -RootVector::simple(3, 1))
        o.fail("alpha = " + format_root(c.alpha));
    if (c.zeta_alpha != -1)
        o.fail("(zeta|alpha) = " + to_string(c.zeta_alpha));
    if (c.alpha_alpha != 2)
        o.fail("(alpha|alpha) = " + to_string(c.alpha_alpha));
    if (c.shift != -1)
        o.fail("s = " + to_string(c.shift));
    if (c.verdict)
        o.fail("verdict true");
    return o;
}

Outcome twisted_example()
{
    Outcome o;
    const auto lam = weight("A2~4", {1, 1, 0});
    std::set<Content> contents;
    for (const auto& m : maximal_dominant_weights(lam))
        contents.insert(m.content);
    if (contents != std::set<Content>{{0, 0, 0}, {1, 1, 0}, {1, 2, 1}})
        o.fail("maximal contents differ");
    const auto table = build_nbar(lam);
    std::vector<std::size_t> sizes(table.orbit_count(), 0);
    for (const auto& e : table.elements())
        ++sizes[e.orbit];
    std::map<Content, std::size_t> by_seed;
    for (std::size_t i = 0; i < table.orbit_count(); ++i)
        by_seed[table.maximal()[i].content] = sizes[i];
    if (by_seed != std::map<Content, std::size_t>{{{0, 0, 0}, 4}, {{1, 1, 0}, 4}, {{1, 2, 1}, 1}})
        o.fail("orbit sizes differ");
    if (table.entries().size() != 9)
        o.fail("|Nbar| = " + std::to_string(table.entries().size()));
    std::set<EtaTilde> keys, image;
    for (const auto& e : table.elements())
        keys.insert(e.eta);
    for (long x : {0, 2, 4})
        for (long y : {0, 1, 2})
            image.insert({x, y});
    if (keys != image || table.entries().size() != keys.size())
        o.fail("residue tuples do not fill (2Z/6Z) x (Z/3Z)");
    return o;
}

Outcome d5_example()
{
    Outcome o;
    const auto lam = weight("D1~5", {0, 0, 1, 0, 0, 0});
    std::set<HubVector> hubs;
    std::set<Content> contents;
    for (const auto& m : maximal_dominant_weights(lam)) {
        hubs.insert(m.hub);
        contents.insert(m.content);
    }
    if (hubs != std::set<HubVector>{{0, 0, 1, 0, 0, 0}, {2, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1}})
        o.fail("hubs differ");
    if (contents != std::set<Content>{{0, 0, 0, 0, 0, 0}, {0, 1, 2, 2, 1, 1}, {1, 0, 2, 2, 1, 1}, {1, 1, 2, 1, 0, 0}})
        o.fail("contents differ");
    return o;
}

Outcome congruence_vs_lattice()
{
    Outcome o;
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> entry(-20, 20);
    std::size_t types = 0, disagreements = 0;
    for (const auto& t : all_types(10)) {
        const auto data = build_cartan(t);
        const LatticeOracle oracle(data);
        int done = 0;
        while (done < 1000) {
            HubVector psi = HubVector::zero(data.size());
            Integer rest = 0;
            for (std::size_t i = 1; i < data.size(); ++i) {
                psi[i] = entry(rng);
                rest += data.comark(i) * psi[i];
            }
            if (rest % data.comark(0) != 0)
                continue;
            psi[0] = -rest / data.comark(0);
            if (satisfies_congruence(data, psi) != oracle.contains(psi)) {
                ++disagreements;
                o.fail(t.name() + " disagrees at " + format_hub(psi));
            }
            ++done;
        }
        ++types;
    }
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(types) + " types, "
        + std::to_string(disagreements) + " disagreements";
    return o;
}

void for_each_content(std::size_t n, long bound, const std::function<void(const Content&)>& f)
{
    Content b = Content::zero(n);
    for (;;) {
        f(b);
        std::size_t i = 0;
        while (i < n && b[i] == bound)
            b[i++] = 0;
        if (i == n)
            return;
        b[i] += 1;
    }
}

Outcome criterion_vs_oracle()
{
    Outcome o;
    std::size_t checked = 0, disagreements = 0;
    for (const auto& lam : {sl3_example(), weight("A2~4", {1, 1, 0}), weight("D2~3", {1, 0, 0}),
             weight("B1~3", {1, 0, 0, 1})}) {
        const auto table = build_nbar(lam);
        for_each_content(lam.size(), 8, [&](const Content& b) {
            ++checked;
            if (is_weight(table, b) != is_weight_oracle(lam, b)) {
                ++disagreements;
                o.fail(lam.data().type.name() + " disagrees at " + format_content(b));
            }
        });
    }
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(checked) + " contents, "
        + std::to_string(disagreements) + " disagreements";
    return o;
}

Outcome large_defect_maximal()
{
    Outcome o;
    const auto table = build_nbar(weight("A1~2", {6, 0, 0}));
    const auto c = delta_shift(table, {3, 0, 0});
    if (c.defect != 9)
        o.fail("defect " + to_string(c.defect));
    if (c.shift != 0)
        o.fail("s = " + to_string(c.shift));
    return o;
}

Outcome level_one_law()
{
    Outcome o;
    const auto lam = weight("A1~2", {1, 0, 0});
    const auto table = build_nbar(lam);
    const auto ws = enumerate_weights(lam, 6);
    for (const auto& b : ws)
        if (Rational(delta_shift(table, b).shift) != defect(lam, b))
            o.fail("s != defect at " + format_content(b));
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(ws.size()) + " weights";
    return o;
}

Outcome string_profiles()
{
    Outcome o;
    std::size_t strings = 0;
    std::string witness;
    for (const auto& lam : {sl3_example(), weight("D2~3", {1, 0, 0})}) {
        const auto table = build_nbar(lam);
        for (const auto& b : enumerate_weights(lam, 4)) {
            for (std::size_t i = 0; i < lam.size(); ++i) {
                const auto p = string_profile(table, b, RootVector::simple(lam.size(), i));
                ++strings;
                if (!is_palindromic(p.shifts) || !is_unimodal_with_plateau(p.shifts))
                    o.fail("bad profile through " + format_content(b));
                if (witness.empty() && std::adjacent_find(p.shifts.begin(), p.shifts.end(), std::not_equal_to<>())
                        != p.shifts.end()) {
                    std::ostringstream s;
                    s << lam.data().type.name() << " alpha_" << i << " through " << format_content(b) << ": ["
                      << join(p.shifts) << "]";
                    witness = s.str();
                }
            }
        }
    }
    if (witness.empty())
        o.fail("no non-constant profile");
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(strings) + " strings, e.g. " + witness;
    return o;
}

Outcome floor_check()
{
    Outcome o;
    const auto lam = sl3_example();
    const auto table = build_nbar(lam);
    const auto ws = enumerate_weights(lam, 1);
    std::set<Content> floor0_table, floor1_expected;
    const Content delta = RootVector::delta(lam.data()).to_content();
    for (const auto& e : table.elements()) {
        if (e.content[0] == 0) {
            floor0_table.insert(e.content);
            floor1_expected.insert(e.content + delta);
        }
        else if (e.content[0] == 1) {
            floor1_expected.insert(e.content);
        }
    }
    if (floor0_table.size() != 12 || as_set(floor_of(ws, 0)) != floor0_table)
        o.fail("floor 0 differs from the 12 table contents");
    const auto floor1 = as_set(floor_of(ws, 1));
    std::size_t other_maximal = 0;
    for (const auto& b : floor1_expected)
        if (!floor1.count(b))
            o.fail("floor 1 lacks " + format_content(b));
    for (const auto& b : floor1) {
        if (floor1_expected.count(b))
            continue;
        if (delta_shift(table, b).shift != 0)
            o.fail(format_content(b) + " is neither a shifted floor-0 weight nor maximal");
        ++other_maximal;
    }
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(floor1.size()) + " weights on floor 1: "
        + std::to_string(floor1_expected.size()) + " listed, " + std::to_string(other_maximal)
        + " further maximal weights";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"positive hubs, maximal contents and defects (A1~2, [1,2,1])", maximal_hubs},
        {"orbit table, |Nbar| = 16 and merged T-classes (A1~2, [1,2,1])", orbit_structure},
        {"delta-shift certificate of (2,7,3)", worked_membership},
        {"A2~4, [1,1,0]: maximal contents, orbit sizes, residue image", twisted_example},
        {"D1~5, Lambda_2: hubs and contents", d5_example},
        {"closed-form congruence vs Smith normal form, ranks <= 10", congruence_vs_lattice},
        {"table criterion vs recursive oracle, entries <= 8", criterion_vs_oracle},
        {"6 Lambda_0 - 3 alpha_0: defect 9, maximal", large_defect_maximal},
        {"level 1: s(eta) = defect(eta) for b_0 <= 6", level_one_law},
        {"root-string profiles palindromic and unimodal", string_profiles},
        {"floors 0 and 1 of A1~2, [1,2,1]", floor_check},
    };
    // Criterion 2 asks for 4 orbits; the closure has one orbit per maximal
    // dominant weight, and there are 5 of them.
    const std::set<std::size_t> unreachable = {2};

    int failures = 0, unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first;
        if (!o.note.empty())
            std::cout << "  (" << o.note << ")";
        if (!o.pass && unreachable.count(i + 1))
            std::cout << "  [known unreachable]";
        std::cout << "\n";
        if (!o.pass) {
            ++failures;
            if (!unreachable.count(i + 1))
                ++unexpected;
        }
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed";
    if (failures != unexpected)
        std::cout << ", " << failures - unexpected << " known unreachable";
    std::cout << "\n";
    return unexpected == 0 ? 0 : 1;
}
