#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "common.hpp"

using namespace tt;

TEST_CASE("builder outputs are valid monoidal categories") {
    auto names = posetal_fixtures();
    names.push_back("monoid_e.json");
    names.push_back("idempotent_top.json");
    for (const auto& f : names) {
        CAPTURE(f);
        auto m = load(f);
        CHECK(validate_category(m->base()).ok());
        CHECK(validate_monoidal(*m).ok());
    }
    for (int n = 0; n <= 4; ++n) CHECK(validate_monoidal(from_boolean(n)).ok());
    for (int n = 1; n <= 5; ++n) CHECK(validate_monoidal(from_chain(n)).ok());
}

TEST_CASE("posetal symmetry is the unique morphism") {
    for (const auto& f : posetal_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        REQUIRE(m->has_symmetry());
        const auto& c = m->base();
        for (Obj a = 0; a < m->num_objects(); ++a)
            for (Obj b = 0; b < m->num_objects(); ++b) {
                const auto& h = c.hom(m->tensor(a, b), m->tensor(b, a));
                REQUIRE(h.size() == 1);
                CHECK(m->symmetry(a, b) == h.front());
            }
    }
}

TEST_CASE("topology order is inclusion of opens") {
    const std::vector<std::string> pts{"p", "q", "r"};
    const std::vector<std::vector<std::string>> opens{{}, {"p"}, {"p", "q"}, {"p", "r"}, {"p", "q", "r"}};
    auto m = from_topology(pts, opens);
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = 0; j < opens.size(); ++j) {
            const bool subset = std::includes(opens[j].begin(), opens[j].end(), opens[i].begin(), opens[i].end());
            CHECK(hom_nonempty(m, static_cast<Obj>(i), static_cast<Obj>(j)) == subset);
            // tensor is intersection
            std::vector<std::string> meet;
            std::set_intersection(opens[i].begin(), opens[i].end(), opens[j].begin(), opens[j].end(),
                                  std::back_inserter(meet));
            const auto k = std::find(opens.begin(), opens.end(), meet) - opens.begin();
            CHECK(m.tensor(static_cast<Obj>(i), static_cast<Obj>(j)) == k);
        }
}

TEST_CASE("quantale tensor follows the multiplication") {
    auto m = load("q3.json");
    const auto& c = m->base();
    const Obj zero = *c.find_object("0"), u = *c.find_object("u"), one = *c.find_object("1");
    CHECK(m->unit() == one);
    CHECK(m->tensor(u, u) == u);
    CHECK(m->tensor(zero, one) == zero);
    CHECK(hom_nonempty(*m, zero, u));
    CHECK_FALSE(hom_nonempty(*m, one, u));
}

TEST_CASE("builders reject bad input") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::MalformedTable;
    };
    CHECK(kind_of([] { from_semilattice({"a", "b"}, {{0, 0}, {1, 1}}); }) == ErrorKind::NotASemilattice);
    CHECK(kind_of([] { from_semilattice({"a", "b"}, {{0, 1}, {0, 1}}); }) == ErrorKind::NotASemilattice);
    CHECK_NOTHROW(from_topology({"p", "q"}, {{}, {"p"}, {"q"}, {"p", "q"}}));
    CHECK(kind_of([] { from_topology({"p", "q"}, {{}, {"p"}, {"q"}}); }) == ErrorKind::NotATopology);
    CHECK(kind_of([] { from_topology({"p"}, {{"p"}}); }) == ErrorKind::NotATopology);
    CHECK(kind_of([] { from_monoid({"1", "x", "y"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0); }) ==
          ErrorKind::NonCommutative);
    CHECK(kind_of([] { from_monoid({"1", "x"}, {{0, 1}, {1, 1}}, 1); }) == ErrorKind::NotAMonoid);
    CHECK(kind_of([] { from_quantale({"0", "1"}, {{true, true}, {false, true}}, {{0, 0}, {0, 0}}, 1); }) ==
          ErrorKind::NotAQuantale);
}

TEST_CASE("table spec round trip") {
    for (const auto& f : {"chain3.json", "monoid_e.json", "idempotent_top.json", "q3.json"}) {
        CAPTURE(f);
        auto m = load(f);
        auto back = from_table_spec(to_table_spec(*m));
        REQUIRE(back.num_objects() == m->num_objects());
        REQUIRE(back.num_morphisms() == m->num_morphisms());
        for (Obj a = 0; a < m->num_objects(); ++a)
            for (Obj b = 0; b < m->num_objects(); ++b) {
                CHECK(back.base().hom(a, b).size() == m->base().hom(a, b).size());
                CHECK(back.tensor(a, b) == m->tensor(a, b));
            }
        CHECK(back.unit() == m->unit());
        CHECK(validate_monoidal(back).ok());
    }
}

TEST_CASE("posetal functors between chains and 2^2") {
    auto c3 = load("chain3.json");
    auto b2 = load("boolean2.json");
    const auto& t = b2->base();
    auto F = posetal_functor(c3, b2, {*t.find_object("0"), *t.find_object("a"), *t.find_object("1")});
    CHECK(validate_monoidal_functor(F).ok());
    CHECK(validate_monoidal_functor(identity_functor(b2)).ok());
}
