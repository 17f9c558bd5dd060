#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "tensortopo/catcore.hpp"

using namespace tt;

namespace {

// Cancellation by definition, over every pair of parallel arrows.
bool mono_oracle(const CategoryTable& c, Mor f) {
    const Obj a = c.src(f);
    for (Obj x = 0; x < c.num_objects(); ++x)
        for (Mor g : c.hom(x, a))
            for (Mor h : c.hom(x, a))
                if (g != h && c.compose(f, g) == c.compose(f, h)) return false;
    return true;
}

bool epi_oracle(const CategoryTable& c, Mor f) {
    const Obj b = c.dst(f);
    for (Obj y = 0; y < c.num_objects(); ++y)
        for (Mor g : c.hom(b, y))
            for (Mor h : c.hom(b, y))
                if (g != h && c.compose(g, f) == c.compose(h, f)) return false;
    return true;
}

std::vector<std::string> all_fixtures() {
    auto v = posetal_fixtures();
    v.push_back("monoid_e.json");
    v.push_back("idempotent_top.json");
    v.push_back("boolean4.json");
    return v;
}

}  // namespace

TEST_CASE("builders produce valid categories") {
    for (const auto& f : all_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        CHECK(validate_category(m->base()).ok());
    }
}

TEST_CASE("mono and epi agree with cancellation") {
    for (const auto& f : all_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        const auto& c = m->base();
        for (Mor g = 0; g < c.num_morphisms(); ++g) {
            CHECK(is_mono(c, g) == mono_oracle(c, g));
            CHECK(is_epi(c, g) == epi_oracle(c, g));
            if (is_iso(c, g)) {
                CHECK(is_mono(c, g));
                CHECK(is_epi(c, g));
                auto inv = inverse(c, g);
                REQUIRE(inv);
                CHECK(c.compose(*inv, g) == c.identity(c.src(g)));
            }
        }
    }
}

TEST_CASE("posetal categories are balanced in one direction") {
    for (const auto& f : posetal_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        for (Mor g = 0; g < m->base().num_morphisms(); ++g) {
            CHECK(is_mono(m->base(), g));
            CHECK(is_epi(m->base(), g));
        }
    }
}

TEST_CASE("the idempotent e is neither mono nor epi") {
    auto m = load("monoid_e.json");
    const auto& c = m->base();
    auto e = c.find_morphism("e");
    REQUIRE(e);
    CHECK_FALSE(is_mono(c, *e));
    CHECK_FALSE(is_epi(c, *e));
    CHECK(is_split_epi(c, c.identity(0)));
}

TEST_CASE("initial and terminal objects of 2^2") {
    auto m = share(from_boolean(2));
    const auto& c = m->base();
    int initial = 0, terminal = 0;
    for (Obj a = 0; a < c.num_objects(); ++a) {
        initial += is_initial(c, a);
        terminal += is_terminal(c, a);
    }
    CHECK(initial == 1);
    CHECK(terminal == 1);
    CHECK(is_initial(c, *c.find_object("0")));
    CHECK(is_terminal(c, *c.find_object("1")));
}

TEST_CASE("meets are products and joins are coproducts in 2^2") {
    auto m = share(from_boolean(2));
    const auto& c = m->base();
    const Obj a = *c.find_object("a"), b = *c.find_object("b");
    const Obj zero = *c.find_object("0"), one = *c.find_object("1");
    Diagram d{{a, b}, {}};
    auto leg = [&](Obj x, Obj y) { return c.hom(x, y).front(); };
    CHECK_FALSE(check_limit(c, d, zero, {leg(zero, a), leg(zero, b)}));
    CHECK_FALSE(check_colimit(c, d, one, {leg(a, one), leg(b, one)}));
    // a is a cone over {a,b}? no: there is no a → b
    CHECK(c.hom(a, b).empty());
    // the top is not a product of a and b
    Diagram cospan{{a, b, one}, {{0, 2, leg(a, one)}, {1, 2, leg(b, one)}}};
    CHECK_FALSE(check_limit(c, cospan, zero, {leg(zero, a), leg(zero, b), leg(zero, one)}));
    CHECK(check_colimit(c, d, zero, {}).has_value());
}

TEST_CASE("a malformed composition table is reported") {
    CategoryTable c;
    const Obj x = c.add_object("x");
    const Mor id = c.add_morphism("id_x", x, x);
    const Mor f = c.add_morphism("f", x, x);
    c.set_identity(x, id);
    c.set_compose(id, id, id);
    c.set_compose(id, f, f);
    c.set_compose(f, id, f);
    c.set_compose(f, f, id);
    CHECK(validate_category(c).ok());
    CategoryTable bad = c;
    bad.set_compose(f, id, id);
    CHECK_FALSE(validate_category(bad).ok());
}

TEST_CASE("identity functor is full and faithful") {
    auto m = load("chain3.json");
    auto base = std::make_shared<const CategoryTable>(m->base());
    FunctorTable F{base, base, {}, {}};
    for (Obj a = 0; a < base->num_objects(); ++a) F.obj_map.push_back(a);
    for (Mor f = 0; f < base->num_morphisms(); ++f) F.mor_map.push_back(f);
    CHECK(validate_functor(F).ok());
    CHECK(is_full(F));
    CHECK(is_faithful(F));
}
