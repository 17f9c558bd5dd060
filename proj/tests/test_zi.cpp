#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "tensortopo/zi.hpp"

using namespace tt;

namespace {

std::vector<std::string> all_fixtures() {
    auto v = posetal_fixtures();
    v.push_back("monoid_e.json");
    v.push_back("idempotent_top.json");
    return v;
}

// A chain z < a < u < 1 with u·a = a but a·u = z: u is a left idempotent
// with no half-braiding.
MonoidalTable lopsided_chain() {
    const std::vector<std::string> e{"u", "a", "z", "1"};
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
    const int rank[] = {2, 1, 0, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) leq[i][j] = rank[i] <= rank[j];
    return from_posetal(e, leq, {{0, 1, 2, 0}, {2, 2, 2, 1}, {2, 2, 2, 2}, {0, 1, 2, 3}}, 3);
}

// u ≤ v as a factorization u = v ∘ m respecting the first half-braidings.
bool factors_through(const MonoidalTable& m, const CentralIdempotentRecord& u, const CentralIdempotentRecord& v) {
    const auto& c = m.base();
    for (Mor f : c.hom(u.U, v.U)) {
        if (c.compose(v.u, f) != u.u) continue;
        bool respects = true;
        for (Obj A = 0; A < m.num_objects() && respects; ++A) {
            const Mor lhs = c.compose(m.left(A, f), u.half_braidings.front().sigma[A]);
            const Mor rhs = c.compose(v.half_braidings.front().sigma[A], m.right(f, A));
            respects = lhs == rhs;
        }
        if (respects) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("left idempotents") {
    CHECK(find_left_idempotents(*load("chain3.json")).size() == 3);
    const auto e = find_left_idempotents(*load("monoid_e.json"));
    REQUIRE(e.size() == 1);
    CHECK(e.front().u == load("monoid_e.json")->base().identity(0));
}

TEST_CASE("half-braidings in posetal categories are unique") {
    for (const auto& f : posetal_fixtures()) {
        auto m = load(f);
        for (const auto& l : find_left_idempotents(*m)) CHECK(find_half_braidings(*m, l.U, l.u).size() == 1);
    }
}

TEST_CASE("a left idempotent without a half-braiding is not central") {
    auto m = lopsided_chain();
    REQUIRE(validate_monoidal(m).ok());
    CHECK_FALSE(m.has_symmetry());
    const Obj u = *m.base().find_object("u");
    CHECK(m.base().hom(m.tensor(u, 1), m.tensor(1, u)).empty());
    bool found = false;
    for (const auto& l : find_left_idempotents(m))
        if (l.U == u) {
            found = true;
            CHECK(find_half_braidings(m, l.U, l.u).empty());
        }
    CHECK(found);
    const auto zi = central_idempotents(m);
    for (const auto& r : zi.members) CHECK(r.U != u);
}

TEST_CASE("ZI of a posetal frame is the frame") {
    for (const auto& f : {"boolean1.json", "boolean2.json", "boolean3.json", "chain3.json", "frame3.json"}) {
        CAPTURE(f);
        auto m = load(f);
        const auto zi = central_idempotents(*m);
        REQUIRE(zi.size() == m->num_objects());
        std::vector<int> seen(m->num_objects(), 0);
        for (int i = 0; i < zi.size(); ++i) {
            ++seen[zi.classes[i].U];
            for (int j = 0; j < zi.size(); ++j)
                CHECK(zi.leq(i, j) == hom_nonempty(*m, zi.classes[i].U, zi.classes[j].U));
        }
        for (int s : seen) CHECK(s == 1);
        CHECK(zi.classes[zi.top].U == m->unit());
    }
}

TEST_CASE("monoid {1,e} has only the top class") {
    const auto zi = central_idempotents(*load("monoid_e.json"));
    CHECK(zi.size() == 1);
    CHECK(zi.top == 0);
}

TEST_CASE("order by invertibility agrees with factorization") {
    for (const auto& f : all_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        const auto zi = central_idempotents(*m);
        for (int i = 0; i < zi.size(); ++i)
            for (int j = 0; j < zi.size(); ++j) {
                CHECK(zi.leq(i, j) == factors_through(*m, zi.classes[i], zi.classes[j]));
                if (zi.leq(i, j)) CHECK(m->base().compose(zi.classes[j].u, zi.mediator(i, j)) == zi.classes[i].u);
            }
    }
}

TEST_CASE("meet is the greatest lower bound") {
    for (const auto& f : all_fixtures()) {
        CAPTURE(f);
        const auto zi = central_idempotents(*load(f));
        for (int i = 0; i < zi.size(); ++i)
            for (int j = 0; j < zi.size(); ++j) {
                const int mij = zi.meet(i, j);
                CHECK(zi.leq(mij, i));
                CHECK(zi.leq(mij, j));
                for (int k = 0; k < zi.size(); ++k)
                    if (zi.leq(k, i) && zi.leq(k, j)) CHECK(zi.leq(k, mij));
                CHECK(zi.leq(i, zi.top));
            }
    }
}

TEST_CASE("half-braidings of symmetric inputs are the symmetry") {
    for (const auto& f : all_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        if (!m->has_symmetry()) continue;
        for (const auto& r : central_idempotents(*m).members) {
            REQUIRE(!r.half_braidings.empty());
            for (const auto& hb : r.half_braidings)
                for (Obj A = 0; A < m->num_objects(); ++A) CHECK(hb.sigma[A] == m->symmetry(r.U, A));
        }
    }
}

TEST_CASE("stiffness and finite joins") {
    for (const auto& f : posetal_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        auto zi = central_idempotents(*m);
        CHECK(is_stiff(*m, zi).passed());
        if (f == "q3.json") continue;
        CHECK(has_universal_finite_joins(*m, zi).passed());
        REQUIRE(zi.joins);
        REQUIRE(zi.bottom);
        for (int i = 0; i < zi.size(); ++i)
            for (int j = 0; j < zi.size(); ++j) CHECK(zi.join(i, j) == zi.lub(i, j));
        CHECK(has_universal_joins(*m, zi).passed());
    }
    {
        auto m = load("monoid_e.json");
        auto zi = central_idempotents(*m);
        const auto v = has_universal_finite_joins(*m, zi);
        CHECK(v.failed());
        CHECK(v.witness.find("(a)") != std::string::npos);
        CHECK(has_universal_joins(*m, zi).failed());
    }
    {
        auto m = load("idempotent_top.json");
        auto zi = central_idempotents(*m);
        CHECK(is_stiff(*m, zi).passed());
        const auto v = has_universal_finite_joins(*m, zi);
        CHECK(v.failed());
        CHECK(v.witness.find("(c)") != std::string::npos);
    }
}

TEST_CASE("local properties") {
    auto b2 = load("boolean2.json");
    auto zi = central_idempotents(*b2);
    REQUIRE(has_universal_finite_joins(*b2, zi).passed());
    const auto& c = b2->base();
    auto cls = [&](const char* name) {
        for (int i = 0; i < zi.size(); ++i)
            if (zi.classes[i].U == *c.find_object(name)) return i;
        return -1;
    };
    const Mor id1 = c.identity(*c.find_object("1"));
    const auto v = check_local_properties(*b2, zi, {cls("a"), cls("b")}, id1, id1);
    CHECK(v.passed());
    CHECK_FALSE(v.notes.empty());
    CHECK_THROWS_AS(check_local_properties(*b2, zi, {cls("a")}, id1, id1), Error);

    auto m = load("idempotent_top.json");
    auto zt = central_idempotents(*m);
    has_universal_finite_joins(*m, zt);
    const auto& t = m->base();
    auto tcls = [&](const char* name) {
        for (int i = 0; i < zt.size(); ++i)
            if (zt.classes[i].U == *t.find_object(name)) return i;
        return -1;
    };
    const Mor e = *t.find_morphism("t");
    const auto bad = check_local_properties(*m, zt, {tcls("a"), tcls("b")}, e, t.identity(m->unit()));
    CHECK(bad.failed());
    CHECK(bad.witness.find("equality") != std::string::npos);
}

TEST_CASE("bilinearity and subunits") {
    for (const auto& f : posetal_fixtures()) {
        CAPTURE(f);
        auto m = load(f);
        const auto zi = central_idempotents(*m);
        CHECK(is_bilinear(*m, zi).passed());
        for (const auto& r : zi.members) CHECK(is_subunit(*m, r));
    }
    auto m = load("monoid_e.json");
    const auto zi = central_idempotents(*m);
    CHECK(is_bilinear(*m, zi).passed());
    CHECK(is_subunit(*m, zi.classes[zi.top]));
}

TEST_CASE("cartesian categories") {
    auto b2 = load("boolean2.json");
    CHECK(is_cartesian(*b2));
    const auto zi = central_idempotents(*b2);
    CHECK(cartesian_subterminal_check(*b2, zi).passed());
    // 2^2: subterminals are exactly the four objects
    int subterminal = 0;
    const auto& c = b2->base();
    for (Obj a = 0; a < c.num_objects(); ++a) {
        bool ok = true;
        for (Obj x = 0; x < c.num_objects(); ++x) ok = ok && c.hom(x, a).size() <= 1;
        subterminal += ok;
    }
    CHECK(subterminal == zi.size());

    auto mon = load("monoid_e.json");
    CHECK_FALSE(is_cartesian(*mon));
    CHECK_THROWS_AS(cartesian_subterminal_check(*mon, central_idempotents(*mon)), Error);
}

TEST_CASE("induced map of a functor preserving central idempotents") {
    auto c3 = load("chain3.json");
    auto b2 = load("boolean2.json");
    const auto zc = central_idempotents(*c3);
    const auto zd = central_idempotents(*b2);

    const auto id = zi_map_of_functor(identity_functor(b2), zd, zd);
    for (int i = 0; i < zd.size(); ++i) CHECK(id.class_map[i] == i);

    auto F = parse_functor(data_path("chain3_to_boolean2.json"), c3, b2);
    const auto zm = zi_map_of_functor(F, zc, zd);
    CHECK(zm.verdict.passed());
    CHECK(zm.class_map[zc.top] == zd.top);
    for (int i = 0; i < zc.size(); ++i)
        for (int j = 0; j < zc.size(); ++j) CHECK(zm.class_map[zc.meet(i, j)] == zd.meet(zm.class_map[i], zm.class_map[j]));
    // preimage of each point of Spec ZI(2^2) is a point of Spec ZI(3-chain)
    REQUIRE(zm.points_d.size() == 2);
    for (std::size_t p = 0; p < zm.points_d.size(); ++p) {
        Bits pre(zc.size());
        for (int i = 0; i < zc.size(); ++i)
            if (zm.points_d[p].carrier.test(zm.class_map[i])) pre.set(i);
        REQUIRE(zm.spectrum_map[p] >= 0);
        CHECK(zm.points_c[zm.spectrum_map[p]].carrier == pre);
    }

    auto mon = load("monoid_e.json");
    auto G = identity_functor(mon);
    G.theta_unit = *mon->base().find_morphism("e");
    const auto zmon = central_idempotents(*mon);
    try {
        zi_map_of_functor(G, zmon, zmon);
        FAIL("expected CoherenceNotInvertible");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::CoherenceNotInvertible);
    }
}
