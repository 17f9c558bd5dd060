#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "tensortopo/sheaf.hpp"

using namespace tt;

namespace {

struct Fixture {
    std::shared_ptr<const MonoidalTable> m;
    ZILattice zi;
    LatticeModel L;
    std::vector<RestrictionCategory> rc;
};

Fixture prepare(const std::string& name) {
    Fixture f{load(name), {}, {}, {}};
    f.zi = central_idempotents(*f.m);
    has_universal_finite_joins(*f.m, f.zi);
    f.L = lattice_of(f.zi, f.m->base());
    for (int u = 0; u < f.zi.size(); ++u) f.rc.push_back(restrict(f.m, f.zi, u));
    return f;
}

int cls_of(const Fixture& f, const std::string& obj) {
    const Obj a = *f.m->base().find_object(obj);
    for (int i = 0; i < f.zi.size(); ++i)
        if (f.zi.classes[i].U == a) return i;
    return -1;
}

std::size_t hom_count(const MonoidalTable& m, Obj a, Obj b) { return m.base().hom(a, b).size(); }

}  // namespace

TEST_CASE("hom-sets of C|u are homs out of A ⊗ U") {
    for (const auto& name : {"boolean2.json", "chain3.json", "frame3.json", "q3.json", "monoid_e.json"}) {
        CAPTURE(name);
        auto f = prepare(name);
        for (int u = 0; u < f.zi.size(); ++u) {
            const auto& r = f.rc[u];
            CHECK(validate_monoidal(*r.table).ok());
            for (Obj a = 0; a < f.m->num_objects(); ++a)
                for (Obj b = 0; b < f.m->num_objects(); ++b)
                    CHECK(hom_count(*r.table, a, b) == hom_count(*f.m, f.m->tensor(a, f.zi.classes[u].U), b));
        }
    }
}

TEST_CASE("quantale restriction is p·u ≤ q") {
    auto f = prepare("q3.json");
    const auto& c = f.m->base();
    for (int u = 0; u < f.zi.size(); ++u) {
        const Obj U = f.zi.classes[u].U;
        for (Obj p = 0; p < c.num_objects(); ++p)
            for (Obj q = 0; q < c.num_objects(); ++q)
                CHECK(hom_nonempty(*f.rc[u].table, p, q) == hom_nonempty(*f.m, f.m->tensor(p, U), q));
    }
    // closed form on the named elements
    const int u = cls_of(f, "u");
    const auto& t = f.rc[u].table->base();
    CHECK(!t.hom(*t.find_object("1"), *t.find_object("u")).empty());
    CHECK(t.hom(*t.find_object("1"), *t.find_object("0")).empty());
}

TEST_CASE("2^2 restricted to a") {
    auto f = prepare("boolean2.json");
    const int a = cls_of(f, "a");
    const Obj A = f.zi.classes[a].U;
    for (Obj x = 0; x < f.m->num_objects(); ++x)
        for (Obj y = 0; y < f.m->num_objects(); ++y)
            CHECK(hom_nonempty(*f.rc[a].table, x, y) == hom_nonempty(*f.m, f.m->tensor(x, A), y));
    // 1 ≅ a in C|a
    const auto& t = f.rc[a].table->base();
    CHECK(isomorphic(t, *t.find_object("1"), *t.find_object("a")));
    CHECK(isomorphic(t, *t.find_object("0"), *t.find_object("b")));
}

TEST_CASE("restriction functors form a presheaf") {
    for (const auto& name : {"boolean2.json", "chain3.json", "frame3.json"}) {
        CAPTURE(name);
        auto f = prepare(name);
        const int n = f.zi.size();
        std::vector<std::vector<MonoidalFunctorTable>> F(n, std::vector<MonoidalFunctorTable>(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (f.zi.leq(u, v)) {
                    F[u][v] = restriction_functor(f.rc[v], f.rc[u], f.zi);
                    CHECK(validate_monoidal_functor(F[u][v]).ok());
                } else {
                    CHECK_THROWS_AS(restriction_functor(f.rc[v], f.rc[u], f.zi), Error);
                }
        for (int u = 0; u < n; ++u) {
            for (Mor g = 0; g < f.rc[u].table->num_morphisms(); ++g) CHECK(F[u][u].functor.mor_map[g] == g);
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w)
                    if (f.zi.leq(u, v) && f.zi.leq(v, w))
                        for (Mor g = 0; g < f.rc[w].table->num_morphisms(); ++g)
                            CHECK(F[u][v].functor.mor_map[F[v][w].functor.mor_map[g]] == F[u][w].functor.mor_map[g]);
        }
    }
}

TEST_CASE("left adjoints to restriction") {
    for (const auto& name : {"boolean2.json", "chain3.json", "q3.json"}) {
        CAPTURE(name);
        auto f = prepare(name);
        for (int u = 0; u < f.zi.size(); ++u)
            for (int v = 0; v < f.zi.size(); ++v) {
                if (!f.zi.leq(u, v)) continue;
                const auto adj = left_adjoint_functor(f.rc[u], f.rc[v], f.zi);
                CHECK(adj.verdict.passed());
                const Obj U = f.zi.classes[u].U;
                for (Obj a = 0; a < f.m->num_objects(); ++a)
                    for (Obj b = 0; b < f.m->num_objects(); ++b)
                        CHECK(hom_count(*f.rc[v].table, f.m->tensor(a, U), b) == hom_count(*f.rc[u].table, a, b));
            }
    }
}

TEST_CASE("ZI of C|u is the principal downset") {
    for (const auto& name : {"boolean2.json", "chain3.json", "frame3.json"}) {
        auto f = prepare(name);
        for (int u = 0; u < f.zi.size(); ++u) {
            CHECK(check_zi_of_restriction(*f.m, f.zi, f.rc[u]).passed());
            int below = 0;
            for (int w = 0; w < f.zi.size(); ++w) below += f.zi.leq(w, u);
            CHECK(central_idempotents(*f.rc[u].table).size() == below);
        }
    }
}

TEST_CASE("stalks") {
    for (const auto& name : {"boolean2.json", "boolean3.json", "chain3.json", "frame3.json"}) {
        CAPTURE(name);
        auto f = prepare(name);
        for (const auto& x : spectrum(f.L).points) {
            const auto s = stalk(f.m, f.zi, x);
            CHECK(s.minimum == f.L.meet_of(x.carrier));
            CHECK(verify_stalk_colimit(*f.m, f.zi, s).passed());
            CHECK(check_zi_of_stalk(*f.m, f.zi, s).passed());
            CHECK(check_stalk_inherits(*f.m, s).passed());
            // germ identification: A → B in the stalk iff A ∧ U ≤ B for some U in x
            for (Obj a = 0; a < f.m->num_objects(); ++a)
                for (Obj b = 0; b < f.m->num_objects(); ++b) {
                    bool germ = false;
                    for (int u = 0; u < f.zi.size(); ++u)
                        if (x.carrier.test(u) && hom_nonempty(*f.m, f.m->tensor(a, f.zi.classes[u].U), b)) germ = true;
                    CHECK(hom_nonempty(*s.rc.table, a, b) == germ);
                }
            const auto zs = central_idempotents(*s.rc.table);
            CHECK(zs.size() == germ_congruence(f.L, x).quotient.size());
            CHECK(is_vee_local(lattice_of(zs, s.rc.table->base())));
        }
        Bits not_filter(f.zi.size());
        not_filter.set(f.L.bottom());
        CHECK_THROWS_AS(stalk(f.m, f.zi, FilterSet{not_filter, FilterKind::Plain}), Error);
    }
}

TEST_CASE("locality of lattices") {
    auto two = lattice_of(central_idempotents(from_chain(2)), from_chain(2).base());
    CHECK(is_vee_local(two));
    CHECK(is_bigvee_local(two));
    auto b2 = lattice_of(central_idempotents(from_boolean(2)), from_boolean(2).base());
    CHECK_FALSE(is_vee_local(b2));
    auto one = lattice_of(central_idempotents(from_chain(1)), from_chain(1).base());
    CHECK_FALSE(is_vee_local(one));
    CHECK_FALSE(is_bigvee_local(one));
}

TEST_CASE("sheaf equalizer") {
    for (const auto& name : {"boolean2.json", "boolean3.json", "chain3.json", "frame3.json"}) {
        CAPTURE(name);
        auto f = prepare(name);
        for (int u = 0; u < f.zi.size(); ++u)
            for (int v = 0; v < f.zi.size(); ++v) CHECK(check_sheaf_equalizer(*f.m, f.zi, u, v).passed());
        CHECK(check_zero_section(f.m, f.zi).passed());
    }
    auto m = load("monoid_e.json");
    auto zi = central_idempotents(*m);
    CHECK_THROWS_AS(check_sheaf_equalizer(*m, zi, 0, 0), Error);
}

TEST_CASE("product of stalks") {
    for (const auto& name : {"boolean2.json", "chain3.json", "frame3.json"}) {
        auto f = prepare(name);
        std::vector<StalkCategory> stalks;
        for (const auto& x : spectrum(f.L).points) stalks.push_back(stalk(f.m, f.zi, x));
        const auto pe = embed_into_product_of_stalks(*f.m, stalks);
        CHECK(pe.verdict.passed());
        // faithfulness by brute force
        const auto& c = f.m->base();
        for (Mor g = 0; g < c.num_morphisms(); ++g)
            for (Mor h = g + 1; h < c.num_morphisms(); ++h) {
                if (c.src(g) != c.src(h) || c.dst(g) != c.dst(h)) continue;
                bool separated = false;
                for (std::size_t p = 0; p < stalks.size(); ++p) separated = separated || pe.components[p][g] != pe.components[p][h];
                CHECK(separated);
            }
    }
}

TEST_CASE("represent") {
    for (int n = 1; n <= 3; ++n) {
        auto m = share(from_boolean(n));
        const auto r = represent(m);
        CHECK(r.all_pass());
        CHECK(r.space.points.size() == static_cast<std::size_t>(n));
        CHECK(r.global_sections_count == (1 << n));
        CHECK(r.zero_section_terminal);
        for (const auto& s : r.stalk_summaries) {
            CHECK(s.zi_size == 2);
            CHECK(s.two_valued);
        }
    }
    const auto r = represent(load("frame3.json"));
    CHECK(r.all_pass());
    REQUIRE(r.verdict("stone_round_trip"));
    CHECK(r.verdict("stone_round_trip")->status == Status::Skipped);

    const auto bad = represent(load("monoid_e.json"));
    CHECK_FALSE(bad.all_pass());
    REQUIRE(bad.verdict("universal_finite_joins"));
    CHECK(bad.verdict("universal_finite_joins")->failed());
    REQUIRE(bad.verdict("sheaf_equalizer"));
    CHECK(bad.verdict("sheaf_equalizer")->status == Status::Skipped);
}
