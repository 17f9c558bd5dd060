#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common.hpp"
#include "tensortopo/completion.hpp"

using namespace tt;

namespace {

std::size_t downset_oracle(const ZILattice& zi) {
    const int n = zi.size();
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n; ++b)
                if ((mask >> a & 1u) && zi.leq(b, a) && !(mask >> b & 1u)) closed = false;
        count += closed;
    }
    return count;
}

Completion complete(const std::string& name) {
    auto m = load(name);
    return build_completion(m, central_idempotents(*m));
}

}  // namespace

TEST_CASE("downset counts") {
    const std::vector<std::pair<std::shared_ptr<const MonoidalTable>, std::size_t>> cases{
        {load("chain3.json"), 4}, {load("boolean2.json"), 6}, {share(from_chain(1)), 2}, {load("frame3.json"), 0}};
    for (const auto& [m, expected] : cases) {
        const auto zi = central_idempotents(*m);
        const auto all = enumerate_downsets(zi);
        CHECK(all.size() == downset_oracle(zi));
        if (expected) CHECK(all.size() == expected);
        CHECK(enumerate_downsets(zi, true) == all);
        CHECK(all.front().none());
        CHECK(all.back().all());
        const auto L = downset_lattice(zi);
        CHECK(L.distributive());
        CHECK(L.size() == static_cast<int>(all.size()));
    }
}

TEST_CASE("restricts-to on posetal examples") {
    for (const auto& name : {"chain3.json", "boolean2.json", "frame3.json"}) {
        auto m = load(name);
        const auto zi = central_idempotents(*m);
        const auto& c = m->base();
        for (Mor f = 0; f < c.num_morphisms(); ++f)
            for (const auto& r : zi.classes) {
                // a → b restricts to u iff a ≤ b ∧ u
                const bool expected = hom_nonempty(*m, c.src(f), m->tensor(c.dst(f), r.U));
                const auto g = restricts_to(*m, f, r);
                CHECK(g.has_value() == expected);
                if (g) CHECK(c.compose(m->left(c.dst(f), r.u), *g) == f);
            }
    }
}

TEST_CASE("D[C] of the 3-chain") {
    const auto d = complete("chain3.json");
    CHECK(d.downsets.size() == 4);
    CHECK(d.table->num_objects() == 12);
    CHECK(validate_monoidal(*d.table).ok());
    CHECK(d.table->unit() == d.object(d.full_downset(), d.base->unit()));
    CHECK(check_zi_completion(d).passed());
    CHECK(check_completion_joins(d).passed());
    const auto zd = central_idempotents(*d.table);
    REQUIRE(zd.size() == 4);
    // a 4-chain
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK((zd.leq(i, j) || zd.leq(j, i)));
}

TEST_CASE("families satisfy compatibility and restricts-to") {
    for (const auto& name : {"chain3.json", "boolean2.json"}) {
        const auto d = complete(name);
        const auto& base = *d.base;
        const auto& t = d.table->base();
        for (Mor f = 0; f < t.num_morphisms(); ++f) {
            const auto& fam = d.families[f];
            const int D = d.downset_of(t.src(f)), E = d.downset_of(t.dst(f));
            const Obj A = d.base_object_of(t.src(f)), B = d.base_object_of(t.dst(f));
            for (int u = 0; u < d.zi.size(); ++u) {
                if (!d.downsets[D].test(u)) {
                    CHECK(fam[u] == kNone);
                    continue;
                }
                const auto& r = d.zi.classes[u];
                const Mor eta = fam[u];
                REQUIRE(eta != kNone);
                CHECK(base.base().src(eta) == base.tensor(A, r.U));
                CHECK(base.base().dst(eta) == B);
                // restricts to some v in E
                bool lands = false;
                for (int v = 0; v < d.zi.size(); ++v)
                    if (d.downsets[E].test(v) && restricts_to(base, eta, d.zi.classes[v])) lands = true;
                CHECK(lands);
                // compatible along w ≤ u inside D
                for (int w = 0; w < d.zi.size(); ++w)
                    if (d.downsets[D].test(w) && d.zi.leq(w, u))
                        CHECK(fam[w] == base.base().compose(eta, base.left(A, d.zi.mediator(w, u))));
            }
        }
    }
}

TEST_CASE("composition does not depend on the witness") {
    for (const auto& name : {"chain3.json", "boolean2.json"}) {
        const auto d = complete(name);
        const auto& t = d.table->base();
        std::size_t pairs = 0;
        for (Mor eta = 0; eta < t.num_morphisms(); ++eta)
            for (Mor zeta : t.out(t.dst(eta))) {
                const Mor comp = t.compose(zeta, eta);
                for (int u = 0; u < d.zi.size(); ++u) {
                    if (!d.downsets[d.downset_of(t.src(eta))].test(u)) continue;
                    const auto cands = composite_candidates(d, zeta, eta, u);
                    REQUIRE_FALSE(cands.empty());
                    CHECK(std::set<Mor>(cands.begin(), cands.end()).size() == 1);
                    CHECK(cands.front() == d.families[comp][u]);
                    ++pairs;
                }
            }
        CHECK(pairs > 0);
    }
}

TEST_CASE("embedding is full and faithful") {
    for (const auto& name : {"chain3.json", "boolean2.json", "monoid_e.json"}) {
        CAPTURE(name);
        auto m = load(name);
        auto zi = central_idempotents(*m);
        const auto d = build_completion(m, zi);
        const auto e = embed(d);
        CHECK(e.verdict.passed());
        CHECK(validate_monoidal_functor(e.functor).ok());
        const auto& c = m->base();
        for (Obj a = 0; a < c.num_objects(); ++a)
            for (Obj b = 0; b < c.num_objects(); ++b)
                CHECK(c.hom(a, b).size() ==
                      d.table->base().hom(e.functor.functor.obj_map[a], e.functor.functor.obj_map[b]).size());
        for (Mor f = 0; f < c.num_morphisms(); ++f) {
            const auto& fam = d.families[e.functor.functor.mor_map[f]];
            for (int u = 0; u < d.zi.size(); ++u) CHECK(fam[u] == m->tensor_mor(f, d.zi.classes[u].u));
        }
    }
}

TEST_CASE("ZI(D[C]) for 2^2 and the point") {
    CHECK(central_idempotents(*complete("boolean2.json").table).size() == 6);
    auto one = share(from_chain(1));
    const auto d = build_completion(one, central_idempotents(*one));
    CHECK(central_idempotents(*d.table).size() == 2);
    CHECK(check_zi_completion(d).passed());
}

TEST_CASE("budget") {
    auto m = load("chain3.json");
    try {
        build_completion(m, central_idempotents(*m), {10, false});
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("extension along the embedding") {
    auto c3 = load("chain3.json");
    auto b2 = load("boolean2.json");
    const auto d = build_completion(c3, central_idempotents(*c3));
    const auto F = parse_functor(data_path("chain3_to_boolean2.json"), c3, b2);
    const auto ext = extend_functor(F, d);
    CHECK(validate_functor(ext.functor).ok());
    CHECK(ext.triangle.passed());
    CHECK(ext.uniqueness.passed());
    const auto e = embed(d);
    for (Obj a = 0; a < c3->num_objects(); ++a) CHECK(ext.functor.obj_map[e.functor.functor.obj_map[a]] == F.functor.obj_map[a]);

    auto chain2 = load("chain2.json");
    const auto G = parse_functor(data_path("boolean2_collapse.json"), b2, chain2);
    const auto d2 = build_completion(b2, central_idempotents(*b2));
    CHECK_THROWS_AS(extend_functor(G, d2), Error);
}
