#include "tensortopo/sheaf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tensortopo/parallel.hpp"

namespace tensortopo {

Mor RestrictionCategory::find(Obj a, Mor f) const {
    if (a < 0 || f < 0 || a >= static_cast<Obj>(index_.size())) return kNone;
    return index_[a][f];
}

RestrictionCategory restrict(std::shared_ptr<const MonoidalTable> mp, const ZILattice& zi, int uc) {
    const MonoidalTable& m = *mp;
    const CategoryTable& c = m.base();
    const int n = c.num_objects();
    RestrictionCategory rc;
    rc.base = mp;
    rc.u_class = uc;
    rc.rec = zi.classes.at(uc);
    const Obj U = rc.rec.U;
    const Mor u = rc.rec.u, delta = rc.rec.inverse;
    const bool at_unit = U == m.unit();

    CategoryTable t;
    for (Obj a = 0; a < n; ++a) t.add_object(c.object_name(a));
    rc.index_.assign(n, std::vector<Mor>(c.num_morphisms(), kNone));
    std::vector<std::vector<Mor>> by_source(n);
    for (Obj a = 0; a < n; ++a) {
        const Obj aU = m.tensor(a, U);
        const Mor ident = m.left(a, u);
        for (Obj b = 0; b < n; ++b)
            for (Mor f : c.hom(aU, b)) {
                std::string name = at_unit      ? c.morphism_name(f)
                                   : f == ident ? "id_" + c.object_name(a)
                                                : c.object_name(a) + "|" + c.morphism_name(f);
                const Mor d = t.add_morphism(std::move(name), a, b);
                rc.index_[a][f] = d;
                rc.source.push_back(a);
                rc.base_mor.push_back(f);
                by_source[a].push_back(d);
            }
    }
    for (Obj a = 0; a < n; ++a) t.set_identity(a, rc.index_[a][m.left(a, u)]);
    for (Mor d = 0; d < t.num_morphisms(); ++d) {
        const Obj a = rc.source[d];
        const Mor f = rc.base_mor[d];
        const Mor pre = c.compose(m.right(f, U), m.left(a, delta));
        for (Mor e : by_source[t.dst(d)]) t.set_compose(e, d, rc.index_[a][c.compose(rc.base_mor[e], pre)]);
    }

    std::vector<Mor> chi(n);
    for (Obj x = 0; x < n; ++x) chi[x] = crossing(m, rc.rec, x);
    std::vector<Mor> mid(static_cast<std::size_t>(n) * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj x = 0; x < n; ++x)
            mid[static_cast<std::size_t>(a) * n + x] =
                c.compose(m.right(m.left(a, chi[x]), U), m.left(m.tensor(a, x), delta));
    const int M = t.num_morphisms();
    std::vector<Mor> tm(static_cast<std::size_t>(M) * M);
    for (Mor d = 0; d < M; ++d)
        for (Mor e = 0; e < M; ++e) {
            const Obj a = rc.source[d], x = rc.source[e];
            const Mor h = c.compose(m.tensor_mor(rc.base_mor[d], rc.base_mor[e]), mid[static_cast<std::size_t>(a) * n + x]);
            tm[static_cast<std::size_t>(d) * M + e] = rc.index_[m.tensor(a, x)][h];
        }
    std::optional<std::vector<Mor>> sym;
    if (m.has_symmetry()) {
        sym.emplace(static_cast<std::size_t>(n) * n);
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b) {
                const Obj ab = m.tensor(a, b);
                (*sym)[static_cast<std::size_t>(a) * n + b] = rc.index_[ab][c.compose(m.symmetry(a, b), m.left(ab, u))];
            }
    }
    rc.table = std::make_shared<const MonoidalTable>(std::move(t), m.unit(), m.tensor_obj_table(), std::move(tm),
                                                     std::move(sym));
    return rc;
}

Mor restrict_morphism(const MonoidalTable& m, const ZILattice& zi, Obj a, Mor f, int u, int v) {
    const Mor med = zi.mediator(u, v);
    if (med == kNone)
        throw Error(ErrorKind::NotComparable, "class " + std::to_string(u) + " is not below class " + std::to_string(v));
    return m.base().compose(f, m.left(a, med));
}

namespace {

std::shared_ptr<const CategoryTable> base_of(const std::shared_ptr<const MonoidalTable>& t) {
    return std::shared_ptr<const CategoryTable>(t, &t->base());
}

}  // namespace

MonoidalFunctorTable restriction_functor(const RestrictionCategory& from_v, const RestrictionCategory& to_u,
                                         const ZILattice& zi) {
    const int u = to_u.u_class, v = from_v.u_class;
    if (!zi.leq(u, v))
        throw Error(ErrorKind::NotComparable, "class " + std::to_string(u) + " is not below class " + std::to_string(v));
    const MonoidalTable& m = *from_v.base;
    const CategoryTable& s = from_v.table->base();
    const CategoryTable& t = to_u.table->base();
    MonoidalFunctorTable F;
    F.source = from_v.table;
    F.target = to_u.table;
    F.functor.source = base_of(from_v.table);
    F.functor.target = base_of(to_u.table);
    const int n = s.num_objects();
    F.functor.obj_map.resize(n);
    for (Obj a = 0; a < n; ++a) F.functor.obj_map[a] = a;
    for (Mor d = 0; d < s.num_morphisms(); ++d) {
        const Obj a = from_v.source[d];
        F.functor.mor_map.push_back(to_u.find(a, restrict_morphism(m, zi, a, from_v.base_mor[d], u, v)));
    }
    F.theta_unit = t.identity(m.unit());
    F.theta.resize(static_cast<std::size_t>(n) * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) F.theta[static_cast<std::size_t>(a) * n + b] = t.identity(m.tensor(a, b));
    return F;
}

LeftAdjoint left_adjoint_functor(const RestrictionCategory& at_u, const RestrictionCategory& at_v, const ZILattice& zi) {
    const int uc = at_u.u_class, vc = at_v.u_class;
    if (!zi.leq(uc, vc))
        throw Error(ErrorKind::NotComparable, "class " + std::to_string(uc) + " is not below class " + std::to_string(vc));
    const MonoidalTable& m = *at_u.base;
    const CategoryTable& c = m.base();
    const CategoryTable& cu = at_u.table->base();
    const CategoryTable& cv = at_v.table->base();
    const Obj U = at_u.rec.U;
    const Mor u = at_u.rec.u, delta = at_u.rec.inverse, v = at_v.rec.u;
    const int n = c.num_objects();

    LeftAdjoint L;
    L.functor.source = base_of(at_u.table);
    L.functor.target = base_of(at_v.table);
    for (Obj a = 0; a < n; ++a) L.functor.obj_map.push_back(m.tensor(a, U));
    const Mor dv = m.tensor_mor(delta, v);
    for (Mor d = 0; d < cu.num_morphisms(); ++d) {
        const Obj a = at_u.source[d];
        const Mor g = c.compose(m.right(at_u.base_mor[d], U), m.left(a, dv));
        L.functor.mor_map.push_back(at_v.find(m.tensor(a, U), g));
    }
    const Mor uu = m.tensor_mor(u, u), uv = m.tensor_mor(u, v);
    for (Obj a = 0; a < n; ++a) {
        L.unit.push_back(at_u.find(a, c.identity(m.tensor(a, U))));
        L.unit_inverse.push_back(at_u.find(m.tensor(a, U), m.left(a, uu)));
        L.counit.push_back(at_v.find(m.tensor(a, U), m.left(a, uv)));
    }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const Obj ab = m.tensor(a, b);
            const Mor chi = crossing(m, at_u.rec, b);
            const Mor h = c.chain({m.right(m.left(a, chi), U), m.left(ab, delta), m.left(m.tensor(ab, U), v)});
            L.oplax.push_back(at_v.find(m.tensor(ab, U), h));
        }

    auto fail = [&](const std::string& w) {
        L.verdict = Verdict::fail(w);
        return L;
    };
    const auto fr = validate_functor(L.functor);
    if (!fr.ok()) return fail("left adjoint is not a functor: " + fr.violations.front());
    const MonoidalFunctorTable R = restriction_functor(at_v, at_u, zi);
    for (Obj a = 0; a < n; ++a) {
        const Obj fa = m.tensor(a, U);
        if (L.unit[a] == kNone || L.unit_inverse[a] == kNone || L.counit[a] == kNone)
            return fail("unit or counit component missing at " + c.object_name(a));
        if (cu.compose(L.unit_inverse[a], L.unit[a]) != cu.identity(a) ||
            cu.compose(L.unit[a], L.unit_inverse[a]) != cu.identity(fa))
            return fail("unit is not invertible at " + c.object_name(a));
        if (cv.compose(L.counit[fa], L.functor.mor_map[L.unit[a]]) != cv.identity(fa))
            return fail("triangle identity fails at F(" + c.object_name(a) + ")");
        if (cu.compose(R.functor.mor_map[L.counit[a]], L.unit[a]) != cu.identity(a))
            return fail("triangle identity fails at R(" + c.object_name(a) + ")");
    }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const Mor o = L.oplax[static_cast<std::size_t>(a) * n + b];
            if (o == kNone || cv.src(o) != m.tensor(m.tensor(a, b), U) ||
                cv.dst(o) != m.tensor(m.tensor(a, U), m.tensor(b, U)))
                return fail("oplax component ill-typed at (" + c.object_name(a) + ", " + c.object_name(b) + ")");
        }
    std::size_t pairs = 0;
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const auto& lhs = cv.hom(m.tensor(a, U), b);
            const auto& rhs = cu.hom(a, b);
            if (lhs.size() != rhs.size())
                return fail("hom bijection fails at (" + c.object_name(a) + ", " + c.object_name(b) + "): " +
                            std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()));
            std::set<Mor> image;
            for (Mor g : lhs) image.insert(cu.compose(R.functor.mor_map[g], L.unit[a]));
            if (image.size() != rhs.size())
                return fail("transpose is not injective at (" + c.object_name(a) + ", " + c.object_name(b) + ")");
            pairs += lhs.size();
        }
    L.verdict = Verdict::pass("triangles hold, unit invertible, " + std::to_string(pairs) + " transposes bijective");
    return L;
}

Verdict check_zi_of_restriction(const MonoidalTable& m, const ZILattice& zi, const RestrictionCategory& rc) {
    const CategoryTable& c = m.base();
    const ZILattice zr = central_idempotents(*rc.table);
    const int u = rc.u_class;
    std::vector<int> down, image;
    for (int k = 0; k < zi.size(); ++k) {
        if (!zi.leq(k, u)) continue;
        const auto& r = zi.classes[k];
        const Mor d = rc.find(r.U, m.tensor_mor(r.u, rc.rec.u));
        const int img = d == kNone ? -1 : classify(*rc.table, zr, r.U, d);
        if (img < 0) return Verdict::fail(c.object_name(r.U) + " is not central in the restriction");
        down.push_back(k);
        image.push_back(img);
    }
    if (static_cast<int>(std::set<int>(image.begin(), image.end()).size()) != static_cast<int>(image.size()))
        return Verdict::fail("two classes below u collapse in the restriction");
    if (static_cast<int>(image.size()) != zr.size())
        return Verdict::fail("restriction has " + std::to_string(zr.size()) + " classes, ↓u has " +
                             std::to_string(image.size()));
    for (std::size_t i = 0; i < down.size(); ++i)
        for (std::size_t j = 0; j < down.size(); ++j)
            if (zi.leq(down[i], down[j]) != zr.leq(image[i], image[j]))
                return Verdict::fail("order differs on (" + c.object_name(zi.classes[down[i]].U) + ", " +
                                     c.object_name(zi.classes[down[j]].U) + ")");
    return Verdict::pass(std::to_string(zr.size()) + " classes, order isomorphic to ↓u");
}

StalkCategory stalk(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi, const FilterSet& x) {
    const LatticeModel L = lattice_of(zi, m->base());
    if (static_cast<int>(x.carrier.size()) != L.size() || !is_filter(L, x.carrier))
        throw Error(ErrorKind::NotAFilter, "not a filter of ZI: " + set_text(L, x.carrier));
    StalkCategory s;
    s.x = x;
    s.minimum = L.meet_of(x.carrier);
    s.rc = restrict(std::move(m), zi, s.minimum);
    return s;
}

Verdict verify_stalk_colimit(const MonoidalTable& m, const ZILattice& zi, const StalkCategory& s) {
    const CategoryTable& c = m.base();
    const LatticeModel L = lattice_of(zi, c);
    const std::vector<int> members = s.x.members();
    const int mn = s.minimum;
    // the independent cocone lands in C|w for the least class w ≤ m
    const int w = L.bottom();
    struct Germ {
        int v;
        Mor f;
        Mor real;
    };
    std::size_t germs = 0, pairs = 0;
    for (Obj a = 0; a < c.num_objects(); ++a)
        for (Obj b = 0; b < c.num_objects(); ++b) {
            std::vector<Germ> gs;
            for (int v : members)
                for (Mor f : c.hom(m.tensor(a, zi.classes[v].U), b))
                    gs.push_back({v, f, restrict_morphism(m, zi, a, f, mn, v)});
            std::set<Mor> hit;
            for (const auto& g : gs) hit.insert(g.real);
            if (hit.size() != c.hom(m.tensor(a, zi.classes[mn].U), b).size())
                return Verdict::fail("cocone is not jointly surjective at (" + c.object_name(a) + ", " +
                                     c.object_name(b) + ")");
            for (const auto& g : gs) {
                const Mor via_min = restrict_morphism(m, zi, a, g.real, w, mn);
                const Mor direct = restrict_morphism(m, zi, a, g.f, w, g.v);
                if (via_min != direct)
                    return Verdict::fail("mediation into C|" + c.object_name(zi.classes[w].U) + " fails for " +
                                         c.morphism_name(g.f));
            }
            for (const auto& g : gs)
                for (const auto& h : gs) {
                    bool related = false;
                    for (int u : members) {
                        if (!zi.leq(u, g.v) || !zi.leq(u, h.v)) continue;
                        if (restrict_morphism(m, zi, a, g.f, u, g.v) == restrict_morphism(m, zi, a, h.f, u, h.v)) {
                            related = true;
                            break;
                        }
                    }
                    if (related != (g.real == h.real))
                        return Verdict::fail("germ identification differs for " + c.morphism_name(g.f) + " and " +
                                             c.morphism_name(h.f));
                    ++pairs;
                }
            germs += gs.size();
        }
    return Verdict::pass(std::to_string(germs) + " germs, " + std::to_string(pairs) + " identifications checked");
}

Verdict check_zi_of_stalk(const MonoidalTable& m, const ZILattice& zi, const StalkCategory& s) {
    if (!m.has_symmetry()) throw Error(ErrorKind::NotSymmetric, "ZI of a stalk needs a symmetric base");
    const CategoryTable& c = m.base();
    const LatticeModel L = lattice_of(zi, c);
    const GermQuotient gq = germ_congruence(L, s.x);
    const ZILattice zs = central_idempotents(*s.rc.table);
    std::vector<int> image(zi.size());
    for (int k = 0; k < zi.size(); ++k) {
        const auto& r = zi.classes[k];
        const Mor d = s.rc.find(r.U, m.tensor_mor(r.u, s.rc.rec.u));
        image[k] = d == kNone ? -1 : classify(*s.rc.table, zs, r.U, d);
        if (image[k] < 0) return Verdict::fail(c.object_name(r.U) + " has no germ class in the stalk");
    }
    if (static_cast<int>(std::set<int>(image.begin(), image.end()).size()) != zs.size())
        return Verdict::fail("germ classes do not exhaust ZI of the stalk");
    for (int a = 0; a < zi.size(); ++a)
        for (int b = 0; b < zi.size(); ++b) {
            if ((image[a] == image[b]) != (gq.projection[a] == gq.projection[b]))
                return Verdict::fail("germ congruence differs on (" + L.name(a) + ", " + L.name(b) + ")");
            if (zs.leq(image[a], image[b]) != gq.quotient.leq(gq.projection[a], gq.projection[b]))
                return Verdict::fail("order differs on (" + L.name(a) + ", " + L.name(b) + ")");
        }
    return Verdict::pass(std::to_string(zs.size()) + " classes, isomorphic to the germ quotient");
}

bool is_vee_local(const LatticeModel& L) {
    if (L.size() < 2) return false;
    const int t = L.top();
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (L.join(a, b) == t && a != t && b != t) return false;
    return true;
}

bool is_bigvee_local(const LatticeModel& L) {
    if (L.size() < 2) return false;
    if (L.size() > 16) return is_vee_local(L);
    const int n = L.size(), t = L.top();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask >> t & 1) continue;
        Bits s(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.set(i);
        if (L.join_of(s) == t) return false;
    }
    return true;
}

Verdict check_sheaf_equalizer(const MonoidalTable& m, const ZILattice& zi, int u, int v) {
    if (!zi.joins) throw Error(ErrorKind::HypothesisNotMet, "universal finite joins have not been established");
    const CategoryTable& c = m.base();
    const int w = zi.join(u, v), k = zi.meet(u, v);
    const Obj U = zi.classes[u].U, V = zi.classes[v].U, W = zi.classes[w].U;
    std::size_t matching = 0;
    for (Obj a = 0; a < c.num_objects(); ++a) {
        const Mor mu = m.left(a, zi.mediator(u, w)), mv = m.left(a, zi.mediator(v, w));
        for (Obj b = 0; b < c.num_objects(); ++b) {
            std::map<std::pair<Mor, Mor>, int> glued;
            for (Mor h : c.hom(m.tensor(a, W), b)) ++glued[{c.compose(h, mu), c.compose(h, mv)}];
            for (Mor f : c.hom(m.tensor(a, U), b))
                for (Mor g : c.hom(m.tensor(a, V), b)) {
                    if (restrict_morphism(m, zi, a, f, k, u) != restrict_morphism(m, zi, a, g, k, v)) continue;
                    ++matching;
                    auto it = glued.find({f, g});
                    const int cnt = it == glued.end() ? 0 : it->second;
                    if (cnt != 1)
                        return Verdict::fail("matching pair (" + c.morphism_name(f) + ", " + c.morphism_name(g) +
                                             ") at (" + c.object_name(a) + ", " + c.object_name(b) + ") has " +
                                             std::to_string(cnt) + " gluings");
                }
        }
    }
    return Verdict::pass(std::to_string(matching) + " matching pairs glue uniquely");
}

Verdict check_zero_section(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi) {
    if (!zi.bottom) throw Error(ErrorKind::HypothesisNotMet, "no absorbing initial object has been established");
    const RestrictionCategory rc = restrict(m, zi, *zi.bottom);
    const CategoryTable& t = rc.table->base();
    for (Obj a = 0; a < t.num_objects(); ++a)
        if (!is_initial(t, a) || !is_terminal(t, a))
            return Verdict::fail(t.object_name(a) + " is not a zero object of C|0");
    return Verdict::pass("all " + std::to_string(t.num_objects()) + " objects of C|0 are isomorphic");
}

namespace {

bool all_epis_split(const CategoryTable& c) {
    for (Mor f = 0; f < c.num_morphisms(); ++f)
        if (is_epi(c, f) && !is_split_epi(c, f)) return false;
    return true;
}

}  // namespace

Verdict check_stalk_inherits(const MonoidalTable& m, const StalkCategory& s, std::uint64_t halfbraiding_budget) {
    const MonoidalTable& t = *s.rc.table;
    ZILattice zs = central_idempotents(t, {halfbraiding_budget, 1});
    const Verdict st = is_stiff(t, zs);
    if (!st.passed()) return Verdict::fail("stalk is not stiff: " + st.witness);
    const Verdict fj = has_universal_finite_joins(t, zs);
    if (!fj.passed()) return Verdict::fail("stalk lacks universal finite joins: " + fj.witness);
    Verdict v = Verdict::pass("stiff with universal finite joins");
    if (all_epis_split(m.base())) {
        if (!all_epis_split(t.base())) return Verdict::fail("an epimorphism of the stalk does not split");
        v.note("all epimorphisms split in the base and in the stalk");
    }
    return v;
}

ProductEmbedding embed_into_product_of_stalks(const MonoidalTable& m, const std::vector<StalkCategory>& stalks) {
    const CategoryTable& c = m.base();
    ProductEmbedding out;
    for (const auto& s : stalks) {
        std::vector<Mor> comp(c.num_morphisms());
        for (Mor f = 0; f < c.num_morphisms(); ++f)
            comp[f] = s.rc.find(c.src(f), c.compose(f, m.left(c.src(f), s.rc.rec.u)));
        const CategoryTable& t = s.rc.table->base();
        const MonoidalTable& tm = *s.rc.table;
        for (Obj a = 0; a < c.num_objects(); ++a)
            if (comp[c.identity(a)] != t.identity(a)) {
                out.verdict = Verdict::fail("identity of " + c.object_name(a) + " not preserved");
                return out;
            }
        for (Mor f = 0; f < c.num_morphisms(); ++f) {
            for (Mor g : c.out(c.dst(f)))
                if (comp[c.compose(g, f)] != t.compose(comp[g], comp[f])) {
                    out.verdict = Verdict::fail("composition not preserved at " + c.morphism_name(g) + " ∘ " +
                                                c.morphism_name(f));
                    return out;
                }
            for (Mor g = 0; g < c.num_morphisms(); ++g)
                if (comp[m.tensor_mor(f, g)] != tm.tensor_mor(comp[f], comp[g])) {
                    out.verdict = Verdict::fail("tensor not preserved at " + c.morphism_name(f) + " ⊗ " +
                                                c.morphism_name(g));
                    return out;
                }
        }
        out.components.push_back(std::move(comp));
    }
    std::size_t pairs = 0;
    for (Obj a = 0; a < c.num_objects(); ++a)
        for (Obj b = 0; b < c.num_objects(); ++b) {
            const auto& hs = c.hom(a, b);
            for (std::size_t i = 0; i < hs.size(); ++i)
                for (std::size_t j = i + 1; j < hs.size(); ++j) {
                    ++pairs;
                    bool separated = false;
                    for (const auto& comp : out.components) separated = separated || comp[hs[i]] != comp[hs[j]];
                    if (!separated) {
                        out.verdict = Verdict::fail(c.morphism_name(hs[i]) + " and " + c.morphism_name(hs[j]) +
                                                    " agree in every stalk");
                        return out;
                    }
                }
        }
    out.verdict = Verdict::pass("identity on objects, faithful over " + std::to_string(stalks.size()) + " stalks; " +
                                std::to_string(pairs) + " parallel pairs separated");
    return out;
}

const Verdict* SheafReport::verdict(const std::string& name) const {
    for (const auto& [k, v] : verdicts)
        if (k == name) return &v;
    return nullptr;
}

bool SheafReport::all_pass() const {
    return std::none_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.failed(); });
}

namespace {

Verdict guarded(const std::function<Verdict()>& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return Verdict::fail(e.what());
    }
}

Verdict first_failure(const std::vector<Verdict>& vs, const std::string& ok) {
    for (const auto& v : vs)
        if (!v.passed()) return v;
    return Verdict::pass(ok);
}

Verdict global_sections_equal(const MonoidalTable& m, const RestrictionCategory& rc) {
    const CategoryTable& c = m.base();
    const CategoryTable& t = rc.table->base();
    if (t.num_objects() != c.num_objects() || t.num_morphisms() != c.num_morphisms())
        return Verdict::fail("C|1 and C differ in size");
    std::vector<Mor> to(c.num_morphisms());
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        to[f] = rc.find(c.src(f), f);
        if (to[f] == kNone || t.morphism_name(to[f]) != c.morphism_name(f) || t.src(to[f]) != c.src(f) ||
            t.dst(to[f]) != c.dst(f))
            return Verdict::fail("morphism " + c.morphism_name(f) + " differs in C|1");
    }
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        for (Mor g : c.out(c.dst(f)))
            if (to[c.compose(g, f)] != t.compose(to[g], to[f]))
                return Verdict::fail("composition differs at " + c.morphism_name(g) + " ∘ " + c.morphism_name(f));
        for (Mor g = 0; g < c.num_morphisms(); ++g)
            if (to[m.tensor_mor(f, g)] != rc.table->tensor_mor(to[f], to[g]))
                return Verdict::fail("tensor differs at " + c.morphism_name(f) + " ⊗ " + c.morphism_name(g));
    }
    if (m.has_symmetry())
        for (Obj a = 0; a < c.num_objects(); ++a)
            for (Obj b = 0; b < c.num_objects(); ++b)
                if (to[m.symmetry(a, b)] != rc.table->symmetry(a, b)) return Verdict::fail("symmetry differs");
    return Verdict::pass("C|1 equals C on the nose (" + std::to_string(c.num_morphisms()) + " morphisms)");
}

}  // namespace

SheafReport represent(std::shared_ptr<const MonoidalTable> mp, const RepresentConfig& cfg) {
    const MonoidalTable& m = *mp;
    const CategoryTable& c = m.base();
    SheafReport R;
    auto add = [&](const std::string& name, Verdict v) { R.verdicts.emplace_back(name, std::move(v)); };
    const auto hypothesis_unmet = [](const std::string& which) {
        return Verdict::skipped("hypothesis unmet: " + which + " failed");
    };

    try {
        R.zi = central_idempotents(m, {cfg.halfbraiding_budget, cfg.jobs});
    } catch (const std::exception& e) {
        add("zi", Verdict::fail(e.what()));
        return R;
    }
    const Verdict stiff = guarded([&] { return is_stiff(m, R.zi, cfg.jobs); });
    add("stiff", stiff);
    Verdict fj = guarded([&] { return has_universal_finite_joins(m, R.zi, cfg.jobs); });
    if (!fj.passed()) fj.witness = "universal finite joins hypothesis unmet: " + fj.witness;
    add("universal_finite_joins", fj);
    const Verdict uj = fj.passed() ? guarded([&] { return has_universal_joins(m, R.zi, cfg.family_budget); })
                                   : hypothesis_unmet("universal_finite_joins");
    add("universal_joins", uj);
    const bool joins_ok = stiff.passed() && fj.passed() && uj.passed();
    const std::string blocker = !stiff.passed() ? "stiff" : !fj.passed() ? "universal_finite_joins" : "universal_joins";

    bool lattice_ok = true;
    try {
        R.lattice = lattice_of(R.zi, c);
    } catch (const std::exception&) {
        lattice_ok = false;
    }

    if (joins_ok && lattice_ok) {
        add("spectrum", guarded([&] {
                R.space = spectrum(R.lattice, false);
                const auto cp = enumerate_completely_prime_filters(R.lattice);
                if (cp.size() != R.space.points.size())
                    return Verdict::fail("completely prime and prime spectra differ in size");
                for (std::size_t i = 0; i < cp.size(); ++i)
                    if (cp[i].carrier != R.space.points[i].carrier)
                        return Verdict::fail("completely prime and prime spectra differ");
                return Verdict::pass(std::to_string(R.space.points.size()) +
                                     " points; completely prime filters coincide with prime filters");
            }));
        add("basis_compact", guarded([&] { return check_basis_compact(R.space); }));
        add("spatial", guarded([&] { return is_spatial(R.lattice).verdict; }));
    } else {
        for (const char* k : {"spectrum", "basis_compact", "spatial"}) add(k, hypothesis_unmet(blocker));
    }

    // sections over basic opens, one restriction category per class
    const int s = R.zi.size();
    R.sections.resize(s);
    std::vector<Verdict> sec(s), adj(s), zir(s);
    parallel_for(s, cfg.jobs, [&](int u) {
        sec[u] = guarded([&] {
            R.sections[u] = restrict(mp, R.zi, u);
            const auto& t = *R.sections[u].table;
            const auto vr = validate_monoidal(t);
            if (!vr.ok()) return Verdict::fail("C|" + c.object_name(R.zi.classes[u].U) + ": " + vr.violations.front());
            const Obj U = R.zi.classes[u].U;
            for (Obj a = 0; a < c.num_objects(); ++a)
                for (Obj b = 0; b < c.num_objects(); ++b)
                    if (t.base().hom(a, b).size() != c.hom(m.tensor(a, U), b).size())
                        return Verdict::fail("hom size mismatch in C|" + c.object_name(U));
            return Verdict::pass();
        });
    });
    if (joins_ok) {
        add("sections", guarded([&] {
                for (const auto& v : sec)
                    if (!v.passed()) return v;
                // presheaf laws on every chain u ≤ v ≤ w
                std::size_t chains = 0;
                for (int w = 0; w < s; ++w)
                    for (int v = 0; v < s; ++v) {
                        if (!R.zi.leq(v, w)) continue;
                        for (int u = 0; u < s; ++u) {
                            if (!R.zi.leq(u, v)) continue;
                            ++chains;
                            const auto& rw = R.sections[w];
                            for (Mor d = 0; d < rw.table->num_morphisms(); ++d) {
                                const Obj a = rw.source[d];
                                const Mor f = rw.base_mor[d];
                                const Mor two = restrict_morphism(m, R.zi, a, restrict_morphism(m, R.zi, a, f, v, w), u, v);
                                if (two != restrict_morphism(m, R.zi, a, f, u, w))
                                    return Verdict::fail("presheaf law fails on a chain below " +
                                                         c.object_name(R.zi.classes[w].U));
                            }
                            if (u == v && v == w) {
                                const auto F = restriction_functor(rw, rw, R.zi);
                                for (Mor d = 0; d < rw.table->num_morphisms(); ++d)
                                    if (F.functor.mor_map[d] != d) return Verdict::fail("F(u≤u) is not the identity");
                            }
                        }
                    }
                return Verdict::pass(std::to_string(s) + " sections validated; presheaf laws on " +
                                     std::to_string(chains) + " chains");
            }));
        parallel_for(s, cfg.jobs, [&](int u) {
            adj[u] = guarded([&] {
                for (int v = 0; v < s; ++v)
                    if (R.zi.leq(u, v)) {
                        const auto L = left_adjoint_functor(R.sections[u], R.sections[v], R.zi);
                        if (!L.verdict.passed()) return L.verdict;
                    }
                return Verdict::pass();
            });
            zir[u] = guarded([&] { return check_zi_of_restriction(m, R.zi, R.sections[u]); });
        });
        add("left_adjoints", first_failure(adj, "every u ≤ v has a left adjoint with invertible unit"));
    } else {
        add("sections", hypothesis_unmet(blocker));
        add("left_adjoints", hypothesis_unmet(blocker));
    }

    if (joins_ok && lattice_ok) {
        const int np = static_cast<int>(R.space.points.size());
        R.stalks.resize(np);
        R.stalk_summaries.resize(np);
        std::vector<Verdict> col(np), loc(np), zis(np), inh(np);
        parallel_for(np, cfg.jobs, [&](int p) {
            const Verdict built = guarded([&] {
                R.stalks[p] = stalk(mp, R.zi, R.space.points[p]);
                return Verdict::pass();
            });
            if (!built.passed()) {
                col[p] = loc[p] = zis[p] = inh[p] = built;
                return;
            }
            const auto& st = R.stalks[p];
            col[p] = guarded([&] { return verify_stalk_colimit(m, R.zi, st); });
            loc[p] = guarded([&] {
                const ZILattice zs = central_idempotents(*st.rc.table, {cfg.halfbraiding_budget, 1});
                const LatticeModel Ls = lattice_of(zs, st.rc.table->base());
                auto& sum = R.stalk_summaries[p];
                sum.point = st.x.members();
                sum.minimum = st.minimum;
                sum.zi_size = zs.size();
                sum.vee_local = is_vee_local(Ls);
                sum.bigvee_local = is_bigvee_local(Ls);
                sum.two_valued = zs.size() == 2;
                if (!sum.vee_local || !sum.bigvee_local)
                    return Verdict::fail("stalk at " + set_text(R.lattice, st.x.carrier) + " is not local");
                return Verdict::pass();
            });
            zis[p] = m.has_symmetry() ? guarded([&] { return check_zi_of_stalk(m, R.zi, st); })
                                      : Verdict::skipped("base has no symmetry");
            inh[p] = guarded([&] { return check_stalk_inherits(m, st, cfg.halfbraiding_budget); });
        });
        const std::string pts = std::to_string(np) + " stalks";
        add("stalk_colimit", first_failure(col, pts + " match their germ description"));
        add("stalk_locality", first_failure(loc, pts + " are ∨-local and ⋁-local"));
        add("zi_of_restriction", first_failure(zir, "ZI(C|u) ≅ ↓u for all " + std::to_string(s) + " classes"));
        if (m.has_symmetry())
            add("zi_of_stalk", first_failure(zis, "ZI of each stalk is the germ quotient"));
        else
            add("zi_of_stalk", Verdict::skipped("base has no symmetry"));
        add("stalk_inherits", first_failure(inh, pts + " are stiff with universal finite joins"));
        add("sheaf_equalizer", guarded([&] {
                int pairs = 0;
                for (int u = 0; u < s; ++u)
                    for (int v = u; v < s; ++v) {
                        const Verdict e = check_sheaf_equalizer(m, R.zi, u, v);
                        if (!e.passed())
                            return Verdict::fail("(" + c.object_name(R.zi.classes[u].U) + ", " +
                                                 c.object_name(R.zi.classes[v].U) + "): " + e.witness);
                        ++pairs;
                    }
                return Verdict::pass(std::to_string(pairs) + " pairs are equalizers");
            }));
        const Verdict z = guarded([&] { return check_zero_section(mp, R.zi); });
        R.zero_section_terminal = z.passed();
        add("zero_section", z);
    } else {
        for (const char* k : {"stalk_colimit", "stalk_locality", "zi_of_restriction", "zi_of_stalk", "stalk_inherits",
                              "sheaf_equalizer", "zero_section"})
            add(k, hypothesis_unmet(blocker));
    }

    add("global_sections", guarded([&] {
            if (R.zi.top < 0) return Verdict::fail("no top class");
            const RestrictionCategory& top =
                R.sections[R.zi.top].table ? R.sections[R.zi.top] : (R.sections[R.zi.top] = restrict(mp, R.zi, R.zi.top));
            R.global_sections_count = top.table->num_objects();
            return global_sections_equal(m, top);
        }));

    if (joins_ok && lattice_ok) {
        add("stone_round_trip", guarded([&] {
                if (!R.lattice.is_boolean()) return Verdict::skipped("ZI is not Boolean");
                const int np = static_cast<int>(R.space.points.size());
                std::set<Bits> opens(R.space.opens.begin(), R.space.opens.end());
                int clopens = 0;
                for (const auto& o : R.space.opens) {
                    Bits comp = o;
                    comp.flip();
                    if (opens.count(comp)) ++clopens;
                }
                for (const auto& b : R.space.basis) {
                    Bits comp = b;
                    comp.flip();
                    if (!opens.count(comp)) return Verdict::fail("a basic open is not clopen");
                }
                if (clopens != R.lattice.size())
                    return Verdict::fail(std::to_string(clopens) + " clopens but ZI has " +
                                         std::to_string(R.lattice.size()) + " classes");
                return Verdict::pass(std::to_string(clopens) + " maps from " + std::to_string(np) +
                                     " points to the discrete 2-point space; " +
                                     std::to_string(R.global_sections_count) + " global sections");
            }));
        add("product_embedding", guarded([&] {
                for (const auto& st : R.stalks)
                    if (!st.rc.table) return Verdict::fail("a stalk could not be built");
                return embed_into_product_of_stalks(m, R.stalks).verdict;
            }));
    } else {
        add("stone_round_trip", hypothesis_unmet(blocker));
        add("product_embedding", hypothesis_unmet(blocker));
    }
    return R;
}

}  // namespace tensortopo
