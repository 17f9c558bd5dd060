#include "tensortopo/completion.hpp"

#include <algorithm>
#include <set>

namespace tensortopo {

namespace {

std::vector<int> members_of(const Bits& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

Bits down_closure(const ZILattice& zi, const Bits& s) {
    Bits out(zi.size());
    for (int a = 0; a < zi.size(); ++a)
        for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
            if (zi.leq(a, static_cast<int>(i))) out.set(a);
    return out;
}

std::string downset_text(const ZILattice& zi, const CategoryTable& c, const Bits& d) {
    const auto names = zi.names(c);
    std::string s = "{";
    bool first = true;
    for (int i : members_of(d)) {
        s += (first ? "" : ",") + names[i];
        first = false;
    }
    return s + "}";
}

}  // namespace

std::vector<Bits> enumerate_downsets(const ZILattice& zi, bool finitary) {
    const int s = zi.size();
    if (s > 24) throw Error(ErrorKind::BudgetExceeded, "too many classes to enumerate downsets");
    std::set<std::pair<std::size_t, std::vector<int>>> seen;
    std::vector<Bits> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        Bits b(s);
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1) b.set(i);
        if (finitary) {
            b = down_closure(zi, b);
        } else if (down_closure(zi, b) != b) {
            continue;
        }
        auto key = std::make_pair(b.count(), members_of(b));
        if (seen.insert(key).second) out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) {
        return std::make_pair(x.count(), members_of(x)) < std::make_pair(y.count(), members_of(y));
    });
    return out;
}

LatticeModel downset_lattice(const ZILattice& zi) {
    const auto ds = enumerate_downsets(zi);
    std::vector<std::string> names;
    for (const auto& d : ds) {
        std::string s = "{";
        bool first = true;
        for (int i : members_of(d)) {
            s += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
        names.push_back(s + "}");
    }
    std::vector<std::vector<bool>> leq(ds.size(), std::vector<bool>(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = 0; j < ds.size(); ++j) leq[i][j] = ds[i].is_subset_of(ds[j]);
    return LatticeModel(names, leq);
}

std::optional<Mor> restricts_to(const MonoidalTable& m, Mor f, const CentralIdempotentRecord& u) {
    const CategoryTable& c = m.base();
    const Obj b = c.dst(f);
    const Mor bu = m.left(b, u.u);
    for (Mor g : c.hom(c.src(f), m.tensor(b, u.U)))
        if (c.compose(bu, g) == f) return g;
    return std::nullopt;
}

Mor Completion::find(Obj src, Obj dst, const std::vector<Mor>& family) const {
    auto it = index.find({src, dst});
    if (it == index.end()) return kNone;
    auto jt = it->second.find(family);
    return jt == it->second.end() ? kNone : jt->second;
}

Completion build_completion(std::shared_ptr<const MonoidalTable> mp, const ZILattice& zi, const CompletionConfig& cfg) {
    const MonoidalTable& m = *mp;
    const CategoryTable& c = m.base();
    if (!is_stiff(m, zi).passed()) throw Error(ErrorKind::NotStiff, "the completion needs a stiff category");
    Completion D;
    D.base = mp;
    D.zi = zi;
    D.downsets = enumerate_downsets(zi, cfg.finitary);
    const int n = c.num_objects(), s = zi.size(), nd = static_cast<int>(D.downsets.size());
    const int K = nd * n;

    std::vector<int> below(s, 0);
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) below[a] += zi.leq(b, a);
    std::vector<std::vector<int>> desc(nd), asc(nd);
    for (int d = 0; d < nd; ++d) {
        desc[d] = members_of(D.downsets[d]);
        std::stable_sort(desc[d].begin(), desc[d].end(), [&](int x, int y) { return below[x] > below[y]; });
        asc[d] = desc[d];
        std::reverse(asc[d].begin(), asc[d].end());
        std::stable_sort(asc[d].begin(), asc[d].end(), [&](int x, int y) {
            return below[x] != below[y] ? below[x] < below[y] : x < y;
        });
    }

    // restricts[e][f]: does f restrict to some class in downset e
    std::vector<std::vector<signed char>> restricts(nd, std::vector<signed char>(c.num_morphisms(), -1));
    auto restricts_into = [&](int e, Mor f) {
        auto& r = restricts[e][f];
        if (r < 0) {
            r = 0;
            for (int v : asc[e])
                if (restricts_to(m, f, zi.classes[v])) {
                    r = 1;
                    break;
                }
        }
        return r == 1;
    };

    std::vector<std::vector<std::vector<std::vector<Mor>>>> homs(K, std::vector<std::vector<std::vector<Mor>>>(K));
    std::uint64_t total = 0;
    for (Obj X = 0; X < K; ++X)
        for (Obj Y = 0; Y < K; ++Y) {
            const int d = X / n, e = Y / n;
            const Obj a = X % n, b = Y % n;
            std::vector<Mor> fam(s, kNone);
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == desc[d].size()) {
                    homs[X][Y].push_back(fam);
                    if (++total > cfg.morphism_budget)
                        throw Error(ErrorKind::BudgetExceeded, "completion exceeds " +
                                                                   std::to_string(cfg.morphism_budget) + " morphisms");
                    return;
                }
                const int u = desc[d][i];
                const Obj aU = m.tensor(a, zi.classes[u].U);
                Mor forced = kNone;
                bool consistent = true;
                for (std::size_t j = 0; j < i && consistent; ++j) {
                    const int w = desc[d][j];
                    if (!zi.leq(u, w) || u == w) continue;
                    const Mor via = c.compose(fam[w], m.left(a, zi.mediator(u, w)));
                    if (forced == kNone)
                        forced = via;
                    else if (via != forced)
                        consistent = false;
                }
                if (!consistent) return;
                auto try_one = [&](Mor f) {
                    if (!restricts_into(e, f)) return;
                    fam[u] = f;
                    self(self, i + 1);
                    fam[u] = kNone;
                };
                if (forced != kNone)
                    try_one(forced);
                else
                    for (Mor f : c.hom(aU, b)) try_one(f);
            };
            rec(rec, 0);
        }

    auto obj_name = [&](Obj X) {
        return "<" + downset_text(zi, c, D.downsets[X / n]) + "," + c.object_name(X % n) + ">";
    };
    CategoryTable t;
    for (Obj X = 0; X < K; ++X) t.add_object(obj_name(X));
    std::vector<Mor> ident(K, kNone);
    for (Obj X = 0; X < K; ++X) {
        const Obj a = X % n;
        std::vector<Mor> idf(s, kNone);
        for (int u : desc[X / n]) idf[u] = m.left(a, zi.classes[u].u);
        for (Obj Y = 0; Y < K; ++Y) {
            const auto& hs = homs[X][Y];
            for (std::size_t k = 0; k < hs.size(); ++k) {
                std::string name;
                if (X == Y && hs[k] == idf)
                    name = "id_" + obj_name(X);
                else
                    name = obj_name(X) + "->" + obj_name(Y) + (hs.size() > 1 ? "#" + std::to_string(k) : "");
                const Mor id = t.add_morphism(std::move(name), X, Y);
                D.families.push_back(hs[k]);
                D.index[{X, Y}][hs[k]] = id;
                if (X == Y && hs[k] == idf) ident[X] = id;
            }
        }
        if (ident[X] == kNone) throw Error(ErrorKind::MalformedTable, "identity family missing at " + obj_name(X));
        t.set_identity(X, ident[X]);
    }

    const int M = t.num_morphisms();
    auto lookup = [&](Obj X, Obj Y, const std::vector<Mor>& fam, const char* what) {
        const Mor r = D.find(X, Y, fam);
        if (r == kNone)
            throw Error(ErrorKind::MalformedTable, std::string(what) + " leaves the completion at " + obj_name(X) +
                                                       " -> " + obj_name(Y));
        return r;
    };
    for (Mor eta = 0; eta < M; ++eta) {
        const Obj X = t.src(eta), Y = t.dst(eta);
        const Obj b = Y % n;
        const int e = Y / n;
        // ≤-least v with a witness, and the first witness
        std::vector<std::pair<int, Mor>> wit(s, {-1, kNone});
        for (int u : desc[X / n])
            for (int v : asc[e])
                if (auto g = restricts_to(m, D.families[eta][u], zi.classes[v])) {
                    wit[u] = {v, *g};
                    break;
                }
        for (Mor zeta : t.out(Y)) {
            std::vector<Mor> fam(s, kNone);
            for (int u : desc[X / n]) fam[u] = c.compose(D.families[zeta][wit[u].first], wit[u].second);
            (void)b;
            t.set_compose(zeta, eta, lookup(X, t.dst(zeta), fam, "composite"));
        }
    }

    std::vector<int> meet_ds(static_cast<std::size_t>(nd) * nd);
    for (int d1 = 0; d1 < nd; ++d1)
        for (int d2 = 0; d2 < nd; ++d2) {
            const Bits x = D.downsets[d1] & D.downsets[d2];
            meet_ds[static_cast<std::size_t>(d1) * nd + d2] =
                static_cast<int>(std::find(D.downsets.begin(), D.downsets.end(), x) - D.downsets.begin());
        }
    std::vector<Obj> tobj(static_cast<std::size_t>(K) * K);
    for (Obj X = 0; X < K; ++X)
        for (Obj Y = 0; Y < K; ++Y)
            tobj[static_cast<std::size_t>(X) * K + Y] =
                meet_ds[static_cast<std::size_t>(X / n) * nd + Y / n] * n + m.tensor(X % n, Y % n);

    // mid[u][a][x] = (A ⊗ χ_X ⊗ U) ∘ (A ⊗ X ⊗ δ)
    std::vector<std::vector<Mor>> mid(s, std::vector<Mor>(static_cast<std::size_t>(n) * n));
    for (int u = 0; u < s; ++u) {
        const auto& r = zi.classes[u];
        for (Obj x = 0; x < n; ++x) {
            const Mor chi = crossing(m, r, x);
            for (Obj a = 0; a < n; ++a)
                mid[u][static_cast<std::size_t>(a) * n + x] =
                    c.compose(m.right(m.left(a, chi), r.U), m.left(m.tensor(a, x), r.inverse));
        }
    }
    std::vector<Mor> tm(static_cast<std::size_t>(M) * M);
    for (Mor f = 0; f < M; ++f)
        for (Mor g = 0; g < M; ++g) {
            const Obj X1 = t.src(f), Y1 = t.dst(f), X2 = t.src(g), Y2 = t.dst(g);
            const Obj X = tobj[static_cast<std::size_t>(X1) * K + X2], Y = tobj[static_cast<std::size_t>(Y1) * K + Y2];
            std::vector<Mor> fam(s, kNone);
            for (int u : desc[X / n])
                fam[u] = c.compose(m.tensor_mor(D.families[f][u], D.families[g][u]),
                                   mid[u][static_cast<std::size_t>(X1 % n) * n + X2 % n]);
            tm[static_cast<std::size_t>(f) * M + g] = lookup(X, Y, fam, "tensor");
        }
    std::optional<std::vector<Mor>> sym;
    if (m.has_symmetry()) {
        sym.emplace(static_cast<std::size_t>(K) * K);
        for (Obj X = 0; X < K; ++X)
            for (Obj Y = 0; Y < K; ++Y) {
                const Obj XY = tobj[static_cast<std::size_t>(X) * K + Y], YX = tobj[static_cast<std::size_t>(Y) * K + X];
                const Obj ab = m.tensor(X % n, Y % n);
                std::vector<Mor> fam(s, kNone);
                for (int u : desc[XY / n])
                    fam[u] = c.compose(m.symmetry(X % n, Y % n), m.left(ab, zi.classes[u].u));
                (*sym)[static_cast<std::size_t>(X) * K + Y] = lookup(XY, YX, fam, "symmetry");
            }
    }
    D.table = std::make_shared<const MonoidalTable>(std::move(t), D.object(nd - 1, m.unit()), std::move(tobj),
                                                    std::move(tm), std::move(sym));
    return D;
}

std::vector<Mor> composite_candidates(const Completion& D, Mor zeta, Mor eta, int u) {
    const MonoidalTable& m = *D.base;
    const CategoryTable& c = m.base();
    const CategoryTable& t = D.table->base();
    const Mor f = D.families[eta][u];
    std::vector<Mor> out;
    if (f == kNone) return out;
    const Obj b = D.base_object_of(t.dst(eta));
    for (int v : members_of(D.downsets[D.downset_of(t.dst(eta))])) {
        const auto& r = D.zi.classes[v];
        const Mor bv = m.left(b, r.u);
        for (Mor g : c.hom(c.src(f), m.tensor(b, r.U)))
            if (c.compose(bv, g) == f) out.push_back(c.compose(D.families[zeta][v], g));
    }
    return out;
}

Embedding embed(const Completion& D) {
    const MonoidalTable& m = *D.base;
    const CategoryTable& c = m.base();
    const CategoryTable& t = D.table->base();
    const int n = c.num_objects(), s = D.zi.size(), full = D.full_downset();
    Embedding E;
    auto& F = E.functor;
    F.source = D.base;
    F.target = D.table;
    F.functor.source = std::shared_ptr<const CategoryTable>(D.base, &D.base->base());
    F.functor.target = std::shared_ptr<const CategoryTable>(D.table, &D.table->base());
    for (Obj a = 0; a < n; ++a) F.functor.obj_map.push_back(D.object(full, a));
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        std::vector<Mor> fam(s);
        for (int u = 0; u < s; ++u) fam[u] = m.tensor_mor(f, D.zi.classes[u].u);
        F.functor.mor_map.push_back(D.find(D.object(full, c.src(f)), D.object(full, c.dst(f)), fam));
    }
    F.theta_unit = t.identity(D.table->unit());
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) F.theta.push_back(t.identity(D.object(full, m.tensor(a, b))));

    for (Mor f = 0; f < c.num_morphisms(); ++f)
        if (F.functor.mor_map[f] == kNone) {
            E.verdict = Verdict::fail("image of " + c.morphism_name(f) + " is not a morphism of the completion");
            return E;
        }
    const auto vr = validate_monoidal_functor(F);
    if (!vr.ok()) {
        E.verdict = Verdict::fail(vr.violations.front());
        return E;
    }
    std::set<Mor> image(F.functor.mor_map.begin(), F.functor.mor_map.end());
    if (static_cast<int>(image.size()) != c.num_morphisms()) {
        E.verdict = Verdict::fail("not faithful");
        return E;
    }
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            if (t.hom(D.object(full, a), D.object(full, b)).size() != c.hom(a, b).size()) {
                E.verdict = Verdict::fail("not full at (" + c.object_name(a) + ", " + c.object_name(b) + ")");
                return E;
            }
            if (D.table->tensor(F.functor.obj_map[a], F.functor.obj_map[b]) != F.functor.obj_map[m.tensor(a, b)]) {
                E.verdict = Verdict::fail("tensor of objects not preserved");
                return E;
            }
        }
    for (Mor f = 0; f < c.num_morphisms(); ++f)
        for (Mor g = 0; g < c.num_morphisms(); ++g)
            if (F.functor.mor_map[m.tensor_mor(f, g)] !=
                D.table->tensor_mor(F.functor.mor_map[f], F.functor.mor_map[g])) {
                E.verdict = Verdict::fail("tensor of morphisms not preserved");
                return E;
            }
    E.verdict = Verdict::pass("injective on objects, full, faithful, strict monoidal");
    return E;
}

Verdict check_zi_completion(const Completion& D, std::uint64_t halfbraiding_budget) {
    const MonoidalTable& m = *D.base;
    const int s = D.zi.size(), nd = static_cast<int>(D.downsets.size());
    ZILattice zd;
    try {
        zd = central_idempotents(*D.table, {halfbraiding_budget, 1});
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SearchBudgetExceeded) throw Error(ErrorKind::BudgetExceeded, e.what());
        throw;
    }
    const Obj I = m.unit(), top = D.object(D.full_downset(), I);
    std::vector<int> image(nd);
    for (int d = 0; d < nd; ++d) {
        std::vector<Mor> fam(s, kNone);
        for (int u : members_of(D.downsets[d])) fam[u] = D.zi.classes[u].u;
        const Mor w = D.find(D.object(d, I), top, fam);
        image[d] = w == kNone ? -1 : classify(*D.table, zd, D.object(d, I), w);
        if (image[d] < 0) return Verdict::fail("<D,I> is not central for D = " + std::to_string(d));
    }
    if (static_cast<int>(std::set<int>(image.begin(), image.end()).size()) != nd || zd.size() != nd)
        return Verdict::fail("ZI(D[C]) has " + std::to_string(zd.size()) + " classes, " + std::to_string(nd) +
                             " downsets");
    for (int a = 0; a < nd; ++a)
        for (int b = 0; b < nd; ++b)
            if (zd.leq(image[a], image[b]) != D.downsets[a].is_subset_of(D.downsets[b]))
                return Verdict::fail("order differs from inclusion of downsets");
    return Verdict::pass(std::to_string(nd) + " classes, isomorphic to the downset lattice");
}

Verdict check_completion_joins(const Completion& D, std::uint64_t family_budget) {
    const MonoidalTable& t = *D.table;
    const CategoryTable& ct = t.base();
    ZILattice zd = central_idempotents(t);
    const Verdict fj = has_universal_finite_joins(t, zd);
    if (!fj.passed()) return Verdict::fail("universal finite joins: " + fj.witness);
    const Verdict uj = has_universal_joins(t, zd, family_budget);
    if (!uj.passed()) return Verdict::fail("universal joins: " + uj.witness);
    const int n = D.base_objects(), nd = static_cast<int>(D.downsets.size()), s = D.zi.size();
    auto idx = [&](const Bits& b) {
        return static_cast<int>(std::find(D.downsets.begin(), D.downsets.end(), b) - D.downsets.begin());
    };
    auto inclusion = [&](int d, int e, Obj a) {
        std::vector<Mor> fam(s, kNone);
        for (int u : members_of(D.downsets[d])) fam[u] = D.base->left(a, D.zi.classes[u].u);
        return D.find(D.object(d, a), D.object(e, a), fam);
    };
    std::size_t cocones = 0;
    for (int d1 = 0; d1 < nd; ++d1)
        for (int d2 = d1; d2 < nd; ++d2) {
            const int lo = idx(D.downsets[d1] & D.downsets[d2]), hi = idx(D.downsets[d1] | D.downsets[d2]);
            for (Obj a = 0; a < n; ++a) {
                Diagram dg{{D.object(lo, a), D.object(d1, a), D.object(d2, a)},
                           {{0, 1, inclusion(lo, d1, a)}, {0, 2, inclusion(lo, d2, a)}}};
                std::vector<Mor> legs{inclusion(lo, hi, a), inclusion(d1, hi, a), inclusion(d2, hi, a)};
                for (Mor l : legs)
                    if (l == kNone) return Verdict::fail("an inclusion of downsets is not a morphism");
                if (auto bad = check_colimit(ct, dg, D.object(hi, a), legs))
                    return Verdict::fail("union cocone at " + ct.object_name(D.object(hi, a)) + ": " + *bad);
                ++cocones;
            }
        }
    Verdict v = Verdict::pass(std::to_string(zd.size()) + " classes with universal joins; " + std::to_string(cocones) +
                              " union cocones are colimits");
    for (const auto& note : uj.notes) v.note(note);
    return v;
}

Extension extend_functor(const MonoidalFunctorTable& F, const Completion& D, std::uint64_t search_budget) {
    const MonoidalTable& S = *D.base;
    const MonoidalTable& T = *F.target;
    const CategoryTable& cs = S.base();
    const CategoryTable& ct = T.base();
    const CategoryTable& cd = D.table->base();
    const int n = cs.num_objects(), s = D.zi.size(), nd = static_cast<int>(D.downsets.size());
    const int K = cd.num_objects();

    ZILattice zt = central_idempotents(T);
    ZIMap zm;
    try {
        zm = zi_map_of_functor(F, D.zi, zt);
    } catch (const Error& e) {
        throw Error(ErrorKind::HypothesisNotMet, std::string("F does not preserve central idempotents: ") + e.what());
    }
    if (!zm.verdict.passed())
        throw Error(ErrorKind::HypothesisNotMet, "F does not preserve central idempotents: " + zm.verdict.witness);
    const Verdict fj = has_universal_finite_joins(T, zt);
    if (!fj.passed()) throw Error(ErrorKind::HypothesisNotMet, "target lacks universal finite joins: " + fj.witness);
    const Verdict uj = has_universal_joins(T, zt);
    if (!uj.passed()) throw Error(ErrorKind::HypothesisNotMet, "target lacks universal joins: " + uj.witness);

    Extension X;
    for (int d = 0; d < nd; ++d) {
        int j = *zt.bottom;
        for (int u : members_of(D.downsets[d])) j = zt.join(j, zm.class_map[u]);
        X.join_class.push_back(j);
    }
    const Mor tu_inv = *inverse(ct, F.theta_unit);
    const auto& om = F.functor.obj_map;
    const auto& mm = F.functor.mor_map;
    // med[d][u] : F(U) → W_D
    std::vector<std::vector<Mor>> med(nd, std::vector<Mor>(s, kNone));
    for (int d = 0; d < nd; ++d) {
        const auto& w = zt.classes[X.join_class[d]];
        for (int u : members_of(D.downsets[d])) {
            const Mor fu = ct.compose(tu_inv, mm[D.zi.classes[u].u]);
            med[d][u] = mediating_morphism(T, om[D.zi.classes[u].U], fu, w.U, w.u);
            if (med[d][u] == kNone)
                throw Error(ErrorKind::HypothesisNotMet, "image of a class is not below the image join");
        }
    }
    auto& Fh = X.functor;
    Fh.source = std::shared_ptr<const CategoryTable>(D.table, &D.table->base());
    Fh.target = F.functor.target;
    for (Obj x = 0; x < K; ++x)
        Fh.obj_map.push_back(T.tensor(om[D.base_object_of(x)], zt.classes[X.join_class[D.downset_of(x)]].U));
    std::string undefined;
    for (Mor eta = 0; eta < cd.num_morphisms(); ++eta) {
        const Obj x = cd.src(eta), y = cd.dst(eta);
        const Obj a = D.base_object_of(x), b = D.base_object_of(y);
        const Mor wE = T.left(om[b], zt.classes[X.join_class[D.downset_of(y)]].u);
        std::vector<Mor> hits;
        for (Mor h : ct.hom(Fh.obj_map[x], Fh.obj_map[y])) {
            bool ok = true;
            for (int u : members_of(D.downsets[D.downset_of(x)])) {
                const Mor lhs = ct.chain({wE, h, T.left(om[a], med[D.downset_of(x)][u])});
                const Mor rhs = ct.compose(mm[D.families[eta][u]], F.theta_at(a, D.zi.classes[u].U));
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok) hits.push_back(h);
        }
        if (hits.size() != 1 && undefined.empty())
            undefined = cd.morphism_name(eta) + " has " + std::to_string(hits.size()) + " candidate images";
        Fh.mor_map.push_back(hits.empty() ? kNone : hits.front());
    }
    if (!undefined.empty()) {
        X.triangle = Verdict::fail(undefined);
    } else if (auto vr = validate_functor(Fh); !vr.ok()) {
        X.triangle = Verdict::fail("extension is not a functor: " + vr.violations.front());
    } else {
        const Embedding E = embed(D);
        X.triangle = Verdict::pass("extension ∘ embedding = F on " + std::to_string(n) + " objects and " +
                                   std::to_string(cs.num_morphisms()) + " morphisms");
        for (Obj a = 0; a < n; ++a)
            if (Fh.obj_map[E.functor.functor.obj_map[a]] != om[a])
                X.triangle = Verdict::fail("triangle fails on object " + cs.object_name(a));
        for (Mor f = 0; f < cs.num_morphisms() && X.triangle.passed(); ++f)
            if (Fh.mor_map[E.functor.functor.mor_map[f]] != mm[f])
                X.triangle = Verdict::fail("triangle fails on morphism " + cs.morphism_name(f));
    }

    if (!ct.posetal()) {
        X.uniqueness = Verdict::skipped("uniqueness search needs a posetal target");
        return X;
    }
    // Backtracking over object maps G : D[C] → T. Constraints are attached to
    // the largest object id they mention.
    const Obj IT = T.unit();
    auto arrow = [&](Obj p, Obj q) { return !ct.hom(p, q).empty(); };
    std::vector<int> tcls(ct.num_objects(), -1);
    for (Obj o = 0; o < ct.num_objects(); ++o)
        if (arrow(o, IT)) tcls[o] = classify(T, zt, o, ct.hom(o, IT).front());
    const Obj unitD = D.table->unit();
    std::vector<Obj> central_obj;
    for (int d = 0; d < nd; ++d) central_obj.push_back(D.object(d, S.unit()));
    auto idx = [&](const Bits& b) {
        return static_cast<int>(std::find(D.downsets.begin(), D.downsets.end(), b) - D.downsets.begin());
    };
    struct Mono {
        Obj p, q;
    };
    struct Lax {
        Obj p, q;
        bool invertible;
    };
    struct Join {
        int d1, d2, d;
    };
    std::vector<std::vector<Mono>> mono_at(K);
    std::vector<std::vector<Lax>> lax_at(K);
    std::vector<std::vector<Join>> join_at(K);
    for (Obj p = 0; p < K; ++p)
        for (Obj q = 0; q < K; ++q) {
            if (p != q && !cd.hom(p, q).empty()) mono_at[std::max(p, q)].push_back({p, q});
            const Obj pq = D.table->tensor(p, q);
            const bool central_q = D.base_object_of(q) == S.unit();
            lax_at[std::max({p, q, pq})].push_back({p, q, central_q});
        }
    for (int d1 = 0; d1 < nd; ++d1)
        for (int d2 = d1; d2 < nd; ++d2) {
            const int d = idx(D.downsets[d1] | D.downsets[d2]);
            join_at[std::max({central_obj[d1], central_obj[d2], central_obj[d]})].push_back({d1, d2, d});
        }
    std::vector<Obj> G(K, kNone);
    auto ok_at = [&](Obj i) {
        for (const auto& c : mono_at[i])
            if (!arrow(G[c.p], G[c.q])) return false;
        for (const auto& c : lax_at[i]) {
            const Obj l = T.tensor(G[c.p], G[c.q]), r = G[D.table->tensor(c.p, c.q)];
            if (!arrow(l, r)) return false;
            if (c.invertible && !arrow(r, l)) return false;
        }
        for (const auto& c : join_at[i]) {
            const int a = tcls[G[central_obj[c.d1]]], b = tcls[G[central_obj[c.d2]]], j = tcls[G[central_obj[c.d]]];
            if (a < 0 || b < 0 || j < 0 || zt.join(a, b) != j) return false;
        }
        if (i == unitD && !arrow(IT, G[unitD])) return false;
        if (i == central_obj[0] && tcls[G[i]] != *zt.bottom) return false;
        return true;
    };
    std::uint64_t nodes = 0, solutions = 0;
    std::vector<Obj> first;
    bool exhausted = false;
    auto rec = [&](auto&& self, Obj i) -> void {
        if (exhausted || solutions > 1) return;
        if (i == K) {
            if (++solutions == 1) first = G;
            return;
        }
        const bool fixed = D.downset_of(i) == D.full_downset();
        for (Obj o = 0; o < ct.num_objects(); ++o) {
            if (fixed && o != om[D.base_object_of(i)]) continue;
            if (++nodes > search_budget) {
                exhausted = true;
                return;
            }
            G[i] = o;
            if (ok_at(i)) self(self, i + 1);
            if (exhausted || solutions > 1) break;
        }
        G[i] = kNone;
    };
    rec(rec, 0);
    const std::string bound = "search visited " + std::to_string(nodes) + " nodes of the " +
                              std::to_string(ct.num_objects()) + "^" + std::to_string(K - n) + " object maps";
    if (exhausted)
        X.uniqueness = Verdict::skipped("search bound of " + std::to_string(search_budget) + " nodes reached");
    else if (solutions == 0)
        X.uniqueness = Verdict::fail("no join-preserving extension found; " + bound);
    else if (solutions > 1)
        X.uniqueness = Verdict::fail("several join-preserving extensions; " + bound);
    else if (first != Fh.obj_map)
        X.uniqueness = Verdict::fail("the unique extension differs from the constructed one; " + bound);
    else
        X.uniqueness = Verdict::pass("unique among join-preserving extensions; " + bound);
    return X;
}

}  // namespace tensortopo
