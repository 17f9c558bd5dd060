#include "tensortopo/zi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tensortopo/parallel.hpp"

namespace tensortopo {

std::vector<LeftIdempotent> find_left_idempotents(const MonoidalTable& m) {
    const auto& c = m.base();
    std::vector<LeftIdempotent> out;
    for (Obj U = 0; U < c.num_objects(); ++U)
        for (Mor u : c.hom(U, m.unit())) {
            const Mor uU = m.right(u, U);
            if (uU != m.left(U, u)) continue;
            if (auto inv = inverse(c, uU)) out.push_back({U, u, *inv});
        }
    return out;
}

namespace {

bool verify_half_braiding(const MonoidalTable& m, Obj U, Mor u, const std::vector<Mor>& sig) {
    const auto& c = m.base();
    const int n = c.num_objects();
    for (Obj A = 0; A < n; ++A) {
        const Mor s = sig[A];
        if (s == kNone || c.src(s) != m.tensor(U, A) || c.dst(s) != m.tensor(A, U)) return false;
        if (c.compose(m.left(A, u), s) != m.right(u, A)) return false;
    }
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        const Obj A = c.src(f), B = c.dst(f);
        if (c.compose(sig[B], m.left(U, f)) != c.compose(m.right(f, U), sig[A])) return false;
    }
    for (Obj A = 0; A < n; ++A)
        for (Obj B = 0; B < n; ++B)
            if (sig[m.tensor(A, B)] != c.compose(m.left(A, sig[B]), m.right(sig[A], B))) return false;
    return true;
}

}  // namespace

std::vector<HalfBraiding> find_half_braidings(const MonoidalTable& m, Obj U, Mor u, std::uint64_t budget) {
    const auto& c = m.base();
    const int n = c.num_objects();
    if (m.has_symmetry()) {
        std::vector<Mor> sig(n);
        for (Obj A = 0; A < n; ++A) sig[A] = m.symmetry(U, A);
        if (verify_half_braiding(m, U, u, sig)) return {HalfBraiding{sig}};
        return {};
    }
    // local filters: type, the compatibility with u, and naturality along
    // endomorphisms
    std::vector<std::vector<Mor>> cand(n);
    for (Obj A = 0; A < n; ++A)
        for (Mor s : c.hom(m.tensor(U, A), m.tensor(A, U))) {
            if (c.compose(m.left(A, u), s) != m.right(u, A)) continue;
            bool ok = true;
            for (Mor f : c.hom(A, A))
                if (c.compose(s, m.left(U, f)) != c.compose(m.right(f, U), s)) {
                    ok = false;
                    break;
                }
            if (ok) cand[A].push_back(s);
        }
    struct Nat {
        Mor f;
    };
    struct Tens {
        Obj a, b;
    };
    std::vector<std::vector<Nat>> nat_at(n);
    std::vector<std::vector<Tens>> tens_at(n);
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        const Obj A = c.src(f), B = c.dst(f);
        if (A != B) nat_at[std::max(A, B)].push_back({f});
    }
    for (Obj A = 0; A < n; ++A)
        for (Obj B = 0; B < n; ++B) tens_at[std::max({A, B, m.tensor(A, B)})].push_back({A, B});

    std::vector<Mor> sig(n, kNone);
    std::vector<HalfBraiding> found;
    std::uint64_t nodes = 0;
    auto ok_at = [&](int i) {
        for (const auto& nc : nat_at[i]) {
            const Obj A = c.src(nc.f), B = c.dst(nc.f);
            if (c.compose(sig[B], m.left(U, nc.f)) != c.compose(m.right(nc.f, U), sig[A])) return false;
        }
        for (const auto& t : tens_at[i])
            if (sig[m.tensor(t.a, t.b)] != c.compose(m.left(t.a, sig[t.b]), m.right(sig[t.a], t.b))) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            found.push_back({sig});
            return;
        }
        for (Mor s : cand[i]) {
            if (++nodes > budget)
                throw Error(ErrorKind::SearchBudgetExceeded,
                            "half-braiding search for " + c.object_name(U) + " exceeded the bound of " +
                                std::to_string(budget) + " candidate assignments");
            sig[i] = s;
            if (ok_at(i)) self(self, i + 1);
        }
        sig[i] = kNone;
    };
    rec(rec, 0);
    return found;
}

bool idempotent_leq(const MonoidalTable& m, Obj U, Mor u, Obj V, Mor v) {
    (void)u;
    (void)V;
    return is_iso(m.base(), m.left(U, v));
}

Mor mediating_morphism(const MonoidalTable& m, Obj U, Mor u, Obj V, Mor v) {
    const auto& c = m.base();
    auto inv = inverse(c, m.left(U, v));
    if (!inv) return kNone;
    return c.compose(m.right(u, V), *inv);
}

int classify(const MonoidalTable& m, const ZILattice& zi, Obj W, Mor w) {
    for (int k = 0; k < zi.size(); ++k) {
        const auto& r = zi.classes[k];
        if (idempotent_leq(m, W, w, r.U, r.u) && idempotent_leq(m, r.U, r.u, W, w)) return k;
    }
    return -1;
}

int ZILattice::lub(int a, int b) const {
    int acc = top;
    for (int c = 0; c < size(); ++c)
        if (leq(a, c) && leq(b, c)) acc = meet(acc, c);
    return acc;
}

int ZILattice::join(int a, int b) const {
    if (joins) return (*joins)[idx(a, b)];
    return lub(a, b);
}

std::vector<std::string> ZILattice::names(const CategoryTable& c) const {
    std::vector<std::string> out;
    std::map<std::string, int> seen;
    for (const auto& r : classes) ++seen[c.object_name(r.U)];
    for (const auto& r : classes) {
        std::string s = c.object_name(r.U);
        if (seen[s] > 1) s += "/" + c.morphism_name(r.u);
        out.push_back(s);
    }
    return out;
}

ZILattice central_idempotents(const MonoidalTable& m, const ZIConfig& cfg) {
    const auto& c = m.base();
    ZILattice zi;
    const auto lefts = find_left_idempotents(m);
    std::vector<std::vector<HalfBraiding>> hbs(lefts.size());
    parallel_for(static_cast<int>(lefts.size()), cfg.jobs, [&](int i) {
        hbs[i] = find_half_braidings(m, lefts[i].U, lefts[i].u, cfg.halfbraiding_budget);
    });
    for (std::size_t i = 0; i < lefts.size(); ++i)
        if (!hbs[i].empty())
            zi.members.push_back({lefts[i].U, lefts[i].u, lefts[i].inverse, std::move(hbs[i]), -1});

    const int k = static_cast<int>(zi.members.size());
    std::vector<int> cls(k, -1);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < k; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(groups.size());
        groups.push_back({i});
        const auto& a = zi.members[i];
        for (int j = i + 1; j < k; ++j) {
            if (cls[j] >= 0) continue;
            const auto& b = zi.members[j];
            if (idempotent_leq(m, a.U, a.u, b.U, b.u) && idempotent_leq(m, b.U, b.u, a.U, a.u)) {
                cls[j] = cls[i];
                groups.back().push_back(j);
            }
        }
    }
    const Obj I = m.unit();
    const Mor idI = c.identity(I);
    std::vector<int> rep(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        int best = groups[g][0];
        for (int i : groups[g]) {
            const auto& r = zi.members[i];
            if (r.U == I && r.u == idI) {
                best = i;
                break;
            }
            const auto& b = zi.members[best];
            if (std::make_pair(r.U, r.u) < std::make_pair(b.U, b.u)) best = i;
        }
        rep[g] = best;
    }
    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& a = zi.members[rep[x]];
        const auto& b = zi.members[rep[y]];
        return std::make_pair(a.U, a.u) < std::make_pair(b.U, b.u);
    });
    std::vector<int> new_id(groups.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) new_id[order[pos]] = static_cast<int>(pos);
    for (int i = 0; i < k; ++i) zi.members[i].class_id = new_id[cls[i]];
    zi.classes.resize(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) zi.classes[new_id[g]] = zi.members[rep[g]];

    const int s = zi.size();
    zi.leq_table.assign(static_cast<std::size_t>(s) * s, 0);
    zi.meet_table.assign(static_cast<std::size_t>(s) * s, -1);
    zi.mediators.assign(static_cast<std::size_t>(s) * s, kNone);
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            const auto& x = zi.classes[a];
            const auto& y = zi.classes[b];
            if (idempotent_leq(m, x.U, x.u, y.U, y.u)) {
                zi.leq_table[static_cast<std::size_t>(a) * s + b] = 1;
                zi.mediators[static_cast<std::size_t>(a) * s + b] = mediating_morphism(m, x.U, x.u, y.U, y.u);
            }
        }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            const auto& x = zi.classes[a];
            const auto& y = zi.classes[b];
            zi.meet_table[static_cast<std::size_t>(a) * s + b] =
                classify(m, zi, m.tensor(x.U, y.U), m.tensor_mor(x.u, y.u));
        }
    for (int a = 0; a < s; ++a)
        if (zi.classes[a].U == I && zi.classes[a].u == idI) zi.top = a;
    return zi;
}

LatticeModel lattice_of(const ZILattice& zi, const CategoryTable& c) {
    std::vector<std::vector<bool>> leq(zi.size(), std::vector<bool>(zi.size()));
    for (int a = 0; a < zi.size(); ++a)
        for (int b = 0; b < zi.size(); ++b) leq[a][b] = zi.leq(a, b);
    return LatticeModel(zi.names(c), leq);
}

Mor crossing(const MonoidalTable& m, const CentralIdempotentRecord& rec, Obj C) {
    if (m.has_symmetry()) return m.symmetry(C, rec.U);
    if (rec.half_braidings.empty()) throw Error(ErrorKind::HypothesisNotMet, "no half-braiding recorded");
    auto inv = inverse(m.base(), rec.half_braidings.front().sigma[C]);
    if (!inv) throw Error(ErrorKind::HypothesisNotMet, "half-braiding component at " + m.base().object_name(C) + " is not invertible");
    return *inv;
}

namespace {

std::string triple_text(const CategoryTable& c, const ZILattice& zi, Obj A, int i, int j) {
    return "A=" + c.object_name(A) + ", u=" + c.object_name(zi.classes[i].U) + ", v=" + c.object_name(zi.classes[j].U);
}

// The square A⊗U⊗V → A⊗U, A⊗V; returns (P, p1, p2).
struct Square {
    Obj P, AU, AV;
    Mor p1, p2;
};

Square square(const MonoidalTable& m, Obj A, const CentralIdempotentRecord& x, const CentralIdempotentRecord& y) {
    Square s;
    s.AU = m.tensor(A, x.U);
    s.AV = m.tensor(A, y.U);
    s.P = m.tensor(s.AU, y.U);
    s.p1 = m.left(s.AU, y.u);
    s.p2 = m.right(m.left(A, x.u), y.U);
    return s;
}

}  // namespace

Verdict is_stiff(const MonoidalTable& m, const ZILattice& zi, int jobs) {
    const auto& c = m.base();
    const int n = c.num_objects(), s = zi.size();
    std::vector<std::string> failure(n);
    parallel_for(n, jobs, [&](int A) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                const auto& x = zi.classes[i];
                const auto& y = zi.classes[j];
                const Square sq = square(m, A, x, y);
                const Mor q1 = m.left(A, x.u), q2 = m.left(A, y.u);
                Diagram d{{sq.AU, sq.AV, A}, {{0, 2, q1}, {1, 2, q2}}};
                auto bad = check_limit(c, d, sq.P, {sq.p1, sq.p2, c.compose(q1, sq.p1)});
                if (bad) {
                    failure[A] = triple_text(c, zi, A, i, j) + ": " + *bad;
                    return;
                }
            }
    });
    for (int A = 0; A < n; ++A)
        if (!failure[A].empty()) return Verdict::fail(failure[A]);
    return Verdict::pass("all " + std::to_string(n * s * s) + " squares are pullbacks");
}

Verdict has_universal_finite_joins(const MonoidalTable& m, ZILattice& zi, int jobs) {
    const auto& c = m.base();
    const int n = c.num_objects(), s = zi.size();
    zi.joins.reset();
    zi.bottom.reset();
    Obj zero = kNone;
    for (Obj z = 0; z < n && zero == kNone; ++z) {
        if (!is_initial(c, z)) continue;
        bool absorbs = true;
        for (Obj A = 0; A < n && absorbs; ++A) absorbs = is_initial(c, m.tensor(A, z));
        if (absorbs) zero = z;
    }
    if (zero == kNone) return Verdict::fail("clause (a): no initial object 0 with A ⊗ 0 ≅ 0");
    const Mor zmap = c.hom(zero, m.unit()).front();
    const int bottom = classify(m, zi, zero, zmap);
    if (bottom < 0) return Verdict::fail("clause (a): the initial object " + c.object_name(zero) + " is not a central idempotent");
    for (int k = 0; k < s; ++k)
        if (!zi.leq(bottom, k)) return Verdict::fail("clause (a): the class of 0 is not least");

    std::vector<int> joins(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            const int w = zi.lub(i, j);
            if (!zi.leq(i, w) || !zi.leq(j, w))
                return Verdict::fail("clause (b): no join for (" + c.object_name(zi.classes[i].U) + ", " +
                                     c.object_name(zi.classes[j].U) + ")");
            joins[static_cast<std::size_t>(i) * s + j] = w;
        }

    std::vector<std::string> failure(n);
    parallel_for(n, jobs, [&](int A) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                const auto& x = zi.classes[i];
                const auto& y = zi.classes[j];
                const int w = joins[static_cast<std::size_t>(i) * s + j];
                const Obj AW = m.tensor(A, zi.classes[w].U);
                const Square sq = square(m, A, x, y);
                const Mor k1 = m.left(A, zi.mediator(i, w)), k2 = m.left(A, zi.mediator(j, w));
                if (c.compose(k1, sq.p1) != c.compose(k2, sq.p2)) {
                    failure[A] = "clause (c): square does not commute for " + triple_text(c, zi, A, i, j);
                    return;
                }
                Diagram pb{{sq.AU, sq.AV, AW}, {{0, 2, k1}, {1, 2, k2}}};
                if (auto bad = check_limit(c, pb, sq.P, {sq.p1, sq.p2, c.compose(k1, sq.p1)})) {
                    failure[A] = "clause (c): not a pullback for " + triple_text(c, zi, A, i, j) + ": " + *bad;
                    return;
                }
                Diagram po{{sq.P, sq.AU, sq.AV}, {{0, 1, sq.p1}, {0, 2, sq.p2}}};
                if (auto bad = check_colimit(c, po, AW, {c.compose(k1, sq.p1), k1, k2})) {
                    failure[A] = "clause (c): not a pushout for " + triple_text(c, zi, A, i, j) + ": " + *bad;
                    return;
                }
            }
    });
    for (int A = 0; A < n; ++A)
        if (!failure[A].empty()) return Verdict::fail(failure[A]);
    zi.joins = std::move(joins);
    zi.bottom = bottom;
    Verdict v = Verdict::pass("0 = " + c.object_name(zero) + "; all join squares are pullbacks and pushouts");
    bool distributive = true;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int d = 0; d < s; ++d)
                if (zi.meet(a, zi.join(b, d)) != zi.join(zi.meet(a, b), zi.meet(a, d))) distributive = false;
    if (!distributive) return Verdict::fail("join lattice is not distributive");
    return v;
}

Verdict has_universal_joins(const MonoidalTable& m, const ZILattice& zi_in, std::uint64_t family_budget) {
    const auto& c = m.base();
    ZILattice zi = zi_in;
    if (!zi.joins) {
        Verdict fj = has_universal_finite_joins(m, zi);
        if (!fj.passed()) return Verdict::fail("inherited from universal finite joins: " + fj.witness);
    }
    const int s = zi.size(), n = c.num_objects();
    // meet-closed families of classes, including the empty family
    std::vector<std::uint64_t> families;
    const bool can_enumerate = s <= 24;
    std::uint64_t work = 0;
    if (can_enumerate) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            bool closed = true;
            for (int a = 0; a < s && closed; ++a)
                if (mask >> a & 1)
                    for (int b = a + 1; b < s && closed; ++b)
                        if ((mask >> b & 1) && !(mask >> zi.meet(a, b) & 1)) closed = false;
            if (closed) {
                families.push_back(mask);
                work += static_cast<std::uint64_t>(n);
                if (work > family_budget) break;
            }
        }
    }
    const bool exhaustive = can_enumerate && work <= family_budget;
    if (!exhaustive) {
        // reduce to the empty family and the families {u, v, u∧v}
        families.clear();
        families.push_back(0);
        for (int a = 0; a < s; ++a)
            for (int b = a; b < s; ++b)
                families.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                   (std::uint64_t{1} << zi.meet(a, b)));
        std::sort(families.begin(), families.end());
        families.erase(std::unique(families.begin(), families.end()), families.end());
    }
    for (std::uint64_t mask : families) {
        std::vector<int> members;
        for (int a = 0; a < s; ++a)
            if (mask >> a & 1) members.push_back(a);
        int w = *zi.bottom;
        for (int a : members) w = zi.join(w, a);
        for (Obj A = 0; A < n; ++A) {
            Diagram d;
            std::vector<Mor> legs;
            for (int a : members) {
                d.objects.push_back(m.tensor(A, zi.classes[a].U));
                legs.push_back(m.left(A, zi.mediator(a, w)));
            }
            for (std::size_t p = 0; p < members.size(); ++p)
                for (std::size_t q = 0; q < members.size(); ++q) {
                    if (p == q || !zi.leq(members[p], members[q])) continue;
                    bool cover = true;   // Hasse edges generate the diagram
                    for (int r : members)
                        if (r != members[p] && r != members[q] && zi.leq(members[p], r) && zi.leq(r, members[q]))
                            cover = false;
                    if (cover)
                        d.arrows.push_back({static_cast<int>(p), static_cast<int>(q),
                                            m.left(A, zi.mediator(members[p], members[q]))});
                }
            if (auto bad = check_colimit(c, d, m.tensor(A, zi.classes[w].U), legs)) {
                std::string fam = "{";
                for (std::size_t p = 0; p < members.size(); ++p)
                    fam += (p ? "," : "") + c.object_name(zi.classes[members[p]].U);
                return Verdict::fail("family " + fam + "} at A=" + c.object_name(A) + ": " + *bad);
            }
        }
    }
    Verdict v = Verdict::pass(std::to_string(families.size()) + " meet-closed families checked");
    if (exhaustive)
        v.note("exhaustive over all meet-closed families");
    else
        v.note("reduced: finite carrier, so arbitrary joins are finite joins; checked the empty family and every {u, v, u∧v}");
    return v;
}

Verdict check_local_properties(const MonoidalTable& m, const ZILattice& zi, const std::vector<int>& cover, Mor f, Mor g) {
    const auto& c = m.base();
    int total = zi.bottom ? *zi.bottom : -1;
    for (int i : cover) total = total < 0 ? i : zi.lub(total, i);
    if (total != zi.top) throw Error(ErrorKind::CoverNotTotal, "the cover does not join to 1");
    if (c.src(f) != c.src(g) || c.dst(f) != c.dst(g))
        throw Error(ErrorKind::MalformedTable, "f and g must be parallel");
    auto local_eq = [&] {
        for (int i : cover)
            if (m.tensor_mor(f, zi.classes[i].u) != m.tensor_mor(g, zi.classes[i].u)) return false;
        return true;
    };
    const std::string flag = "; the join squares are not universal";
    if (local_eq() != (f == g)) return Verdict::fail("equality clause: f ⊗ u_i = g ⊗ u_i for all i but f ≠ g" + flag);
    for (Mor h : {f, g}) {
        const std::string hn = c.morphism_name(h);
        bool epi_local = true, mono_local = true, iso_local = true;
        for (int i : cover) {
            const auto& r = zi.classes[i];
            const Mor hu = m.tensor_mor(h, r.u), hU = m.right(h, r.U);
            epi_local = epi_local && (is_epi(c, hu) || is_epi(c, hU));
            mono_local = mono_local && is_mono(c, hu);
            iso_local = iso_local && is_iso(c, hU);
        }
        if (epi_local && !is_epi(c, h)) return Verdict::fail("epi clause fails for " + hn + flag);
        if (mono_local && !is_mono(c, h)) return Verdict::fail("mono clause fails for " + hn + flag);
        if (iso_local != is_iso(c, h)) return Verdict::fail("iso clause fails for " + hn + flag);
    }
    Verdict v = Verdict::pass("equality, epi, mono and iso agree locally and globally");
    if (c.hom(c.src(f), c.dst(f)).size() <= 1) v.note("hom-set is a subsingleton; equality clause is vacuous");
    return v;
}

bool is_subunit(const MonoidalTable& m, const CentralIdempotentRecord& rec) { return is_mono(m.base(), rec.u); }

Verdict is_bilinear(const MonoidalTable& m, const ZILattice& zi) {
    const auto& c = m.base();
    const int n = c.num_objects();
    std::size_t checked = 0;
    for (const auto& r : zi.members)
        for (Obj A = 0; A < n; ++A)
            for (Obj B = 0; B < n; ++B) {
                const auto& hs = c.hom(A, m.tensor(B, r.U));
                std::map<Mor, Mor> seen;
                for (Mor f : hs) {
                    ++checked;
                    const Mor fU = m.right(f, r.U);
                    auto [it, fresh] = seen.emplace(fU, f);
                    if (!fresh)
                        return Verdict::fail("U=" + c.object_name(r.U) + ": " + c.morphism_name(it->second) + " ≠ " +
                                             c.morphism_name(f) + " but both agree after ⊗ U");
                }
            }
    return Verdict::pass(std::to_string(checked) + " morphisms into B ⊗ U checked");
}

bool is_cartesian(const MonoidalTable& m) {
    const auto& c = m.base();
    const Obj I = m.unit();
    if (!is_terminal(c, I)) return false;
    for (Obj A = 0; A < c.num_objects(); ++A)
        for (Obj B = 0; B < c.num_objects(); ++B) {
            const Mor pA = m.left(A, c.hom(B, I).front());
            const Mor pB = m.right(c.hom(A, I).front(), B);
            Diagram d{{A, B}, {}};
            if (check_limit(c, d, m.tensor(A, B), {pA, pB})) return false;
        }
    return true;
}

Verdict cartesian_subterminal_check(const MonoidalTable& m, const ZILattice& zi) {
    const auto& c = m.base();
    if (!is_cartesian(m)) throw Error(ErrorKind::NotCartesian, "the tensor is not a categorical product with terminal unit");
    std::set<Obj> central, sub;
    for (const auto& r : zi.members) central.insert(r.U);
    for (Obj X = 0; X < c.num_objects(); ++X) {
        bool ok = true;
        for (Obj Y = 0; Y < c.num_objects() && ok; ++Y) ok = c.hom(Y, X).size() <= 1;
        if (ok) sub.insert(X);
    }
    if (central != sub) {
        for (Obj X = 0; X < c.num_objects(); ++X)
            if (central.count(X) != sub.count(X))
                return Verdict::fail(c.object_name(X) + (central.count(X) ? " is central but not subterminal"
                                                                         : " is subterminal but not central"));
    }
    return Verdict::pass(std::to_string(sub.size()) + " subterminal objects, all central");
}

ZIMap zi_map_of_functor(const MonoidalFunctorTable& F, const ZILattice& zi_c, const ZILattice& zi_d) {
    const auto& S = *F.source;
    const auto& T = *F.target;
    const auto& cs = S.base();
    const auto& ct = T.base();
    const auto& om = F.functor.obj_map;
    const auto& mm = F.functor.mor_map;
    ZIMap out;
    if (F.theta_unit == kNone) throw Error(ErrorKind::CoherenceNotInvertible, "theta_unit is missing");
    auto tu_inv = inverse(ct, F.theta_unit);
    if (!tu_inv) throw Error(ErrorKind::CoherenceNotInvertible, "theta_unit is not invertible");
    for (int k = 0; k < zi_c.size(); ++k) {
        const auto& r = zi_c.classes[k];
        for (Obj A = 0; A < cs.num_objects(); ++A) {
            const Mor t = F.theta_at(A, r.U);
            if (t == kNone || !is_iso(ct, t))
                throw Error(ErrorKind::CoherenceNotInvertible,
                            "theta at (" + cs.object_name(A) + ", " + cs.object_name(r.U) + ") is not invertible");
        }
        const Mor fu = ct.compose(*tu_inv, mm[r.u]);
        const int img = classify(T, zi_d, om[r.U], fu);
        if (img < 0)
            throw Error(ErrorKind::HypothesisNotMet, "F does not send " + cs.object_name(r.U) + " to a central idempotent");
        out.class_map.push_back(img);
    }
    out.verdict = Verdict::pass("meets and top preserved");
    if (out.class_map[zi_c.top] != zi_d.top) out.verdict = Verdict::fail("top not preserved");
    for (int a = 0; a < zi_c.size() && out.verdict.passed(); ++a)
        for (int b = 0; b < zi_c.size(); ++b)
            if (out.class_map[zi_c.meet(a, b)] != zi_d.meet(out.class_map[a], out.class_map[b])) {
                out.verdict = Verdict::fail("meet of " + cs.object_name(zi_c.classes[a].U) + " and " +
                                            cs.object_name(zi_c.classes[b].U) + " not preserved");
                break;
            }
    const LatticeModel Lc = lattice_of(zi_c, cs), Ld = lattice_of(zi_d, ct);
    if (!Lc.distributive() || !Ld.distributive()) {
        out.verdict.note("spectrum map skipped: ZI is not distributive");
        return out;
    }
    out.points_c = enumerate_prime_filters(Lc);
    out.points_d = enumerate_prime_filters(Ld);
    for (const auto& P : out.points_d) {
        Bits pre(Lc.size());
        for (int a = 0; a < Lc.size(); ++a)
            if (P.carrier[out.class_map[a]]) pre.set(a);
        int hit = -1;
        for (std::size_t q = 0; q < out.points_c.size(); ++q)
            if (out.points_c[q].carrier == pre) hit = static_cast<int>(q);
        out.spectrum_map.push_back(hit);
        if (hit < 0) out.verdict.note("a preimage filter is not prime");
    }
    return out;
}

}  // namespace tensortopo
