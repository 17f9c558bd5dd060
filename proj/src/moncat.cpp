#include "tensortopo/moncat.hpp"

#include <algorithm>
#include <map>

namespace tensortopo {

MonoidalTable::MonoidalTable(CategoryTable base, Obj unit, std::vector<Obj> tensor_obj, std::vector<Mor> tensor_mor,
                             std::optional<std::vector<Mor>> symmetry)
    : base_(std::move(base)),
      unit_(unit),
      tensor_obj_(std::move(tensor_obj)),
      tensor_mor_(std::move(tensor_mor)),
      symmetry_(std::move(symmetry)) {
    check_well_formed();
}

void MonoidalTable::check_well_formed() const {
    const int n = base_.num_objects(), m = base_.num_morphisms();
    if (unit_ < 0 || unit_ >= n) throw Error(ErrorKind::MalformedTable, "unit object is not in the table");
    if (tensor_obj_.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorKind::MalformedTable, "object tensor table is partial");
    if (tensor_mor_.size() != static_cast<std::size_t>(m) * m)
        throw Error(ErrorKind::MalformedTable, "morphism tensor table is partial");
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const Obj r = tensor(a, b);
            if (r < 0 || r >= n)
                throw Error(ErrorKind::MalformedTable,
                            "tensor of " + base_.object_name(a) + " and " + base_.object_name(b) + " is missing");
        }
    for (Mor f = 0; f < m; ++f)
        for (Mor g = 0; g < m; ++g) {
            const Mor r = tensor_mor(f, g);
            if (r < 0 || r >= m)
                throw Error(ErrorKind::MalformedTable,
                            "tensor of " + base_.morphism_name(f) + " and " + base_.morphism_name(g) + " is missing");
            if (base_.src(r) != tensor(base_.src(f), base_.src(g)) || base_.dst(r) != tensor(base_.dst(f), base_.dst(g)))
                throw Error(ErrorKind::MalformedTable,
                            "tensor of " + base_.morphism_name(f) + " and " + base_.morphism_name(g) + " has the wrong type");
        }
    if (symmetry_) {
        if (symmetry_->size() != static_cast<std::size_t>(n) * n)
            throw Error(ErrorKind::MalformedTable, "symmetry table is partial");
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b) {
                const Mor s = symmetry(a, b);
                if (s < 0 || s >= m || base_.src(s) != tensor(a, b) || base_.dst(s) != tensor(b, a))
                    throw Error(ErrorKind::MalformedTable, "symmetry at (" + base_.object_name(a) + ", " +
                                                               base_.object_name(b) + ") is missing or ill-typed");
            }
    }
}

ValidationReport validate_monoidal(const MonoidalTable& m) {
    const auto& c = m.base();
    ValidationReport rep = validate_category(c);
    m.check_well_formed();
    const int n = c.num_objects(), M = c.num_morphisms();
    const Obj I = m.unit();
    auto on = [&](Obj a) { return c.object_name(a); };
    auto mn = [&](Mor f) { return c.morphism_name(f); };

    for (Obj a = 0; a < n; ++a) {
        if (m.tensor(I, a) != a || m.tensor(a, I) != a) rep.add("unit law fails on object " + on(a));
        for (Obj b = 0; b < n; ++b) {
            if (m.tensor_mor(c.identity(a), c.identity(b)) != c.identity(m.tensor(a, b)))
                rep.add("id_" + on(a) + " ⊗ id_" + on(b) + " is not the identity of " + on(m.tensor(a, b)));
            for (Obj d = 0; d < n; ++d)
                if (m.tensor(m.tensor(a, b), d) != m.tensor(a, m.tensor(b, d)))
                    rep.add("object tensor not associative on (" + on(a) + ", " + on(b) + ", " + on(d) + ")");
        }
    }
    for (Mor f = 0; f < M; ++f) {
        if (m.tensor_mor(c.identity(I), f) != f || m.tensor_mor(f, c.identity(I)) != f)
            rep.add("unit law fails on morphism " + mn(f));
        for (Mor g = 0; g < M; ++g) {
            // interchange, split into its two whiskered forms
            const Mor fg = m.tensor_mor(f, g);
            const Mor via1 = c.compose(m.right(f, c.dst(g)), m.left(c.src(f), g));
            const Mor via2 = c.compose(m.left(c.dst(f), g), m.right(f, c.src(g)));
            if (fg != via1 || fg != via2) rep.add("interchange fails for (" + mn(f) + ", " + mn(g) + ")");
        }
        for (Mor g : c.out(c.dst(f))) {
            const Mor gf = c.compose(g, f);
            for (Obj a = 0; a < n; ++a) {
                if (m.right(gf, a) != c.compose(m.right(g, a), m.right(f, a)))
                    rep.add("(" + mn(g) + "∘" + mn(f) + ") ⊗ " + on(a) + " is not functorial");
                if (m.left(a, gf) != c.compose(m.left(a, g), m.left(a, f)))
                    rep.add(on(a) + " ⊗ (" + mn(g) + "∘" + mn(f) + ") is not functorial");
            }
        }
    }
    // associativity of the morphism tensor, on whiskered generators
    for (Mor f = 0; f < M; ++f)
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b) {
                const Mor ia = c.identity(a), ib = c.identity(b);
                if (m.tensor_mor(m.tensor_mor(ia, ib), f) != m.tensor_mor(ia, m.tensor_mor(ib, f)) ||
                    m.tensor_mor(m.tensor_mor(ia, f), ib) != m.tensor_mor(ia, m.tensor_mor(f, ib)) ||
                    m.tensor_mor(m.tensor_mor(f, ia), ib) != m.tensor_mor(f, m.tensor_mor(ia, ib)))
                    rep.add("morphism tensor not associative around " + mn(f) + " with " + on(a) + ", " + on(b));
            }
    if (m.has_symmetry()) {
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b) {
                if (c.compose(m.symmetry(b, a), m.symmetry(a, b)) != c.identity(m.tensor(a, b)))
                    rep.add("symmetry at (" + on(a) + ", " + on(b) + ") is not involutive");
                for (Obj d = 0; d < n; ++d) {
                    const Mor lhs = m.symmetry(a, m.tensor(b, d));
                    const Mor rhs = c.compose(m.left(b, m.symmetry(a, d)), m.right(m.symmetry(a, b), d));
                    if (lhs != rhs)
                        rep.add("hexagon fails on (" + on(a) + ", " + on(b) + ", " + on(d) + ")");
                }
            }
        for (Mor f = 0; f < M; ++f)
            for (Mor g = 0; g < M; ++g) {
                const Mor lhs = c.compose(m.symmetry(c.dst(f), c.dst(g)), m.tensor_mor(f, g));
                const Mor rhs = c.compose(m.tensor_mor(g, f), m.symmetry(c.src(f), c.src(g)));
                if (lhs != rhs) rep.add("symmetry not natural at (" + mn(f) + ", " + mn(g) + ")");
            }
    }
    return rep;
}

ValidationReport validate_monoidal_functor(const MonoidalFunctorTable& F) {
    ValidationReport rep = validate_functor(F.functor);
    if (!rep.ok()) return rep;
    const auto& S = *F.source;
    const auto& T = *F.target;
    const auto& cs = S.base();
    const auto& ct = T.base();
    const auto& om = F.functor.obj_map;
    const auto& mm = F.functor.mor_map;
    const int n = cs.num_objects();

    const Mor tu = F.theta_unit;
    if (tu == kNone || ct.src(tu) != T.unit() || ct.dst(tu) != om[S.unit()]) {
        rep.add("theta_unit is missing or ill-typed");
    } else if (!is_iso(ct, tu)) {
        rep.add("theta_unit is not invertible");
    }
    bool complete = true;
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) {
            const Mor t = F.theta_at(a, b);
            if (t == kNone || ct.src(t) != T.tensor(om[a], om[b]) || ct.dst(t) != om[S.tensor(a, b)]) {
                rep.add("theta at (" + cs.object_name(a) + ", " + cs.object_name(b) + ") is missing or ill-typed");
                complete = false;
            }
        }
    if (!complete || tu == kNone) return rep;
    for (Mor f = 0; f < cs.num_morphisms(); ++f)
        for (Mor g = 0; g < cs.num_morphisms(); ++g) {
            const Mor lhs = ct.compose(mm[S.tensor_mor(f, g)], F.theta_at(cs.src(f), cs.src(g)));
            const Mor rhs = ct.compose(F.theta_at(cs.dst(f), cs.dst(g)), T.tensor_mor(mm[f], mm[g]));
            if (lhs != rhs)
                rep.add("theta not natural at (" + cs.morphism_name(f) + ", " + cs.morphism_name(g) + ")");
        }
    for (Obj a = 0; a < n; ++a) {
        const Mor l = ct.compose(F.theta_at(S.unit(), a), T.right(tu, om[a]));
        const Mor r = ct.compose(F.theta_at(a, S.unit()), T.left(om[a], tu));
        if (l != ct.identity(om[a]) || r != ct.identity(om[a]))
            rep.add("unit coherence fails at " + cs.object_name(a));
        for (Obj b = 0; b < n; ++b)
            for (Obj d = 0; d < n; ++d) {
                const Mor lhs = ct.compose(F.theta_at(S.tensor(a, b), d), T.right(F.theta_at(a, b), om[d]));
                const Mor rhs = ct.compose(F.theta_at(a, S.tensor(b, d)), T.left(om[a], F.theta_at(b, d)));
                if (lhs != rhs)
                    rep.add("associativity coherence fails at (" + cs.object_name(a) + ", " + cs.object_name(b) +
                            ", " + cs.object_name(d) + ")");
            }
    }
    return rep;
}

namespace {

Mor unique_or_none(const CategoryTable& c, Obj a, Obj b) {
    const auto& h = c.hom(a, b);
    return h.size() == 1 ? h[0] : kNone;
}

}  // namespace

MonoidalFunctorTable posetal_functor(std::shared_ptr<const MonoidalTable> source,
                                     std::shared_ptr<const MonoidalTable> target, const std::vector<Obj>& obj_map) {
    const auto& cs = source->base();
    const auto& ct = target->base();
    if (static_cast<int>(obj_map.size()) != cs.num_objects())
        throw Error(ErrorKind::MalformedTable, "object map does not cover the source");
    MonoidalFunctorTable F;
    F.functor.source = std::shared_ptr<const CategoryTable>(source, &source->base());
    F.functor.target = std::shared_ptr<const CategoryTable>(target, &target->base());
    F.functor.obj_map = obj_map;
    F.functor.mor_map.resize(cs.num_morphisms());
    for (Mor f = 0; f < cs.num_morphisms(); ++f)
        F.functor.mor_map[f] = unique_or_none(ct, obj_map[cs.src(f)], obj_map[cs.dst(f)]);
    F.theta_unit = unique_or_none(ct, target->unit(), obj_map[source->unit()]);
    const int n = cs.num_objects();
    F.theta.resize(static_cast<std::size_t>(n) * n);
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b)
            F.theta[static_cast<std::size_t>(a) * n + b] =
                unique_or_none(ct, target->tensor(obj_map[a], obj_map[b]), obj_map[source->tensor(a, b)]);
    F.source = std::move(source);
    F.target = std::move(target);
    return F;
}

MonoidalFunctorTable identity_functor(std::shared_ptr<const MonoidalTable> m) {
    const auto& c = m->base();
    MonoidalFunctorTable F;
    F.functor.source = std::shared_ptr<const CategoryTable>(m, &m->base());
    F.functor.target = F.functor.source;
    for (Obj a = 0; a < c.num_objects(); ++a) F.functor.obj_map.push_back(a);
    for (Mor f = 0; f < c.num_morphisms(); ++f) F.functor.mor_map.push_back(f);
    F.theta_unit = c.identity(m->unit());
    const int n = c.num_objects();
    for (Obj a = 0; a < n; ++a)
        for (Obj b = 0; b < n; ++b) F.theta.push_back(c.identity(m->tensor(a, b)));
    F.source = m;
    F.target = m;
    return F;
}

}  // namespace tensortopo
