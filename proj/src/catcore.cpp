#include "tensortopo/catcore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tensortopo {

Obj CategoryTable::add_object(std::string name) {
    if (layout_ready_) throw Error(ErrorKind::MalformedTable, "object added after composition started");
    const Obj id = num_objects();
    object_names_.push_back(std::move(name));
    identity_.push_back(kNone);
    out_.emplace_back();
    const std::size_t n = object_names_.size();
    std::vector<std::vector<Mor>> homs(n * n);
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = 0; b + 1 < n; ++b) homs[a * n + b] = std::move(homs_[a * (n - 1) + b]);
    homs_ = std::move(homs);
    object_index_.clear();
    return id;
}

Mor CategoryTable::add_morphism(std::string name, Obj src, Obj dst) {
    if (layout_ready_) throw Error(ErrorKind::MalformedTable, "morphism added after composition started");
    if (src < 0 || src >= num_objects() || dst < 0 || dst >= num_objects())
        throw Error(ErrorKind::MalformedTable, "morphism " + name + " has a dangling endpoint");
    const Mor id = num_morphisms();
    morphism_names_.push_back(std::move(name));
    src_.push_back(src);
    dst_.push_back(dst);
    homs_[static_cast<std::size_t>(src) * object_names_.size() + dst].push_back(id);
    out_[src].push_back(id);
    morphism_index_.clear();
    return id;
}

void CategoryTable::set_identity(Obj a, Mor f) {
    if (a < 0 || a >= num_objects() || f < 0 || f >= num_morphisms())
        throw Error(ErrorKind::MalformedTable, "identity refers to a dangling id");
    if (src_[f] != a || dst_[f] != a)
        throw Error(ErrorKind::MalformedTable, "identity of " + object_names_[a] + " is not an endomorphism of it");
    identity_[a] = f;
}

void CategoryTable::ensure_layout() {
    if (layout_ready_) return;
    const int m = num_morphisms();
    out_pos_.assign(m, 0);
    for (const auto& lst : out_)
        for (std::size_t i = 0; i < lst.size(); ++i) out_pos_[lst[i]] = static_cast<std::int32_t>(i);
    comp_offset_.assign(m, 0);
    std::size_t total = 0;
    for (Mor f = 0; f < m; ++f) {
        comp_offset_[f] = total;
        total += out_[dst_[f]].size();
    }
    compose_.assign(total, kNone);
    layout_ready_ = true;
}

void CategoryTable::set_compose(Mor g, Mor f, Mor result) {
    const int m = num_morphisms();
    if (g < 0 || g >= m || f < 0 || f >= m || result < 0 || result >= m)
        throw Error(ErrorKind::MalformedTable, "composition refers to a dangling morphism id");
    if (dst_[f] != src_[g])
        throw Error(ErrorKind::MalformedTable,
                    "composite " + morphism_names_[g] + "∘" + morphism_names_[f] + " is not composable");
    if (src_[result] != src_[f] || dst_[result] != dst_[g])
        throw Error(ErrorKind::MalformedTable, "composite " + morphism_names_[g] + "∘" + morphism_names_[f] +
                                                   " set to " + morphism_names_[result] + " with wrong type");
    ensure_layout();
    compose_[comp_offset_[f] + out_pos_[g]] = result;
}

Mor CategoryTable::chain(std::initializer_list<Mor> fs) const {
    if (fs.size() == 0) throw Error(ErrorKind::MalformedTable, "empty chain");
    auto it = fs.end();
    --it;
    Mor acc = *it;
    while (it != fs.begin()) {
        --it;
        const Mor next = compose(*it, acc);
        if (next == kNone)
            throw Error(ErrorKind::MalformedTable,
                        "chain: " + morphism_names_[*it] + "∘" + morphism_names_[acc] + " undefined");
        acc = next;
    }
    return acc;
}

std::optional<Obj> CategoryTable::find_object(const std::string& name) const {
    if (object_index_.empty())
        for (Obj a = num_objects() - 1; a >= 0; --a) object_index_[object_names_[a]] = a;
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Mor> CategoryTable::find_morphism(const std::string& name) const {
    if (morphism_index_.empty())
        for (Mor f = num_morphisms() - 1; f >= 0; --f) morphism_index_[morphism_names_[f]] = f;
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
}

void CategoryTable::check_well_formed() const {
    for (Obj a = 0; a < num_objects(); ++a)
        if (identity_[a] == kNone) throw Error(ErrorKind::MalformedTable, "object " + object_names_[a] + " has no identity");
    if (num_morphisms() > 0 && !layout_ready_) throw Error(ErrorKind::MalformedTable, "composition table is empty");
    for (Mor f = 0; f < num_morphisms(); ++f)
        for (Mor g : out_[dst_[f]]) {
            const Mor r = compose(g, f);
            if (r == kNone)
                throw Error(ErrorKind::MalformedTable,
                            "composite " + morphism_names_[g] + "∘" + morphism_names_[f] + " is missing");
            if (src_[r] != src_[f] || dst_[r] != dst_[g])
                throw Error(ErrorKind::MalformedTable,
                            "composite " + morphism_names_[g] + "∘" + morphism_names_[f] + " has the wrong type");
        }
}

bool CategoryTable::posetal() const {
    for (const auto& h : homs_)
        if (h.size() > 1) return false;
    return true;
}

std::size_t CategoryTable::max_hom_size() const {
    std::size_t best = 0;
    for (const auto& h : homs_) best = std::max(best, h.size());
    return best;
}

ValidationReport validate_category(const CategoryTable& c) {
    c.check_well_formed();
    ValidationReport rep;
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
        const Obj a = c.src(f), b = c.dst(f);
        if (c.compose(c.identity(b), f) != f)
            rep.add("left unit law fails for " + c.morphism_name(f));
        if (c.compose(f, c.identity(a)) != f)
            rep.add("right unit law fails for " + c.morphism_name(f));
    }
    for (Mor f = 0; f < c.num_morphisms(); ++f)
        for (Mor g : c.out(c.dst(f))) {
            const Mor gf = c.compose(g, f);
            for (Mor h : c.out(c.dst(g))) {
                if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    rep.add("associativity fails for (" + c.morphism_name(h) + ", " + c.morphism_name(g) + ", " +
                            c.morphism_name(f) + ")");
            }
        }
    return rep;
}

bool is_mono(const CategoryTable& c, Mor f) {
    std::vector<Mor> seen;
    for (Obj x = 0; x < c.num_objects(); ++x) {
        const auto& hs = c.hom(x, c.src(f));
        seen.clear();
        for (Mor g : hs) seen.push_back(c.compose(f, g));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

bool is_epi(const CategoryTable& c, Mor f) {
    std::vector<Mor> seen;
    for (Obj x = 0; x < c.num_objects(); ++x) {
        const auto& hs = c.hom(c.dst(f), x);
        seen.clear();
        for (Mor g : hs) seen.push_back(c.compose(g, f));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

std::optional<Mor> inverse(const CategoryTable& c, Mor f) {
    const Obj a = c.src(f), b = c.dst(f);
    for (Mor g : c.hom(b, a))
        if (c.compose(g, f) == c.identity(a) && c.compose(f, g) == c.identity(b)) return g;
    return std::nullopt;
}

bool is_iso(const CategoryTable& c, Mor f) { return inverse(c, f).has_value(); }

bool is_split_epi(const CategoryTable& c, Mor f) {
    for (Mor s : c.hom(c.dst(f), c.src(f)))
        if (c.compose(f, s) == c.identity(c.dst(f))) return true;
    return false;
}

bool is_initial(const CategoryTable& c, Obj a) {
    for (Obj b = 0; b < c.num_objects(); ++b)
        if (c.hom(a, b).size() != 1) return false;
    return true;
}

bool is_terminal(const CategoryTable& c, Obj a) {
    for (Obj b = 0; b < c.num_objects(); ++b)
        if (c.hom(b, a).size() != 1) return false;
    return true;
}

bool isomorphic(const CategoryTable& c, Obj a, Obj b) {
    for (Mor f : c.hom(a, b))
        if (is_iso(c, f)) return true;
    return false;
}

ValidationReport validate_functor(const FunctorTable& F) {
    ValidationReport rep;
    const auto& S = *F.source;
    const auto& T = *F.target;
    if (static_cast<int>(F.obj_map.size()) != S.num_objects() ||
        static_cast<int>(F.mor_map.size()) != S.num_morphisms()) {
        rep.add("functor tables do not cover the source category");
        return rep;
    }
    for (Obj a = 0; a < S.num_objects(); ++a)
        if (F.obj_map[a] < 0 || F.obj_map[a] >= T.num_objects()) rep.add("object " + S.object_name(a) + " maps outside the target");
    for (Mor f = 0; f < S.num_morphisms(); ++f) {
        const Mor g = F.mor_map[f];
        if (g < 0 || g >= T.num_morphisms()) {
            rep.add("morphism " + S.morphism_name(f) + " maps outside the target");
            continue;
        }
        if (T.src(g) != F.obj_map[S.src(f)] || T.dst(g) != F.obj_map[S.dst(f)])
            rep.add("morphism " + S.morphism_name(f) + " is sent to a morphism of the wrong type");
    }
    if (!rep.ok()) return rep;
    for (Obj a = 0; a < S.num_objects(); ++a)
        if (F.mor_map[S.identity(a)] != T.identity(F.obj_map[a]))
            rep.add("identity of " + S.object_name(a) + " not preserved");
    for (Mor f = 0; f < S.num_morphisms(); ++f)
        for (Mor g : S.out(S.dst(f)))
            if (F.mor_map[S.compose(g, f)] != T.compose(F.mor_map[g], F.mor_map[f]))
                rep.add("composite " + S.morphism_name(g) + "∘" + S.morphism_name(f) + " not preserved");
    return rep;
}

bool is_faithful(const FunctorTable& F) {
    const auto& S = *F.source;
    for (Obj a = 0; a < S.num_objects(); ++a)
        for (Obj b = 0; b < S.num_objects(); ++b) {
            std::set<Mor> images;
            for (Mor f : S.hom(a, b))
                if (!images.insert(F.mor_map[f]).second) return false;
        }
    return true;
}

bool is_full(const FunctorTable& F) {
    const auto& S = *F.source;
    const auto& T = *F.target;
    for (Obj a = 0; a < S.num_objects(); ++a)
        for (Obj b = 0; b < S.num_objects(); ++b) {
            std::set<Mor> images;
            for (Mor f : S.hom(a, b)) images.insert(F.mor_map[f]);
            if (images.size() != T.hom(F.obj_map[a], F.obj_map[b]).size()) return false;
        }
    return true;
}

namespace {

// Counts compatible families of maps between the diagram and x, stopping
// once `cap` is exceeded. `into` selects cocones (diagram → x) or cones.
struct FamilyCounter {
    const CategoryTable& c;
    const Diagram& d;
    Obj x;
    bool cocone;
    std::size_t cap;
    std::vector<Mor> assign;
    std::size_t count = 0;
    std::vector<Mor> first_unmatched{};
    const std::set<std::vector<Mor>>* realised = nullptr;
    std::vector<std::vector<const Diagram::Arrow*>> at{};

    void index_arrows() {
        at.assign(d.objects.size(), {});
        for (const auto& ar : d.arrows) at[std::max(ar.from, ar.to)].push_back(&ar);
    }

    const std::vector<Mor>& candidates(int i) const { return cocone ? c.hom(d.objects[i], x) : c.hom(x, d.objects[i]); }

    bool consistent(int upto) const {
        for (const auto* ar : at[upto]) {
            if (cocone) {
                if (c.compose(assign[ar->to], ar->mor) != assign[ar->from]) return false;
            } else {
                if (c.compose(ar->mor, assign[ar->from]) != assign[ar->to]) return false;
            }
        }
        return true;
    }

    void run(int i) {
        if (count > cap) return;
        if (i == static_cast<int>(d.objects.size())) {
            ++count;
            if (realised && first_unmatched.empty() && !realised->count(assign)) first_unmatched = assign;
            return;
        }
        for (Mor m : candidates(i)) {
            assign[i] = m;
            if (consistent(i)) run(i + 1);
            if (count > cap) return;
        }
    }
};

std::string family_text(const CategoryTable& c, const std::vector<Mor>& fam) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < fam.size(); ++i) os << (i ? ", " : "") << c.morphism_name(fam[i]);
    os << "]";
    return os.str();
}

std::optional<std::string> check_universal(const CategoryTable& c, const Diagram& d, Obj apex,
                                           const std::vector<Mor>& legs, bool cocone) {
    const int k = static_cast<int>(d.objects.size());
    if (static_cast<int>(legs.size()) != k) return std::string("leg count does not match the diagram");
    for (int i = 0; i < k; ++i) {
        const Mor l = legs[i];
        const bool ok = cocone ? (c.src(l) == d.objects[i] && c.dst(l) == apex)
                               : (c.src(l) == apex && c.dst(l) == d.objects[i]);
        if (!ok) return "leg " + std::to_string(i) + " has the wrong type";
    }
    for (const auto& ar : d.arrows) {
        const bool ok = cocone ? c.compose(legs[ar.to], ar.mor) == legs[ar.from]
                               : c.compose(ar.mor, legs[ar.from]) == legs[ar.to];
        if (!ok) return std::string(cocone ? "legs do not form a cocone" : "legs do not form a cone");
    }
    for (Obj x = 0; x < c.num_objects(); ++x) {
        const auto& hs = cocone ? c.hom(apex, x) : c.hom(x, apex);
        std::set<std::vector<Mor>> realised;
        for (Mor h : hs) {
            std::vector<Mor> fam(k);
            for (int i = 0; i < k; ++i) fam[i] = cocone ? c.compose(h, legs[i]) : c.compose(legs[i], h);
            if (!realised.insert(fam).second)
                return "two mediating morphisms into " + c.object_name(x) + " induce the family " + family_text(c, fam);
        }
        FamilyCounter fc{c, d, x, cocone, hs.size(), std::vector<Mor>(k, kNone)};
        fc.realised = &realised;
        fc.index_arrows();
        fc.run(0);
        if (fc.count != hs.size()) {
            std::string fam = fc.first_unmatched.empty() ? std::string("(more families than maps)")
                                                         : family_text(c, fc.first_unmatched);
            return std::string(cocone ? "cocone" : "cone") + " at " + c.object_name(x) + " " + fam +
                   " has no mediating morphism";
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_colimit(const CategoryTable& c, const Diagram& d, Obj apex,
                                         const std::vector<Mor>& legs) {
    return check_universal(c, d, apex, legs, true);
}

std::optional<std::string> check_limit(const CategoryTable& c, const Diagram& d, Obj apex,
                                       const std::vector<Mor>& legs) {
    return check_universal(c, d, apex, legs, false);
}

}  // namespace tensortopo
