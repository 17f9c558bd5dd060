#include <algorithm>
#include <map>
#include <set>

#include "tensortopo/moncat.hpp"

namespace tensortopo {

namespace {

std::string join_names(const std::vector<std::string>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s + "}";
}

void check_square(const std::vector<std::vector<int>>& t, std::size_t n, ErrorKind kind, const char* what) {
    if (t.size() != n) throw Error(kind, std::string(what) + " table has the wrong number of rows");
    for (const auto& row : t) {
        if (row.size() != n) throw Error(kind, std::string(what) + " table is not square");
        for (int x : row)
            if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error(kind, std::string(what) + " table has an out-of-range entry");
    }
}

}  // namespace

MonoidalTable from_posetal(const std::vector<std::string>& elements, const std::vector<std::vector<bool>>& leq,
                           const std::vector<std::vector<int>>& mul, int unit) {
    const int n = static_cast<int>(elements.size());
    CategoryTable c;
    for (const auto& e : elements) c.add_object(e);
    std::vector<Mor> arrow(static_cast<std::size_t>(n) * n, kNone);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq[a][b]) {
                const std::string name = a == b ? "id_" + elements[a] : elements[a] + "->" + elements[b];
                arrow[static_cast<std::size_t>(a) * n + b] = c.add_morphism(name, a, b);
            }
    auto at = [&](int a, int b) { return arrow[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) c.set_identity(a, at(a, a));
    for (Mor f = 0; f < c.num_morphisms(); ++f)
        for (Mor g : c.out(c.dst(f))) {
            const Mor r = at(c.src(f), c.dst(g));
            if (r == kNone) throw Error(ErrorKind::MalformedTable, "order is not transitive");
            c.set_compose(g, f, r);
        }
    std::vector<Obj> tobj(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tobj[static_cast<std::size_t>(a) * n + b] = mul[a][b];
    const int M = c.num_morphisms();
    std::vector<Mor> tmor(static_cast<std::size_t>(M) * M);
    for (Mor f = 0; f < M; ++f)
        for (Mor g = 0; g < M; ++g) {
            const Mor r = at(mul[c.src(f)][c.src(g)], mul[c.dst(f)][c.dst(g)]);
            if (r == kNone)
                throw Error(ErrorKind::MalformedTable, "multiplication is not monotone at (" + c.morphism_name(f) +
                                                           ", " + c.morphism_name(g) + ")");
            tmor[static_cast<std::size_t>(f) * M + g] = r;
        }
    bool commutative = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[a][b] != mul[b][a]) commutative = false;
    std::optional<std::vector<Mor>> sym;
    if (commutative) {
        sym.emplace(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) (*sym)[static_cast<std::size_t>(a) * n + b] = c.identity(mul[a][b]);
    }
    return MonoidalTable(std::move(c), unit, std::move(tobj), std::move(tmor), std::move(sym));
}

MonoidalTable from_semilattice(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& meet) {
    const std::size_t n = elements.size();
    if (n == 0) throw Error(ErrorKind::NotASemilattice, "empty carrier");
    check_square(meet, n, ErrorKind::NotASemilattice, "meet");
    for (std::size_t a = 0; a < n; ++a) {
        if (meet[a][a] != static_cast<int>(a)) throw Error(ErrorKind::NotASemilattice, "meet not idempotent at " + elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (meet[a][b] != meet[b][a])
                throw Error(ErrorKind::NotASemilattice, "meet not commutative at (" + elements[a] + ", " + elements[b] + ")");
            for (std::size_t d = 0; d < n; ++d)
                if (meet[meet[a][b]][d] != meet[a][meet[b][d]])
                    throw Error(ErrorKind::NotASemilattice,
                                "meet not associative at (" + elements[a] + ", " + elements[b] + ", " + elements[d] + ")");
        }
    }
    int top = -1;
    for (std::size_t t = 0; t < n && top < 0; ++t) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a) ok = ok && meet[t][a] == static_cast<int>(a);
        if (ok) top = static_cast<int>(t);
    }
    if (top < 0) throw Error(ErrorKind::NotASemilattice, "no top element");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) leq[a][b] = meet[a][b] == static_cast<int>(a);
    return from_posetal(elements, leq, meet, top);
}

MonoidalTable from_quantale(const std::vector<std::string>& elements, const std::vector<std::vector<bool>>& leq,
                            const std::vector<std::vector<int>>& mul, int unit) {
    const std::size_t n = elements.size();
    if (n == 0) throw Error(ErrorKind::NotAQuantale, "empty carrier");
    check_square(mul, n, ErrorKind::NotAQuantale, "multiplication");
    if (leq.size() != n) throw Error(ErrorKind::NotAQuantale, "order table has the wrong size");
    for (const auto& row : leq)
        if (row.size() != n) throw Error(ErrorKind::NotAQuantale, "order table is not square");
    if (unit < 0 || static_cast<std::size_t>(unit) >= n) throw Error(ErrorKind::NotAQuantale, "unit out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq[a][a]) throw Error(ErrorKind::NotAQuantale, "order not reflexive at " + elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq[a][b] && leq[b][a]) throw Error(ErrorKind::NotAQuantale, "order not antisymmetric");
            for (std::size_t d = 0; d < n; ++d)
                if (leq[a][b] && leq[b][d] && !leq[a][d]) throw Error(ErrorKind::NotAQuantale, "order not transitive");
        }
    }
    // joins of arbitrary subsets, computed as least upper bounds
    auto lub = [&](const std::vector<int>& xs) -> int {
        int best = -1;
        for (std::size_t c = 0; c < n; ++c) {
            bool upper = true;
            for (int x : xs) upper = upper && leq[x][c];
            if (!upper) continue;
            if (best < 0 || leq[c][best]) best = static_cast<int>(c);
        }
        if (best < 0) return -1;
        for (std::size_t c = 0; c < n; ++c) {
            bool upper = true;
            for (int x : xs) upper = upper && leq[x][c];
            if (upper && !leq[best][c]) return -1;
        }
        return best;
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[unit][a] != static_cast<int>(a) || mul[a][unit] != static_cast<int>(a))
            throw Error(ErrorKind::NotAQuantale, "unit law fails at " + elements[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                if (mul[mul[a][b]][d] != mul[a][mul[b][d]])
                    throw Error(ErrorKind::NotAQuantale, "multiplication not associative");
    }
    const bool exhaustive = n <= 16;
    const std::size_t limit = exhaustive ? (std::size_t{1} << n) : 0;
    auto check_subset = [&](const std::vector<int>& s) {
        const int j = lub(s);
        if (j < 0) throw Error(ErrorKind::NotAQuantale, "order is not a complete lattice");
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<int> left, right;
            for (int x : s) {
                left.push_back(mul[u][x]);
                right.push_back(mul[x][u]);
            }
            if (mul[u][j] != lub(left))
                throw Error(ErrorKind::NotAQuantale, "left distributivity fails for " + elements[u]);
            if (mul[j][u] != lub(right))
                throw Error(ErrorKind::NotAQuantale, "right distributivity fails for " + elements[u]);
        }
    };
    if (exhaustive) {
        for (std::size_t mask = 0; mask < limit; ++mask) {
            std::vector<int> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(static_cast<int>(i));
            check_subset(s);
        }
    } else {
        check_subset({});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) check_subset({static_cast<int>(a), static_cast<int>(b)});
    }
    return from_posetal(elements, leq, mul, unit);
}

MonoidalTable from_topology(const std::vector<std::string>& points, const std::vector<std::vector<std::string>>& opens) {
    const std::size_t np = points.size();
    if (np > 62) throw Error(ErrorKind::NotATopology, "too many points");
    std::map<std::string, int> pidx;
    for (std::size_t i = 0; i < np; ++i)
        if (!pidx.emplace(points[i], static_cast<int>(i)).second) throw Error(ErrorKind::NotATopology, "duplicate point " + points[i]);
    std::vector<std::uint64_t> masks;
    std::map<std::uint64_t, int> index;
    for (const auto& o : opens) {
        std::uint64_t m = 0;
        for (const auto& p : o) {
            auto it = pidx.find(p);
            if (it == pidx.end()) throw Error(ErrorKind::NotATopology, "unknown point " + p);
            m |= std::uint64_t{1} << it->second;
        }
        if (!index.emplace(m, static_cast<int>(masks.size())).second)
            throw Error(ErrorKind::NotATopology, "duplicate open set");
        masks.push_back(m);
    }
    const std::uint64_t full = np == 0 ? 0 : (np == 64 ? ~0ull : ((std::uint64_t{1} << np) - 1));
    if (!index.count(0)) throw Error(ErrorKind::NotATopology, "empty set is not open");
    if (!index.count(full)) throw Error(ErrorKind::NotATopology, "whole space is not open");
    const std::size_t n = masks.size();
    auto name = [&](std::uint64_t m) {
        std::vector<std::string> xs;
        for (std::size_t i = 0; i < np; ++i)
            if (m >> i & 1) xs.push_back(points[i]);
        return join_names(xs);
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!index.count(masks[a] & masks[b]))
                throw Error(ErrorKind::NotATopology, "intersection " + name(masks[a] & masks[b]) + " is not open");
            if (!index.count(masks[a] | masks[b]))
                throw Error(ErrorKind::NotATopology, "union " + name(masks[a] | masks[b]) + " is not open");
        }
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(name(masks[a]));
        for (std::size_t b = 0; b < n; ++b) {
            leq[a][b] = (masks[a] & ~masks[b]) == 0;
            meet[a][b] = index[masks[a] & masks[b]];
        }
    }
    return from_posetal(names, leq, meet, index[full]);
}

MonoidalTable from_boolean(int atoms) {
    if (atoms < 0 || atoms > 8) throw Error(ErrorKind::NotASemilattice, "atom count out of range");
    const int n = 1 << atoms;
    const int full = n - 1;
    std::vector<std::string> names(n);
    for (int m = 0; m < n; ++m) {
        if (m == 0) names[m] = "0";
        else if (m == full) names[m] = "1";
        else
            for (int i = 0; i < atoms; ++i)
                if (m >> i & 1) names[m] += static_cast<char>('a' + i);
    }
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) meet[a][b] = a & b;
    return from_semilattice(names, meet);
}

MonoidalTable from_chain(int n) {
    if (n < 1) throw Error(ErrorKind::NotASemilattice, "chain needs at least one element");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        if (i == n - 1) names[i] = "1";
        else if (i == 0) names[i] = "0";
        else names[i] = n == 3 ? "m" : "m" + std::to_string(i);
    }
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) meet[a][b] = std::min(a, b);
    return from_semilattice(names, meet);
}

MonoidalTable from_monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& mul, int unit) {
    const std::size_t n = elements.size();
    if (n == 0) throw Error(ErrorKind::NotAMonoid, "empty carrier");
    check_square(mul, n, ErrorKind::NotAMonoid, "multiplication");
    if (unit < 0 || static_cast<std::size_t>(unit) >= n) throw Error(ErrorKind::NotAMonoid, "unit out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[unit][a] != static_cast<int>(a) || mul[a][unit] != static_cast<int>(a))
            throw Error(ErrorKind::NotAMonoid, "unit law fails at " + elements[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                if (mul[mul[a][b]][d] != mul[a][mul[b][d]])
                    throw Error(ErrorKind::NotAMonoid,
                                "not associative at (" + elements[a] + ", " + elements[b] + ", " + elements[d] + ")");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] != mul[b][a])
                throw Error(ErrorKind::NonCommutative, elements[a] + "·" + elements[b] + " ≠ " + elements[b] + "·" + elements[a]);
    CategoryTable c;
    c.add_object("*");
    for (const auto& e : elements) c.add_morphism(e, 0, 0);
    c.set_identity(0, unit);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) c.set_compose(static_cast<Mor>(a), static_cast<Mor>(b), mul[a][b]);
    std::vector<Mor> tmor(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tmor[a * n + b] = mul[a][b];
    return MonoidalTable(std::move(c), 0, {0}, std::move(tmor), std::vector<Mor>{static_cast<Mor>(unit)});
}

MonoidalTable from_table_spec(const TableSpec& spec) {
    CategoryTable c;
    std::map<std::string, Obj> oid;
    for (const auto& o : spec.objects) {
        if (oid.count(o)) throw Error(ErrorKind::MalformedTable, "duplicate object " + o);
        oid[o] = c.add_object(o);
    }
    auto obj = [&](const std::string& s) {
        auto it = oid.find(s);
        if (it == oid.end()) throw Error(ErrorKind::MalformedTable, "unknown object " + s);
        return it->second;
    };
    std::map<std::string, Mor> mid;
    for (const auto& h : spec.homs)
        for (const auto& name : h.morphisms) {
            if (mid.count(name)) throw Error(ErrorKind::MalformedTable, "duplicate morphism " + name);
            mid[name] = c.add_morphism(name, obj(h.src), obj(h.dst));
        }
    auto mor = [&](const std::string& s) {
        auto it = mid.find(s);
        if (it == mid.end()) throw Error(ErrorKind::MalformedTable, "unknown morphism " + s);
        return it->second;
    };
    for (const auto& e : spec.compose) c.set_compose(mor(e.g), mor(e.f), mor(e.result));
    for (Obj a = 0; a < c.num_objects(); ++a) {
        auto named = mid.find("id_" + spec.objects[a]);
        if (named != mid.end() && c.src(named->second) == a && c.dst(named->second) == a) {
            c.set_identity(a, named->second);
            continue;
        }
        Mor found = kNone;
        for (Mor e : c.hom(a, a)) {
            bool unit = true;
            for (Mor f = 0; f < c.num_morphisms() && unit; ++f) {
                if (c.dst(f) == a && c.compose(e, f) != f) unit = false;
                if (c.src(f) == a && c.compose(f, e) != f) unit = false;
            }
            if (unit) {
                found = e;
                break;
            }
        }
        if (found == kNone) throw Error(ErrorKind::MalformedTable, "object " + spec.objects[a] + " has no identity");
        c.set_identity(a, found);
    }
    c.check_well_formed();
    const int n = c.num_objects(), M = c.num_morphisms();
    std::vector<Obj> tobj(static_cast<std::size_t>(n) * n, kNone);
    for (const auto& t : spec.tensor_obj) tobj[static_cast<std::size_t>(obj(t.a)) * n + obj(t.b)] = obj(t.result);
    std::vector<Mor> tmor(static_cast<std::size_t>(M) * M, kNone);
    for (const auto& t : spec.tensor_mor) tmor[static_cast<std::size_t>(mor(t.f)) * M + mor(t.g)] = mor(t.result);
    std::optional<std::vector<Mor>> sym;
    if (spec.symmetry) {
        sym.emplace(static_cast<std::size_t>(n) * n, kNone);
        for (const auto& s : *spec.symmetry) (*sym)[static_cast<std::size_t>(obj(s.a)) * n + obj(s.b)] = mor(s.morphism);
    }
    return MonoidalTable(std::move(c), obj(spec.unit), std::move(tobj), std::move(tmor), std::move(sym));
}

TableSpec to_table_spec(const MonoidalTable& m) {
    const auto& c = m.base();
    TableSpec s;
    for (Obj a = 0; a < c.num_objects(); ++a) s.objects.push_back(c.object_name(a));
    s.unit = c.object_name(m.unit());
    for (Obj a = 0; a < c.num_objects(); ++a)
        for (Obj b = 0; b < c.num_objects(); ++b) {
            const auto& h = c.hom(a, b);
            if (h.empty()) continue;
            TableSpec::Hom hs{c.object_name(a), c.object_name(b), {}};
            for (Mor f : h) hs.morphisms.push_back(c.morphism_name(f));
            s.homs.push_back(std::move(hs));
        }
    for (Mor g = 0; g < c.num_morphisms(); ++g)
        for (Mor f = 0; f < c.num_morphisms(); ++f)
            if (c.dst(f) == c.src(g))
                s.compose.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
    for (Obj a = 0; a < c.num_objects(); ++a)
        for (Obj b = 0; b < c.num_objects(); ++b)
            s.tensor_obj.push_back({c.object_name(a), c.object_name(b), c.object_name(m.tensor(a, b))});
    for (Mor f = 0; f < c.num_morphisms(); ++f)
        for (Mor g = 0; g < c.num_morphisms(); ++g)
            s.tensor_mor.push_back({c.morphism_name(f), c.morphism_name(g), c.morphism_name(m.tensor_mor(f, g))});
    if (m.has_symmetry()) {
        s.symmetry.emplace();
        for (Obj a = 0; a < c.num_objects(); ++a)
            for (Obj b = 0; b < c.num_objects(); ++b)
                s.symmetry->push_back({c.object_name(a), c.object_name(b), c.morphism_name(m.symmetry(a, b))});
    }
    return s;
}

}  // namespace tensortopo
