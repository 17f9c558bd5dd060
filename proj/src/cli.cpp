#include "tensortopo/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace tensortopo {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::SchemaError, path + ": " + msg);
}

const ojson& field(const ojson& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path, "missing field '" + key + "'");
    return *it;
}

std::string str(const ojson& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> str_list(const ojson& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

int element_index(const ojson& j, const std::vector<std::string>& names, const std::string& path) {
    if (j.is_number_integer()) {
        const int i = j.get<int>();
        if (i < 0 || i >= static_cast<int>(names.size())) schema(path, "index out of range");
        return i;
    }
    const std::string s = str(j, path);
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) schema(path, "unknown element '" + s + "'");
    return static_cast<int>(it - names.begin());
}

std::vector<std::vector<int>> square_table(const ojson& j, const std::vector<std::string>& names,
                                           const std::string& path) {
    const std::size_t n = names.size();
    if (!j.is_array() || j.size() != n) schema(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " table");
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        const std::string row = path + "[" + std::to_string(a) + "]";
        if (!j[a].is_array() || j[a].size() != n) schema(row, "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) out[a][b] = element_index(j[a][b], names, row + "[" + std::to_string(b) + "]");
    }
    return out;
}

TableSpec table_spec_of(const ojson& p) {
    TableSpec t;
    t.objects = str_list(field(p, "objects", "payload"), "payload.objects");
    t.unit = str(field(p, "unit", "payload"), "payload.unit");
    const auto& homs = field(p, "homs", "payload");
    if (!homs.is_array()) schema("payload.homs", "expected an array");
    for (std::size_t i = 0; i < homs.size(); ++i) {
        const std::string q = "payload.homs[" + std::to_string(i) + "]";
        t.homs.push_back({str(field(homs[i], "src", q), q + ".src"), str(field(homs[i], "dst", q), q + ".dst"),
                          str_list(field(homs[i], "morphisms", q), q + ".morphisms")});
    }
    auto triples = [&](const char* key, const char* x, const char* y, const char* z) {
        std::vector<std::array<std::string, 3>> out;
        const auto& arr = field(p, key, "payload");
        const std::string base = std::string("payload.") + key;
        if (!arr.is_array()) schema(base, "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string q = base + "[" + std::to_string(i) + "]";
            out.push_back({str(field(arr[i], x, q), q + "." + x), str(field(arr[i], y, q), q + "." + y),
                           str(field(arr[i], z, q), q + "." + z)});
        }
        return out;
    };
    for (auto& [g, f, r] : triples("compose", "g", "f", "result")) t.compose.push_back({g, f, r});
    for (auto& [a, b, r] : triples("tensor_obj", "a", "b", "result")) t.tensor_obj.push_back({a, b, r});
    for (auto& [f, g, r] : triples("tensor_mor", "f", "g", "result")) t.tensor_mor.push_back({f, g, r});
    if (p.contains("symmetry")) {
        t.symmetry.emplace();
        for (auto& [a, b, s] : triples("symmetry", "a", "b", "morphism")) t.symmetry->push_back({a, b, s});
    }
    return t;
}

ojson table_spec_json(const TableSpec& t) {
    ojson p;
    p["objects"] = t.objects;
    p["unit"] = t.unit;
    p["homs"] = ojson::array();
    for (const auto& h : t.homs) p["homs"].push_back({{"src", h.src}, {"dst", h.dst}, {"morphisms", h.morphisms}});
    p["compose"] = ojson::array();
    for (const auto& c : t.compose) p["compose"].push_back({{"g", c.g}, {"f", c.f}, {"result", c.result}});
    p["tensor_obj"] = ojson::array();
    for (const auto& c : t.tensor_obj) p["tensor_obj"].push_back({{"a", c.a}, {"b", c.b}, {"result", c.result}});
    p["tensor_mor"] = ojson::array();
    for (const auto& c : t.tensor_mor) p["tensor_mor"].push_back({{"f", c.f}, {"g", c.g}, {"result", c.result}});
    if (t.symmetry) {
        p["symmetry"] = ojson::array();
        for (const auto& s : *t.symmetry) p["symmetry"].push_back({{"a", s.a}, {"b", s.b}, {"morphism", s.morphism}});
    }
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ojson parse_json(const std::string& text, const std::string& origin) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError,
                    origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

std::vector<std::pair<int, int>> hasse(const ZILattice& zi) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < zi.size(); ++a)
        for (int b = 0; b < zi.size(); ++b) {
            if (a == b || !zi.leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < zi.size() && cover; ++c)
                if (c != a && c != b && zi.leq(a, c) && zi.leq(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

ojson verdict_json(const Verdict& v) {
    ojson j;
    j["status"] = to_string(v.status);
    j["witness"] = v.witness;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

ojson zi_json(const ZILattice& zi, const CategoryTable& c) {
    const auto names = zi.names(c);
    ojson j;
    j["classes"] = names;
    j["hasse"] = ojson::array();
    for (auto [a, b] : hasse(zi)) j["hasse"].push_back({names[a], names[b]});
    j["top"] = zi.top >= 0 ? ojson(names[zi.top]) : ojson(nullptr);
    j["bottom"] = zi.bottom ? ojson(names[*zi.bottom]) : ojson(nullptr);
    j["members"] = zi.members.size();
    std::size_t max_sigma = 0;
    for (const auto& r : zi.members) max_sigma = std::max(max_sigma, r.half_braidings.size());
    j["max_half_braidings"] = max_sigma;
    return j;
}

ojson config_json(const RunConfig& cfg) {
    return {{"budget_halfbraiding", cfg.halfbraiding_budget},
            {"budget_completion", cfg.completion_budget},
            {"jobs", cfg.jobs},
            {"seed", cfg.seed}};
}

int class_by_name(const ZILattice& zi, const CategoryTable& c, const std::string& name) {
    const auto names = zi.names(c);
    for (int k = 0; k < zi.size(); ++k)
        if (names[k] == name) return k;
    throw Error(ErrorKind::SchemaError, "--at: '" + name + "' is not a central idempotent");
}

}  // namespace

CategoryDescription parse_description_text(const std::string& text, const std::string& origin) {
    const ojson j = parse_json(text, origin);
    if (!j.is_object()) schema(origin, "top level must be an object");
    CategoryDescription d;
    d.name = j.contains("name") ? str(j["name"], "name") : std::string();
    d.kind = str(field(j, "kind", "<top>"), "kind");
    static const std::set<std::string> kinds{"table", "semilattice", "quantale", "topology", "boolean", "monoid"};
    if (!kinds.count(d.kind)) schema("kind", "unknown kind '" + d.kind + "'");
    if (j.contains("payload")) {
        d.payload = j["payload"];
    } else {
        d.payload = ojson::object();
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "name" && it.key() != "kind") d.payload[it.key()] = it.value();
    }
    if (!d.payload.is_object()) schema("payload", "expected an object");
    return d;
}

CategoryDescription parse_description(const std::string& path) { return parse_description_text(read_file(path), path); }

std::string emit_description(const CategoryDescription& d) {
    ojson j;
    j["name"] = d.name;
    j["kind"] = d.kind;
    j["payload"] = d.kind == "table" ? table_spec_json(table_spec_of(d.payload)) : d.payload;
    return j.dump(2) + "\n";
}

CategoryDescription describe_table(const std::string& name, const MonoidalTable& m) {
    return {name, "table", table_spec_json(to_table_spec(m))};
}

MonoidalTable build(const CategoryDescription& d) {
    const ojson& p = d.payload;
    try {
        if (d.kind == "table") return from_table_spec(table_spec_of(p));
        if (d.kind == "boolean") {
            const auto& a = field(p, "atoms", "payload");
            if (!a.is_number_integer() || a.get<int>() < 0 || a.get<int>() > 8) schema("payload.atoms", "expected 0..8");
            return from_boolean(a.get<int>());
        }
        if (d.kind == "topology") {
            const auto points = str_list(field(p, "points", "payload"), "payload.points");
            const auto& opens = field(p, "opens", "payload");
            if (!opens.is_array()) schema("payload.opens", "expected an array");
            std::vector<std::vector<std::string>> os;
            for (std::size_t i = 0; i < opens.size(); ++i)
                os.push_back(str_list(opens[i], "payload.opens[" + std::to_string(i) + "]"));
            return from_topology(points, os);
        }
        const auto elements = str_list(field(p, "elements", "payload"), "payload.elements");
        if (d.kind == "semilattice") return from_semilattice(elements, square_table(field(p, "meet", "payload"), elements, "payload.meet"));
        const auto mul = square_table(field(p, "mul", "payload"), elements, "payload.mul");
        const int unit = element_index(field(p, "unit", "payload"), elements, "payload.unit");
        if (d.kind == "monoid") return from_monoid(elements, mul, unit);
        // quantale: leq given as pairs [a, b], closed reflexively and transitively
        const std::size_t n = elements.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
        const auto& pairs = field(p, "leq", "payload");
        if (!pairs.is_array()) schema("payload.leq", "expected an array of pairs");
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::string q = "payload.leq[" + std::to_string(i) + "]";
            if (!pairs[i].is_array() || pairs[i].size() != 2) schema(q, "expected a pair");
            leq[element_index(pairs[i][0], elements, q)][element_index(pairs[i][1], elements, q)] = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (leq[a][k] && leq[k][b]) leq[a][b] = true;
        return from_quantale(elements, leq, mul, unit);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError || e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::SchemaError, (d.name.empty() ? d.kind : d.name) + ": " + e.what());
    }
}

MonoidalFunctorTable parse_functor(const std::string& path, std::shared_ptr<const MonoidalTable> source,
                                   std::shared_ptr<const MonoidalTable> target) {
    const ojson j = parse_json(read_file(path), path);
    const CategoryTable& cs = source->base();
    const CategoryTable& ct = target->base();
    const auto& om = field(j, "obj_map", path);
    if (!om.is_object()) schema("obj_map", "expected an object");
    std::vector<Obj> obj_map(cs.num_objects(), kNone);
    for (auto it = om.begin(); it != om.end(); ++it) {
        auto a = cs.find_object(it.key());
        auto b = ct.find_object(str(it.value(), "obj_map." + it.key()));
        if (!a || !b) schema("obj_map." + it.key(), "unknown object");
        obj_map[*a] = *b;
    }
    for (Obj a = 0; a < cs.num_objects(); ++a)
        if (obj_map[a] == kNone) schema("obj_map", "no image for " + cs.object_name(a));
    MonoidalFunctorTable F;
    if (!j.contains("mor_map")) {
        if (!ct.posetal()) schema("mor_map", "required when the target is not posetal");
        F = posetal_functor(source, target, obj_map);
    } else {
        F.source = source;
        F.target = target;
        F.functor.source = std::shared_ptr<const CategoryTable>(source, &source->base());
        F.functor.target = std::shared_ptr<const CategoryTable>(target, &target->base());
        F.functor.obj_map = obj_map;
        F.functor.mor_map.assign(cs.num_morphisms(), kNone);
        const auto& mm = j["mor_map"];
        for (auto it = mm.begin(); it != mm.end(); ++it) {
            auto f = cs.find_morphism(it.key());
            auto g = ct.find_morphism(str(it.value(), "mor_map." + it.key()));
            if (!f || !g) schema("mor_map." + it.key(), "unknown morphism");
            F.functor.mor_map[*f] = *g;
        }
        auto unique = [&](Obj a, Obj b) { return ct.hom(a, b).size() == 1 ? ct.hom(a, b)[0] : kNone; };
        F.theta_unit = unique(target->unit(), obj_map[source->unit()]);
        const int n = cs.num_objects();
        F.theta.assign(static_cast<std::size_t>(n) * n, kNone);
        for (Obj a = 0; a < n; ++a)
            for (Obj b = 0; b < n; ++b)
                F.theta[static_cast<std::size_t>(a) * n + b] =
                    unique(target->tensor(obj_map[a], obj_map[b]), obj_map[source->tensor(a, b)]);
    }
    if (j.contains("theta_unit")) {
        auto t = ct.find_morphism(str(j["theta_unit"], "theta_unit"));
        if (!t) schema("theta_unit", "unknown morphism");
        F.theta_unit = *t;
    }
    if (j.contains("theta")) {
        const auto& th = j["theta"];
        for (std::size_t i = 0; i < th.size(); ++i) {
            const std::string q = "theta[" + std::to_string(i) + "]";
            auto a = cs.find_object(str(field(th[i], "a", q), q + ".a"));
            auto b = cs.find_object(str(field(th[i], "b", q), q + ".b"));
            auto t = ct.find_morphism(str(field(th[i], "morphism", q), q + ".morphism"));
            if (!a || !b || !t) schema(q, "unknown name");
            F.theta[static_cast<std::size_t>(*a) * cs.num_objects() + *b] = *t;
        }
    }
    for (Mor f = 0; f < cs.num_morphisms(); ++f)
        if (F.functor.mor_map[f] == kNone) schema("mor_map", "no image for " + cs.morphism_name(f));
    return F;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TENSORTOPO_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "TENSORTOPO_SEED is not an unsigned integer");
        }
    }
    return 0;
}

int exit_code(const SheafReport& r) { return r.all_pass() ? 0 : 1; }

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::HypothesisNotMet:
        case ErrorKind::NotStiff:
        case ErrorKind::NotDistributive:
        case ErrorKind::NotAFrame:
        case ErrorKind::NotSymmetric:
        case ErrorKind::NotCartesian:
        case ErrorKind::CoherenceNotInvertible:
            return 1;
        default:
            return 2;
    }
}

ojson report_json(const std::string& name, const SheafReport& r, const MonoidalTable& m, const RunConfig& cfg) {
    const CategoryTable& c = m.base();
    const auto names = r.zi.names(c);
    ojson j;
    j["name"] = name;
    j["config"] = config_json(cfg);
    j["zi"] = zi_json(r.zi, c);
    ojson sp;
    sp["points"] = ojson::array();
    for (const auto& p : r.space.points) {
        ojson pt = ojson::array();
        for (int k : p.members()) pt.push_back(names[k]);
        sp["points"].push_back(pt);
    }
    sp["basis"] = ojson::object();
    for (std::size_t k = 0; k < r.space.basis.size(); ++k) {
        ojson idx = ojson::array();
        for (std::size_t p = 0; p < r.space.basis[k].size(); ++p)
            if (r.space.basis[k][p]) idx.push_back(p);
        sp["basis"][names[k]] = idx;
    }
    sp["opens"] = r.space.opens.size();
    j["spectrum"] = sp;
    j["verdicts"] = ojson::object();
    for (const auto& [k, v] : r.verdicts) j["verdicts"][k] = verdict_json(v);
    j["stalks"] = ojson::array();
    for (const auto& s : r.stalk_summaries) {
        ojson pt = ojson::array();
        for (int k : s.point) pt.push_back(names[k]);
        j["stalks"].push_back({{"point", pt},
                               {"minimum", s.minimum >= 0 ? ojson(names[s.minimum]) : ojson(nullptr)},
                               {"zi", s.zi_size},
                               {"local", s.vee_local && s.bigvee_local},
                               {"two_valued", s.two_valued}});
    }
    j["global_sections_count"] = r.global_sections_count;
    j["zero_section_terminal"] = r.zero_section_terminal;
    if (cfg.verbose) {
        ojson secs = ojson::object();
        for (std::size_t k = 0; k < r.sections.size(); ++k)
            if (r.sections[k].table) secs[names[k]] = table_spec_json(to_table_spec(*r.sections[k].table));
        j["sections"] = secs;
    }
    j["exit"] = exit_code(r);
    return j;
}

std::string zi_dot(const std::string& name, const ZILattice& zi, const SpectrumSpace* space, const CategoryTable& c) {
    const auto names = zi.names(c);
    auto q = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << q(name.empty() ? "zi" : name) << " {\n  rankdir=BT;\n  subgraph cluster_zi {\n    label=\"ZI\";\n";
    for (int k = 0; k < zi.size(); ++k) os << "    z" << k << " [label=" << q(names[k]) << "];\n";
    for (auto [a, b] : hasse(zi)) os << "    z" << a << " -> z" << b << ";\n";
    os << "  }\n";
    if (space && !space->points.empty()) {
        os << "  subgraph cluster_spectrum {\n    label=\"Spec\";\n";
        for (std::size_t p = 0; p < space->points.size(); ++p) {
            std::string label = "{";
            bool first = true;
            for (int k : space->points[p].members()) {
                label += (first ? "" : ",") + names[k];
                first = false;
            }
            os << "    p" << p << " [shape=box,label=" << q(label + "}") << "];\n";
        }
        os << "  }\n";
        for (std::size_t k = 0; k < space->basis.size(); ++k)
            for (std::size_t p = 0; p < space->basis[k].size(); ++p)
                if (space->basis[k][p]) os << "  z" << k << " -> p" << p << " [style=dashed,arrowhead=none];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_report(const std::string& name, const SheafReport& r, const MonoidalTable& m, const RunConfig& cfg) {
    if (cfg.format == "dot") return zi_dot(name, r.zi, &r.space, m.base());
    return report_json(name, r, m, cfg).dump(2) + "\n";
}

namespace {

int cmd_validate(const CategoryDescription& d, const MonoidalTable& m, std::ostream& out) {
    const auto v = validate_monoidal(m);
    ojson j{{"name", d.name}, {"kind", d.kind}, {"objects", m.num_objects()}, {"morphisms", m.num_morphisms()},
            {"symmetric", m.has_symmetry()}, {"valid", v.ok()}, {"violations", v.violations}};
    out << j.dump(2) << "\n";
    return v.ok() ? 0 : 1;
}

int cmd_zi(const CategoryDescription& d, const MonoidalTable& m, const RunConfig& cfg, std::ostream& out) {
    ZILattice zi = central_idempotents(m, {cfg.halfbraiding_budget, cfg.jobs});
    if (cfg.format == "dot") {
        out << zi_dot(d.name, zi, nullptr, m.base());
        return 0;
    }
    const auto names = zi.names(m.base());
    ojson j{{"name", d.name}, {"config", config_json(cfg)}, {"zi", zi_json(zi, m.base())}};
    ojson meets = ojson::array();
    for (int a = 0; a < zi.size(); ++a) {
        ojson row = ojson::array();
        for (int b = 0; b < zi.size(); ++b) row.push_back(names[zi.meet(a, b)]);
        meets.push_back(row);
    }
    j["meet"] = meets;
    ojson subunits = ojson::array();
    for (int k = 0; k < zi.size(); ++k)
        if (is_subunit(m, zi.classes[k])) subunits.push_back(names[k]);
    j["subunits"] = subunits;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_spectrum(const CategoryDescription& d, const MonoidalTable& m, const RunConfig& cfg, std::ostream& out) {
    ZILattice zi = central_idempotents(m, {cfg.halfbraiding_budget, cfg.jobs});
    const LatticeModel L = lattice_of(zi, m.base());
    const SpectrumSpace sp = spectrum(L);
    if (cfg.format == "dot") {
        out << zi_dot(d.name, zi, &sp, m.base());
        return 0;
    }
    ojson pts = ojson::array();
    for (const auto& p : sp.points) {
        ojson pt = ojson::array();
        for (int k : p.members()) pt.push_back(L.name(k));
        pts.push_back(pt);
    }
    const Verdict compact = check_basis_compact(sp);
    const SpatialResult spatial = is_spatial(L);
    ojson j{{"name", d.name},
            {"points", pts},
            {"opens", sp.opens.size()},
            {"basis_compact", verdict_json(compact)},
            {"spatial", verdict_json(spatial.verdict)}};
    out << j.dump(2) << "\n";
    return compact.passed() && spatial.verdict.passed() ? 0 : 1;
}

int cmd_restrict(const CategoryDescription& d, std::shared_ptr<const MonoidalTable> m, const CommandArgs& a,
                 std::ostream& out) {
    ZILattice zi = central_idempotents(*m, {a.config.halfbraiding_budget, a.config.jobs});
    const int u = class_by_name(zi, m->base(), a.at);
    const RestrictionCategory rc = restrict(m, zi, u);
    const auto v = validate_monoidal(*rc.table);
    const CategoryTable& t = rc.table->base();
    ojson homs = ojson::array();
    for (Obj x = 0; x < t.num_objects(); ++x)
        for (Obj y = 0; y < t.num_objects(); ++y)
            if (!t.hom(x, y).empty())
                homs.push_back({{"src", t.object_name(x)}, {"dst", t.object_name(y)}, {"count", t.hom(x, y).size()}});
    ojson j{{"name", d.name},        {"at", a.at},         {"objects", t.num_objects()}, {"morphisms", t.num_morphisms()},
            {"valid", v.ok()},       {"violations", v.violations}, {"homs", homs},
            {"zi_of_restriction", verdict_json(check_zi_of_restriction(*m, zi, rc))}};
    if (a.config.verbose) j["table"] = table_spec_json(to_table_spec(*rc.table));
    out << j.dump(2) << "\n";
    return v.ok() ? 0 : 1;
}

int cmd_represent(const CategoryDescription& d, std::shared_ptr<const MonoidalTable> m, const RunConfig& cfg,
                  const std::string& only, std::ostream& out) {
    const SheafReport r = represent(m, {cfg.halfbraiding_budget, 200'000, cfg.jobs});
    if (only.empty()) {
        out << emit_report(d.name, r, *m, cfg);
        return exit_code(r);
    }
    // a subset of the report for the narrower subcommands
    const ojson full = report_json(d.name, r, *m, cfg);
    static const std::map<std::string, std::vector<std::string>> keys{
        {"stalks", {"stalk_colimit", "stalk_locality", "zi_of_stalk", "stalk_inherits"}},
        {"sheaf-check", {"universal_finite_joins", "universal_joins", "sheaf_equalizer", "zero_section", "global_sections"}},
        {"embed-product", {"universal_finite_joins", "universal_joins", "product_embedding"}}};
    ojson j{{"name", d.name}, {"config", config_json(cfg)}};
    ojson vs = ojson::object();
    bool ok = true;
    for (const auto& k : keys.at(only)) {
        vs[k] = full["verdicts"][k];
        ok = ok && vs[k]["status"] != "fail";
    }
    if (!r.verdict("universal_finite_joins")->passed()) ok = false;
    if (only == "stalks") {
        j["points"] = full["spectrum"]["points"];
        j["stalks"] = full["stalks"];
    }
    j["verdicts"] = vs;
    j["exit"] = ok ? 0 : 1;
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_complete(const CategoryDescription& d, std::shared_ptr<const MonoidalTable> m, const CommandArgs& a,
                 std::ostream& out) {
    const RunConfig& cfg = a.config;
    ZILattice zi = central_idempotents(*m, {cfg.halfbraiding_budget, cfg.jobs});
    const Completion D = build_completion(m, zi, {cfg.completion_budget, false});
    const CategoryTable& t = D.table->base();
    ojson j{{"name", d.name},
            {"config", config_json(cfg)},
            {"downsets", D.downsets.size()},
            {"objects", t.num_objects()},
            {"morphisms", t.num_morphisms()}};
    ojson vs = ojson::object();
    bool ok = true;
    auto put = [&](const std::string& k, const Verdict& v) {
        vs[k] = verdict_json(v);
        ok = ok && !v.failed();
    };
    const auto vm = validate_monoidal(*D.table);
    put("monoidal", vm.ok() ? Verdict::pass() : Verdict::fail(vm.violations.front()));
    std::mt19937_64 rng(cfg.seed);
    const int spots = std::min(20, t.num_morphisms());
    Verdict unit_laws = Verdict::pass(std::to_string(spots) + " random morphisms");
    for (int i = 0; i < spots; ++i) {
        const Mor f = static_cast<Mor>(rng() % static_cast<std::uint64_t>(t.num_morphisms()));
        if (t.compose(t.identity(t.dst(f)), f) != f || t.compose(f, t.identity(t.src(f))) != f)
            unit_laws = Verdict::fail("unit law fails at " + t.morphism_name(f));
    }
    put("unit_laws_spot_check", unit_laws);
    put("zi_completion", check_zi_completion(D, cfg.halfbraiding_budget));
    put("universal_joins", check_completion_joins(D));
    put("embed", embed(D).verdict);
    if (!a.target.empty()) {
        if (a.functor.empty()) throw Error(ErrorKind::SchemaError, "--target needs --functor");
        const CategoryDescription td = parse_description(a.target);
        auto target = std::make_shared<const MonoidalTable>(build(td));
        const MonoidalFunctorTable F = parse_functor(a.functor, m, target);
        const auto fv = validate_monoidal_functor(F);
        if (!fv.ok()) throw Error(ErrorKind::HypothesisNotMet, "functor is not monoidal: " + fv.violations.front());
        const Extension X = extend_functor(F, D);
        put("triangle", X.triangle);
        put("uniqueness", X.uniqueness);
    }
    j["verdicts"] = vs;
    j["exit"] = ok ? 0 : 1;
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::string& command, const CommandArgs& a, std::ostream& out, std::ostream& err) {
    try {
        if (a.config.format != "json" && a.config.format != "dot")
            throw Error(ErrorKind::SchemaError, "--format must be json or dot");
        if (a.config.halfbraiding_budget == 0 || a.config.completion_budget == 0 || a.config.jobs < 1)
            throw Error(ErrorKind::SchemaError, "budgets and --jobs must be positive");
        const CategoryDescription d = parse_description(a.file);
        auto m = std::make_shared<const MonoidalTable>(build(d));
        if (command == "validate") return cmd_validate(d, *m, out);
        const auto v = validate_monoidal(*m);
        if (!v.ok()) throw Error(ErrorKind::MalformedTable, "input is not a strict monoidal category: " + v.violations.front());
        if (command == "zi") return cmd_zi(d, *m, a.config, out);
        if (command == "spectrum") return cmd_spectrum(d, *m, a.config, out);
        if (command == "restrict") return cmd_restrict(d, m, a, out);
        if (command == "represent") return cmd_represent(d, m, a.config, "", out);
        if (command == "stalks" || command == "sheaf-check" || command == "embed-product")
            return cmd_represent(d, m, a.config, command, out);
        if (command == "complete") return cmd_complete(d, m, a, out);
        throw Error(ErrorKind::SchemaError, "unknown command '" + command + "'");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tensortopo
