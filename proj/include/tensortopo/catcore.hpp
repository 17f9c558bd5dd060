#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensortopo/error.hpp"
#include "tensortopo/report.hpp"

namespace tensortopo {

using Obj = std::int32_t;
using Mor = std::int32_t;
inline constexpr std::int32_t kNone = -1;

// A finite category stored as explicit tables. Objects and morphisms are
// dense ids; hom-sets keep insertion order and all enumeration follows it.
// Build in two phases: objects and morphisms first, then identities and
// composites. The composition table only has cells for composable pairs.
class CategoryTable {
public:
    Obj add_object(std::string name);
    Mor add_morphism(std::string name, Obj src, Obj dst);
    void set_identity(Obj a, Mor f);
    void set_compose(Mor g, Mor f, Mor result);

    int num_objects() const { return static_cast<int>(object_names_.size()); }
    int num_morphisms() const { return static_cast<int>(src_.size()); }

    const std::string& object_name(Obj a) const { return object_names_.at(a); }
    const std::string& morphism_name(Mor f) const { return morphism_names_.at(f); }
    std::optional<Obj> find_object(const std::string& name) const;
    std::optional<Mor> find_morphism(const std::string& name) const;

    Obj src(Mor f) const { return src_[f]; }
    Obj dst(Mor f) const { return dst_[f]; }
    Mor identity(Obj a) const { return identity_[a]; }
    bool is_identity(Mor f) const { return identity_[src_[f]] == f; }

    const std::vector<Mor>& hom(Obj a, Obj b) const {
        return homs_[static_cast<std::size_t>(a) * object_names_.size() + b];
    }
    const std::vector<Mor>& out(Obj a) const { return out_[a]; }

    // g ∘ f, or kNone when dst(f) != src(g) or the cell is unset.
    Mor compose(Mor g, Mor f) const {
        if (dst_[f] != src_[g] || !layout_ready_) return kNone;
        return compose_[comp_offset_[f] + out_pos_[g]];
    }
    // h ∘ g ∘ f ∘ ... read right to left, throws on a missing cell.
    Mor chain(std::initializer_list<Mor> fs) const;

    // Throws MalformedTable on dangling ids, missing identities or holes in
    // the composition table.
    void check_well_formed() const;

    bool posetal() const;
    std::size_t max_hom_size() const;

private:
    void ensure_layout();

    std::vector<std::string> object_names_;
    std::vector<std::string> morphism_names_;
    std::vector<Obj> src_, dst_;
    std::vector<Mor> identity_;
    std::vector<std::vector<Mor>> homs_;
    std::vector<std::vector<Mor>> out_;
    std::vector<std::int32_t> out_pos_;
    std::vector<std::size_t> comp_offset_;
    std::vector<Mor> compose_;
    bool layout_ready_ = false;
    mutable std::unordered_map<std::string, Obj> object_index_;
    mutable std::unordered_map<std::string, Mor> morphism_index_;
};

ValidationReport validate_category(const CategoryTable& c);

bool is_mono(const CategoryTable& c, Mor f);
bool is_epi(const CategoryTable& c, Mor f);
bool is_iso(const CategoryTable& c, Mor f);
std::optional<Mor> inverse(const CategoryTable& c, Mor f);
bool is_split_epi(const CategoryTable& c, Mor f);

bool is_initial(const CategoryTable& c, Obj a);
bool is_terminal(const CategoryTable& c, Obj a);
bool isomorphic(const CategoryTable& c, Obj a, Obj b);

struct FunctorTable {
    std::shared_ptr<const CategoryTable> source;
    std::shared_ptr<const CategoryTable> target;
    std::vector<Obj> obj_map;
    std::vector<Mor> mor_map;
};

ValidationReport validate_functor(const FunctorTable& f);
bool is_faithful(const FunctorTable& f);
bool is_full(const FunctorTable& f);

// A finite diagram: objects of the ambient category plus arrows between
// diagram positions.
struct Diagram {
    struct Arrow {
        int from;
        int to;
        Mor mor;
    };
    std::vector<Obj> objects;
    std::vector<Arrow> arrows;
};

// Universal-property checks by enumeration of all (co)cones. An empty result
// means universal; otherwise a human-readable counterexample.
std::optional<std::string> check_colimit(const CategoryTable& c, const Diagram& d, Obj apex,
                                         const std::vector<Mor>& legs);
std::optional<std::string> check_limit(const CategoryTable& c, const Diagram& d, Obj apex,
                                       const std::vector<Mor>& legs);

}  // namespace tensortopo
