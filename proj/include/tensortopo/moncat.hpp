#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensortopo/catcore.hpp"

namespace tensortopo {

// Strict monoidal structure over a CategoryTable: associators and unitors are
// identities, so A ⊗ (B ⊗ C) and (A ⊗ B) ⊗ C are the same object id.
class MonoidalTable {
public:
    MonoidalTable() = default;
    MonoidalTable(CategoryTable base, Obj unit, std::vector<Obj> tensor_obj, std::vector<Mor> tensor_mor,
                  std::optional<std::vector<Mor>> symmetry = std::nullopt);

    const CategoryTable& base() const { return base_; }
    Obj unit() const { return unit_; }
    int num_objects() const { return base_.num_objects(); }
    int num_morphisms() const { return base_.num_morphisms(); }

    Obj tensor(Obj a, Obj b) const { return tensor_obj_[static_cast<std::size_t>(a) * num_objects() + b]; }
    Mor tensor_mor(Mor f, Mor g) const { return tensor_mor_[static_cast<std::size_t>(f) * num_morphisms() + g]; }
    // A ⊗ g and f ⊗ B
    Mor left(Obj a, Mor g) const { return tensor_mor(base_.identity(a), g); }
    Mor right(Mor f, Obj b) const { return tensor_mor(f, base_.identity(b)); }
    Mor id(Obj a) const { return base_.identity(a); }

    bool has_symmetry() const { return symmetry_.has_value(); }
    Mor symmetry(Obj a, Obj b) const { return (*symmetry_)[static_cast<std::size_t>(a) * num_objects() + b]; }

    const std::vector<Obj>& tensor_obj_table() const { return tensor_obj_; }
    const std::vector<Mor>& tensor_mor_table() const { return tensor_mor_; }
    const std::optional<std::vector<Mor>>& symmetry_table() const { return symmetry_; }

    // Throws MalformedTable if a tensor table is partial or ill-typed.
    void check_well_formed() const;

private:
    CategoryTable base_;
    Obj unit_ = kNone;
    std::vector<Obj> tensor_obj_;
    std::vector<Mor> tensor_mor_;
    std::optional<std::vector<Mor>> symmetry_;
};

ValidationReport validate_monoidal(const MonoidalTable& m);

struct MonoidalFunctorTable {
    std::shared_ptr<const MonoidalTable> source;
    std::shared_ptr<const MonoidalTable> target;
    FunctorTable functor;
    Mor theta_unit = kNone;     // I_D → F(I_C)
    std::vector<Mor> theta;     // (A,B) ↦ F(A) ⊗ F(B) → F(A ⊗ B); kNone when absent

    Mor theta_at(Obj a, Obj b) const { return theta[static_cast<std::size_t>(a) * source->num_objects() + b]; }
};

ValidationReport validate_monoidal_functor(const MonoidalFunctorTable& F);

// Functor between categories with subsingleton target homs, determined by its
// object map. Coherence cells are the unique available morphisms, or kNone.
MonoidalFunctorTable posetal_functor(std::shared_ptr<const MonoidalTable> source,
                                     std::shared_ptr<const MonoidalTable> target, const std::vector<Obj>& obj_map);

MonoidalFunctorTable identity_functor(std::shared_ptr<const MonoidalTable> m);

// Builders. Elements keep their input order as object ids.
MonoidalTable from_posetal(const std::vector<std::string>& elements, const std::vector<std::vector<bool>>& leq,
                           const std::vector<std::vector<int>>& mul, int unit);
MonoidalTable from_semilattice(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& meet);
MonoidalTable from_quantale(const std::vector<std::string>& elements, const std::vector<std::vector<bool>>& leq,
                            const std::vector<std::vector<int>>& mul, int unit);
MonoidalTable from_topology(const std::vector<std::string>& points, const std::vector<std::vector<std::string>>& opens);
MonoidalTable from_boolean(int atoms);
MonoidalTable from_chain(int n);
MonoidalTable from_monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& mul, int unit);

// Builder for hand-written tables: names resolve ids, tensor and composition
// entries are given by name.
struct TableSpec {
    struct Hom {
        std::string src, dst;
        std::vector<std::string> morphisms;
    };
    struct Compose {
        std::string g, f, result;
    };
    struct TensorObj {
        std::string a, b, result;
    };
    struct TensorMor {
        std::string f, g, result;
    };
    struct Sym {
        std::string a, b, morphism;
    };
    std::vector<std::string> objects;
    std::string unit;
    std::vector<Hom> homs;
    std::vector<Compose> compose;
    std::vector<TensorObj> tensor_obj;
    std::vector<TensorMor> tensor_mor;
    std::optional<std::vector<Sym>> symmetry;
};

// Identities are recognised as the morphism named "id_<object>" or, failing
// that, the unique endomorphism that acts as a two-sided unit.
MonoidalTable from_table_spec(const TableSpec& spec);
TableSpec to_table_spec(const MonoidalTable& m);

}  // namespace tensortopo
