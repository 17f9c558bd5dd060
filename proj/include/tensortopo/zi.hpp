#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensortopo/moncat.hpp"
#include "tensortopo/spectrum.hpp"

namespace tensortopo {

struct LeftIdempotent {
    Obj U = kNone;
    Mor u = kNone;
    Mor inverse = kNone;   // U → U ⊗ U, inverse of u ⊗ U
};

// σ_A : U ⊗ A → A ⊗ U, indexed by object id.
struct HalfBraiding {
    std::vector<Mor> sigma;
};

struct CentralIdempotentRecord {
    Obj U = kNone;
    Mor u = kNone;
    Mor inverse = kNone;
    std::vector<HalfBraiding> half_braidings;
    int class_id = -1;
};

struct ZIConfig {
    std::uint64_t halfbraiding_budget = 1'000'000;
    int jobs = 1;
};

class ZILattice {
public:
    std::vector<CentralIdempotentRecord> classes;   // representatives, by class id
    std::vector<CentralIdempotentRecord> members;   // every central idempotent found
    std::vector<char> leq_table;
    std::vector<int> meet_table;
    std::vector<Mor> mediators;                     // (i,j) ↦ m : U_i → U_j with u_j ∘ m = u_i, or kNone
    int top = -1;
    std::optional<std::vector<int>> joins;
    std::optional<int> bottom;

    int size() const { return static_cast<int>(classes.size()); }
    bool leq(int a, int b) const { return leq_table[idx(a, b)] != 0; }
    int meet(int a, int b) const { return meet_table[idx(a, b)]; }
    Mor mediator(int a, int b) const { return mediators[idx(a, b)]; }
    int join(int a, int b) const;
    // least upper bound inside the poset; always exists for a finite
    // meet-semilattice with top
    int lub(int a, int b) const;
    std::vector<std::string> names(const CategoryTable& c) const;

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * classes.size() + b; }
};

std::vector<LeftIdempotent> find_left_idempotents(const MonoidalTable& m);
std::vector<HalfBraiding> find_half_braidings(const MonoidalTable& m, Obj U, Mor u,
                                              std::uint64_t budget = 1'000'000);
ZILattice central_idempotents(const MonoidalTable& m, const ZIConfig& cfg = {});

// u ≤ v iff U ⊗ v : U ⊗ V → U is invertible.
bool idempotent_leq(const MonoidalTable& m, Obj U, Mor u, Obj V, Mor v);
// The class of an arbitrary central idempotent (W, w), or -1.
int classify(const MonoidalTable& m, const ZILattice& zi, Obj W, Mor w);
// m = (u ⊗ V) ∘ (U ⊗ v)⁻¹ : U → V, valid when u ≤ v.
Mor mediating_morphism(const MonoidalTable& m, Obj U, Mor u, Obj V, Mor v);

// The order-theoretic lattice of ZI classes (joins are poset lubs).
LatticeModel lattice_of(const ZILattice& zi, const CategoryTable& c);

// Crossing C ⊗ U → U ⊗ C from the symmetry or from an inverted half-braiding.
Mor crossing(const MonoidalTable& m, const CentralIdempotentRecord& rec, Obj C);

Verdict is_stiff(const MonoidalTable& m, const ZILattice& zi, int jobs = 1);
Verdict has_universal_finite_joins(const MonoidalTable& m, ZILattice& zi, int jobs = 1);
Verdict has_universal_joins(const MonoidalTable& m, const ZILattice& zi, std::uint64_t family_budget = 200'000);
Verdict check_local_properties(const MonoidalTable& m, const ZILattice& zi, const std::vector<int>& cover, Mor f, Mor g);
bool is_subunit(const MonoidalTable& m, const CentralIdempotentRecord& rec);
Verdict is_bilinear(const MonoidalTable& m, const ZILattice& zi);
bool is_cartesian(const MonoidalTable& m);
Verdict cartesian_subterminal_check(const MonoidalTable& m, const ZILattice& zi);

struct ZIMap {
    std::vector<int> class_map;          // ZI(C) class ↦ ZI(D) class
    std::vector<FilterSet> points_c;     // Spec(ZI(C))
    std::vector<FilterSet> points_d;     // Spec(ZI(D))
    std::vector<int> spectrum_map;       // point of Spec(ZI(D)) ↦ point of Spec(ZI(C)), -1 if not prime
    Verdict verdict;
};
ZIMap zi_map_of_functor(const MonoidalFunctorTable& F, const ZILattice& zi_c, const ZILattice& zi_d);

}  // namespace tensortopo
