#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensortopo/moncat.hpp"
#include "tensortopo/spectrum.hpp"
#include "tensortopo/zi.hpp"

namespace tensortopo {

// Downsets of ZI ordered by (size, members), so ∅ is first and ZI is last.
std::vector<Bits> enumerate_downsets(const ZILattice& zi, bool finitary = false);
LatticeModel downset_lattice(const ZILattice& zi);

// g : A → B ⊗ U with f = (B ⊗ u) ∘ g, the first one in hom order.
std::optional<Mor> restricts_to(const MonoidalTable& m, Mor f, const CentralIdempotentRecord& u);

struct CompletionConfig {
    std::uint64_t morphism_budget = 10'000;
    bool finitary = false;   // finitely generated downsets; equal to all downsets on finite ZI
};

// D[C]. Object ⟨D,A⟩ has id d * |C| + a. A morphism is a family indexed by ZI
// class, kNone off its domain downset.
struct Completion {
    std::shared_ptr<const MonoidalTable> base;
    ZILattice zi;
    std::vector<Bits> downsets;
    std::shared_ptr<const MonoidalTable> table;
    std::vector<std::vector<Mor>> families;

    int base_objects() const { return base->num_objects(); }
    Obj object(int d, Obj a) const { return d * base_objects() + a; }
    int downset_of(Obj x) const { return x / base_objects(); }
    Obj base_object_of(Obj x) const { return x % base_objects(); }
    int full_downset() const { return static_cast<int>(downsets.size()) - 1; }
    // The morphism with this family between the given objects, or kNone.
    Mor find(Obj src, Obj dst, const std::vector<Mor>& family) const;

    std::map<std::pair<Obj, Obj>, std::map<std::vector<Mor>, Mor>> index;
};

// Throws NotStiff, BudgetExceeded.
Completion build_completion(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi,
                            const CompletionConfig& cfg = {});

// Every ζ_v ∘ g over the admissible restriction witnesses (v, g) of η_u.
std::vector<Mor> composite_candidates(const Completion& d, Mor zeta, Mor eta, int u);

struct Embedding {
    MonoidalFunctorTable functor;
    Verdict verdict;   // injective on objects, full, faithful, strict monoidal
};
Embedding embed(const Completion& d);

// ZI(D[C]) ≅ downsets via D ↦ class of ⟨D, I⟩.
Verdict check_zi_completion(const Completion& d, std::uint64_t halfbraiding_budget = 1'000'000);
Verdict check_completion_joins(const Completion& d, std::uint64_t family_budget = 200'000);

struct Extension {
    FunctorTable functor;          // F̂ : D[C] → D
    std::vector<int> join_class;   // downset ↦ class of ⋁ φ(D) in ZI(D)
    Verdict triangle;
    Verdict uniqueness;
};
// Throws HypothesisNotMet when F does not preserve central idempotents or the
// target lacks universal joins.
Extension extend_functor(const MonoidalFunctorTable& F, const Completion& d, std::uint64_t search_budget = 50'000'000);

}  // namespace tensortopo
