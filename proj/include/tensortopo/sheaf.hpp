#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tensortopo/moncat.hpp"
#include "tensortopo/spectrum.hpp"
#include "tensortopo/zi.hpp"

namespace tensortopo {

// C|u: same objects as C, morphisms A → B are base morphisms A ⊗ U → B.
// Materialized as a strict monoidal table; morphism ids of the derived table
// are keyed by (A, f).
struct RestrictionCategory {
    std::shared_ptr<const MonoidalTable> base;
    int u_class = -1;
    CentralIdempotentRecord rec;
    std::shared_ptr<const MonoidalTable> table;
    std::vector<Obj> source;   // derived morphism ↦ its domain A
    std::vector<Mor> base_mor; // derived morphism ↦ f : A ⊗ U → B

    // The derived morphism for (A, f), or kNone.
    Mor find(Obj a, Mor f) const;

private:
    friend RestrictionCategory restrict(std::shared_ptr<const MonoidalTable>, const ZILattice&, int);
    std::vector<std::vector<Mor>> index_;   // A ↦ base morphism ↦ derived id
};

RestrictionCategory restrict(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi, int u);

// Base-level action of C|{u≤v} : C|v → C|u on f : A ⊗ V → B.
Mor restrict_morphism(const MonoidalTable& m, const ZILattice& zi, Obj a, Mor f, int u, int v);

// Strict monoidal functor C|v → C|u for u ≤ v; throws NotComparable.
MonoidalFunctorTable restriction_functor(const RestrictionCategory& from_v, const RestrictionCategory& to_u,
                                         const ZILattice& zi);

struct LeftAdjoint {
    FunctorTable functor;          // C|u → C|v, A ↦ A ⊗ U
    std::vector<Mor> unit;         // A ↦ η_A : A → A ⊗ U in C|u
    std::vector<Mor> unit_inverse;
    std::vector<Mor> counit;       // B ↦ ε_B : B ⊗ U → B in C|v
    std::vector<Mor> oplax;        // (A,B) ↦ F(A ⊗ B) → F(A) ⊗ F(B) in C|v
    Verdict verdict;               // functor laws, triangles, invertible unit, hom bijection
};

LeftAdjoint left_adjoint_functor(const RestrictionCategory& at_u, const RestrictionCategory& at_v, const ZILattice& zi);

// ZI(C|u) ≅ ↓u, with the map c ↦ class of (U_c, u_c ⊗ u).
Verdict check_zi_of_restriction(const MonoidalTable& m, const ZILattice& zi, const RestrictionCategory& rc);

struct StalkCategory {
    FilterSet x;
    int minimum = -1;
    RestrictionCategory rc;
};

// Throws NotAFilter.
StalkCategory stalk(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi, const FilterSet& x);

// Germ identification against the realization at the minimum, joint
// surjectivity, and mediation into the cocone τ_v = C|{w≤v} for a fixed w.
Verdict verify_stalk_colimit(const MonoidalTable& m, const ZILattice& zi, const StalkCategory& s);

// Throws NotSymmetric when the base has no symmetry.
Verdict check_zi_of_stalk(const MonoidalTable& m, const ZILattice& zi, const StalkCategory& s);

bool is_vee_local(const LatticeModel& L);
bool is_bigvee_local(const LatticeModel& L);

// Throws HypothesisNotMet when the joins of zi have not been certified.
Verdict check_sheaf_equalizer(const MonoidalTable& m, const ZILattice& zi, int u, int v);
Verdict check_zero_section(std::shared_ptr<const MonoidalTable> m, const ZILattice& zi);

Verdict check_stalk_inherits(const MonoidalTable& m, const StalkCategory& s, std::uint64_t halfbraiding_budget = 1'000'000);

struct ProductEmbedding {
    std::vector<std::vector<Mor>> components;   // point ↦ base morphism ↦ morphism of the stalk table
    Verdict verdict;
};

ProductEmbedding embed_into_product_of_stalks(const MonoidalTable& m, const std::vector<StalkCategory>& stalks);

struct StalkSummary {
    std::vector<int> point;   // sorted ZI classes of the filter
    int minimum = -1;
    int zi_size = 0;
    bool vee_local = false;
    bool bigvee_local = false;
    bool two_valued = false;
};

struct RepresentConfig {
    std::uint64_t halfbraiding_budget = 1'000'000;
    std::uint64_t family_budget = 200'000;
    int jobs = 1;
};

struct SheafReport {
    ZILattice zi;
    LatticeModel lattice;
    SpectrumSpace space;
    std::vector<RestrictionCategory> sections;   // class ↦ C|u, empty when skipped
    std::vector<StalkCategory> stalks;
    std::vector<StalkSummary> stalk_summaries;
    std::vector<std::pair<std::string, Verdict>> verdicts;
    int global_sections_count = 0;
    bool zero_section_terminal = false;   // the B_0 section is sheafified to the terminal category

    const Verdict* verdict(const std::string& name) const;
    bool all_pass() const;
};

SheafReport represent(std::shared_ptr<const MonoidalTable> m, const RepresentConfig& cfg = {});

}  // namespace tensortopo
