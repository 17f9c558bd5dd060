#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tensortopo/error.hpp"
#include "tensortopo/report.hpp"

namespace tensortopo {

using Bits = boost::dynamic_bitset<>;

// Finite lattice with explicit order, meet and join tables.
class LatticeModel {
public:
    LatticeModel() = default;
    // Derives meets and joins from a partial order; throws NotASemilattice if
    // some pair lacks a glb or lub.
    LatticeModel(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
    int meet(int a, int b) const { return meet_[idx(a, b)]; }
    int join(int a, int b) const { return join_[idx(a, b)]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int join_of(const Bits& s) const;
    int meet_of(const Bits& s) const;
    bool distributive() const;
    bool is_boolean() const;

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * names_.size() + b; }
    std::vector<std::string> names_;
    std::vector<char> leq_;
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
};

enum class FilterKind { Plain, Prime, CompletelyPrime };

struct FilterSet {
    Bits carrier;
    FilterKind kind = FilterKind::Plain;

    std::vector<int> members() const;
};

bool is_filter(const LatticeModel& L, const Bits& s);
bool is_prime_filter(const LatticeModel& L, const Bits& s);
// Exhaustive over all subsets when |L| ≤ 16.
bool is_completely_prime_filter(const LatticeModel& L, const Bits& s);

// Points are sorted by the lexicographic order of their member lists.
std::vector<FilterSet> enumerate_prime_filters(const LatticeModel& L);
std::vector<FilterSet> enumerate_completely_prime_filters(const LatticeModel& L);

struct SpectrumSpace {
    std::vector<FilterSet> points;
    std::vector<Bits> basis;   // element ↦ B_u over points
    std::vector<Bits> opens;   // all unions of basic opens, sorted
    bool completely_prime = false;
};

SpectrumSpace spectrum(const LatticeModel& L, bool completely_prime = false);
Verdict check_basis_compact(const SpectrumSpace& S);

struct SpatialResult {
    Verdict verdict;
    std::vector<int> iso;   // element ↦ index into spectrum.opens
    SpectrumSpace space;
};
SpatialResult is_spatial(const LatticeModel& L);

struct GermQuotient {
    LatticeModel quotient;
    std::vector<int> projection;   // element ↦ quotient element
    int minimum = -1;              // the least element of the filter
};
// v ∼ w iff v ∧ m = w ∧ m with m the least element of x.
GermQuotient germ_congruence(const LatticeModel& L, const FilterSet& x);

// Random sublattice of the powerset of {0,..,k-1} containing ∅ and the whole
// set, closed under ∪ and ∩. The size is uniform in [2, max_size].
// Deterministic in the seed.
LatticeModel random_distributive_lattice(std::uint64_t seed, int max_size = 6);

LatticeModel lattice_from_meet_table(std::vector<std::string> names, const std::vector<std::vector<int>>& meet);
std::vector<std::vector<int>> meet_table(const LatticeModel& L);

std::string set_text(const LatticeModel& L, const Bits& s);

}  // namespace tensortopo
