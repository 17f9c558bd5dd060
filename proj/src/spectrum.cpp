#include "tensortopo/spectrum.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace tensortopo {

LatticeModel::LatticeModel(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq)
    : names_(std::move(names)) {
    const int n = size();
    if (n == 0) throw Error(ErrorKind::NotASemilattice, "empty lattice");
    leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq_[idx(a, b)] = leq[a][b] ? 1 : 0;
    meet_.assign(leq_.size(), -1);
    join_.assign(leq_.size(), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int lo = -1, hi = -1;
            for (int c = 0; c < n; ++c) {
                if (this->leq(c, a) && this->leq(c, b) && (lo < 0 || this->leq(lo, c))) lo = c;
                if (this->leq(a, c) && this->leq(b, c) && (hi < 0 || this->leq(c, hi))) hi = c;
            }
            for (int c = 0; c < n; ++c) {
                if (lo >= 0 && this->leq(c, a) && this->leq(c, b) && !this->leq(c, lo)) lo = -2;
                if (hi >= 0 && this->leq(a, c) && this->leq(b, c) && !this->leq(hi, c)) hi = -2;
            }
            if (lo < 0 || hi < 0)
                throw Error(ErrorKind::NotASemilattice, "no " + std::string(lo < 0 ? "meet" : "join") + " for (" +
                                                            names_[a] + ", " + names_[b] + ")");
            meet_[idx(a, b)] = lo;
            join_[idx(a, b)] = hi;
        }
    bottom_ = 0;
    top_ = 0;
    for (int a = 1; a < n; ++a) {
        bottom_ = meet(bottom_, a);
        top_ = join(top_, a);
    }
}

int LatticeModel::join_of(const Bits& s) const {
    int acc = bottom_;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) acc = join(acc, static_cast<int>(i));
    return acc;
}

int LatticeModel::meet_of(const Bits& s) const {
    int acc = top_;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) acc = meet(acc, static_cast<int>(i));
    return acc;
}

bool LatticeModel::distributive() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
}

bool LatticeModel::is_boolean() const {
    if (!distributive()) return false;
    for (int a = 0; a < size(); ++a) {
        bool has = false;
        for (int b = 0; b < size() && !has; ++b) has = meet(a, b) == bottom_ && join(a, b) == top_;
        if (!has) return false;
    }
    return true;
}

std::vector<int> FilterSet::members() const {
    std::vector<int> out;
    for (auto i = carrier.find_first(); i != Bits::npos; i = carrier.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

bool is_filter(const LatticeModel& L, const Bits& s) {
    const int n = L.size();
    if (s.none() || s.count() == static_cast<std::size_t>(n)) return false;
    for (int a = 0; a < n; ++a) {
        if (!s[a]) continue;
        for (int b = 0; b < n; ++b) {
            if (L.leq(a, b) && !s[b]) return false;
            if (s[b] && !s[L.meet(a, b)]) return false;
        }
    }
    return true;
}

bool is_prime_filter(const LatticeModel& L, const Bits& s) {
    if (!is_filter(L, s)) return false;
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (s[L.join(a, b)] && !s[a] && !s[b]) return false;
    return true;
}

bool is_completely_prime_filter(const LatticeModel& L, const Bits& s) {
    if (!is_prime_filter(L, s)) return false;
    const int n = L.size();
    if (n > 16) return true;   // finite joins are all joins
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Bits sub(n);
        bool hit = false;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                sub.set(i);
                hit = hit || s[i];
            }
        if (s[L.join_of(sub)] && !hit) return false;
    }
    return true;
}

namespace {

bool lex_less(const FilterSet& a, const FilterSet& b) { return a.members() < b.members(); }

std::vector<FilterSet> enumerate_filters(const LatticeModel& L, FilterKind kind) {
    // Every filter of a finite lattice is principal, so candidates are ↑m.
    std::vector<FilterSet> out;
    const int n = L.size();
    for (int m = 0; m < n; ++m) {
        Bits up(n);
        for (int b = 0; b < n; ++b)
            if (L.leq(m, b)) up.set(b);
        const bool ok = kind == FilterKind::CompletelyPrime ? is_completely_prime_filter(L, up) : is_prime_filter(L, up);
        if (ok) out.push_back({up, kind});
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

std::vector<FilterSet> enumerate_prime_filters(const LatticeModel& L) {
    if (!L.distributive()) throw Error(ErrorKind::NotDistributive, "prime spectrum needs a distributive lattice");
    return enumerate_filters(L, FilterKind::Prime);
}

std::vector<FilterSet> enumerate_completely_prime_filters(const LatticeModel& L) {
    if (!L.distributive()) throw Error(ErrorKind::NotAFrame, "finite frames are exactly the distributive lattices");
    return enumerate_filters(L, FilterKind::CompletelyPrime);
}

SpectrumSpace spectrum(const LatticeModel& L, bool completely_prime) {
    SpectrumSpace S;
    S.completely_prime = completely_prime;
    S.points = completely_prime ? enumerate_completely_prime_filters(L) : enumerate_prime_filters(L);
    const std::size_t p = S.points.size();
    for (int u = 0; u < L.size(); ++u) {
        Bits b(p);
        for (std::size_t i = 0; i < p; ++i)
            if (S.points[i].carrier[u]) b.set(i);
        S.basis.push_back(b);
    }
    std::vector<Bits> frontier{Bits(p)};
    std::set<Bits> all{Bits(p)};
    while (!frontier.empty()) {
        std::vector<Bits> next;
        for (const auto& o : frontier)
            for (const auto& b : S.basis) {
                Bits u = o | b;
                if (all.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    S.opens.assign(all.begin(), all.end());
    auto key = [](const Bits& b) {
        std::vector<std::size_t> m;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) m.push_back(i);
        return std::make_pair(b.count(), m);
    };
    std::sort(S.opens.begin(), S.opens.end(), [&](const Bits& a, const Bits& b) { return key(a) < key(b); });
    return S;
}

Verdict check_basis_compact(const SpectrumSpace& S) {
    // For each basic open, take every basic open inside it: they cover it, and
    // a finite subfamily with the same union is extracted greedily.
    for (std::size_t u = 0; u < S.basis.size(); ++u) {
        const Bits& target = S.basis[u];
        Bits covered(target.size());
        std::size_t used = 0;
        for (const auto& b : S.basis) {
            if (!b.is_subset_of(target)) continue;
            if (!b.is_subset_of(covered)) {
                covered |= b;
                ++used;
            }
        }
        if (covered != target)
            return Verdict::fail("basic open " + std::to_string(u) + " is not covered by the basic opens inside it");
        (void)used;
    }
    return Verdict::pass("every basic-open cover has a finite subcover").note("finite space: covers are finite");
}

SpatialResult is_spatial(const LatticeModel& L) {
    SpatialResult r;
    r.space = spectrum(L, true);
    const auto& S = r.space;
    const int n = L.size();
    r.iso.assign(n, -1);
    for (int u = 0; u < n; ++u) {
        auto it = std::find(S.opens.begin(), S.opens.end(), S.basis[u]);
        r.iso[u] = static_cast<int>(it - S.opens.begin());
    }
    std::set<int> image(r.iso.begin(), r.iso.end());
    if (image.size() != static_cast<std::size_t>(n)) {
        r.verdict = Verdict::fail("u ↦ B_u is not injective");
        return r;
    }
    if (image.size() != S.opens.size()) {
        r.verdict = Verdict::fail("some open is not basic");
        return r;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (L.leq(a, b) != S.basis[a].is_subset_of(S.basis[b])) {
                r.verdict = Verdict::fail("order not reflected at (" + L.name(a) + ", " + L.name(b) + ")");
                return r;
            }
            if (S.basis[L.meet(a, b)] != (S.basis[a] & S.basis[b]) || S.basis[L.join(a, b)] != (S.basis[a] | S.basis[b])) {
                r.verdict = Verdict::fail("u ↦ B_u does not preserve meets/joins at (" + L.name(a) + ", " + L.name(b) + ")");
                return r;
            }
        }
    r.verdict = Verdict::pass("u ↦ B_u is a frame isomorphism onto " + std::to_string(S.opens.size()) + " opens");
    return r;
}

GermQuotient germ_congruence(const LatticeModel& L, const FilterSet& x) {
    const int n = L.size();
    const Bits& s = x.carrier;
    bool filter = s.size() == static_cast<std::size_t>(n) && s.any();
    for (int a = 0; a < n && filter; ++a)
        for (int b = 0; b < n && filter; ++b)
            if (s[a] && ((L.leq(a, b) && !s[b]) || (s[b] && !s[L.meet(a, b)]))) filter = false;
    if (!filter) throw Error(ErrorKind::NotAFilter, "germ congruence needs a filter");
    GermQuotient q;
    q.minimum = L.meet_of(s);
    // quotient elements are the values v ∧ m, i.e. the elements below m
    std::vector<int> reps;
    std::map<int, int> index;
    for (int v = 0; v < n; ++v) {
        const int r = L.meet(v, q.minimum);
        if (!index.count(r)) {
            index[r] = -1;
            reps.push_back(r);
        }
    }
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(reps.size(), std::vector<bool>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        names.push_back(L.name(reps[i]));
        for (std::size_t j = 0; j < reps.size(); ++j) leq[i][j] = L.leq(reps[i], reps[j]);
    }
    q.quotient = LatticeModel(names, leq);
    for (int v = 0; v < n; ++v) q.projection.push_back(index[L.meet(v, q.minimum)]);
    return q;
}

LatticeModel random_distributive_lattice(std::uint64_t seed, int max_size) {
    std::mt19937_64 rng(seed);
    // size drawn first so small lattices do not dominate; 2^5 holds every
    // distributive lattice with at most 6 elements
    const int want = max_size <= 2 ? 2 : 2 + static_cast<int>(rng() % (max_size - 1));
    for (;;) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const std::uint32_t full = (1u << k) - 1;
        std::set<std::uint32_t> elems{0u, full};
        const int gens = static_cast<int>(rng() % 4);
        for (int g = 0; g < gens; ++g) elems.insert(static_cast<std::uint32_t>(rng() & full));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::uint32_t> cur(elems.begin(), elems.end());
            for (auto a : cur)
                for (auto b : cur) {
                    grew |= elems.insert(a | b).second;
                    grew |= elems.insert(a & b).second;
                }
        }
        if (static_cast<int>(elems.size()) != want) continue;
        std::vector<std::uint32_t> order(elems.begin(), elems.end());
        std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
            const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        std::vector<std::string> names;
        for (auto m : order) {
            std::string s = "{";
            bool first = true;
            for (int i = 0; i < k; ++i)
                if (m >> i & 1) {
                    s += (first ? "" : ",") + std::to_string(i);
                    first = false;
                }
            names.push_back(s + "}");
        }
        std::vector<std::vector<bool>> leq(order.size(), std::vector<bool>(order.size()));
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = 0; b < order.size(); ++b) leq[a][b] = (order[a] & ~order[b]) == 0;
        return LatticeModel(names, leq);
    }
}

LatticeModel lattice_from_meet_table(std::vector<std::string> names, const std::vector<std::vector<int>>& meet) {
    std::vector<std::vector<bool>> leq(names.size(), std::vector<bool>(names.size()));
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b) leq[a][b] = meet[a][b] == static_cast<int>(a);
    return LatticeModel(std::move(names), leq);
}

std::vector<std::vector<int>> meet_table(const LatticeModel& L) {
    std::vector<std::vector<int>> t(L.size(), std::vector<int>(L.size()));
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) t[a][b] = L.meet(a, b);
    return t;
}

std::string set_text(const LatticeModel& L, const Bits& s) {
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
        out += (first ? "" : ", ") + L.name(static_cast<int>(i));
        first = false;
    }
    return out + "}";
}

}  // namespace tensortopo
