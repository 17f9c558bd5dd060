#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common.hpp"
#include "tensortopo/spectrum.hpp"

using namespace tt;

namespace {

LatticeModel powerset(int n) {
    const int size = 1 << n;
    std::vector<std::string> names;
    for (int s = 0; s < size; ++s) names.push_back(std::to_string(s));
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) leq[a][b] = (a & ~b) == 0;
    return LatticeModel(names, leq);
}

LatticeModel diamond() {
    // 0 < a,b,c < 1
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5));
    for (int i = 0; i < 5; ++i) {
        leq[0][i] = true;
        leq[i][4] = true;
        leq[i][i] = true;
    }
    return LatticeModel({"0", "a", "b", "c", "1"}, leq);
}

std::vector<LatticeModel> sample_lattices() {
    std::vector<LatticeModel> v{powerset(1), powerset(2), powerset(3)};
    for (std::uint64_t s = 0; s < 40; ++s) v.push_back(random_distributive_lattice(s));
    return v;
}

Bits bits_of(int n, unsigned mask) {
    Bits b(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) b.set(i);
    return b;
}

bool prime_filter_by_definition(const LatticeModel& L, const Bits& s) {
    const int n = L.size();
    if (s.none() || s.test(L.bottom())) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (s.test(a) && L.leq(a, b) && !s.test(b)) return false;
            if (s.test(a) && s.test(b) && !s.test(L.meet(a, b))) return false;
            if (s.test(L.join(a, b)) && !s.test(a) && !s.test(b)) return false;
        }
    return true;
}

std::set<Bits> carriers(const std::vector<FilterSet>& fs) {
    std::set<Bits> out;
    for (const auto& f : fs) out.insert(f.carrier);
    return out;
}

std::set<Bits> birkhoff_points(const LatticeModel& L) {
    const int n = L.size();
    std::set<Bits> out;
    for (int j = 0; j < n; ++j) {
        if (j == L.bottom()) continue;
        bool irreducible = true;
        for (int a = 0; a < n && irreducible; ++a)
            for (int b = 0; b < n; ++b)
                if (L.join(a, b) == j && a != j && b != j) {
                    irreducible = false;
                    break;
                }
        if (!irreducible) continue;
        Bits up(n);
        for (int x = 0; x < n; ++x)
            if (L.leq(j, x)) up.set(x);
        out.insert(up);
    }
    return out;
}

}  // namespace

TEST_CASE("prime filters match subset enumeration") {
    for (const auto& L : sample_lattices()) {
        const int n = L.size();
        REQUIRE(n <= 16);
        std::set<Bits> oracle;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const Bits s = bits_of(n, mask);
            if (prime_filter_by_definition(L, s)) oracle.insert(s);
            CHECK(is_prime_filter(L, s) == prime_filter_by_definition(L, s));
        }
        CHECK(carriers(enumerate_prime_filters(L)) == oracle);
        // on a finite lattice completely prime and prime coincide
        CHECK(carriers(enumerate_completely_prime_filters(L)) == oracle);
    }
}

TEST_CASE("prime filters are up-sets of join-irreducibles") {
    for (const auto& L : sample_lattices()) {
        REQUIRE(L.distributive());
        CHECK(carriers(enumerate_prime_filters(L)) == birkhoff_points(L));
    }
}

TEST_CASE("points are listed in lexicographic order") {
    auto pts = enumerate_prime_filters(powerset(3));
    REQUIRE(pts.size() == 3);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].members() < pts[i].members());
}

TEST_CASE("basis soundness") {
    for (const auto& L : sample_lattices()) {
        const auto S = spectrum(L);
        for (int u = 0; u < L.size(); ++u) {
            for (std::size_t p = 0; p < S.points.size(); ++p) CHECK(S.basis[u].test(p) == S.points[p].carrier.test(u));
            for (int v = 0; v < L.size(); ++v) {
                CHECK(S.basis[L.meet(u, v)] == (S.basis[u] & S.basis[v]));
                if (L.leq(u, v)) CHECK(S.basis[u].is_subset_of(S.basis[v]));
            }
        }
        CHECK(check_basis_compact(S).passed());
        const auto sp = is_spatial(L);
        CHECK(sp.verdict.passed());
        CHECK(sp.space.opens.size() == static_cast<std::size_t>(L.size()));
    }
}

TEST_CASE("|Spec 2^n| = n") {
    for (int n = 1; n <= 4; ++n) CHECK(spectrum(powerset(n)).points.size() == static_cast<std::size_t>(n));
}

TEST_CASE("a non-distributive lattice is not a frame") {
    auto M3 = diamond();
    CHECK_FALSE(M3.distributive());
    CHECK_THROWS_AS(spectrum(M3), Error);
    CHECK_THROWS_AS(is_spatial(M3), Error);
}

TEST_CASE("filters") {
    auto L = powerset(2);
    CHECK(is_filter(L, bits_of(4, 0b1010)));
    CHECK(is_filter(L, bits_of(4, 0b1000)));
    CHECK_FALSE(is_filter(L, bits_of(4, 0b1111)));   // proper
    CHECK_FALSE(is_filter(L, bits_of(4, 0b0110)));
    CHECK_FALSE(is_filter(L, bits_of(4, 0)));
}

TEST_CASE("germ congruence agrees with its definition") {
    for (const auto& L : sample_lattices()) {
        const int n = L.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            const Bits x = bits_of(n, mask);
            if (!is_filter(L, x)) continue;
            const auto g = germ_congruence(L, FilterSet{x, FilterKind::Plain});
            CHECK(L.meet_of(x) == g.minimum);
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w) {
                    bool related = false;
                    for (int u = 0; u < n; ++u)
                        if (x.test(u) && L.meet(u, v) == L.meet(u, w)) related = true;
                    CHECK((g.projection[v] == g.projection[w]) == related);
                }
        }
    }
}

TEST_CASE("quotients of Boolean algebras by prime filters are Boolean") {
    for (int k = 1; k <= 3; ++k) {
        auto L = powerset(k);
        for (const auto& p : enumerate_prime_filters(L)) {
            const auto Q = germ_congruence(L, p).quotient;
            CHECK(Q.size() == 2);
            for (int a = 0; a < Q.size(); ++a) {
                bool complemented = false;
                for (int b = 0; b < Q.size(); ++b)
                    if (Q.meet(a, b) == Q.bottom() && Q.join(a, b) == Q.top()) complemented = true;
                CHECK(complemented);
            }
            CHECK(Q.is_boolean());
        }
    }
}

TEST_CASE("random distributive lattices") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        CAPTURE(s);
        const auto L = random_distributive_lattice(s);
        const int n = L.size();
        CHECK(n >= 1);
        CHECK(n <= 6);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) CHECK(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)));
        const auto again = random_distributive_lattice(s);
        CHECK(again.names() == L.names());
        CHECK(meet_table(again) == meet_table(L));
        const auto round = lattice_from_meet_table(L.names(), meet_table(L));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(round.leq(a, b) == L.leq(a, b));
    }
}
