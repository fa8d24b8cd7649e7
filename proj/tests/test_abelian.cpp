#include <catch2/catch_amalgamated.hpp>

#include "lpres/abelian.hpp"
#include "lpres/subgroup_presentation.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace lpres;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(static_cast<std::size_t>(rows), IntVector(static_cast<std::size_t>(cols)));
    for (auto& row : m)
        for (auto& x : row)
            x = entry(rng);
    return m;
}

/* Lattice membership via the Hermite form: v lies in the row lattice of
 * `basis` exactly when adjoining it changes nothing. */
bool in_lattice(const IntMatrix& basis, const IntVector& v) {
    IntMatrix joined = basis;
    joined.push_back(v);
    return hnf(joined) == hnf(basis);
}

} // namespace

TEST_CASE("integer matrix basics") {
    CHECK(fdiv(Int(7), Int(2)) == 3);
    CHECK(fdiv(Int(-7), Int(2)) == -4); // floor, not truncation
    CHECK(fdiv(Int(7), Int(-2)) == -4);

    IntMatrix a = {{Int(2), Int(0)}, {Int(0), Int(3)}};
    CHECK(determinant(a) == 6);
    CHECK(determinant(identity_matrix(4)) == 1);
    IntMatrix b = {{Int(1), Int(2)}, {Int(3), Int(4)}};
    CHECK(determinant(b) == -2);
    CHECK(mat_mul(b, identity_matrix(2)) == b);
    CHECK(vec_mat(IntVector{Int(1), Int(1)}, b) == IntVector{Int(4), Int(6)});
}

TEST_CASE("Hermite form on fixed inputs") {
    IntMatrix m = {{Int(4), Int(6)}, {Int(2), Int(2)}};
    IntMatrix h = hnf(m);
    CHECK(in_lattice(h, IntVector{Int(4), Int(6)}));
    CHECK(in_lattice(h, IntVector{Int(2), Int(2)}));
    CHECK(hnf(h) == h);

    // permuting rows or adding one row to another keeps the lattice
    IntMatrix swapped = {{Int(2), Int(2)}, {Int(4), Int(6)}};
    CHECK(hnf(swapped) == h);
    IntMatrix combined = {{Int(4), Int(6)}, {Int(6), Int(8)}};
    CHECK(hnf(combined) == h);
}

TEST_CASE("Smith divisors on fixed inputs") {
    // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6 with divisor chain 1 | 6
    auto [rank0, tors0] = smith_divisors({{Int(2), Int(0)}, {Int(0), Int(3)}}, 2);
    CHECK(rank0 == 0);
    CHECK(tors0 == std::vector<Int>{Int(6)});

    auto [rank1, tors1] = smith_divisors({{Int(2), Int(4)}}, 2);
    CHECK(rank1 == 1);
    CHECK(tors1 == std::vector<Int>{Int(2)});

    auto [rank2, tors2] = smith_divisors({}, 3);
    CHECK(rank2 == 3);
    CHECK(tors2.empty());
}

TEST_CASE("Smith decomposition is a unimodular equivalence") {
    std::mt19937 rng(601);
    for (int i = 0; i < 400; ++i) {
        std::uniform_int_distribution<int> dim(1, 5);
        int rows = dim(rng), cols = dim(rng);
        IntMatrix a = random_matrix(rng, rows, cols, 9);
        SmithDecomposition s = smith_with_transforms(a);
        REQUIRE(mat_mul(mat_mul(s.u, a), s.v) == s.d);
        Int du = determinant(s.u);
        Int dv = determinant(s.v);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
        Int prev = 0;
        for (std::size_t r = 0; r < s.d.size(); ++r) {
            for (std::size_t c = 0; c < s.d[r].size(); ++c) {
                if (r != c)
                    REQUIRE(s.d[r][c] == 0);
            }
            if (r < s.d[r].size()) {
                Int cur = s.d[r][r];
                REQUIRE(cur >= 0);
                if (prev != 0)
                    REQUIRE((cur == 0 || cur % prev == 0));
                if (cur != 0)
                    prev = cur;
            }
        }
    }
}

TEST_CASE("Hermite form preserves the row lattice on random input") {
    std::mt19937 rng(602);
    for (int i = 0; i < 400; ++i) {
        std::uniform_int_distribution<int> dim(1, 4);
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 6);
        IntMatrix h = hnf(a);
        CHECK(hnf(h) == h);
        for (const IntVector& row : a)
            REQUIRE(in_lattice(h, row));
        for (const IntVector& row : h)
            REQUIRE(in_lattice(a, row));
    }
}

TEST_CASE("invariant lattice closure is a fixed point") {
    // the column-doubling substitution forces 3 | entries eventually
    IntMatrix vectors = {{Int(1), Int(-3)}};
    std::vector<IntMatrix> matrices = {{{Int(0), Int(2)}, {Int(1), Int(0)}}};
    IntMatrix basis = invariant_lattice_closure(vectors, matrices);
    CHECK(hnf(basis) == basis);
    CHECK(in_lattice(basis, vectors[0]));
    for (const IntVector& row : basis)
        REQUIRE(in_lattice(basis, vec_mat(row, matrices[0])));

    std::mt19937 rng(603);
    for (int i = 0; i < 250; ++i) {
        std::uniform_int_distribution<int> dim(1, 3), nvec(0, 3), nmat(0, 2);
        int k = dim(rng);
        IntMatrix vs = random_matrix(rng, nvec(rng), k, 4);
        std::vector<IntMatrix> ms;
        for (int j = nmat(rng); j > 0; --j)
            ms.push_back(random_matrix(rng, k, k, 2));
        IntMatrix closed = invariant_lattice_closure(vs, ms);
        REQUIRE(hnf(closed) == closed);
        for (const IntVector& v : vs)
            REQUIRE(in_lattice(closed, v));
        for (const IntVector& row : closed)
            for (const IntMatrix& m : ms)
                REQUIRE(in_lattice(closed, vec_mat(row, m)));
        REQUIRE(invariant_lattice_closure(closed, ms) == closed);
    }
}

TEST_CASE("abelian invariants of the sample groups") {
    const auto& bas = fixtures::basilica();
    const auto& gri = fixtures::grigorchuk();

    AbelianInvariants ab = abelian_invariants(bas.lp);
    CHECK(ab.free_rank == 2);
    CHECK(ab.torsion.empty());
    CHECK_FALSE(ab.heuristic);

    AbelianInvariants ag = abelian_invariants(gri.lp);
    CHECK(ag.free_rank == 0);
    CHECK(ag.torsion == std::vector<Int>{Int(2), Int(2), Int(2)});
    CHECK_FALSE(ag.heuristic);
}

TEST_CASE("abelian invariants agree across subgroup constructions") {
    const auto& bas = fixtures::basilica();
    CosetTable u1 = enumerate_cosets(bas.lp, bas.subgroup("U1"));

    AbelianInvariants li = abelian_invariants(leaf_invariant_lpres(bas.lp, u1).presentation);
    CHECK(li.free_rank == 2);
    CHECK(li.torsion == std::vector<Int>{Int(3)});
    CHECK_FALSE(li.heuristic);

    AbelianInvariants wn =
        abelian_invariants(weakly_leaf_invariant_normal_lpres(bas.lp, u1).presentation);
    CHECK(wn.free_rank == li.free_rank);
    CHECK(wn.torsion == li.torsion);

    // the general result drops the invariance flag, so a depth is required
    LPresentation gen = general_subgroup_lpres(bas.lp, u1).presentation;
    CHECK_THROWS_AS(abelian_invariants(gen), InvarianceRequiredError);
    AbelianInvariants gd = abelian_invariants(gen, 6);
    CHECK(gd.free_rank == li.free_rank);
    CHECK(gd.torsion == li.torsion);
    CHECK(gd.heuristic);

    // truncation agrees with the exact closure once the flag is dropped
    LPresentation stripped = leaf_invariant_lpres(bas.lp, u1).presentation;
    stripped.invariant = false;
    AbelianInvariants li_depth = abelian_invariants(stripped, 6);
    CHECK(li_depth.free_rank == li.free_rank);
    CHECK(li_depth.torsion == li.torsion);
    CHECK(li_depth.heuristic);
}

TEST_CASE("abelian invariants of the dihedral fixture subgroups") {
    const auto& gri = fixtures::grigorchuk();
    CosetTable d = enumerate_cosets(gri.lp, gri.subgroup("D"));
    AbelianInvariants ad =
        abelian_invariants(weakly_leaf_invariant_normal_lpres(gri.lp, d).presentation);
    CHECK(ad.free_rank == 0);
    CHECK(ad.torsion == std::vector<Int>(8, Int(2)));

    const auto& bas = fixtures::basilica();
    CosetTable u6 = enumerate_cosets(bas.lp, bas.subgroup("U6"));
    AbelianInvariants a6 = abelian_invariants(general_subgroup_lpres(bas.lp, u6).presentation, 4);
    CHECK(a6.free_rank == 3);
    CHECK(a6.torsion == std::vector<Int>{Int(3)});
    CHECK(a6.heuristic);
}
