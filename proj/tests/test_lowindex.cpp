#include <catch2/catch_amalgamated.hpp>

#include "lpres/classify.hpp"
#include "lpres/low_index.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace lpres;

namespace {

std::vector<int> counts_by_index(const std::vector<CosetTable>& tables, int max_index) {
    std::vector<int> counts(static_cast<std::size_t>(max_index), 0);
    for (const CosetTable& t : tables)
        ++counts[static_cast<std::size_t>(t.ncosets()) - 1];
    return counts;
}

} // namespace

TEST_CASE("low index search on the free group matches the classical counts") {
    LPresentation f2;
    f2.alphabet = Alphabet({"a", "b"});
    f2.invariant = true;
    std::vector<CosetTable> tables = low_index_tables(f2, 4);
    CHECK(counts_by_index(tables, 4) == std::vector<int>{1, 3, 13, 71});
}

TEST_CASE("low index search on a finite cyclic group") {
    LPresentation z6;
    z6.alphabet = Alphabet({"a"});
    z6.fixed = {Word{1, 1, 1, 1, 1, 1}};
    z6.invariant = false;
    std::vector<CosetTable> tables = low_index_tables(z6, 6);
    CHECK(counts_by_index(tables, 6) == std::vector<int>{1, 1, 1, 0, 0, 1});
}

TEST_CASE("low index tables are unique, sorted and verified") {
    const auto& bas = fixtures::basilica();
    std::vector<CosetTable> tables = low_index_tables(bas.lp, 3);
    CHECK(tables.size() == 11);
    CHECK(counts_by_index(tables, 3) == std::vector<int>{1, 3, 7});
    for (std::size_t i = 0; i < tables.size(); ++i) {
        REQUIRE(verify_table(bas.lp, tables[i]));
        REQUIRE(tables[i] == tables[i].standardized());
        // strictly ordered by index first, then by the column comparison
        if (i + 1 < tables.size()) {
            const CosetTable& a = tables[i];
            const CosetTable& b = tables[i + 1];
            REQUIRE((a.ncosets() < b.ncosets() ||
                     (a.ncosets() == b.ncosets() && a < b)));
        }
    }
}

TEST_CASE("census flags over the low index subgroups") {
    const auto& bas = fixtures::basilica();
    std::vector<CosetTable> tables = low_index_tables(bas.lp, 6);

    std::vector<int> all(7, 0), normal(7, 0), maximal(7, 0), leaf(7, 0), weak(7, 0),
        normal_weak(7, 0);
    for (const CosetTable& t : tables) {
        std::size_t n = static_cast<std::size_t>(t.ncosets());
        SubgroupReport rep = classify_subgroup(bas.lp, t);
        ++all[n];
        if (rep.normal)
            ++normal[n];
        if (is_primitive(t))
            ++maximal[n];
        if (rep.leaf_invariant)
            ++leaf[n];
        if (rep.weakly_leaf_invariant_Vtilde)
            ++weak[n];
        if (rep.normal && rep.weakly_leaf_invariant_Vtilde)
            ++normal_weak[n];
    }
    CHECK(all == std::vector<int>{0, 1, 3, 7, 19, 11, 39});
    CHECK(normal == std::vector<int>{0, 1, 3, 4, 7, 6, 13});
    CHECK(maximal == std::vector<int>{0, 1, 3, 7, 0, 11, 0});
    CHECK(leaf == std::vector<int>{0, 1, 0, 4, 0, 6, 0});
    CHECK(weak == std::vector<int>{0, 1, 3, 4, 19, 6, 14});
    CHECK(normal_weak == std::vector<int>{0, 1, 3, 4, 7, 6, 12});
}

TEST_CASE("primitivity of permutation actions") {
    // a regular cyclic action of composite order has blocks
    CHECK_FALSE(is_primitive(CosetTable({{1, 2, 3, 0}})));
    CHECK_FALSE(is_primitive(CosetTable({{1, 2, 3, 4, 5, 0}})));
    // prime cyclic and 2-point actions cannot have proper blocks
    CHECK(is_primitive(CosetTable({{1, 2, 0}})));
    CHECK(is_primitive(CosetTable({{1, 0}, {0, 1}})));
    // the natural degree-3 action of the symmetric group is primitive
    CHECK(is_primitive(CosetTable({{1, 0, 2}, {1, 2, 0}})));
    // the trivial action is primitive by convention
    CHECK(is_primitive(CosetTable(std::vector<std::vector<int>>{{0}})));
}

TEST_CASE("inconclusive low index searches keep their partial results") {
    std::vector<CosetTable> found;
    found.push_back(CosetTable(std::vector<std::vector<int>>{{0}}));
    LowIndexInconclusiveError err("search hit the coset limit", found);
    CHECK(err.partial.size() == 1);
    CHECK_THROWS_AS(throw err, InconclusiveError); // usable through the base class
}
