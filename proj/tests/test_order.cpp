#include "doctest.h"

#include "oracles.hpp"
#include "rwb/catalog.hpp"
#include "rwb/errors.hpp"
#include "rwb/order_types.hpp"
#include "rwb/rigidity.hpp"

using namespace rwb;

TEST_SUITE_BEGIN("order");

TEST_CASE("irreflexive 2-type census") {
    CHECK(irreflexive_two_types(enumerate_models(get_class("linear-orders"), 4), 4).size() == 2);
    CHECK(irreflexive_two_types(enumerate_models(get_class("convex-er"), 4), 4).size() == 4);
    CHECK(irreflexive_two_types(enumerate_models(get_class("graphs"), 4), 4).size() == 2);
}

TEST_CASE("2-type order axioms") {
    SUBCASE("the order type of chains is antisymmetric and acyclic") {
        ModelCatalog cat = enumerate_models(get_class("linear-orders"), 4);
        QfType lt = qf_type(chain(2), {0, 1});
        TypeOrderReport r = check_type_order_axioms(lt, cat, 4);
        CHECK(r.antisymmetric);
        CHECK(r.acyclic);
    }
    SUBCASE("the edge type of graphs is symmetric, with a witness") {
        ModelCatalog cat = enumerate_models(get_class("graphs"), 4);
        QfType edge = qf_type(complete_graph(2), {0, 1});
        TypeOrderReport r = check_type_order_axioms(edge, cat, 4);
        CHECK_FALSE(r.antisymmetric);
        REQUIRE(r.symmetry_witness.has_value());
        // the witness replays: both orientations realize the type
        const Structure& w = *r.symmetry_witness;
        CHECK(qf_type(w, {r.symmetry_pair[0], r.symmetry_pair[1]}) == edge);
        CHECK(qf_type(w, {r.symmetry_pair[1], r.symmetry_pair[0]}) == edge);
    }
    SUBCASE("the between-class type of convex ER passes at 6") {
        ModelCatalog cat = enumerate_models(get_class("convex-er"), 6);
        // a < b in different classes
        StructureBuilder b(ordered_graph_signature(), 2);
        b.add("<", {0, 1});
        b.add("E", {0, 0});
        b.add("E", {1, 1});
        Structure two = std::move(b).build();
        TypeOrderReport r = check_type_order_axioms(qf_type(two, {0, 1}), cat, 6);
        CHECK(r.antisymmetric);
        CHECK(r.acyclic);
    }
}

TEST_CASE("definable order extraction") {
    SUBCASE("linear orders: the two orientations") {
        auto cands = find_order_types(enumerate_models(get_class("linear-orders"), 5), 5);
        REQUIRE(cands.size() == 2);
        for (const auto& c : cands) CHECK(c.types.size() == 1);
    }
    SUBCASE("convex ER: four candidates, mixed ones included") {
        auto cands = find_order_types(enumerate_models(get_class("convex-er"), 5), 5);
        REQUIRE(cands.size() == 4);
        for (const auto& c : cands) CHECK(c.types.size() == 2);
    }
    SUBCASE("non-rigid classes yield nothing") {
        CHECK(find_order_types(enumerate_models(get_class("graphs"), 5), 5).empty());
        CHECK(find_order_types(enumerate_models(get_class("equivalence-relations"), 5), 5).empty());
    }
    SUBCASE("stable when the bound grows to 6") {
        auto at5 = find_order_types(enumerate_models(get_class("convex-er"), 5), 5);
        auto at6 = find_order_types(enumerate_models(get_class("convex-er"), 6), 6);
        REQUIRE(at5.size() == at6.size());
        for (std::size_t i = 0; i < at5.size(); ++i) {
            REQUIRE(at5[i].types.size() == at6[i].types.size());
            for (std::size_t t = 0; t < at5[i].types.size(); ++t) CHECK(at5[i].types[t] == at6[i].types[t]);
        }
    }
    SUBCASE("every candidate is a verified strict linear order on every model") {
        ModelCatalog cat = enumerate_models(get_class("convex-er"), 5);
        auto cands = find_order_types(cat, 5);
        for (const auto& cand : cands) {
            for (int size = 1; size <= 5; ++size)
                for (const auto& m : cat.models(size)) {
                    auto lt = [&](int x, int y) {
                        if (x == y) return false;
                        QfType t = qf_type(m, {x, y});
                        for (const auto& w : cand.types)
                            if (w == t) return true;
                        return false;
                    };
                    for (int x = 0; x < size; ++x)
                        for (int y = 0; y < size; ++y) {
                            if (x == y) {
                                CHECK_FALSE(lt(x, x));
                                continue;
                            }
                            CHECK(lt(x, y) != lt(y, x));
                            for (int z = 0; z < size; ++z)
                                if (z != x && z != y && lt(x, y) && lt(y, z)) CHECK(lt(x, z));
                        }
                }
        }
    }
    SUBCASE("rigidity failure forces an empty candidate list") {
        for (const char* name : {"graphs", "equivalence-relations", "maxdeg2-graphs"}) {
            ModelCatalog cat = enumerate_models(get_class(name), 5);
            if (!check_rigidity(cat, 5).pass) CHECK(find_order_types(cat, 5).empty());
        }
    }
}

TEST_CASE("monochromatic 2-type sublists") {
    SUBCASE("chains have a single increasing type") {
        std::vector<int> x{0, 1, 2, 3, 4, 5};
        auto r = find_monochromatic_2type(chain(6), x, 3);
        REQUIRE(r.has_value());
        REQUIRE(r->type.has_value());
        CHECK(r->sublist.size() == 3);
        CHECK(*r->type == qf_type(chain(6), {0, 1}));
    }
    SUBCASE("degenerate target returns no type") {
        std::vector<int> x{0, 1, 2};
        auto r = find_monochromatic_2type(chain(3), x, 1);
        REQUIRE(r.has_value());
        CHECK_FALSE(r->type.has_value());
        CHECK(r->sublist.size() == 1);
    }
    SUBCASE("convex ER with three classes of two") {
        StructureBuilder b(ordered_graph_signature(), 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) b.add("<", {i, j});
        for (int c = 0; c < 3; ++c)
            for (int i = 2 * c; i < 2 * c + 2; ++i)
                for (int j = 2 * c; j < 2 * c + 2; ++j) b.add("E", {i, j});
        Structure m = std::move(b).build();
        std::vector<int> x{0, 1, 2, 3, 4, 5};
        auto r = find_monochromatic_2type(m, x, 2);
        REQUIRE(r.has_value());
        REQUIRE(r->type.has_value());
        CHECK(r->sublist.size() == 2);
        // with two colors on increasing pairs, |X| = 6 >= R(3,3) guarantees 3
        auto r3 = find_monochromatic_2type(m, x, 3);
        CHECK(r3.has_value());
    }
    SUBCASE("below the threshold extraction can fail") {
        // 2 realized increasing types on a 2-colorable pair set of 5 points
        // exists (classical R(3,3) = 6 sharpness)
        StructureBuilder b(ordered_graph_signature(), 5);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) b.add("<", {i, j});
        for (int i = 0; i < 5; ++i) b.add("E", {i, i});
        // C5 pattern as the E-relation restricted to increasing pairs of a
        // pentagon coloring: classes {i, i+1 mod 5} cannot be convex, so this
        // is a plain ordered structure rather than a convex ER; qf_type still
        // separates E-pairs from non-E-pairs
        auto edge = [&](int i, int j) {
            int d = (j - i + 5) % 5;
            return d == 1 || d == 4;
        };
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j && edge(i, j)) b.add("E", {i, j});
        Structure m = std::move(b).build();
        std::vector<int> x{0, 1, 2, 3, 4};
        auto r = find_monochromatic_2type(m, x, 3);
        CHECK_FALSE(r.has_value()); // the pentagon has no mono triangle
    }
    SUBCASE("errors") {
        std::vector<int> dup{0, 0, 1};
        CHECK_THROWS_AS(find_monochromatic_2type(chain(3), dup, 2), Error);
        std::vector<int> x{0, 1};
        CHECK_THROWS_AS(find_monochromatic_2type(chain(3), x, 3), Error);
    }
}

TEST_SUITE_END();
