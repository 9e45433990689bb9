#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rwb/arrow.hpp"
#include "rwb/catalog.hpp"
#include "rwb/errors.hpp"
#include "rwb/json_io.hpp"

using namespace rwb;

TEST_SUITE_BEGIN("json");

TEST_CASE("structure serialization is bit-exact and stable") {
    // convex ER on 3 points: a<b<c, classes {a,b},{c}
    StructureBuilder b(ordered_graph_signature(), 3);
    b.add("<", {0, 1});
    b.add("<", {0, 2});
    b.add("<", {1, 2});
    for (int i = 0; i < 3; ++i) b.add("E", {i, i});
    b.add("E", {0, 1});
    b.add("E", {1, 0});
    Structure s = std::move(b).build();
    Json j = structure_to_json(s);
    CHECK(j.dump() ==
          R"({"signature":{"relations":[{"name":"<","arity":2},{"name":"E","arity":2}],"constants":[]},)"
          R"("size":3,"tables":{"<":[[0,1],[0,2],[1,2]],"E":[[0,0],[0,1],[1,0],[1,1],[2,2]]},)"
          R"("constant_map":{}})");
    CHECK(structure_from_json(j) == s);
    // keys are required even when empty
    CHECK(j.contains("constant_map"));
    CHECK(j["signature"].contains("constants"));
}

TEST_CASE("structure round trips, including constants") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Structure s = oracle::random_two_relation(1 + static_cast<int>(rng() % 5), rng);
        CHECK(structure_from_json(structure_to_json(s)) == s);
    }
    ClassSpec trees = get_class("ordered-trees");
    ModelCatalog cat = enumerate_models(trees, 4);
    for (int size = 1; size <= 4; ++size)
        for (const auto& m : cat.models(size)) CHECK(structure_from_json(structure_to_json(m)) == m);
}

TEST_CASE("structure parse errors") {
    CHECK_THROWS_AS(structure_from_json(Json::parse(R"({"size":1})")), Error);
    // tuple outside the universe
    Json j = structure_to_json(chain(2));
    j["tables"]["<"].push_back({0, 5});
    CHECK_THROWS_AS(structure_from_json(j), Error);
}

TEST_CASE("class spec round trip and checker validation") {
    for (const auto& entry : list_classes()) {
        Json j = class_spec_to_json(entry.spec);
        ClassSpec back = class_spec_from_json(j);
        CHECK(back.name == entry.spec.name);
        CHECK(back.signature == entry.spec.signature);
        CHECK(back.forbidden.size() == entry.spec.forbidden.size());
        for (std::size_t i = 0; i < back.forbidden.size(); ++i)
            CHECK(back.forbidden[i] == entry.spec.forbidden[i]);
        CHECK(back.checker == entry.spec.checker);
    }
    SUBCASE("unknown checker names are a load error") {
        Json j = class_spec_to_json(get_class("linear-orders"));
        j["checker"] = "no-such-checker";
        CHECK_THROWS_AS(class_spec_from_json(j), Error);
    }
    SUBCASE("null checker loads as none") {
        Json j = class_spec_to_json(get_class("linear-orders"));
        CHECK(j["checker"].is_null());
        CHECK(class_spec_from_json(j).checker.empty());
    }
}

TEST_CASE("qf_type serialization") {
    QfType lt = qf_type(chain(3), {0, 2});
    Json j = qf_type_to_json(lt);
    CHECK(j.dump() == R"({"arity":2,"equal":false,"relations":{"<":[[0,1]]}})");
    QfType diag = qf_type(chain(3), {1, 1});
    CHECK(qf_type_to_json(diag)["equal"] == true);
    QfType triple = qf_type(chain(3), {0, 1, 0});
    Json j3 = qf_type_to_json(triple);
    CHECK(j3["arity"] == 3);
    CHECK(j3.contains("partition"));
}

TEST_CASE("coloring serialization") {
    ArrowVerdict v = decide_arrow(chain(5), chain(3), chain(2), 2);
    REQUIRE_FALSE(v.holds);
    CopyHypergraph h = copy_hypergraph(chain(2), chain(3), chain(5));
    Json j = coloring_to_json(2, 2, h.vertices, v.coloring);
    CHECK(j["A_size"] == 2);
    CHECK(j["k"] == 2);
    CHECK(j["assignments"].size() == h.vertices.size());
    CHECK(j["assignments"][0].contains("image"));
    std::vector<int> back = coloring_from_json(j, h.vertices);
    CHECK(back == v.coloring);
}

TEST_CASE("palette serialization") {
    Palette p(2, 0);
    p.set({0, 3}, 1);
    p.set({1, 2}, 1);
    Json j = palette_to_json(p);
    CHECK(j.dump() == R"({"arity":2,"default":0,"colormap":[{"tuple":[0,3],"color":1},{"tuple":[1,2],"color":1}]})");
    Palette back = palette_from_json(j);
    CHECK(back.arity() == 2);
    CHECK(back.default_color() == 0);
    std::vector<int> t1{0, 3}, t2{2, 2};
    CHECK(back.color(t1) == 1);
    CHECK(back.color(t2) == 0);
}

TEST_SUITE_END();
