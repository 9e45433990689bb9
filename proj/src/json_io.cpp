#include "rwb/json_io.hpp"

#include <fstream>

#include "rwb/errors.hpp"

namespace rwb {

Json signature_to_json(const Signature& sig) {
    Json j;
    j["relations"] = Json::array();
    for (const auto& r : sig.relations()) j["relations"].push_back({{"name", r.name}, {"arity", r.arity}});
    j["constants"] = Json::array();
    for (const auto& c : sig.constants()) j["constants"].push_back(c);
    return j;
}

Signature signature_from_json(const Json& j) {
    try {
        std::vector<RelationSymbol> rels;
        for (const auto& r : j.at("relations"))
            rels.push_back({r.at("name").get<std::string>(), r.at("arity").get<int>()});
        std::vector<std::string> consts;
        for (const auto& c : j.at("constants")) consts.push_back(c.get<std::string>());
        return Signature(std::move(rels), std::move(consts));
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("signature: ") + e.what());
    }
}

Json structure_to_json(const Structure& s) {
    const Signature& sig = s.signature();
    Json j;
    j["signature"] = signature_to_json(sig);
    j["size"] = s.size();
    Json tables = Json::object();
    for (int r = 0; r < sig.relation_count(); ++r) {
        Json rows = Json::array();
        for (const auto& t : s.tuples(r)) rows.push_back(t);
        tables[sig.relation_name(r)] = std::move(rows);
    }
    j["tables"] = std::move(tables);
    Json cmap = Json::object();
    for (int c = 0; c < sig.constant_count(); ++c) cmap[sig.constants()[static_cast<std::size_t>(c)]] = s.constant(c);
    j["constant_map"] = std::move(cmap);
    return j;
}

Structure structure_from_json(const Json& j) {
    try {
        Signature sig = signature_from_json(j.at("signature"));
        const int n = j.at("size").get<int>();
        StructureBuilder b(sig, n);
        const Json& tables = j.at("tables");
        for (int r = 0; r < sig.relation_count(); ++r) {
            const std::string& name = sig.relation_name(r);
            if (!tables.contains(name)) fail(Errc::ParseError, "missing table for relation " + name);
            for (const auto& row : tables.at(name)) {
                std::vector<int> t = row.get<std::vector<int>>();
                b.set(r, t);
            }
        }
        const Json& cmap = j.at("constant_map");
        for (int c = 0; c < sig.constant_count(); ++c) {
            const std::string& name = sig.constants()[static_cast<std::size_t>(c)];
            if (!cmap.contains(name)) fail(Errc::ParseError, "missing constant " + name);
            b.set_constant(c, cmap.at(name).get<int>());
        }
        return std::move(b).build();
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("structure: ") + e.what());
    }
}

Json class_spec_to_json(const ClassSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["signature"] = signature_to_json(spec.signature);
    j["forbidden"] = Json::array();
    for (const auto& f : spec.forbidden) j["forbidden"].push_back(structure_to_json(f));
    j["checker"] = spec.checker.empty() ? Json(nullptr) : Json(spec.checker);
    j["notes"] = spec.notes;
    return j;
}

ClassSpec class_spec_from_json(const Json& j) {
    try {
        ClassSpec spec;
        spec.name = j.at("name").get<std::string>();
        spec.signature = signature_from_json(j.at("signature"));
        for (const auto& f : j.at("forbidden")) {
            Structure fs = structure_from_json(f);
            if (!(fs.signature() == spec.signature))
                fail(Errc::ParseError, "forbidden structure signature differs from class signature");
            spec.forbidden.push_back(std::move(fs));
        }
        if (j.contains("checker") && !j.at("checker").is_null()) {
            spec.checker = j.at("checker").get<std::string>();
            if (!find_checker(spec.checker)) fail(Errc::UnknownChecker, spec.checker);
        }
        if (j.contains("notes") && j.at("notes").is_string()) spec.notes = j.at("notes").get<std::string>();
        return spec;
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("class spec: ") + e.what());
    }
}

Json qf_type_to_json(const QfType& t) {
    Json j;
    j["arity"] = t.arity();
    if (t.arity() == 2) {
        j["equal"] = t.equality_classes()[0] == t.equality_classes()[1];
    } else {
        // partition blocks by class id
        int classes = 0;
        for (int c : t.equality_classes()) classes = std::max(classes, c + 1);
        Json partition = Json::array();
        for (int c = 0; c < classes; ++c) {
            Json block = Json::array();
            for (int p = 0; p < t.arity(); ++p)
                if (t.equality_classes()[static_cast<std::size_t>(p)] == c) block.push_back(p);
            partition.push_back(std::move(block));
        }
        j["partition"] = std::move(partition);
    }
    Json rels = Json::object();
    const Signature& sig = t.signature();
    for (int r = 0; r < sig.relation_count(); ++r) {
        Json rows = Json::array();
        for (const auto& tuple : t.pattern_tuples(r)) rows.push_back(tuple);
        rels[sig.relation_name(r)] = std::move(rows);
    }
    j["relations"] = std::move(rels);
    return j;
}

Json coloring_to_json(int a_size, int k, const std::vector<std::vector<int>>& vertices,
                      const std::vector<int>& coloring) {
    Json j;
    j["A_size"] = a_size;
    j["k"] = k;
    Json rows = Json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i)
        rows.push_back({{"image", vertices[i]}, {"color", coloring[i]}});
    j["assignments"] = std::move(rows);
    return j;
}

std::vector<int> coloring_from_json(const Json& j, const std::vector<std::vector<int>>& vertices) {
    try {
        std::map<std::vector<int>, int> by_image;
        for (const auto& row : j.at("assignments"))
            by_image[row.at("image").get<std::vector<int>>()] = row.at("color").get<int>();
        std::vector<int> out;
        out.reserve(vertices.size());
        for (const auto& v : vertices) {
            auto it = by_image.find(v);
            if (it == by_image.end()) fail(Errc::ParseError, "coloring misses an embedding");
            out.push_back(it->second);
        }
        if (by_image.size() != vertices.size()) fail(Errc::ParseError, "coloring has extra assignments");
        return out;
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("coloring: ") + e.what());
    }
}

Json palette_to_json(const Palette& p) {
    Json j;
    j["arity"] = p.arity();
    j["default"] = p.default_color();
    Json rows = Json::array();
    for (const auto& [tuple, color] : p.entries()) rows.push_back({{"tuple", tuple}, {"color", color}});
    j["colormap"] = std::move(rows);
    return j;
}

Palette palette_from_json(const Json& j) {
    try {
        Palette p(j.at("arity").get<int>(), j.at("default").get<int>());
        for (const auto& row : j.at("colormap"))
            p.set(row.at("tuple").get<std::vector<int>>(), row.at("color").get<int>());
        return p;
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, std::string("palette: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(Errc::ParseError, path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace rwb
