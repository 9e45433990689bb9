// rwb: command-line workbench for finite relational structure classes.
// Every subcommand emits either a human-readable report or deterministic
// JSON (byte-identical for a fixed configuration, independent of the worker
// count). Exit codes: 0 property holds / object found, 1 refuted / not
// found, 2 usage error, 3 resource limit.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "rwb/arrow.hpp"
#include "rwb/catalog.hpp"
#include "rwb/errors.hpp"
#include "rwb/fraisse_checks.hpp"
#include "rwb/generic.hpp"
#include "rwb/json_io.hpp"
#include "rwb/order_types.hpp"
#include "rwb/rigidity.hpp"

using namespace rwb;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string class_name;
    std::string spec_file;
    std::string format = "human";
    int workers = 1;
    long budget = kDefaultNodeBudget;
    std::uint64_t seed = 0;
};

ClassSpec resolve_class(const Options& opt) {
    if (!opt.spec_file.empty()) return class_spec_from_json(load_json_file(opt.spec_file));
    if (opt.class_name.empty()) fail(Errc::InvalidArgument, "no class given (use --class or --spec)");
    return get_class(opt.class_name);
}

// chainN / KN / emptyN aliases, else a JSON file path. Aliases resolve
// against the class signature; auxiliary relations are filled with the
// smallest member completion (empty, then diagonal).
Structure resolve_structure(const std::string& arg, const ClassSpec& spec) {
    auto starts = [&](const char* p) { return arg.rfind(p, 0) == 0; };
    auto num_after = [&](std::size_t at) {
        try {
            std::size_t used = 0;
            int n = std::stoi(arg.substr(at), &used);
            if (used != arg.size() - at || n < 0) return -1;
            return n;
        } catch (...) {
            return -1;
        }
    };
    if (starts("chain") && num_after(5) >= 0) {
        const int n = num_after(5);
        const int lt = spec.signature.relation_index("<");
        if (lt < 0) fail(Errc::InvalidArgument, "chain alias needs a '<' relation in the class signature");
        StructureBuilder b(spec.signature, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) b.set(lt, std::vector<int>{i, j});
        Structure plain = std::move(b).build();
        if (is_member(spec, plain)) return plain;
        // add diagonals on the remaining binary relations (e.g. a reflexive E)
        StructureBuilder b2(plain);
        for (int r = 0; r < spec.signature.relation_count(); ++r) {
            if (r == lt || spec.signature.arity(r) != 2) continue;
            for (int i = 0; i < n; ++i) b2.set(r, std::vector<int>{i, i});
        }
        Structure withdiag = std::move(b2).build();
        if (is_member(spec, withdiag)) return withdiag;
        fail(Errc::InvalidArgument, "no member completion for alias " + arg);
    }
    if ((starts("K") && num_after(1) >= 0) || (starts("empty") && num_after(5) >= 0)) {
        const bool complete = starts("K");
        const int n = num_after(complete ? 1 : 5);
        if (!(spec.signature == graph_signature()))
            fail(Errc::InvalidArgument, arg + " alias needs the plain graph signature");
        Structure s = complete ? complete_graph(n) : empty_graph(n);
        if (!is_member(spec, s)) fail(Errc::InvalidArgument, arg + " is not a member of " + spec.name);
        return s;
    }
    Structure s = structure_from_json(load_json_file(arg));
    if (!(s.signature() == spec.signature)) fail(Errc::SignatureMismatch, arg + " signature differs from class");
    return s;
}

void emit(const Options& opt, const Json& report, const std::string& human) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

Json params_json(const Options& opt, std::initializer_list<std::pair<std::string, Json>> extra) {
    // worker count deliberately omitted: reports are identical across pools
    Json p;
    p["budget"] = opt.budget;
    p["seed"] = opt.seed;
    for (const auto& [key, v] : extra) p[key] = v;
    return p;
}

Json span_to_json(const Span& span) {
    Json j;
    j["A0"] = structure_to_json(span.base);
    j["A1"] = structure_to_json(span.left);
    j["f1"] = span.left_map;
    j["A2"] = structure_to_json(span.right);
    j["f2"] = span.right_map;
    return j;
}

Span span_from_json(const Json& j) {
    Span s;
    s.base = structure_from_json(j.at("A0"));
    s.left = structure_from_json(j.at("A1"));
    s.left_map = j.at("f1").get<std::vector<int>>();
    s.right = structure_from_json(j.at("A2"));
    s.right_map = j.at("f2").get<std::vector<int>>();
    return s;
}

// ---------------------------------------------------------------------------

int cmd_catalog(const Options& opt) {
    Json report;
    report["command"] = "catalog";
    Json classes = Json::array();
    std::string human;
    for (const auto& e : list_classes()) {
        Json c;
        c["name"] = e.spec.name;
        c["provenance"] = e.provenance;
        c["signature"] = signature_to_json(e.spec.signature);
        c["checker"] = e.spec.checker.empty() ? Json(nullptr) : Json(e.spec.checker);
        c["forbidden_count"] = e.spec.forbidden.size();
        Json exp = Json::object();
        for (const auto& [key, v] : e.expected) exp[key] = v;
        Json bounds = Json::object();
        for (const auto& [key, v] : e.bounds) bounds[key] = v;
        c["expected"] = std::move(exp);
        c["bounds"] = std::move(bounds);
        classes.push_back(std::move(c));
        human += e.spec.name + ": " + e.provenance + "\n";
        for (const auto& [key, v] : e.expected)
            human += "  " + key + " -> " + v + " (bound " + std::to_string(e.bounds.at(key)) + ")\n";
    }
    report["classes"] = std::move(classes);
    emit(opt, report, human);
    return kExitHolds;
}

int cmd_enumerate(const Options& opt, int max_size, bool with_models) {
    ClassSpec spec = resolve_class(opt);
    ModelCatalog cat = enumerate_models(spec, max_size, opt.workers);
    Json report;
    report["command"] = "enumerate";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"max_size", max_size}});
    Json counts = Json::array();
    std::string human = "models of " + spec.name + " by size:\n";
    for (int s = 1; s <= max_size; ++s) {
        counts.push_back({{"size", s}, {"models", cat.models(s).size()}});
        human += "  " + std::to_string(s) + ": " + std::to_string(cat.models(s).size()) + "\n";
    }
    report["counts"] = std::move(counts);
    if (with_models) {
        Json models = Json::array();
        for (int s = 1; s <= max_size; ++s)
            for (const auto& m : cat.models(s)) models.push_back(structure_to_json(m));
        report["models"] = std::move(models);
    }
    emit(opt, report, human);
    return kExitHolds;
}

int cmd_check(const Options& opt, const std::vector<std::string>& props, int max_size, int census_arity,
              const std::string& model_arg, int ep_bound) {
    ClassSpec spec = resolve_class(opt);
    ModelCatalog cat = enumerate_models(spec, max_size, opt.workers);
    Json report;
    report["command"] = "check";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"max_size", max_size},
                                         {"props", props},
                                         {"arity", census_arity},
                                         {"ep_bound", ep_bound}});
    Json results = Json::array();
    std::string human;
    bool any_failed = false;

    for (const auto& prop : props) {
        Json r;
        r["prop"] = prop;
        if (prop == "hp") {
            HpResult h = check_hp(cat, max_size);
            r["verdict"] = h.pass ? "PASS" : "FAIL";
            r["bound"] = max_size;
            if (!h.pass) {
                r["certificate"] = {{"model", structure_to_json(*h.model)}, {"subset", h.subset}};
                any_failed = true;
            }
            human += "hp: " + std::string(h.pass ? "PASS" : "FAIL") + " at bound " +
                     std::to_string(max_size) + "\n";
            if (!h.pass) human += "  certificate: " + r["certificate"].dump() + "\n";
        } else if (prop == "jep") {
            JepResult jr = check_jep(cat, max_size, opt.workers);
            r["verdict"] = jr.pass ? "PASS" : "FAIL";
            r["bound"] = max_size;
            // early failure makes the pair counter depend on chunking
            if (jr.pass) r["pairs"] = jr.spans;
            if (!jr.pass) {
                r["certificate"] = {{"A1", structure_to_json(jr.pair->first)},
                                    {"A2", structure_to_json(jr.pair->second)}};
                any_failed = true;
            }
            human += "jep: " + std::string(jr.pass ? "PASS" : "FAIL") + " at bound " +
                     std::to_string(max_size) + "\n";
            if (!jr.pass) human += "  certificate: " + r["certificate"].dump() + "\n";
        } else if (prop == "ap") {
            ApResult ar = check_ap(cat, max_size, opt.workers);
            r["verdict"] = ar.pass ? "PASS" : "FAIL";
            r["bound"] = max_size;
            // early failure makes the span counter depend on chunking
            if (ar.pass) r["spans"] = ar.spans;
            if (!ar.pass) {
                r["certificate"] = span_to_json(*ar.span);
                r["certificate"]["amalgam_bound"] = ar.amalgam_size_bound;
                any_failed = true;
                human += "ap: FAIL at bound " + std::to_string(max_size) + " (|A0|=" +
                         std::to_string(ar.span->base.size()) + ", |A1|=" +
                         std::to_string(ar.span->left.size()) + ", |A2|=" +
                         std::to_string(ar.span->right.size()) + ")\n";
                human += "  certificate: " + r["certificate"].dump() + "\n";
            } else {
                human += "ap: PASS at bound " + std::to_string(max_size) + "\n";
            }
        } else if (prop == "rigidity") {
            RigidityResult rr = check_rigidity(cat, max_size);
            r["verdict"] = rr.pass ? "PASS" : "FAIL";
            r["bound"] = max_size;
            if (!rr.pass) {
                r["certificate"] = {{"model", structure_to_json(*rr.model)},
                                    {"automorphism", rr.automorphism}};
                any_failed = true;
            }
            human += "rigidity: " + std::string(rr.pass ? "PASS" : "FAIL") + " at bound " +
                     std::to_string(max_size) + "\n";
            if (!rr.pass) human += "  certificate: " + r["certificate"].dump() + "\n";
        } else if (prop == "types") {
            auto census = type_census(cat, census_arity, max_size);
            r["verdict"] = "PASS";
            r["bound"] = max_size;
            r["arity"] = census_arity;
            r["count"] = census.size();
            Json list = Json::array();
            for (const auto& t : census) list.push_back(qf_type_to_json(t));
            r["types"] = std::move(list);
            human += "types: " + std::to_string(census.size()) + " atomic " +
                     std::to_string(census_arity) + "-types at bound " + std::to_string(max_size) + "\n";
        } else if (prop == "extension") {
            if (model_arg.empty()) fail(Errc::InvalidArgument, "extension check needs --model");
            Structure host = resolve_structure(model_arg, spec);
            EpResult er = check_extension_property(spec, host, ep_bound);
            r["verdict"] = er.pass ? "PASS" : "FAIL";
            r["bound"] = ep_bound;
            r["model"] = structure_to_json(host);
            if (!er.pass) {
                r["certificate"] = {{"whole", structure_to_json(er.failing->whole)},
                                    {"sub", er.failing->sub},
                                    {"embedding", er.failing->embedding}};
                any_failed = true;
            }
            human += "extension: " + std::string(er.pass ? "PASS" : "FAIL") + " at demand bound " +
                     std::to_string(ep_bound) + "\n";
            if (!er.pass) human += "  certificate: " + r["certificate"].dump() + "\n";
        } else {
            fail(Errc::InvalidArgument, "unknown prop " + prop);
        }
        results.push_back(std::move(r));
    }
    report["results"] = std::move(results);
    emit(opt, report, human);
    return any_failed ? kExitRefuted : kExitHolds;
}

int cmd_arrow(const Options& opt, const std::string& a_arg, const std::string& b_arg,
              const std::string& c_arg, int k, bool search, int max_size, bool witness_cmd) {
    ClassSpec spec = resolve_class(opt);
    Structure a = resolve_structure(a_arg, spec);
    Structure b = resolve_structure(b_arg, spec);
    if (!is_member(spec, a) || !is_member(spec, b))
        fail(Errc::InvalidArgument, "A and B must be members of the class");

    Json report;
    report["command"] = witness_cmd ? "witness" : "arrow";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"k", k}, {"search", search || witness_cmd}, {"max_size", max_size}});
    report["A"] = structure_to_json(a);
    report["B"] = structure_to_json(b);

    if (search || witness_cmd) {
        ModelCatalog cat = enumerate_models(spec, max_size, opt.workers);
        WitnessResult w = find_witness(cat, a, b, k, max_size, opt.budget, opt.workers);
        if (w.witness) {
            report["witness"] = structure_to_json(*w.witness);
            report["models_tried"] = w.models_tried;
            emit(opt, report, "witness found: size " + std::to_string(w.witness->size()) + " after " +
                                  std::to_string(w.models_tried) + " models\n");
            return kExitHolds;
        }
        report["witness"] = nullptr;
        report["searched_up_to"] = w.searched_up_to;
        report["models_tried"] = w.models_tried;
        emit(opt, report, "no witness up to size " + std::to_string(max_size) + "\n");
        return kExitRefuted;
    }

    if (c_arg.empty()) fail(Errc::InvalidArgument, "arrow needs --C or --search");
    Structure c = resolve_structure(c_arg, spec);
    ArrowVerdict v = decide_arrow(c, b, a, k, opt.budget, opt.workers);
    report["C"] = structure_to_json(c);
    report["verdict"] = v.holds ? "holds" : "fails";
    report["stats"] = {{"vertices", v.stats.vertices}, {"edges", v.stats.edges}, {"nodes", v.stats.nodes}};
    if (!v.holds) {
        CopyHypergraph h = copy_hypergraph(a, b, c);
        report["certificate"] = coloring_to_json(a.size(), k, h.vertices, v.coloring);
        emit(opt, report, "arrow fails: certificate coloring over " + std::to_string(v.stats.vertices) +
                              " embeddings\n");
        return kExitRefuted;
    }
    emit(opt, report, "arrow holds (" + std::to_string(v.stats.nodes) + " nodes)\n");
    return kExitHolds;
}

int cmd_order(const Options& opt, int max_size) {
    ClassSpec spec = resolve_class(opt);
    ModelCatalog cat = enumerate_models(spec, max_size, opt.workers);
    auto census = irreflexive_two_types(cat, max_size);
    auto cands = find_order_types(cat, max_size);
    Json report;
    report["command"] = "order";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"max_size", max_size}});
    Json cj = Json::array();
    for (const auto& t : census) cj.push_back(qf_type_to_json(t));
    report["irreflexive_types"] = std::move(cj);
    Json oj = Json::array();
    for (const auto& c : cands) {
        Json types = Json::array();
        for (const auto& t : c.types) types.push_back(qf_type_to_json(t));
        oj.push_back({{"types", std::move(types)}, {"verified_bound", c.verified_bound}});
    }
    report["candidates"] = std::move(oj);
    std::string human = spec.name + ": " + std::to_string(census.size()) + " irreflexive 2-types, " +
                        std::to_string(cands.size()) + " order candidates at bound " +
                        std::to_string(max_size) + "\n";
    emit(opt, report, human);
    return cands.empty() ? kExitRefuted : kExitHolds;
}

int cmd_indiscernible(const Options& opt, const std::string& c_arg, const std::string& a_arg,
                      const std::string& palette_file, bool iterated) {
    ClassSpec spec = resolve_class(opt);
    Structure c = resolve_structure(c_arg, spec);
    Structure a = resolve_structure(a_arg, spec);
    Palette palette = palette_from_json(load_json_file(palette_file));
    auto g = extract_indiscernible(c, a, palette, iterated);
    Json report;
    report["command"] = "indiscernible";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"iterated", iterated}});
    report["C"] = structure_to_json(c);
    report["A"] = structure_to_json(a);
    report["palette"] = palette_to_json(palette);
    if (g) {
        report["embedding"] = std::vector<int>(g->map().begin(), g->map().end());
        emit(opt, report, "indiscernible copy found\n");
        return kExitHolds;
    }
    report["embedding"] = nullptr;
    emit(opt, report, "no indiscernible copy\n");
    return kExitRefuted;
}

int cmd_generic(const Options& opt, int growth_budget, int demand_cap, int ep_check) {
    ClassSpec spec = resolve_class(opt);
    {
        // growth assumes the class amalgamates; warn (on stderr, keeping
        // stdout reports byte-stable) when the small-bound checks refute it
        ModelCatalog small = enumerate_models(spec, 2);
        if (!check_jep(small, 2).pass || !check_ap(small, 2).pass)
            std::cerr << "warning: " << spec.name
                      << " fails joint embedding or amalgamation at bound 2; growth may abort\n";
    }
    GrowReport g = grow_generic(spec, growth_budget, opt.seed, demand_cap);
    Json report;
    report["command"] = "generic";
    report["class"] = spec.name;
    report["params"] = params_json(opt, {{"growth_budget", growth_budget}, {"demand_cap", demand_cap}});
    report["structure"] = structure_to_json(g.result);
    report["steps"] = g.steps;
    report["saturated"] = g.saturated;
    std::string human = "grew a " + spec.name + " member of size " + std::to_string(g.result.size()) +
                        " in " + std::to_string(g.steps) + " steps\n";
    if (ep_check > 0) {
        EpResult er = check_extension_property(spec, g.result, ep_check);
        report["extension_property"] = {{"bound", ep_check}, {"verdict", er.pass ? "PASS" : "FAIL"}};
        human += "extension property at " + std::to_string(ep_check) + ": " +
                 (er.pass ? "PASS" : "FAIL") + "\n";
    }
    emit(opt, report, human);
    return kExitHolds;
}

bool verify_report(const Json& report, std::string& what);

int cmd_verify(const Options& opt, const std::string& file) {
    Json report = load_json_file(file);
    std::string what;
    bool ok = verify_report(report, what);
    Json out;
    out["command"] = "verify";
    out["target"] = report.value("command", "?");
    out["replayed"] = ok;
    out["detail"] = what;
    emit(opt, out, what + (ok ? ": certificates replay\n" : ": REPLAY FAILED\n"));
    return ok ? kExitHolds : kExitRefuted;
}

bool verify_report(const Json& report, std::string& what) {
    const std::string cmd = report.value("command", "");
    if (cmd == "arrow") {
        what = "arrow report";
        Structure a = structure_from_json(report.at("A"));
        Structure b = structure_from_json(report.at("B"));
        if (!report.contains("C")) return true; // nothing to replay
        Structure c = structure_from_json(report.at("C"));
        if (report.value("verdict", "") == "fails") {
            CopyHypergraph h = copy_hypergraph(a, b, c);
            std::vector<int> coloring = coloring_from_json(report.at("certificate"), h.vertices);
            return coloring_refutes(h, coloring, report.at("certificate").at("k").get<int>());
        }
        // a holds verdict re-runs the decision
        return decide_arrow(c, b, a, report.at("params").at("k").get<int>()).holds;
    }
    if (cmd == "witness") {
        what = "witness report";
        if (!report.contains("witness") || report.at("witness").is_null()) return true;
        Structure a = structure_from_json(report.at("A"));
        Structure b = structure_from_json(report.at("B"));
        Structure c = structure_from_json(report.at("witness"));
        return decide_arrow(c, b, a, report.at("params").at("k").get<int>()).holds;
    }
    if (cmd == "check") {
        what = "check report";
        ClassSpec spec = get_class(report.at("class").get<std::string>());
        for (const auto& r : report.at("results")) {
            if (r.value("verdict", "") != "FAIL" || !r.contains("certificate")) continue;
            const Json& cert = r.at("certificate");
            const std::string prop = r.at("prop").get<std::string>();
            if (prop == "ap") {
                if (find_amalgam(spec, span_from_json(cert)).found) return false;
            } else if (prop == "jep") {
                if (!jep_certificate_replays(spec, structure_from_json(cert.at("A1")),
                                             structure_from_json(cert.at("A2"))))
                    return false;
            } else if (prop == "rigidity") {
                Structure m = structure_from_json(cert.at("model"));
                std::vector<int> sigma = cert.at("automorphism").get<std::vector<int>>();
                bool ident = true;
                for (std::size_t i = 0; i < sigma.size(); ++i)
                    if (sigma[i] != static_cast<int>(i)) ident = false;
                if (ident || !is_embedding_map(m, m, sigma)) return false;
            } else if (prop == "hp") {
                Structure m = structure_from_json(cert.at("model"));
                std::vector<int> subset = cert.at("subset").get<std::vector<int>>();
                // re-scan: no member substructure of m contains the subset
                const int n = m.size();
                int mask = 0;
                for (int e : subset) mask |= 1 << e;
                for (int sup = 0; sup < (1 << n); ++sup) {
                    if ((sup & mask) != mask) continue;
                    std::vector<int> elems;
                    for (int i = 0; i < n; ++i)
                        if ((sup >> i) & 1) elems.push_back(i);
                    bool consts = true;
                    for (int cc = 0; cc < spec.signature.constant_count(); ++cc)
                        if (!((sup >> m.constant(cc)) & 1)) consts = false;
                    if (consts && is_member(spec, induced_substructure(m, elems))) return false;
                }
            } else if (prop == "extension") {
                Structure host = structure_from_json(r.at("model"));
                Structure whole = structure_from_json(cert.at("whole"));
                std::vector<int> sub = cert.at("sub").get<std::vector<int>>();
                std::vector<int> emb = cert.at("embedding").get<std::vector<int>>();
                std::vector<int> partial(static_cast<std::size_t>(whole.size()), -1);
                for (std::size_t i = 0; i < sub.size(); ++i) partial[static_cast<std::size_t>(sub[i])] = emb[i];
                if (!embedding_maps_extending(whole, host, partial, true).empty()) return false;
            }
        }
        return true;
    }
    if (cmd == "order") {
        what = "order report";
        ClassSpec spec = get_class(report.at("class").get<std::string>());
        int bound = report.at("params").at("max_size").get<int>();
        ModelCatalog cat = enumerate_models(spec, bound);
        auto census = irreflexive_two_types(cat, bound);
        // every reported candidate must be a strict linear order everywhere
        for (const auto& cj : report.at("candidates")) {
            std::vector<QfType> types;
            for (const auto& tj : cj.at("types")) {
                bool found = false;
                for (const auto& t : census)
                    if (qf_type_to_json(t) == tj) {
                        types.push_back(t);
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
            for (int size = 1; size <= bound; ++size)
                for (const auto& m : cat.models(size)) {
                    auto lt = [&](int x, int y) {
                        if (x == y) return false;
                        QfType t = qf_type(m, {x, y});
                        for (const auto& w : types)
                            if (w == t) return true;
                        return false;
                    };
                    for (int x = 0; x < size; ++x)
                        for (int y = 0; y < size; ++y) {
                            if (x == y) continue;
                            if (lt(x, y) == lt(y, x)) return false;
                            for (int z = 0; z < size; ++z)
                                if (z != x && z != y && lt(x, y) && lt(y, z) && !lt(x, z)) return false;
                        }
                }
        }
        return true;
    }
    if (cmd == "generic") {
        what = "generic report";
        ClassSpec spec = get_class(report.at("class").get<std::string>());
        Structure s = structure_from_json(report.at("structure"));
        return is_member(spec, s) && s.size() <= report.at("params").at("growth_budget").get<int>();
    }
    if (cmd == "enumerate") {
        what = "enumerate report";
        ClassSpec spec = get_class(report.at("class").get<std::string>());
        const int bound = report.at("params").at("max_size").get<int>();
        ModelCatalog cat = enumerate_models(spec, bound);
        for (const auto& row : report.at("counts")) {
            const int size = row.at("size").get<int>();
            if (cat.models(size).size() != row.at("models").get<std::size_t>()) return false;
        }
        if (report.contains("models"))
            for (const auto& mj : report.at("models"))
                if (!is_member(spec, structure_from_json(mj))) return false;
        return true;
    }
    if (cmd == "indiscernible") {
        what = "indiscernible report";
        if (report.at("embedding").is_null()) return true;
        Structure c = structure_from_json(report.at("C"));
        Structure a = structure_from_json(report.at("A"));
        Palette palette = palette_from_json(report.at("palette"));
        std::vector<int> g = report.at("embedding").get<std::vector<int>>();
        if (!is_embedding_map(a, c, g)) return false;
        return extract_indiscernible(c, a, palette).has_value();
    }
    what = "unsupported report";
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for classes of finite relational structures"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("RWB_BUDGET")) opt.budget = std::atol(env);

    auto add_common = [&](CLI::App* cmd, bool with_class = true) {
        if (with_class) {
            cmd->add_option("--class", opt.class_name, "built-in class name");
            cmd->add_option("--spec", opt.spec_file, "class spec JSON file");
        }
        cmd->add_option("--format", opt.format, "human | json")->check(CLI::IsMember({"human", "json"}));
        cmd->add_option("--workers", opt.workers, "worker count (output-invariant)");
        cmd->add_option("--budget", opt.budget, "node budget for searches");
        cmd->add_option("--seed", opt.seed, "seed for randomized tie-breaks");
    };

    auto* c_catalog = app.add_subcommand("catalog", "list built-in classes and expected verdicts");
    add_common(c_catalog, false);

    int max_size = 4;
    bool with_models = false;
    auto* c_enum = app.add_subcommand("enumerate", "models of each size up to a bound");
    add_common(c_enum);
    c_enum->add_option("--max-size", max_size, "size bound")->required();
    c_enum->add_flag("--models", with_models, "embed the model list in the report");

    std::vector<std::string> props;
    int census_arity = 2;
    std::string model_arg;
    int ep_bound = 2;
    auto* c_check = app.add_subcommand("check", "hp | jep | ap | rigidity | types | extension");
    add_common(c_check);
    c_check->add_option("--props", props, "checks to run")->required()->delimiter(',');
    c_check->add_option("--max-size", max_size, "size bound")->required();
    c_check->add_option("--arity", census_arity, "tuple arity for the type census");
    c_check->add_option("--model", model_arg, "host structure for the extension check");
    c_check->add_option("--ep-bound", ep_bound, "demand size bound for the extension check");

    std::string a_arg, b_arg, c_arg;
    int k = 2;
    bool search = false;
    auto* c_arrow = app.add_subcommand("arrow", "decide C -> (B)^A_k or search for a witness");
    add_common(c_arrow);
    c_arrow->add_option("--A", a_arg, "pattern structure")->required();
    c_arrow->add_option("--B", b_arg, "copy structure")->required();
    c_arrow->add_option("--C", c_arg, "host structure (decides the arrow)");
    c_arrow->add_option("--k", k, "number of colors")->required();
    c_arrow->add_flag("--search", search, "search the catalog for a witness");
    c_arrow->add_option("--max-size", max_size, "search bound");

    auto* c_witness = app.add_subcommand("witness", "smallest catalog host realizing the arrow");
    add_common(c_witness);
    c_witness->add_option("--A", a_arg, "pattern structure")->required();
    c_witness->add_option("--B", b_arg, "copy structure")->required();
    c_witness->add_option("--k", k, "number of colors")->required();
    c_witness->add_option("--max-size", max_size, "search bound")->required();

    auto* c_order = app.add_subcommand("order", "definable linear orders from 2-type unions");
    add_common(c_order);
    c_order->add_option("--max-size", max_size, "verification bound")->required();

    std::string palette_file;
    bool iterated = false;
    auto* c_ind = app.add_subcommand("indiscernible", "extract a palette-indiscernible copy");
    add_common(c_ind);
    c_ind->add_option("--C", c_arg, "host structure")->required();
    c_ind->add_option("--A", a_arg, "pattern structure")->required();
    c_ind->add_option("--palette", palette_file, "palette JSON file")->required();
    c_ind->add_flag("--iterated", iterated, "filter one atomic type at a time");

    int growth_budget = 8;
    int demand_cap = 2;
    int ep_check = 0;
    auto* c_generic = app.add_subcommand("generic", "grow a generic member by extension demands");
    add_common(c_generic);
    c_generic->add_option("--growth-budget", growth_budget, "universe size budget")->required();
    c_generic->add_option("--demand-cap", demand_cap, "extension demand size cap");
    c_generic->add_option("--ep-check", ep_check, "verify the extension property at this bound");

    std::string report_file;
    auto* c_verify = app.add_subcommand("verify", "replay the certificates of a JSON report");
    add_common(c_verify, false);
    c_verify->add_option("report", report_file, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (opt.budget < 1000) fail(Errc::InvalidArgument, "node budget must be at least 1000");
        if (max_size < 1) fail(Errc::InvalidArgument, "size bounds must be positive");
        if (opt.workers < 1) fail(Errc::InvalidArgument, "worker count must be positive");
        if (app.got_subcommand(c_catalog)) return cmd_catalog(opt);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(opt, max_size, with_models);
        if (app.got_subcommand(c_check))
            return cmd_check(opt, props, max_size, census_arity, model_arg, ep_bound);
        if (app.got_subcommand(c_arrow))
            return cmd_arrow(opt, a_arg, b_arg, c_arg, k, search, max_size, false);
        if (app.got_subcommand(c_witness)) return cmd_arrow(opt, a_arg, b_arg, "", k, true, max_size, true);
        if (app.got_subcommand(c_order)) return cmd_order(opt, max_size);
        if (app.got_subcommand(c_ind)) return cmd_indiscernible(opt, c_arg, a_arg, palette_file, iterated);
        if (app.got_subcommand(c_generic)) return cmd_generic(opt, growth_budget, demand_cap, ep_check);
        if (app.got_subcommand(c_verify)) return cmd_verify(opt, report_file);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::ResourceLimit: return kExitResource;
            case Errc::ParseError:
            case Errc::UnknownClass:
            case Errc::UnknownChecker:
            case Errc::InvalidArgument: return kExitUsage;
            default: return kExitRefuted;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
