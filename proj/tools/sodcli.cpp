// Command-line front end: scene inspection, visibility statistics, SOD
// construction and law checks, property suites, and the ray oracle.

#include "sod/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace sod;

Point3 parse_point(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw CLI::ValidationError("--point", "expected x,y,z");
    return {rat_from_string(parts[0]), rat_from_string(parts[1]), rat_from_string(parts[2])};
}

struct WorldArgs {
    std::string scene_file;
    std::string builtin;
    std::string param;       // optional builtin parameter (cube side, brush k)
    std::string semantics = "auto";

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--scene", scene_file, "scene JSON file");
        auto* b = cmd->add_option("--builtin", builtin,
                                  "builtin world (tetrahedron, cube, brush, eight_edge_scene)");
        cmd->add_option("--param", param, "builtin parameter (cube side / brush k)");
        cmd->add_option("--semantics", semantics, "scene | polyhedron")
            ->check(CLI::IsMember({"auto", "scene", "polyhedron"}));
        f->excludes(b);
    }

    World load() const {
        World w;
        if (!builtin.empty()) {
            std::optional<Rat> p;
            if (!param.empty()) p = rat_from_string(param);
            w = builtin_world(builtin, p);
        } else if (!scene_file.empty()) {
            std::ifstream in(scene_file);
            if (!in) throw std::runtime_error("cannot open " + scene_file);
            nlohmann::json j = nlohmann::json::parse(in);
            Scene sc = scene_from_json(j);
            auto errs = validate_scene(sc);
            if (!errs.empty()) throw std::runtime_error("invalid scene: " + errs.front());
            bool closed = j.value("closed", false);
            w = World::of_scene(std::move(sc));
            if (closed) {
                std::vector<std::string> perrs;
                w.poly = Polyhedron::build(w.scene.polygons, perrs);
                if (!perrs.empty())
                    throw std::runtime_error("not a closed polyhedron: " + perrs.front());
            }
        } else
            throw CLI::ValidationError("world", "one of --scene or --builtin is required");
        if (semantics == "scene") w.poly.reset();
        if (semantics == "polyhedron" && !w.poly) {
            std::vector<std::string> perrs;
            w.poly = Polyhedron::build(w.scene.polygons, perrs);
            if (!perrs.empty())
                throw std::runtime_error("not a closed polyhedron: " + perrs.front());
        }
        return w;
    }
};

nlohmann::json vis_report(const World& w, const Point3& p) {
    nlohmann::json rep;
    rep["point"] = point_to_json(p);
    rep["visible_vertices"] = visible_vertices(w, p);
    rep["edges"] = nlohmann::json::array();
    long weak = 0, positive = 0;
    for (const auto& vs : all_visible_sets(w, p)) {
        if (vs.empty()) continue;
        nlohmann::json ivs = nlohmann::json::array();
        for (const auto& iv : vs.intervals)
            ivs.push_back({rat_to_string(iv.lo), rat_to_string(iv.hi)});
        rep["edges"].push_back({{"edge", vs.edge_id}, {"intervals", ivs}});
    }
    EdgeCounts c = count_visible_edges(w, p);
    rep["weak_count"] = c.weak;
    rep["positive_count"] = c.positive;
    return rep;
}

VisMap load_sod_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return vismap_from_json(nlohmann::json::parse(in));
}

int emit(const nlohmann::json& j, bool pass) {
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact visibility and spherical occlusion diagram toolkit"};
    app.require_subcommand(1);

    // scene validate / emit
    auto* scene = app.add_subcommand("scene", "scene inspection");
    scene->require_subcommand(1);
    auto* sval = scene->add_subcommand("validate", "validate a scene");
    WorldArgs sval_w;
    std::string sval_file;
    sval->add_option("file", sval_file, "scene JSON file");
    sval->add_option("--builtin", sval_w.builtin, "builtin world");
    sval->add_option("--param", sval_w.param, "builtin parameter");
    auto* semit = scene->add_subcommand("emit", "emit a builtin scene as JSON");
    WorldArgs semit_w;
    semit->add_option("--builtin", semit_w.builtin, "builtin world")->required();
    semit->add_option("--param", semit_w.param, "builtin parameter");

    // vis stats
    auto* vis = app.add_subcommand("vis", "visibility queries");
    vis->require_subcommand(1);
    auto* vstats = vis->add_subcommand("stats", "per-edge visibility report");
    WorldArgs vstats_w;
    vstats_w.attach(vstats);
    std::string vstats_point;
    vstats->add_option("--point", vstats_point, "viewpoint x,y,z (rational)")->required();

    // sod build / check / swirls / cover
    auto* sod_cmd = app.add_subcommand("sod", "spherical occlusion diagrams");
    sod_cmd->require_subcommand(1);
    auto* sbuild = sod_cmd->add_subcommand("build", "build the SOD at a vertex-free viewpoint");
    WorldArgs sbuild_w;
    sbuild_w.attach(sbuild);
    std::string sbuild_point;
    sbuild->add_option("--point", sbuild_point, "viewpoint x,y,z")->required();
    auto* scheck = sod_cmd->add_subcommand("check", "check the SOD axioms on a saved diagram");
    std::string scheck_file;
    scheck->add_option("--sod", scheck_file, "SOD JSON file")->required();
    auto* sswirls = sod_cmd->add_subcommand("swirls", "swirl decomposition of a saved diagram");
    std::string sswirls_file;
    sswirls->add_option("--sod", sswirls_file, "SOD JSON file")->required();
    auto* scover = sod_cmd->add_subcommand("cover", "induced great-semicircle cover");
    WorldArgs scover_w;
    scover_w.attach(scover);
    std::string scover_point;
    scover->add_option("--point", scover_point, "viewpoint x,y,z")->required();

    // suite theorems / section6
    auto* suite = app.add_subcommand("suite", "property suites");
    suite->require_subcommand(1);
    auto* sthm = suite->add_subcommand("theorems", "randomized theorem suite");
    std::uint64_t seed = 1;
    long trials = 100;
    sthm->add_option("--seed", seed, "random seed");
    sthm->add_option("--trials", trials, "random viewpoints per world");
    auto* s6 = suite->add_subcommand("section6", "bit-exact lower-bound construction check");
    (void)s6;

    // oracle
    auto* oracle = app.add_subcommand("oracle", "ray-sampling cross-check");
    WorldArgs oracle_w;
    oracle_w.attach(oracle);
    std::string oracle_point;
    long oracle_dirs = 1000;
    std::uint64_t oracle_seed = 1;
    oracle->add_option("--point", oracle_point, "viewpoint x,y,z")->required();
    oracle->add_option("--dirs", oracle_dirs, "number of ray directions");
    oracle->add_option("--seed", oracle_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sval->parsed()) {
            Scene sc;
            if (!sval_w.builtin.empty()) {
                std::optional<Rat> p;
                if (!sval_w.param.empty()) p = rat_from_string(sval_w.param);
                sc = builtin_world(sval_w.builtin, p).scene;
            } else if (!sval_file.empty()) {
                std::ifstream in(sval_file);
                if (!in) throw std::runtime_error("cannot open " + sval_file);
                sc = scene_from_json(nlohmann::json::parse(in));
            } else
                throw CLI::ValidationError("scene validate", "need a file or --builtin");
            auto errs = validate_scene(sc);
            return emit({{"valid", errs.empty()}, {"errors", errs}}, errs.empty());
        }
        if (semit->parsed()) {
            std::optional<Rat> p;
            if (!semit_w.param.empty()) p = rat_from_string(semit_w.param);
            World w = builtin_world(semit_w.builtin, p);
            nlohmann::json j = scene_to_json(w.scene);
            if (w.poly) j["closed"] = true;
            return emit(j, true);
        }
        if (vstats->parsed())
            return emit(vis_report(vstats_w.load(), parse_point(vstats_point)), true);
        if (sbuild->parsed()) {
            World w = sbuild_w.load();
            SodResult r = build_sod(w, parse_point(sbuild_point));
            if (!r.ok())
                return emit({{"error", "viewpoint sees a vertex"},
                             {"visible_vertices", r.visible_verts}},
                            false);
            return emit(sod_to_json(*r.sod), true);
        }
        if (scheck->parsed()) {
            VisMap m = load_sod_file(scheck_file);
            AxiomReport rep = check_axioms(m);
            return emit({{"a1", rep.a1},
                         {"a2", rep.a2},
                         {"a3", rep.a3},
                         {"pass", rep.pass()},
                         {"witnesses", rep.witnesses}},
                        rep.pass());
        }
        if (sswirls->parsed()) {
            VisMap m = load_sod_file(sswirls_file);
            SOD s = upgrade_to_sod(std::move(m));
            auto swirls = find_swirls(s);
            SwirlGraph g = swirl_graph(swirls);
            nlohmann::json out;
            out["swirls"] = nlohmann::json::array();
            for (const auto& sw : swirls)
                out["swirls"].push_back({{"orientation", sw.orientation > 0 ? "ccw" : "cw"},
                                         {"arcs", sw.arcs()}});
            out["swirl_graph"] = {{"cw", g.n_cw}, {"ccw", g.n_ccw}, {"edges", g.edges.size()}};
            return emit(out, true);
        }
        if (scover->parsed()) {
            World w = scover_w.load();
            Point3 p = parse_point(scover_point);
            SodResult r = build_sod(w, p);
            if (!r.ok())
                return emit({{"error", "viewpoint sees a vertex"},
                             {"visible_vertices", r.visible_verts}},
                            false);
            SemicircleCover cov = induced_cover(w, p, *r.sod);
            nlohmann::json out;
            out["semicircles"] = nlohmann::json::array();
            for (const auto& c : cov)
                out["semicircles"].push_back({{"normal", sod::detail::dir_to_json(c.normal.v)},
                                              {"midpoint_side", sod::detail::dir_to_json(c.m.v)}});
            out["size"] = cov.size();
            out["covers_all_arcs"] = check_cover(*r.sod, cov);
            return emit(out, out["covers_all_arcs"].get<bool>());
        }
        if (sthm->parsed()) {
            nlohmann::json rep = theorem_suite(seed, trials);
            return emit(rep, rep["pass"].get<bool>());
        }
        if (s6->parsed()) {
            nlohmann::json rep = verify_section6();
            return emit(rep, rep["pass"].get<bool>());
        }
        if (oracle->parsed()) {
            OracleReport r = ray_oracle(oracle_w.load(), parse_point(oracle_point), oracle_dirs,
                                        oracle_seed);
            return emit({{"dirs", r.dirs},
                         {"hits", r.hits},
                         {"misses", r.misses},
                         {"resampled", r.resampled},
                         {"disagreements", r.disagreements}},
                        r.pass());
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}
