// fusq: exact computations with fusion quivers from the command line.
//
// Subcommands: backend, drinfeld, module, relation, prepro, moduli, check.
// Exit codes: 0 pass, 1 assertion failure, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "fusq/suites.hpp"

using namespace fusq;

namespace {

struct Options {
    bool json_errors = false;
    std::string out_file;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

BackendPtr load_backend(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string name = spec.substr(8);
        if (name == "q8") return std::make_shared<Backend>(Backend::rep_q8());
        if (name == "rep-z2-sl2") return std::make_shared<Backend>(Backend::rep_z2_sl2());
        if (name == "rep-z3-sl2") return std::make_shared<Backend>(Backend::rep_z3_sl2());
        if (name.rfind("pointed-z", 0) == 0)
            return std::make_shared<Backend>(Backend::pointed_cyclic(std::stoi(name.substr(9))));
        if (name.rfind("rep-z", 0) == 0)
            return std::make_shared<Backend>(Backend::rep_cyclic(std::stoi(name.substr(5))));
        if (name.rfind("bd", 0) == 0)
            return std::make_shared<Backend>(
                Backend::rep_binary_dihedral(std::stoi(name.substr(2)) / 4));
        throw std::runtime_error("unknown builtin backend: " + name);
    }
    return std::make_shared<Backend>(backend_from_json(read_json_file(spec)));
}

void emit(const Options& opt, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (!opt.out_file.empty()) {
        std::ofstream out(opt.out_file);
        out << text;
    } else {
        std::cout << text;
    }
}

int fail_usage(const Options& opt, const std::string& msg) {
    if (opt.json_errors)
        std::cerr << json{{"error", msg}}.dump() << "\n";
    else
        std::cerr << "error: " << msg << "\n";
    return 2;
}

Report run_check_config(const json& cfg, uint64_t seed, int trials, bool seed_given,
                        bool trials_given) {
    std::string suite = cfg.at("suite").get<std::string>();
    // explicit flags override the config; otherwise the config wins
    if (!seed_given && cfg.contains("seed")) seed = cfg.at("seed").get<uint64_t>();
    if (!trials_given && cfg.contains("trials")) trials = cfg.at("trials").get<int>();

    if (suite == "drinfeld-fixtures") return drinfeld_fixture_suite();
    if (suite == "rank2") return rank2_classification_suite();
    if (suite == "qbinomial") return qbinomial_suite(cfg.value("max_n", 12));
    if (suite == "dictionary") return dictionary_suite(seed, trials);
    if (suite == "prepro") return prepro_suite(seed, trials);
    if (suite == "monoidal" || suite == "moduli") {
        BackendPtr b = load_backend(cfg.at("backend").get<std::string>());
        CenterObject z = center_from_json(b, cfg.at("z"));
        return suite == "monoidal" ? monoidal_suite(z, seed, trials)
                                   : moduli_suite(z, seed, trials);
    }
    if (suite == "relation") {
        Relation r;
        long expected = cfg.value("expected_quotient", -1);
        if (cfg.contains("taft_n")) {
            int n = cfg.at("taft_n").get<int>();
            long power = cfg.value("taft_power", 1);
            r = taft_relation(n, Cyclotomic::root_of_unity(n, power));
        } else {
            BackendPtr b = load_backend(cfg.at("backend").get<std::string>());
            r = relation_from_json(b, cfg.at("relation"));
        }
        return relation_suite(r, seed, trials, expected, cfg.value("quotient_cap", 12));
    }
    throw std::runtime_error("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-quiver computations"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_errors, "machine-readable errors on stderr");
    app.add_option("--out", opt.out_file, "write output to a file instead of stdout");

    uint64_t seed = 1;
    int trials = 100;

    // backend: emit a builtin backend as JSON
    auto* cmd_backend = app.add_subcommand("backend", "emit a backend description");
    std::string builtin_name;
    cmd_backend->add_option("--builtin", builtin_name, "builtin name")->required();

    // drinfeld: quiver of a center object
    auto* cmd_drinfeld = app.add_subcommand("drinfeld", "emit the quiver of a center object");
    std::string backend_file, z_file;
    cmd_drinfeld->add_option("--backend", backend_file)->required();
    cmd_drinfeld->add_option("--z", z_file)->required();

    // module: algebra on stored modules
    auto* cmd_module = app.add_subcommand("module", "operate on modules");
    std::string mod_op, in1, in2, x_json, g_file;
    std::string side = "right";
    cmd_module->add_option("op", mod_op, "fuse|dual|act|to-quiver|from-quiver|pushforward")
        ->required();
    cmd_module->add_option("--backend", backend_file)->required();
    cmd_module->add_option("--in", in1, "module file")->required();
    cmd_module->add_option("--in2", in2, "second module file");
    cmd_module->add_option("--x", x_json, "object file for act");
    cmd_module->add_option("--side", side, "left|right");
    cmd_module->add_option("--g", g_file, "center morphism file for pushforward");
    cmd_module->add_option("--z", z_file, "target center object for pushforward/from-quiver");

    // relation
    auto* cmd_relation = app.add_subcommand("relation", "relation utilities");
    std::string rel_op, rel_file;
    int taft_n = 0;
    long taft_power = 1;
    int max_len = 12;
    cmd_relation->add_option("op", rel_op, "validate|generators|quotient-dim|taft")->required();
    cmd_relation->add_option("--backend", backend_file);
    cmd_relation->add_option("--relation", rel_file);
    cmd_relation->add_option("--n", taft_n);
    cmd_relation->add_option("--power", taft_power);
    cmd_relation->add_option("--max-len", max_len);

    // prepro
    auto* cmd_prepro = app.add_subcommand("prepro", "preprojective utilities");
    std::string pre_op, x_file;
    cmd_prepro->add_option("op", pre_op, "double|phi|centralizer|generators")->required();
    cmd_prepro->add_option("--backend", backend_file);
    cmd_prepro->add_option("--x", x_file, "object file");

    // moduli
    auto* cmd_moduli = app.add_subcommand("moduli", "moduli-level invariants");
    std::string mud_op;
    cmd_moduli->add_option("op", mud_op, "epsilon|kappa|class")->required();
    cmd_moduli->add_option("--backend", backend_file);
    cmd_moduli->add_option("--in", in1);
    cmd_moduli->add_option("--in2", in2);

    // check
    auto* cmd_check = app.add_subcommand("check", "run a property suite");
    std::string config_file;
    cmd_check->add_option("--config", config_file)->required();
    cmd_check->add_option("--seed", seed);
    cmd_check->add_option("--trials", trials);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_backend) {
            emit(opt, to_json(*load_backend("builtin:" + builtin_name)));
            return 0;
        }
        if (*cmd_drinfeld) {
            BackendPtr b = load_backend(backend_file);
            CenterObject z = center_from_json(b, read_json_file(z_file));
            emit(opt, to_json(drinfeld_quiver(z).quiver));
            return 0;
        }
        if (*cmd_module) {
            BackendPtr b = load_backend(backend_file);
            if (mod_op == "from-quiver") {
                CenterObject z = center_from_json(b, read_json_file(z_file));
                DrinfeldQuiver dq = drinfeld_quiver(z);
                QuiverModule qm = quiver_module_from_json(dq.quiver, read_json_file(in1));
                emit(opt, to_json(from_quiver_module(dq, qm)));
                return 0;
            }
            CatModule m = cat_module_from_json(b, read_json_file(in1));
            if (mod_op == "fuse") {
                CatModule m2 = cat_module_from_json(b, read_json_file(in2));
                emit(opt, to_json(fuse(m, m2)));
            } else if (mod_op == "dual") {
                DualPair d = dual_modules(m);
                emit(opt, json{{"right", to_json(d.right)}, {"left", to_json(d.left)}});
            } else if (mod_op == "act") {
                Obj x = obj_from_json(*b, read_json_file(x_json));
                emit(opt, to_json(act(m, x, side == "left" ? Side::left : Side::right)));
            } else if (mod_op == "to-quiver") {
                DrinfeldQuiver dq = drinfeld_quiver(m.z);
                emit(opt, to_json(dq.quiver, to_quiver_module(dq, m)));
            } else if (mod_op == "pushforward") {
                CenterObject w = center_from_json(b, read_json_file(z_file));
                Mat g = mat_from_json(read_json_file(g_file));
                emit(opt, to_json(pushforward(w, g, m)));
            } else {
                return fail_usage(opt, "unknown module op: " + mod_op);
            }
            return 0;
        }
        if (*cmd_relation) {
            if (rel_op == "taft") {
                Relation r = taft_relation(taft_n, Cyclotomic::root_of_unity(taft_n, taft_power));
                json j = to_json(r);
                j["backend"] = to_json(*r.z.backend);
                emit(opt, j);
                return 0;
            }
            BackendPtr b = load_backend(backend_file);
            Relation r = relation_from_json(b, read_json_file(rel_file));
            if (rel_op == "validate") {
                auto v = validate_q_relation(r);
                emit(opt, json{{"ok", v.ok},
                               {"failing_slot", v.failing_slot},
                               {"message", v.message}});
                return v.ok ? 0 : 1;
            }
            DrinfeldQuiver dq = drinfeld_quiver(r.z);
            if (rel_op == "generators") {
                auto gens = ideal_generators(r, dq);
                json gens_json = json::array();
                for (const auto& g : gens) {
                    json terms = json::array();
                    for (const auto& [p, c] : g.terms())
                        terms.push_back(json{{"path", p.to_string(dq.quiver)},
                                             {"coeff", to_json(c)}});
                    gens_json.push_back(terms);
                }
                emit(opt, json{{"quiver", to_json(dq.quiver)}, {"generators", gens_json}});
                return 0;
            }
            if (rel_op == "quotient-dim") {
                auto qd = quotient_dim_up_to(r, dq, max_len);
                emit(opt, json{{"finite", qd.finite},
                               {"dim", qd.dim},
                               {"last_nonzero_degree", qd.last_nonzero_degree}});
                return 0;
            }
            return fail_usage(opt, "unknown relation op: " + rel_op);
        }
        if (*cmd_prepro) {
            BackendPtr b = load_backend(backend_file);
            Obj x = obj_from_json(*b, read_json_file(x_file));
            if (pre_op == "double") {
                emit(opt, to_json(double_object(b, x)));
            } else if (pre_op == "phi") {
                emit(opt, to_json(canonical_phi(b, x)));
            } else if (pre_op == "centralizer") {
                auto pc = projective_centralizer(*b, x);
                json lam = json::array();
                for (const auto& l : pc.lambdas) lam.push_back(to_json(l));
                emit(opt, json{{"simples", pc.simples}, {"lambdas", lam}});
            } else if (pre_op == "generators") {
                DrinfeldQuiver dq;
                PairedArrowBasis basis;
                auto gens = twisted_prepro_from_phi(b, x, &dq, &basis);
                json out = json::array();
                for (const auto& g : gens) {
                    json terms = json::array();
                    for (const auto& [p, c] : g.terms())
                        terms.push_back(json{{"path", p.to_string(dq.quiver)},
                                             {"coeff", to_json(c)}});
                    out.push_back(terms);
                }
                emit(opt, json{{"quiver", to_json(dq.quiver)}, {"generators", out}});
            } else {
                return fail_usage(opt, "unknown prepro op: " + pre_op);
            }
            return 0;
        }
        if (*cmd_moduli) {
            BackendPtr b = load_backend(backend_file);
            CatModule m = cat_module_from_json(b, read_json_file(in1));
            if (mud_op == "epsilon") {
                emit(opt, json{{"epsilon", epsilon(m)}});
            } else if (mud_op == "kappa") {
                CatModule m2 = cat_module_from_json(b, read_json_file(in2));
                emit(opt, json{{"kappa", kappa(m, m2)}});
            } else if (mud_op == "class") {
                emit(opt, json{{"dim_vector", graded_class(m).dim_vector}});
            } else {
                return fail_usage(opt, "unknown moduli op: " + mud_op);
            }
            return 0;
        }
        if (*cmd_check) {
            json cfg = read_json_file(config_file);
            Report rep = run_check_config(cfg, seed, trials, cmd_check->count("--seed") > 0,
                                          cmd_check->count("--trials") > 0);
            emit(opt, rep.to_json());
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        return fail_usage(opt, e.what());
    }
    return fail_usage(opt, "no subcommand");
}
