#pragma once

#include "qgrkz/cli/catalog.hpp"
#include "qgrkz/cli/json_io.hpp"
#include "qgrkz/verify/checks.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace qgrkz::cli {

enum Exit { ok = 0, check_failed = 1, usage = 2 };

struct ScopeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string config;
    std::string chamber;
    int order = -1;
    int index = 1;
    std::string path = "sum";
    bool hatted = false;
    bool serial = false;
    std::string what;  // verify target
    std::vector<std::string> sign_args;
};

inline std::size_t parse_root(const CartanDatum& D, const std::string& s) {
    if (s.find(',') == std::string::npos) {
        int k = std::stoi(s);
        if (k < 0 || static_cast<std::size_t>(k) >= D.num_roots()) throw ConfigError("root index out of range: " + s);
        return static_cast<std::size_t>(k);
    }
    std::vector<int> c;
    for (auto& x : parse_vector(s)) {
        if (!x.is_integer()) throw ConfigError("root coordinates must be integers: " + s);
        c.push_back(static_cast<int>(x.to_long()));
    }
    int k = static_cast<int>(c.size()) == D.rank ? D.find_root(c) : -1;
    if (k < 0) throw ConfigError("not a root: " + s);
    return static_cast<std::size_t>(k);
}

inline std::size_t parse_point(const SliceModel& M, const std::string& s) {
    std::size_t pos = 0;
    long v = -1;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
    }
    if (pos != s.size() || v < 0 || static_cast<std::size_t>(v) >= M.size()) throw ConfigError("fixed point index out of range: " + s);
    return static_cast<std::size_t>(v);
}

class App {
public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Quantum connection of resolved affine Grassmannian slices vs trigonometric KZ"};
        app.require_subcommand(1);
        Options o;

        auto with_config = [&](CLI::App* sc) {
            sc->add_option("-c,--config", o.config, "instance config (JSON)")->required();
            sc->add_option("--chamber", o.chamber, "chamber vector \"r1,...,rk\"");
            sc->add_option("--order", o.order, "truncation order N")->check(CLI::NonNegativeNumber);
            return sc;
        };
        auto with_index = [&](CLI::App* sc) {
            sc->add_option("--i", o.index, "slot index 1..l");
            return sc;
        };

        std::map<CLI::App*, std::string> names;
        auto add = [&](const std::string& name, const std::string& help) {
            auto* sc = app.add_subcommand(name, help);
            names[sc] = name;
            return sc;
        };
        with_config(add("info", "root datum, problem and counts"));
        with_config(add("fixed-points", "torus fixed points as paths"));
        with_config(add("tangent", "tangent weights at every fixed point"));
        with_config(add("curves", "torus-invariant curves"));
        with_config(add("betti", "Betti ranks from attractor indices"));
        with_config(add("walls", "components of the wall fixed loci"));
        with_index(with_config(add("classical", "classical multiplication by c_1(E_i)")));
        auto* q = with_index(with_config(add("quantum", "quantum multiplication by c_1(E_i)")));
        q->add_option("--path", o.path, "construction path")->check(CLI::IsMember({"sum", "closed"}));
        q->add_flag("--hatted", o.hatted, "subtract the gauge term");
        with_index(with_config(add("kz", "trigonometric KZ operator in direction i")));
        auto* v = with_config(add("verify", "run checks and report"));
        v->add_option("what", o.what, "suite | kz-eq | flat | lemma")->required()->check(CLI::IsMember({"suite", "kz-eq", "flat", "lemma"}));
        v->add_flag("--serial", o.serial, "run checks one after another");
        auto* s = with_config(add("sign", "sigma sign of a related pair"));
        s->add_option("args", o.sign_args, "p q alpha (alpha: root index or simple-root coordinates)")->expected(3)->required();
        auto* cat = add("catalog", "run the built-in instances through the suite");
        cat->add_option("--order", o.order, "override truncation order")->check(CLI::NonNegativeNumber);
        cat->add_flag("--serial", o.serial, "run checks one after another");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::ParseError& e) {
            app.exit(e, out_, err_);
            return usage;
        }

        std::string cmd;
        for (auto& [sc, name] : names)
            if (sc->parsed()) cmd = name;
        try {
            return dispatch(cmd, o);
        } catch (const ConfigError& e) {
            err_ << "config error: " << e.what() << "\n";
            return usage;
        } catch (const ScopeError& e) {
            err_ << "scope error: " << e.what() << "\n";
            return usage;
        } catch (const std::invalid_argument& e) {
            err_ << "error: " << e.what() << "\n";
            return usage;
        } catch (const std::out_of_range& e) {
            err_ << "error: " << e.what() << "\n";
            return usage;
        }
    }

private:
    void emit(const io::json& j) { out_ << j.dump(2) << "\n"; }

    int dispatch(const std::string& cmd, const Options& o) {
        if (cmd == "catalog") return run_catalog(o);
        ProblemConfig cfg = load_config(o.config);
        if (!o.chamber.empty()) {
            cfg.chamber = parse_vector(o.chamber);
            try {
                cfg.make_chamber();
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        if (o.order >= 0) cfg.order = o.order;
        const int N = cfg.order;
        Chamber C = cfg.make_chamber();
        SliceModel M(cfg.problem);
        const auto& D = M.datum();
        auto slot = [&] {
            if (o.index < 1 || o.index > M.l())
                throw ConfigError("--i must be in 1.." + std::to_string(M.l()));
            return o.index;
        };

        if (cmd == "info") {
            io::json roots = io::json::array();
            for (std::size_t k = 0; k < D.num_roots(); ++k) roots.push_back(io::root_json(D, k));
            io::json chamber = io::json::array();
            for (auto& x : C.xi()) chamber.push_back(x.str());
            emit({{"instance", cfg.problem.str()},
                  {"datum", D.name()},
                  {"simply_laced", D.simply_laced()},
                  {"dimension", cfg.problem.dimension()},
                  {"fixed_points", M.size()},
                  {"weight_multiplicity", tensor_weight_multiplicity(cfg.problem)},
                  {"chamber", chamber},
                  {"order", N},
                  {"roots", roots}});
            return ok;
        }
        if (cmd == "fixed-points") return emit(io::fixed_points_json(M)), ok;
        if (cmd == "tangent") return emit(io::tangent_json(M)), ok;
        if (cmd == "curves") return emit(io::curves_json(M)), ok;
        if (cmd == "betti") return emit(io::betti_json(M, C)), ok;
        if (cmd == "walls") return emit(io::walls_json(M)), ok;

        StableOps S(M, C);
        if (cmd == "classical") return emit(io::matrix_json(S.classical(slot()), M)), ok;
        if (cmd == "quantum") {
            QuantumPath path = o.path == "closed" ? QuantumPath::closed : QuantumPath::sum;
            if (path == QuantumPath::closed && !D.simply_laced()) throw ScopeError("KZ closed form requires simply-laced");
            return emit(io::matrix_json(S.connection(slot(), N, o.hatted, path), M, N)), ok;
        }
        if (cmd == "kz") {
            if (!D.simply_laced()) throw ScopeError("KZ operators are not covered for " + D.name() + " (not simply-laced)");
            return emit(io::matrix_json(KZSystem(cfg.problem, C).kz_matrix(slot(), N), M, N)), ok;
        }
        if (cmd == "sign") {
            std::size_t p = parse_point(M, o.sign_args.at(0)), q = parse_point(M, o.sign_args.at(1));
            std::size_t k = parse_root(D, o.sign_args.at(2));
            int s = S.sigma_sign(p, q, k);
            io::json sides = io::json::array();
            for (int side : {1, -1}) sides.push_back({{"side", side}, {"sigma", S.sigma_sign(p, q, k, side)}});
            emit({{"p", p}, {"q", q}, {"root", io::root_json(D, k)}, {"sigma", s}, {"adjacent", sides}});
            return ok;
        }
        if (cmd == "verify") return run_verify(o, cfg, M, S, C, N);
        throw std::logic_error("unhandled subcommand " + cmd);
    }

    int run_verify(const Options& o, const ProblemConfig& cfg, const SliceModel& M, const StableOps& S, const Chamber& C, int N) {
        std::vector<CheckReport> rs;
        if (o.what == "suite") {
            SuiteOptions so;
            so.order = N;
            so.parallel = !o.serial;
            rs = run_suite(cfg.problem, C, so);
        } else if (o.what == "kz-eq") {
            rs.push_back(check_kz_equals_quantum(M, C, N));
        } else if (o.what == "flat") {
            rs.push_back(check_quantum_flatness(S, N));
            if (M.datum().simply_laced()) rs.push_back(check_kz_flatness(KZSystem(cfg.problem, C), N));
            else rs.push_back(CheckReport::uncovered("flatness-kz", cfg.problem.str(), "KZ operators need a simply-laced root system"));
        } else {
            rs.push_back(check_lemma_and_unit(S));
        }
        io::json arr = io::json::array();
        for (auto& r : rs) arr.push_back(io::report_json(r));
        emit(arr);
        if (!all_ok(rs)) return check_failed;
        if (o.what == "kz-eq" && rs.front().verdict == Verdict::not_covered) {
            err_ << "scope error: " << rs.front().note << "\n";
            return usage;
        }
        return ok;
    }

    int run_catalog(const Options& o) {
        io::json arr = io::json::array();
        bool pass = true;
        for (auto& cfg : catalog()) {
            SuiteOptions so;
            so.order = o.order >= 0 ? o.order : cfg.order;
            so.parallel = !o.serial;
            auto rs = run_suite(cfg.problem, cfg.make_chamber(), so);
            pass = pass && all_ok(rs);
            io::json reps = io::json::array();
            for (auto& r : rs) reps.push_back(io::report_json(r));
            arr.push_back({{"name", cfg.name}, {"instance", cfg.problem.str()}, {"order", so.order}, {"pass", all_ok(rs)}, {"reports", reps}});
        }
        emit(arr);
        return pass ? ok : check_failed;
    }

    std::ostream& out_;
    std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return App(out, err).run(argc, argv);
}

}  // namespace qgrkz::cli
