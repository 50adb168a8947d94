// Command-line front end for the plumbing-graph invariant engine.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "plumb/io_json.hpp"

namespace fs = std::filesystem;
using namespace plumb;

namespace {

constexpr int EXIT_CHECK_FAILURE = 1;
constexpr int EXIT_INPUT_ERROR = 2;

struct Options {
    bool as_json = false;
    int par = 1;
};

std::vector<int> parse_id_list(const std::string& spec) {
    std::vector<int> ids;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            int a = std::stoi(tok.substr(0, dots));
            int b = std::stoi(tok.substr(dots + 2));
            for (int v = a; v <= b; ++v) ids.push_back(v);
        } else if (!tok.empty()) {
            ids.push_back(std::stoi(tok));
        }
    }
    return ids;
}

void print_cycle(const std::string& label, const Vec& v) {
    std::cout << label << " = " << vec_str(v) << "\n";
}

int cmd_validate(const std::string& file, const Options& opt) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    if (opt.as_json) {
        json j{{"command", "validate"}, {"input", file}, {"valid", true},
               {"vertices", g.n()}, {"det", ctx.det.get_str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "valid plumbing graph: " << g.n() << " vertices, det(-M) = "
                  << ctx.det.get_str() << "\n";
    }
    return 0;
}

int cmd_info(const std::string& file, const Options& opt) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    Vec zmin = minimal_cycle(ctx);
    Classification cls = classify(ctx);
    if (opt.as_json) {
        json j{{"command", "info"},
               {"input", file},
               {"det", ctx.det.get_str()},
               {"Z_K", cycle_json(ctx.ZK)},
               {"numerically_gorenstein", ctx.numerically_gorenstein},
               {"Z_min", cycle_json(zmin)},
               {"chi_Z_min", cls.chi_zmin.get_str()},
               {"classification", kind_name(cls.kind)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "det(-M) = |H| = " << ctx.det.get_str() << "\n";
        print_cycle("Z_K", ctx.ZK);
        std::cout << "numerically Gorenstein: "
                  << (ctx.numerically_gorenstein ? "yes" : "no") << "\n";
        print_cycle("Z_min", zmin);
        std::cout << "chi(Z_min) = " << cls.chi_zmin.get_str() << "\n"
                  << "classification: " << kind_name(cls.kind) << "\n";
    }
    return 0;
}

int cmd_ellseq(const std::string& file, const Options& opt) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    if (opt.as_json) {
        json j = sequence_json(seq);
        j["command"] = "ellseq";
        j["input"] = file;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "elliptic sequence, m = " << seq.m << ", numerically Gorenstein: "
                  << (seq.numerically_gorenstein ? "yes" : "no") << "\n";
        for (auto& lev : seq.levels) {
            std::cout << "j = " << lev.j << "  B = {";
            for (size_t i = 0; i < lev.B.size(); ++i)
                std::cout << (i ? "," : "") << lev.B[i];
            std::cout << "}\n";
            print_cycle("  Z_B", lev.ZB);
            print_cycle("  C  ", lev.C);
            print_cycle("  C' ", lev.Cprime);
        }
    }
    return 0;
}

int cmd_poly(const std::string& file, const Options& opt, const std::string& reduce,
             bool dual, bool trace) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    LaurentPoly p = dual ? dual_canonical_polynomial(ctx, opt.par)
                         : canonical_polynomial(ctx, opt.par);
    if (!reduce.empty()) p = reduce_polynomial(p, parse_id_list(reduce));
    if (opt.as_json) {
        json j{{"command", "poly"}, {"input", file}, {"dual", dual},
               {"variables", p.vars}, {"terms", poly_json(p)}};
        if (trace) {
            j["trace_Z_min"] = compseq_json(generalized_laufer(ctx, ctx.unit(0)));
            j["trace_s_class_ZK"] =
                compseq_json(generalized_laufer(ctx, representative_r(ctx, ctx.ZK)));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << poly_str(p) << "\n";
        if (trace) {
            auto show = [](const char* label, const ComputationSequence& s) {
                std::cout << label << ":\n";
                for (auto& st : s.steps)
                    std::cout << "  " << vec_str(st.cycle) << "  +E_"
                              << (st.vertex == -1 ? std::string("(done)")
                                                  : std::to_string(st.vertex))
                              << "\n";
            };
            show("computation sequence for Z_min", generalized_laufer(ctx, ctx.unit(0)));
            show("computation sequence for s_[Z_K]",
                 generalized_laufer(ctx, representative_r(ctx, ctx.ZK)));
        }
    }
    return 0;
}

int cmd_exponents(const std::string& file, const Options& opt) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    LaurentPoly p = canonical_polynomial(ctx, opt.par);
    auto records = classify_exponents(ctx, p, seq);
    if (opt.as_json) {
        json a = json::array();
        for (auto& r : records) {
            json extra = json::object();
            for (auto& [id, mv] : r.extra) extra[std::to_string(id)] = mv;
            a.push_back({{"exponent", cycle_json(r.exponent)},
                         {"coeff", r.coeff},
                         {"level", r.level},
                         {"associated_cycle", cycle_json(r.associated_cycle)},
                         {"extra", extra},
                         {"dual", cycle_json(r.dual)}});
        }
        json j{{"command", "exponents"}, {"input", file}, {"records", a}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& r : records) {
            std::cout << "l = " << vec_str(r.exponent) << "  w = " << r.coeff
                      << "  j = " << r.level << "\n";
            print_cycle("  C_j", r.associated_cycle);
            std::cout << "  m_v:";
            for (auto& [id, mv] : r.extra) std::cout << " " << id << "->" << mv;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_sw(const std::string& file, const Options& opt) {
    PlumbingGraph g = load_graph_file(file);
    LatticeContext ctx = build_context(g);
    long long sw = sw0_norm(ctx, opt.par);
    if (opt.as_json) {
        json j{{"command", "sw"}, {"input", file}, {"sw0_norm", sw}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "normalized Seiberg-Witten invariant: " << sw << "\n";
    }
    return 0;
}

int cmd_extend(const std::string& file, const Options& opt, const std::string& sub,
               bool per_exponent) {
    PlumbingGraph outer = load_graph_file(file);
    PlumbingGraph inner = induced_subgraph(outer, parse_id_list(sub));
    ExtensionPair pair = build_extension(inner, outer);
    ExtensionReport rep = is_good_extension(pair);
    if (opt.as_json) {
        json j = extension_report_json(rep);
        if (!per_exponent) j.erase("per_exponent");
        j["command"] = "extend";
        j["input"] = file;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "extension index: " << rep.index << "\n"
                  << "good extension: " << (rep.good ? "yes" : "no") << "\n"
                  << "truncation-reduction identity: " << (rep.identity_holds ? "holds" : "fails")
                  << "\n"
                  << "fast path matches brute force: " << (rep.algorithm_agrees ? "yes" : "no")
                  << "\n";
        if (per_exponent)
            for (auto& pe : rep.per_exponent) {
                std::cout << "dual " << vec_str(pe.dual) << "  j = " << pe.level << "  "
                          << (pe.status == ExtStatus::Extendable ? "Extendable"
                                                                 : "NonExtendable")
                          << "\n";
                for (auto& [d, z] : pe.extensions)
                    std::cout << "  -> " << vec_str(d) << "  z = " << z << "\n";
            }
    }
    if (!rep.algorithm_agrees || rep.good != rep.identity_holds) return EXIT_CHECK_FAILURE;
    return 0;
}

int cmd_check(const std::string& path, const Options& opt) {
    std::vector<std::string> files;
    if (fs::is_directory(path)) {
        for (auto& e : fs::directory_iterator(path)) {
            auto ext = e.path().extension().string();
            if (ext == ".graph" || ext == ".json") files.push_back(e.path().string());
        }
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    bool failed = false;
    json all = json::array();
    for (auto& f : files) {
        PlumbingGraph g = load_graph_file(f);
        auto results = run_all_checks(g, opt.par);
        failed = failed || any_failure(results);
        if (opt.as_json) {
            all.push_back({{"input", f}, {"checks", checks_json(results)}});
        } else {
            std::cout << f << ":\n";
            for (auto& r : results) {
                const char* st = r.status == CheckResult::Pass
                                     ? "PASS"
                                     : (r.status == CheckResult::Fail ? "FAIL" : "SKIP");
                std::cout << "  [" << st << "] " << r.name;
                if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
            }
        }
    }
    if (opt.as_json) std::cout << json{{"command", "check"}, {"reports", all}}.dump(2) << "\n";
    return failed ? EXIT_CHECK_FAILURE : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of negative-definite plumbing graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_option("--par", opt.par, "internal enumeration parallelism")->default_val(1);

    std::string file, reduce, sub;
    bool dual = false, trace = false, per_exponent = false;

    auto* validate = app.add_subcommand("validate", "parse and validate a graph file");
    validate->add_option("file", file)->required();
    auto* info = app.add_subcommand("info", "basic lattice invariants");
    info->add_option("file", file)->required();
    auto* ellseq = app.add_subcommand("ellseq", "elliptic sequence");
    ellseq->add_option("file", file)->required();
    auto* poly = app.add_subcommand("poly", "canonical polynomial");
    poly->add_option("file", file)->required();
    poly->add_option("--reduce", reduce, "comma/range list of vertex ids to keep");
    poly->add_flag("--dual", dual, "print the dual polynomial");
    poly->add_flag("--trace", trace, "include computation sequences");
    auto* exponents = app.add_subcommand("exponents", "exponent classification table");
    exponents->add_option("file", file)->required();
    auto* sw = app.add_subcommand("sw", "normalized Seiberg-Witten invariant");
    sw->add_option("file", file)->required();
    auto* extend = app.add_subcommand("extend", "extension analysis");
    extend->add_option("file", file)->required();
    extend->add_option("--sub", sub, "inner vertex ids (e.g. 1..10 or 1,2,3)")->required();
    extend->add_flag("--per-exponent", per_exponent, "per-exponent extension table");
    auto* check = app.add_subcommand("check", "run the full verification suite");
    check->add_option("path", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file, opt);
        if (info->parsed()) return cmd_info(file, opt);
        if (ellseq->parsed()) return cmd_ellseq(file, opt);
        if (poly->parsed()) return cmd_poly(file, opt, reduce, dual, trace);
        if (exponents->parsed()) return cmd_exponents(file, opt);
        if (sw->parsed()) return cmd_sw(file, opt);
        if (extend->parsed()) return cmd_extend(file, opt, sub, per_exponent);
        if (check->parsed()) return cmd_check(file, opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const NotNegativeDefinite& e) {
        std::cerr << "input error: NotNegativeDefinite: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const NotElliptic& e) {
        std::cerr << "input error: NotElliptic: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_CHECK_FAILURE;
    }
    return 0;
}
