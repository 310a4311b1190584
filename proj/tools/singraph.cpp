#include "singraph/io.hpp"
#include "singraph/kernels.hpp"
#include "singraph/mtree.hpp"
#include "singraph/rng.hpp"
#include "singraph/sim.hpp"
#include "singraph/singular.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sg;

namespace {

// Bare key=value lines apply to the subcommand selected on the command line;
// [section] headers still address any subcommand explicitly.
class ScopedConfig : public CLI::ConfigINI {
public:
    explicit ScopedConfig(std::vector<std::string> scope) : scope_(std::move(scope)) {}
    auto from_config(std::istream& input) const -> std::vector<CLI::ConfigItem> override {
        auto items = CLI::ConfigINI::from_config(input);
        for (auto& it : items)
            if (it.parents.empty() && it.name != "config" && it.name != "manifest") it.parents = scope_;
        return items;
    }

private:
    std::vector<std::string> scope_;
};

auto subcommand_path(CLI::App& app, int argc, char** argv) -> std::vector<std::string> {
    std::vector<std::string> path;
    CLI::App* cur = &app;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.empty() || tok[0] == '-') continue;
        CLI::App* next = cur->get_subcommand_no_throw(tok);
        if (!next) continue;
        path.push_back(tok);
        cur = next;
    }
    return path;
}

auto split(const std::string& text, char sep) -> std::vector<std::string> {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

auto motives(const std::vector<std::string>& names) -> std::vector<Graph> {
    std::vector<Graph> out;
    for (const auto& n : names) out.push_back(parse_motive(n));
    return out;
}

auto complex_arg(const std::vector<double>& z) -> std::complex<double> {
    if (z.empty() || z.size() > 2) throw ValidationError("--z takes re or re,im");
    return {z[0], z.size() == 2 ? z[1] : 0.0};
}

auto fmt(double x) -> std::string {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

auto fmt(std::complex<double> z) -> std::string { return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i"; }

auto density_text(const DensityValue& d) -> std::string {
    if (d.exact) return to_string(*d.exact);
    return fmt(d.value) + " +- " + fmt(d.std_error);
}

auto constant_p(const Graphon& g, const char* what) -> double {
    if (!g.is_constant()) throw ValidationError(std::string(what) + " needs a constant graphon");
    return std::get<ConstantGraphon>(g.rep()).p.get_d();
}

// Sample mean and standard error of complex values, per component.
struct ComplexMean {
    std::complex<double> mean;
    std::complex<double> std_error;
};

auto complex_mean(const std::vector<std::complex<double>>& v) -> ComplexMean {
    std::complex<double> m = 0;
    for (auto x : v) m += x;
    m /= static_cast<double>(v.size());
    double vr = 0, vi = 0;
    for (auto x : v) {
        vr += std::norm(x.real() - m.real());
        vi += std::norm(x.imag() - m.imag());
    }
    double k = static_cast<double>(v.size());
    return {m, {std::sqrt(vr / (k - 1) / k), std::sqrt(vi / (k - 1) / k)}};
}

struct Run {
    io::Manifest manifest;
    std::function<int()> body;
};

}  // namespace

auto main(int argc, char** argv) -> int {
    CLI::App app{"Singular graphons: observables, densities, simulation and matrix-tree checks"};
    app.set_version_flag("--version", SINGRAPH_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file mirroring the flags of the chosen subcommand");
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");

    Run run;
    auto param = [&](const std::string& k, const auto& v) {
        std::ostringstream s;
        s << v;
        run.manifest.parameters[k] = s.str();
    };

    std::string out = "text";
    auto out_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--out", out, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };

    // observable
    auto* obs = app.add_subcommand("observable", "Symbolic observables");
    obs->require_subcommand(1);
    std::vector<std::string> graph_names;
    for (std::string name : {"kappa2", "kappa-s", "cumulant-poly"}) {
        auto* sub = obs->add_subcommand(name, name == "kappa2"          ? "Leading term of the second cumulant"
                                              : name == "kappa-s"       ? "Leading term of the s-th joint cumulant"
                                                                        : "Exact joint cumulant of the counts as a polynomial in n");
        sub->add_option("--graphs", graph_names, "Motives (graph6 or names such as edge, path3, C4, star3)")->delimiter(',')->required();
        out_opt(sub, {"text", "json"});
        sub->callback([&, name] {
            run.manifest.command = "observable " + name;
            run.body = [&, name] {
                param("graphs", CLI::detail::join(graph_names, ","));
                auto gs = motives(graph_names);
                if (name == "cumulant-poly") {
                    auto poly = joint_cumulant_poly(gs);
                    std::cout << (out == "json" ? io::to_json(poly).dump(2) : poly.to_string(true)) << '\n';
                    return 0;
                }
                if (name == "kappa2" && gs.size() != 2) throw ValidationError("kappa2 takes exactly two motives");
                Observable o = name == "kappa2" ? kappa2(gs[0], gs[1]) : kappa_s(gs);
                std::cout << (out == "json" ? io::to_json(o).dump(2) : o.to_string()) << '\n';
                return 0;
            };
        });
    }

    // density
    std::string graphon_spec, motive_name;
    auto* dens = app.add_subcommand("density", "Exact homomorphism density t(F, graphon)");
    dens->add_option("--graphon", graphon_spec, "constant:a/b, graph:<motive> or a JSON file")->required();
    dens->add_option("--motive", motive_name, "Motive F")->required();
    out_opt(dens, {"text", "json"});
    dens->callback([&] {
        run.manifest.command = "density";
        run.body = [&] {
            param("graphon", graphon_spec);
            param("motive", motive_name);
            auto d = density(parse_motive(motive_name), io::load_graphon(graphon_spec));
            std::cout << (out == "json" ? io::to_json(d).dump(2) : density_text(d)) << '\n';
            return 0;
        };
    });

    // singularity
    int max_size = 4;
    double tol = 0;
    auto* sing = app.add_subcommand("singularity", "Second-cumulant singularity test and Gaussian edge criterion");
    sing->add_option("--graphon", graphon_spec)->required();
    sing->add_option("--max-size", max_size, "Largest motive size checked")->check(CLI::Range(2, 5))->capture_default_str();
    sing->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
    out_opt(sing, {"text", "json"});
    sing->callback([&] {
        run.manifest.command = "singularity";
        run.body = [&] {
            param("graphon", graphon_spec);
            param("max_size", max_size);
            param("tol", tol);
            auto g = io::load_graphon(graphon_spec);
            auto s = singularity_report(g, max_size, tol);
            auto c = gaussian_edge_criterion(g);
            if (out == "json") {
                io::Json j{{"singular", s.singular},
                           {"pairs_checked", s.pairs_checked},
                           {"max_residual", s.max_residual_exact ? io::Json(to_string(*s.max_residual_exact)) : io::Json(s.max_residual)},
                           {"worst_pair", {describe(s.worst_first), describe(s.worst_second)}},
                           {"kappa3_inf", io::to_json(c.kappa3)},
                           {"kappa4_inf", io::to_json(c.kappa4)},
                           {"cgw_gap", io::to_json(c.cgw.gap)}};
                if (!c.warning.empty()) j["warning"] = c.warning;
                std::cout << j.dump(2) << '\n';
                return 0;
            }
            std::cout << "singular: " << (s.singular ? "yes" : "no") << "\npairs checked: " << s.pairs_checked << "\nmax residual: "
                      << (s.max_residual_exact ? to_string(*s.max_residual_exact) : fmt(s.max_residual)) << " at kappa2("
                      << describe(s.worst_first) << ", " << describe(s.worst_second) << ")\nkappa3_inf(edge): " << density_text(c.kappa3)
                      << "\nkappa4_inf(edge): " << density_text(c.kappa4) << "\nt(C4) - p^4: " << density_text(c.cgw.gap) << '\n';
            if (!c.warning.empty()) std::cerr << "warning: " << c.warning << '\n';
            return 0;
        };
    });

    // census
    int census_r = 2;
    auto* cen = app.add_subcommand("census", "Loopless contractions of r disjoint edges");
    cen->add_option("--r", census_r)->check(CLI::Range(1, 4))->required();
    out_opt(cen, {"text", "json"});
    cen->callback([&] {
        run.manifest.command = "census";
        run.body = [&] {
            param("r", census_r);
            auto rows = contraction_census(census_r);
            io::Json j = io::Json::array();
            for (const auto& row : rows) {
                std::string type;
                for (std::size_t i = 0; i < row.type.size(); ++i) type += (i ? "," : "") + std::to_string(row.type[i]);
                if (out == "json")
                    j.push_back({{"type", row.type}, {"graph", describe(row.graph)}, {"graph6", to_graph6(row.graph)},
                                 {"multiplicity", row.multiplicity}});
                else
                    std::cout << "(" << type << ")\t" << describe(row.graph) << '\t' << row.multiplicity << '\n';
            }
            if (out == "json") std::cout << j.dump(2) << '\n';
            return 0;
        };
    });

    // simulate cumulants
    int n = 64;
    std::uint64_t seed = 0;
    McOptions mc;
    std::vector<std::string> motive_names, joint;
    std::vector<int> orders{2};
    bool no_fast_path = false;
    auto* simu = app.add_subcommand("simulate", "Monte Carlo experiments");
    simu->require_subcommand(1);
    auto* cum = simu->add_subcommand("cumulants", "Plug-in joint cumulants of subgraph counts S_n(F)");
    cum->add_option("--graphon", graphon_spec)->required();
    cum->add_option("--n", n)->check(CLI::Range(1, kMaxSampleSize))->required();
    cum->add_option("--motives", motive_names)->delimiter(',')->required();
    cum->add_option("--orders", orders, "Pure cumulant orders, applied to every motive")->delimiter(',')->capture_default_str();
    cum->add_option("--joint", joint, "Mixed tuples of motive indices, e.g. 0+1")->delimiter(',');
    cum->add_option("--samples", mc.samples)->check(CLI::Range(2, 100000000))->capture_default_str();
    cum->add_option("--seed", seed)->required();
    cum->add_option("--workers", mc.workers)->check(CLI::Range(1, 256))->capture_default_str();
    cum->add_option("--batches", mc.batches)->check(CLI::Range(2, 10000))->capture_default_str();
    cum->add_flag("--no-binomial", no_fast_path, "Sample full graphs even for edge-only constant runs");
    out_opt(cum, {"csv", "json"});
    cum->callback([&] {
        run.manifest.command = "simulate cumulants";
        run.body = [&] {
            if (out == "text") out = "csv";
            param("graphon", graphon_spec);
            param("n", n);
            param("motives", CLI::detail::join(motive_names, ","));
            param("orders", CLI::detail::join(orders, ","));
            param("joint", CLI::detail::join(joint, ","));
            param("samples", mc.samples);
            param("batches", mc.batches);
            param("binomial_fast_path", !no_fast_path);
            param("workers", mc.workers);
            auto gs = motives(motive_names);
            std::vector<std::vector<int>> tuples;
            for (std::size_t i = 0; i < gs.size(); ++i)
                for (int r : orders) {
                    if (r < 1 || r > 8) throw ValidationError("cumulant orders must lie in 1..8");
                    tuples.emplace_back(static_cast<std::size_t>(r), static_cast<int>(i));
                }
            for (const auto& t : joint) {
                std::vector<int> tuple;
                for (const auto& idx : split(t, '+')) {
                    int k = std::stoi(idx);
                    if (k < 0 || k >= static_cast<int>(gs.size())) throw ValidationError("joint index out of range: " + t);
                    tuple.push_back(k);
                }
                tuples.push_back(tuple);
            }
            mc.seed = seed;
            mc.binomial_fast_path = !no_fast_path;
            auto res = mc_cumulants(io::load_graphon(graphon_spec), n, gs, tuples, mc);
            if (out == "csv") {
                std::cout << io::estimates_csv(res);
            } else {
                io::Json rows = io::Json::array();
                for (const auto& e : res.estimates) {
                    io::Json m = io::Json::array();
                    for (int k : e.order) m.push_back(describe(e.motives[static_cast<std::size_t>(k)]));
                    rows.push_back({{"motives", m}, {"estimate", e.estimate}, {"std_error", e.std_error}, {"samples", e.samples}});
                }
                std::cout << io::Json{{"n", n}, {"seed", seed}, {"binomial_fast_path", res.used_binomial_fast_path}, {"estimates", rows}}.dump(2)
                          << '\n';
            }
            if (!res.bias_note.empty()) std::cerr << "note: " << res.bias_note << '\n';
            return 0;
        };
    });

    // spectral
    std::vector<double> zarg{1.0};
    std::string det_kind = "det3";
    double eps = 0;
    auto* spec = app.add_subcommand("spectral", "Determinants of random and limiting operators");
    spec->require_subcommand(1);
    auto* cp = spec->add_subcommand("charpoly", "Mean of det(I + zA/n) over samples, with the constant-graphon closed form");
    auto* fr = spec->add_subcommand("fredholm", "Modified Fredholm determinant of a step graphon");
    auto* lap = spec->add_subcommand("laplacian", "Mean of the Laplacian determinant DL_n(z; eps) at fixed eps");
    for (auto* sub : {cp, fr, lap}) {
        sub->add_option("--graphon", graphon_spec)->required();
        sub->add_option("--z", zarg, "re or re,im")->delimiter(',')->capture_default_str();
    }
    for (auto* sub : {cp, lap}) {
        sub->add_option("--n", n)->check(CLI::Range(1, kMaxSampleSize))->required();
        sub->add_option("--samples", mc.samples)->check(CLI::Range(2, 100000000))->capture_default_str();
        sub->add_option("--seed", seed)->required();
    }
    fr->add_option("--kind", det_kind)->check(CLI::IsMember({"det2", "det3"}))->capture_default_str();
    lap->add_option("--eps", eps, "Common value of the fixed eps_i")->capture_default_str();
    auto mc_loop = [&](const Graphon& g, const std::function<std::complex<double>(const SampledGraph&)>& f) {
        std::vector<std::complex<double>> vals;
        for (std::uint64_t d = 0; d < mc.samples; ++d) vals.push_back(f(sample(g, n, seed, d)));
        return complex_mean(vals);
    };
    cp->callback([&] {
        run.manifest.command = "spectral charpoly";
        run.body = [&] {
            param("graphon", graphon_spec);
            param("n", n);
            param("z", fmt(complex_arg(zarg)));
            param("samples", mc.samples);
            auto g = io::load_graphon(graphon_spec);
            auto z = complex_arg(zarg);
            auto m = mc_loop(g, [&](const SampledGraph& s) { return charpoly_adjacency(s, z).value; });
            std::cout << "mean: " << fmt(m.mean) << "\nstd_error: " << fmt(m.std_error.real()) << ", " << fmt(m.std_error.imag()) << '\n';
            if (g.is_constant()) std::cout << "closed form: " << fmt(hermite_expected_charpoly(n, constant_p(g, "closed form"), z)) << '\n';
            return 0;
        };
    });
    fr->callback([&] {
        run.manifest.command = "spectral fredholm";
        run.body = [&] {
            param("graphon", graphon_spec);
            param("z", fmt(complex_arg(zarg)));
            param("kind", det_kind);
            auto g = io::load_graphon(graphon_spec);
            auto z = complex_arg(zarg);
            auto kind = det_kind == "det2" ? DetKind::det2 : DetKind::det3;
            std::cout << det_kind << ": " << fmt(fredholm_det(g, z, kind)) << '\n';
            auto sp = spectrum(g, 4);
            std::cout << "eigenvalues:";
            for (double l : sp.eigenvalues) std::cout << ' ' << fmt(l);
            std::cout << '\n';
            return 0;
        };
    });
    lap->callback([&] {
        run.manifest.command = "spectral laplacian";
        run.body = [&] {
            param("graphon", graphon_spec);
            param("n", n);
            param("z", fmt(complex_arg(zarg)));
            param("eps", eps);
            param("samples", mc.samples);
            auto g = io::load_graphon(graphon_spec);
            double p = constant_p(g, "spectral laplacian");
            auto z = complex_arg(zarg);
            std::vector<double> e(static_cast<std::size_t>(n), eps);
            auto m = mc_loop(g, [&](const SampledGraph& s) { return laplacian_det(s, p, z, e).value; });
            std::cout << "mean: " << fmt(m.mean) << "\nstd_error: " << fmt(m.std_error.real()) << ", " << fmt(m.std_error.imag())
                      << "\nexpectation: " << fmt(expected_laplacian_formula(n, p, z, e)) << '\n';
            return 0;
        };
    });

    // mtree verify
    int max_vertices = 6, trials = 200;
    auto* mt = app.add_subcommand("mtree", "Matrix-tree identities");
    mt->require_subcommand(1);
    auto* ver = mt->add_subcommand("verify", "Determinant against forest sums on random instances, plus forest counts");
    ver->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 6))->capture_default_str();
    ver->add_option("--trials", trials)->check(CLI::Range(0, 1000000))->capture_default_str();
    ver->add_option("--seed", seed)->required();
    ver->callback([&] {
        run.manifest.command = "mtree verify";
        run.body = [&] {
            param("max_vertices", max_vertices);
            param("trials", trials);
            Philox rng(seed, 0);
            std::uniform_int_distribution<int> size(1, max_vertices), num(-9, 9), den(1, 5);
            int agree = 0;
            for (int t = 0; t < trials; ++t) {
                int k = size(rng);
                std::vector<Edge> edges;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (rng() & 1U) edges.emplace_back(i, j);
                std::vector<Rational> z, d;
                for (int i = 0; i < k; ++i) {
                    z.push_back(Rational(num(rng)) / den(rng));
                    d.push_back(Rational(num(rng)) / den(rng));
                }
                auto [det, forests] = marked_laplacian_det(Graph(k, edges), z, d);
                agree += det == forests;
            }
            int bad = trials - agree;
            std::cout << "marked Laplacian: " << agree << "/" << trials << " instances agree\n";
            for (int v = 1; v <= max_vertices; ++v)
                for (int k = 1; k <= v; ++k) {
                    auto c = rooted_forest_count(v, k);
                    bad += c.brute_force != c.formula;
                    std::cout << "rooted forests n=" << v << " k=" << k << ": " << to_string(c.brute_force) << " (formula "
                              << to_string(c.formula) << ")\n";
                }
            for (int s = 1; s <= max_vertices; ++s) {
                auto c = cayley_degree_genfun(s);
                bool ok = c.brute_force == c.closed_form;
                bad += !ok;
                std::cout << "degree generating function s=" << s << ": " << (ok ? "match" : "MISMATCH") << '\n';
            }
            return bad == 0 ? 0 : 1;
        };
    });

    // trees system
    bool kappa2_only = false;
    auto* trees = app.add_subcommand("trees", "Tree-density equations of singular graphons");
    trees->require_subcommand(1);
    auto* sys = trees->add_subcommand("system", "Rank of the kappa equations over tree densities");
    sys->add_option("--max-size", max_size)->check(CLI::Range(3, 7))->required();
    sys->add_flag("--kappa2-only", kappa2_only, "Leave out the third-cumulant equations");
    out_opt(sys, {"text", "json"});
    sys->callback([&] {
        run.manifest.command = "trees system";
        run.body = [&] {
            param("max_size", max_size);
            param("kappa2_only", kappa2_only);
            auto r = tree_equation_system(max_size, !kappa2_only);
            if (out == "json") {
                std::cout << io::to_json(r).dump(2) << '\n';
                return 0;
            }
            for (const auto& lv : r.levels) {
                std::cout << "size " << lv.size << ": " << lv.trees.size() << " trees, " << lv.equations << " equations, rank " << lv.rank
                          << (lv.pinned_to_edge_power ? ", solution t(T) = p^" + std::to_string(lv.size - 1) : "") << '\n';
                for (const auto& e : r.equations)
                    if (e.size == lv.size) std::cout << "  " << e.label << ": " << format_tree_equation(e, lv) << '\n';
            }
            for (const auto& d : r.dropped) std::cout << "dropped " << d.label << ": " << d.reason << '\n';
            std::cout << "p^|E| satisfies all equations: " << (r.all_satisfied ? "yes" : "no") << '\n';
            return r.all_satisfied ? 0 : 1;
        };
    });

    app.config_formatter(std::make_shared<ScopedConfig>(subcommand_path(app, argc, argv)));
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run.manifest.command.find("simulate") == 0 || run.manifest.command == "mtree verify" ||
            run.manifest.command == "spectral charpoly" || run.manifest.command == "spectral laplacian")
            run.manifest.seed = seed;
        int code = run.body();
        run.manifest.parameters["isa"] = kernels::isa_name(kernels::active_isa());
        if (!out.empty() && out != "text") run.manifest.parameters["out"] = out;
        auto m = io::to_json(run.manifest).dump();
        if (manifest_path.empty()) {
            std::cerr << m << '\n';
        } else {
            std::ofstream f(manifest_path);
            if (!f) throw ValidationError("cannot write manifest " + manifest_path);
            f << m << '\n';
        }
        return code;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    }
}
