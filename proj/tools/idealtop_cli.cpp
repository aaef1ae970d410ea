#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idealtop/circle.hpp"
#include "idealtop/labs.hpp"
#include "idealtop/onepoint.hpp"
#include "idealtop/parse.hpp"
#include "idealtop/shrink.hpp"

using nlohmann::json;
using namespace idealtop;

namespace {

// round to 12 significant digits so emitted JSON is byte-stable
double r12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json value_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Real: return json{{"real", r12(v.x)}};
        case Value::Kind::Plane: return json{{"x", r12(v.x)}, {"y", r12(v.y)}};
        case Value::Kind::Label: return json{{"point", v.label}};
    }
    return {};
}

json verdict_json(const MembershipVerdict& v) {
    return {{"verdict", v.str()}, {"certificate", v.certificate}};
}

std::string tri_str(Tri t) {
    return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown";
}

json density_json(const DensityResult& d) {
    json out{{"kind", d.kind == DensityResult::Kind::Exact    ? "exact"
                      : d.kind == DensityResult::Kind::Bounds ? "bounds"
                                                              : "unknown"}};
    if (d.kind == DensityResult::Kind::Exact) out["exact"] = d.exact.str();
    if (d.kind == DensityResult::Kind::Bounds) {
        out["lower"] = d.lower.str();
        out["upper"] = d.upper.str();
        out["window"] = d.window;
    }
    return out;
}

json lab_json(const LabResult& r) {
    json out{{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}};
    if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
    return out;
}

json convergence_json(const ConvergenceVerdict& v) {
    json eps = json::array();
    for (const auto& [e, m] : v.per_epsilon)
        eps.push_back({{"eps", r12(e)}, {"membership", verdict_json(m)}});
    return {{"verdict", v.str()}, {"per_epsilon", eps}};
}

json cwitness_json(const CWitness& w, std::uint64_t window) {
    const char* tag = w.strategy == CWitness::Strategy::OddPart       ? "odd-part"
                      : w.strategy == CWitness::Strategy::OnePerBlock ? "one-per-block"
                      : w.strategy == CWitness::Strategy::WithinBlock ? "within-block"
                                                                      : "custom";
    auto r = condC_verify(w, window);
    json out{{"ideal", w.ideal->name()},
             {"A", w.A->str()},
             {"B", w.B->str()},
             {"strategy", tag},
             {"verify", {{"consistent", r.consistent},
                         {"subsets_checked", r.subsets_checked},
                         {"detail", r.detail}}}};
    if (w.strategy == CWitness::Strategy::WithinBlock) out["block"] = w.block_index;
    if (!r.consistent && r.counterexample) out["verify"]["counterexample"] = r.counterexample->str();
    return out;
}

json space_json(const FinSpace& S) {
    json opens = json::array();
    for (Mask o : S.opens) opens.push_back(S.mask_str(o));
    return {{"points", S.points}, {"opens", opens}};
}

json scenario_note22() {
    auto s = parse_seq("fibers{0: arith(1,2); 1: arith(0,2)}");
    json out;
    auto under_i1 = i_eventually_constant(s, ideal_i1());
    out["i1_eventually_constant"] =
        under_i1 ? value_json(*under_i1) : json("absent");
    out["fin_eventually_constant"] =
        i_eventually_constant(s, ideal_fin()) ? json("present") : json("absent");
    out["i1_convergence_at_0"] =
        i_converges(s, Value::real(0), ideal_i1(), default_eps_grid()).str();
    out["fin_convergence_at_0"] =
        i_converges(s, Value::real(0), ideal_fin(), default_eps_grid()).str();
    return out;
}

json scenario_example25() {
    json out = json::array();
    for (const auto& ideal : {ideal_i1(), ideal_i2(), ideal_i3()}) {
        SetPtr A = ideal->kind == IdealSpec::Kind::FinPerBlock ? block(1) : naturals();
        out.push_back(cwitness_json(condC_witness(ideal, A), std::uint64_t{1} << 12));
    }
    return {{"witnesses", out}};
}

json scenario_prop26() {
    auto a = prop26_counterexample(15);
    auto s = prop26_sequence(15);
    json head = json::array();
    for (std::uint64_t n = 1; n <= 8; ++n) head.push_back(r12(s.eval(n).x));
    return {{"first_values", head},
            {"per_block_decreasing", a.per_block_decreasing},
            {"lis_length", a.lis_length},
            {"pigeonhole_bound", a.pigeonhole_bound},
            {"range_density_bound", a.range_density_bound.str()},
            {"window", a.window}};
}

json scenario_thm210(bool parallel) {
    return {{"lab", lab_json(lab_continuity(3, parallel))}};
}

json scenario_thm213(bool parallel) {
    json out{{"lab", lab_json(lab_onepoint(4, parallel))}};
    auto d2 = build_onepoint(discrete_space({"a", "b"}), ideal_fin());
    out["discrete2_extension"] = space_json(d2.space);
    out["discrete2_hausdorff"] = is_hausdorff(d2);
    auto sp = build_onepoint(sierpinski(), ideal_fin());
    out["sierpinski_extension"] = space_json(sp.space);
    out["sierpinski_hausdorff"] = is_hausdorff(sp);
    return out;
}

json scenario_circle() {
    json out;
    out["alpha"] = value_json(circle_alpha());
    json samples = json::array();
    for (double x : {0.0, 1.0, -1.0, 3.0, 100.0})
        samples.push_back({{"x", r12(x)}, {"e", value_json(circle_e(x))}});
    out["embedding_samples"] = samples;
    out["printed_branch_collides"] = same_value(circle_e_printed(3), circle_e(0.6));

    json conv = json::array();
    auto record = [&conv](const char* label, const Seq& s, const IdealPtr& ideal) {
        auto v = circle_converges_to_alpha(s, ideal);
        conv.push_back({{"sequence", label},
                        {"ideal", ideal->name()},
                        {"converges_to_alpha", tri_str(v.converges)}});
    };
    auto odd_alpha = parse_seq("fibers{alpha: arith(1,2); (1,0): arith(0,2)}");
    record("alpha on odds, e(1) on evens", odd_alpha, ideal_i1());
    record("alpha on odds, e(1) on evens", odd_alpha, ideal_fin());
    auto constant = parse_seq("fibers{(0,1): naturals}");
    record("constant e(0)", constant, ideal_i1());
    out["alpha_convergence"] = conv;

    auto sep = circle_separation(circle_alpha(), circle_e(0));
    out["separation_alpha_e0"] = {{"separable", sep.separable}, {"steps", sep.steps}};
    return out;
}

json run_scenario(const std::string& name, bool parallel) {
    if (name == "note-2.2") return scenario_note22();
    if (name == "example-2.5") return scenario_example25();
    if (name == "prop-2.6") return scenario_prop26();
    if (name == "thm-2.10-lab") return scenario_thm210(parallel);
    if (name == "thm-2.13-lab") return scenario_thm213(parallel);
    if (name == "circle-final") return scenario_circle();
    throw CLI::ValidationError("unknown scenario '" + name + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal convergence toolkit"};
    app.require_subcommand(1);
    bool parallel = false;
    app.add_flag("--parallel", parallel, "shard exhaustive labs across OpenMP threads");

    std::string set_src, ideal_src = "fin", seq_src, space_src, a_src, b_src, family_src;
    std::uint64_t window = default_window();
    std::size_t max_n = 3;

    auto* density = app.add_subcommand("density", "natural density of a set expression");
    density->add_option("--set", set_src, "set expression")->required();
    density->add_option("--window", window, "fallback scan window");

    auto* ideal_cmd = app.add_subcommand("ideal", "ideal membership with certificate");
    ideal_cmd->add_option("--ideal", ideal_src, "ideal name")->required();
    ideal_cmd->add_option("--set", set_src, "set expression")->required();
    bool admissible = false;
    ideal_cmd->add_flag("--admissible", admissible, "also report the admissibility check");

    auto* analyze = app.add_subcommand("analyze", "sequence analysis under an ideal");
    analyze->add_option("--seq", seq_src, "sequence expression")->required();
    analyze->add_option("--ideal", ideal_src, "ideal name");
    std::string limit_src, cluster_src;
    bool eventually_constant = false, nonthin = false;
    analyze->add_option("--limit", limit_src, "candidate limit value");
    analyze->add_option("--cluster", cluster_src, "comma-separated candidate cluster points");
    analyze->add_flag("--eventually-constant", eventually_constant,
                      "ideal-eventual constancy (fiber sequences)");
    analyze->add_flag("--nonthin", nonthin, "domain thinness check");

    auto* shrink = app.add_subcommand("shrink", "shrinking-condition witnesses");
    auto* cwit = shrink->add_subcommand("c-witness", "construct and verify a condition (C) witness");
    cwit->add_option("--ideal", ideal_src, "ideal name")->required();
    cwit->add_option("--set", set_src, "base set A")->required();
    cwit->add_option("--window", window, "verification window");
    auto* verify = shrink->add_subcommand("verify", "verify a hand-picked condition (C) candidate");
    verify->add_option("--ideal", ideal_src, "ideal name")->required();
    verify->add_option("--a", a_src, "base set A")->required();
    verify->add_option("--b", b_src, "candidate subset B")->required();
    verify->add_option("--window", window, "verification window");
    auto* bwit = shrink->add_subcommand("b-witness", "stagewise condition (B) selection");
    bwit->add_option("--ideal", ideal_src, "ideal name")->required();
    bwit->add_option("--family", family_src, "semicolon-separated family of sets")->required();

    auto* topolab = app.add_subcommand("topolab", "exhaustive finite-space labs");
    auto* check = topolab->add_subcommand("check", "run one lab");
    std::string property;
    bool reference = false;
    check->add_option("--n", max_n, "maximum number of points")->required();
    check->add_option("--property", property,
                      "closure-collapse | us-t1 | sequential | compact | continuity | onepoint")
        ->required();
    check->add_flag("--reference", reference, "use the symbolic engine instead of the kernel");

    auto* onepoint = app.add_subcommand("onepoint", "one-point extension tools");
    auto* build = onepoint->add_subcommand("build", "extend a finite space");
    build->add_option("--space", space_src, "space expression")->required();
    build->add_option("--ideal", ideal_src, "ideal name");
    auto* circle = onepoint->add_subcommand("circle", "circle model report");

    auto* scenario = app.add_subcommand("scenario", "run a named scenario against its golden file");
    std::string scenario_name, golden_dir = "data/golden";
    bool emit_only = false;
    scenario->add_option("name", scenario_name, "scenario name")->required();
    scenario->add_option("--golden-dir", golden_dir, "directory with golden JSON files");
    scenario->add_flag("--emit", emit_only, "print the report without comparing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (*density) {
            emit({{"set", parse_setexpr(set_src)->str()},
                  {"window", window},
                  {"density", density_json(idealtop::density(parse_setexpr(set_src), window))}});
        } else if (*ideal_cmd) {
            auto I = parse_ideal(ideal_src);
            auto A = parse_setexpr(set_src);
            json out{{"ideal", I->name()},
                     {"set", A->str()},
                     {"membership", verdict_json(contains(I, A))}};
            if (admissible) {
                auto rep = is_admissible(I);
                out["admissible"] = {{"admissible", rep.admissible}, {"report", rep.report}};
            }
            emit(out);
        } else if (*analyze) {
            auto s = parse_seq(seq_src);
            auto I = parse_ideal(ideal_src);
            json out{{"seq", s.str()}, {"ideal", I->name()}};
            if (!limit_src.empty())
                out["convergence"] =
                    convergence_json(i_converges(s, parse_value(limit_src), I, default_eps_grid()));
            if (eventually_constant) {
                auto v = i_eventually_constant(s, I);
                out["eventually_constant"] = v ? value_json(*v) : json("absent");
            }
            if (!cluster_src.empty()) {
                std::vector<Value> cands;
                std::stringstream ss(cluster_src);
                std::string item;
                while (std::getline(ss, item, ',')) cands.push_back(parse_value(item));
                json cl = json::array();
                for (const auto& v : i_cluster_points(s, I, cands, default_eps_grid()))
                    cl.push_back(value_json(v));
                out["cluster_points"] = cl;
            }
            if (nonthin) {
                auto v = is_nonthin(s, I);
                out["nonthin"] = {{"verdict", tri_str(v.nonthin)}, {"certificate", v.certificate}};
            }
            emit(out);
        } else if (*cwit) {
            emit(cwitness_json(condC_witness(parse_ideal(ideal_src), parse_setexpr(set_src)),
                               window));
        } else if (*verify) {
            emit(cwitness_json(custom_c_witness(parse_ideal(ideal_src), parse_setexpr(a_src),
                                                parse_setexpr(b_src)),
                               window));
        } else if (*bwit) {
            std::vector<SetPtr> family;
            std::stringstream ss(family_src);
            std::string item;
            while (std::getline(ss, item, ';')) family.push_back(parse_setexpr(item));
            auto w = condB_witness(parse_ideal(ideal_src), family);
            json picks = json::array();
            for (const auto& B : w.picks) picks.push_back(B->str());
            emit({{"ideal", w.ideal->name()},
                  {"picks", picks},
                  {"union", w.union_b->str()},
                  {"union_membership", verdict_json(contains(w.ideal, w.union_b))},
                  {"note", w.note}});
        } else if (*check) {
            LabResult r;
            if (property == "closure-collapse")
                r = lab_closure_collapse(max_n, parallel, reference);
            else if (property == "us-t1")
                r = lab_us_t1(max_n, parallel, reference);
            else if (property == "sequential")
                r = lab_sequential(max_n, parallel);
            else if (property == "compact")
                r = lab_compact(max_n, parallel);
            else if (property == "continuity")
                r = lab_continuity(max_n, parallel);
            else if (property == "onepoint")
                r = lab_onepoint(max_n, parallel);
            else
                throw CLI::ValidationError("unknown property '" + property + "'");
            emit(lab_json(r));
            return r.failures == 0 ? 0 : 1;
        } else if (*build) {
            auto T = build_onepoint(parse_space(space_src), parse_ideal(ideal_src));
            emit({{"base", space_json(T.base)},
                  {"extension", space_json(T.space)},
                  {"alpha", T.space.points[T.alpha]},
                  {"alpha_isolated", T.alpha_isolated},
                  {"base_dense", T.base_dense},
                  {"hausdorff", is_hausdorff(T)}});
        } else if (*circle) {
            emit(scenario_circle());
        } else if (*scenario) {
            auto report = run_scenario(scenario_name, parallel);
            emit(report);
            if (!emit_only) {
                std::ifstream in(golden_dir + "/" + scenario_name + ".json");
                if (!in) {
                    std::cerr << "golden file missing for " << scenario_name << "\n";
                    return 1;
                }
                json golden = json::parse(in);
                if (golden != report) {
                    std::cerr << "report differs from golden for " << scenario_name << "\n";
                    return 1;
                }
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
