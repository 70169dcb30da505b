// Command-line surface for planar cell complexes: analysis, nerves, Betti
// numbers, descriptive proximity, structure checks, generation and SVG
// rendering.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnerve/vnerve.hpp"

namespace fs = std::filesystem;
using namespace vnerve;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("VORTEX_NERVE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

CellComplex cycle_subcomplex(const CellComplex& E, const FilledCycle& c) {
    CellSet cells;
    const std::size_t n = c.boundary.size();
    for (int id : c.boundary) cells.vertices.insert(id);
    if (n >= 2) {
        const std::size_t steps = (n == 2) ? 1 : n;
        for (std::size_t i = 0; i < steps; ++i)
            cells.edges.insert(Edge(c.boundary[i], c.boundary[(i + 1) % n]));
    }
    return closure(E, cells);
}

void print_report_section(const std::string& section, const ConditionReport& report) {
    for (const ReportEntry& e : report.entries) {
        std::cout << "[" << section << "] " << e.claim << " = "
                  << (e.ok ? "pass" : "FAIL");
        if (!e.witness.empty()) std::cout << " (" << e.witness << ")";
        std::cout << "\n";
    }
}

std::string describe_collection(const Collection& c, const Probe& probe, double eps) {
    // Distinct descriptions, in order of first appearance.
    std::vector<FeatureVector> seen;
    for (const CellComplex& x : c) {
        FeatureVector v = probe(x);
        bool dup = false;
        for (const FeatureVector& s : seen)
            if (v.matches(s, eps)) dup = true;
        if (!dup) seen.push_back(std::move(v));
    }
    if (seen.size() == 1) return seen.front().str();
    std::string out = "{";
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i) out += ",";
        out += seen[i].str();
    }
    return out + "}";
}

int cmd_analyze(const std::string& input) {
    const CellComplex E = parse_complex(input);
    const BettiReport betti = betti_numbers(E);
    const VortexNerveCertificate cert = is_vortex_nerve(E);
    std::cout << "command = analyze\n"
              << "input = " << input << "\n"
              << "vertices = " << E.vertices().size() << "\n"
              << "edges = " << E.edges().size() << "\n"
              << "triangles = " << E.triangles().size() << "\n"
              << "declared_cycles = " << E.declared_cycles().size() << "\n"
              << "attached_edges = " << E.attached_edges().size() << "\n"
              << "components = " << connected_components(E) << "\n"
              << "b0 = " << betti.b0 << "\n"
              << "b1 = " << betti.b1 << "\n"
              << "b2 = " << betti.b2 << "\n"
              << "vortex_nerve = " << bool_str(cert.is_nerve) << "\n"
              << "vortex_nerve_case = " << (cert.is_nerve ? to_string(cert.kind) : "-")
              << "\n"
              << "detail = " << cert.detail << "\n";
    return 0;
}

int cmd_nerve(const std::string& input, bool vortex) {
    const CellComplex E = parse_complex(input);
    std::cout << "command = nerve\n"
              << "input = " << input << "\n";
    std::vector<FilledCycle> members = member_cycles(E);
    if (members.empty()) members = find_cycles(E);
    if (vortex) {
        const VortexNerve nerve = vortex_nerve_of(E);
        std::cout << "vortex_nerve = valid\n"
                  << "cycles = " << nerve.cycles.size() << "\n";
        for (std::size_t i = 0; i < nerve.cycles.size(); ++i) {
            std::cout << "chain[" << i << "] = [";
            const auto& b = nerve.cycles[i].boundary;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (j) std::cout << ",";
                std::cout << b[j];
            }
            std::cout << "]\n";
        }
        std::cout << "attached_edges = " << nerve.attached_edges.size() << "\n"
                  << "holes = " << nerve.holes.size() << "\n";
        return 0;
    }
    const Nerve nerve = eh_nerve(members, E);
    std::cout << "members = " << nerve.family_size << "\n"
              << "simplices = " << nerve.simplices.size() << "\n";
    for (std::size_t i = 0; i < nerve.simplices.size(); ++i) {
        std::cout << "simplex[" << i << "] = {";
        for (std::size_t j = 0; j < nerve.simplices[i].size(); ++j) {
            if (j) std::cout << ",";
            std::cout << nerve.simplices[i][j];
        }
        std::cout << "}\n";
    }
    return 0;
}

int cmd_betti(const std::string& input, const std::string& as) {
    const CellComplex E = parse_complex(input);
    std::cout << "command = betti\n"
              << "input = " << input << "\n"
              << "as = " << (as.empty() ? "complex" : as) << "\n";
    BettiReport r;
    std::string decomposition;
    if (as.empty()) {
        r = betti_numbers(E);
    } else if (as == "vortex") {
        std::vector<FilledCycle> members = member_cycles(E);
        if (members.empty()) members = find_cycles(E);
        r = betti_numbers(build_vortex(members, E));
    } else if (as == "vnrv") {
        r = betti_numbers(vortex_nerve_of(E));
    } else if (as == "shape") {
        const Shape shape = extract_shape(E);
        try {
            const VortexNerve backing = vortex_nerve_of(E);
            r = betti_numbers(shape, backing);
            decomposition = std::to_string(r.b0) + "+" + std::to_string(r.b1) + "+" +
                            std::to_string(r.b2);
        } catch (const Error&) {
            r = betti_numbers(shape);
            decomposition = "1+" + std::to_string(r.b2);
        }
    } else {
        throw DomainError("unknown --as value '" + as + "' (shape, vortex, vnrv)");
    }
    std::cout << "b0 = " << r.b0 << "\n"
              << "b1 = " << r.b1 << "\n"
              << "b2 = " << r.b2 << "\n";
    if (r.b_vtex) std::cout << "b_vtex = " << *r.b_vtex << "\n";
    if (r.b_vnrv) std::cout << "b_vnrv = " << *r.b_vnrv << "\n";
    if (r.b_sh) {
        std::cout << "b_sh = " << *r.b_sh << "\n";
        std::cout << "b_sh_decomposition = " << decomposition << "\n";
    }
    return 0;
}

int cmd_near(const std::string& input_a, const std::string& input_b,
             const std::string& probe_name, double eps) {
    const Probe& probe = probe_by_name(probe_name);
    const Collection A = {parse_complex(input_a)};
    const Collection B = {parse_complex(input_b)};
    const DescriptiveIntersection di = descriptive_intersection(A, B, probe, eps);
    std::cout << "command = near\n"
              << "probe = " << probe.name() << "\n"
              << "phi(A) = " << describe_collection(A, probe, eps) << "\n"
              << "phi(B) = " << describe_collection(B, probe, eps) << "\n"
              << "descriptive_intersection = " << di.matched.size() << " of "
              << di.elements.size() << "\n"
              << "dnear = " << bool_str(!di.empty()) << "\n";
    return 0;
}

std::vector<CellComplex> cw_collection_from_file(const CellComplex& E) {
    // Closure completion of the declared-cycle sub-complexes: the whole
    // complex, each cycle closure, and their nonempty pairwise intersections.
    std::vector<CellComplex> K;
    K.push_back(E);
    std::vector<CellComplex> closures;
    for (const FilledCycle& c : E.declared_cycles())
        closures.push_back(cycle_subcomplex(E, c));
    for (const CellComplex& c : closures) K.push_back(c);
    for (std::size_t i = 0; i < closures.size(); ++i)
        for (std::size_t j = i + 1; j < closures.size(); ++j) {
            const CellComplex common = complex_intersection(closures[i], closures[j]);
            if (common.empty()) continue;
            bool dup = false;
            for (const CellComplex& m : K)
                if (m.same_cells(common)) dup = true;
            if (!dup) K.push_back(common);
        }
    return K;
}

int cmd_check(const std::string& input, bool axioms, bool cw, int trials,
              std::uint64_t seed, const std::string& probe_name, double eps) {
    bool pass = true;
    std::cout << "command = check\n";
    if (!axioms && !cw) {
        std::cerr << "error: nothing to check (use --axioms and/or --cw)\n";
        return 2;
    }

    std::vector<CellComplex> members;
    std::string universe_desc;
    if (input.empty()) {
        members = generate_axiom_universe(seed, 50);
        universe_desc = "generated(50)";
    } else if (fs::is_directory(input)) {
        std::vector<fs::path> paths;
        for (const auto& entry : fs::directory_iterator(input))
            if (entry.path().extension() == ".cx") paths.push_back(entry.path());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) members.push_back(parse_complex(p.string()));
        universe_desc = "dir(" + std::to_string(members.size()) + ")";
    } else {
        members.push_back(parse_complex(input));
        universe_desc = "file(1)";
    }
    std::cout << "universe = " << universe_desc << "\n"
              << "seed = " << seed << "\n";

    if (axioms) {
        std::cout << "trials = " << trials << "\n";
        std::vector<const Probe*> probes;
        if (probe_name.empty())
            for (const Probe& p : builtin_probes()) probes.push_back(&p);
        else
            probes.push_back(&probe_by_name(probe_name));
        for (const Probe* p : probes) {
            const AxiomReport report =
                check_axioms({members, *p, eps}, trials, seed);
            print_report_section("axioms:" + p->name(), report);
            pass = pass && report.pass();
        }
    }

    if (cw) {
        std::vector<CellComplex> K = members;
        if (!input.empty() && !fs::is_directory(input))
            K = cw_collection_from_file(members.front());
        std::cout << "cw_members = " << K.size() << "\n";
        const ConditionReport membership = check_cw_conditions(K);
        print_report_section("cw-membership", membership);
        pass = pass && membership.pass();
        const Probe* probe = probe_name.empty() ? nullptr : &probe_by_name(probe_name);
        const ConditionReport nerve_report = cw_from_collection(K, probe, eps);
        print_report_section(probe ? "cw-nerve-descriptive" : "cw-nerve", nerve_report);
        pass = pass && nerve_report.pass();
    }

    std::cout << "pass = " << bool_str(pass) << "\n";
    return pass ? 0 : 1;
}

int cmd_gen(const std::string& kind_name, int size, std::uint64_t seed,
            const std::string& output) {
    const GenKind kind = gen_kind_from_name(kind_name);
    std::cout << "command = gen\n"
              << "kind = " << kind_name << "\n"
              << "size = " << size << "\n"
              << "seed = " << seed << "\n";
    switch (kind) {
        case GenKind::RandomPlanar:
            write_complex(generate_random_planar(seed, size), output);
            break;
        case GenKind::NestedCycles:
            write_complex(generate_nested_cycles(seed, size), output);
            break;
        case GenKind::DiskFamily:
            write_disks(generate_disk_family(seed, size), output);
            break;
    }
    std::cout << "written = " << output << "\n";
    return 0;
}

int cmd_render(const std::string& input, const std::string& output, bool labels) {
    const CellComplex E = parse_complex(input);
    RenderOptions options;
    options.label_vertices = labels;
    std::ofstream out(output, std::ios::binary);
    if (!out) throw Error("cannot write " + output);
    out << render_svg(E, options);
    std::cout << "command = render\n"
              << "input = " << input << "\n"
              << "written = " << output << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar cell complexes: vortex nerves, Betti numbers and "
                 "descriptive proximity"};
    app.require_subcommand(1);

    std::string input, input_b, output, probe_name, as_mode, kind;
    double eps = kDefaultTolerance;
    int trials = 100;
    int size = 5;
    std::uint64_t seed = default_seed();
    bool vortex = false, axioms = false, cw = false, labels = false;

    auto* analyze = app.add_subcommand("analyze", "structural summary of a complex");
    analyze->add_option("file", input)->required();

    auto* nerve = app.add_subcommand("nerve", "Edelsbrunner-Harer or vortex nerve");
    nerve->add_option("file", input)->required();
    nerve->add_flag("--vortex", vortex, "build the declared vortex nerve");

    auto* betti = app.add_subcommand("betti", "Betti numbers");
    betti->add_option("file", input)->required();
    betti->add_option("--as", as_mode, "shape|vortex|vnrv");

    auto* near = app.add_subcommand("near", "descriptive nearness of two complexes");
    near->add_option("fileA", input)->required();
    near->add_option("fileB", input_b)->required();
    near->add_option("--probe", probe_name)->required();
    near->add_option("--eps", eps, "feature comparison tolerance");

    auto* check = app.add_subcommand("check", "axiom and CW-condition checks");
    check->add_option("path", input, "complex file or directory of members");
    check->add_flag("--axioms", axioms, "descriptive proximity axioms dP0-dP3");
    check->add_flag("--cw", cw, "CW containment/intersection conditions");
    check->add_option("--trials", trials);
    check->add_option("--seed", seed);
    check->add_option("--probe", probe_name, "restrict to one probe");
    check->add_option("--eps", eps);

    auto* gen = app.add_subcommand("gen", "seeded instance generation");
    gen->add_option("--kind", kind)->required();
    gen->add_option("--size", size)->required();
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", output)->required();

    auto* render = app.add_subcommand("render", "SVG drawing");
    render->add_option("file", input)->required();
    render->add_option("-o,--output", output)->required();
    render->add_flag("--labels", labels, "draw vertex ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(input);
        if (app.got_subcommand(nerve)) return cmd_nerve(input, vortex);
        if (app.got_subcommand(betti)) return cmd_betti(input, as_mode);
        if (app.got_subcommand(near)) return cmd_near(input, input_b, probe_name, eps);
        if (app.got_subcommand(check))
            return cmd_check(input, axioms, cw, trials, seed, probe_name, eps);
        if (app.got_subcommand(gen)) return cmd_gen(kind, size, seed, output);
        if (app.got_subcommand(render)) return cmd_render(input, output, labels);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
