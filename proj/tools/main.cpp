#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuspidal/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
    std::string surface;
    std::string output;
    std::string format;
    cusp::RunOptions run;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format, const std::vector<std::string>& formats) {
    auto& a = c.run.analysis;
    c.format = default_format;
    sub->add_option("surface", c.surface, "surface file")->required();
    sub->add_option("--order", a.order, "jet order")->check(CLI::Range(3, 12))->capture_default_str();
    sub->add_option("--grid", a.grid, "grid resolution")->check(CLI::Range(4, 4096))->capture_default_str();
    sub->add_option("--step", a.step, "tracing step (0: diameter / 200)")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", c.run.samples, "invariant samples per curve")->check(CLI::Range(2, 100000))
        ->capture_default_str();
    sub->add_option("--seed", c.run.seed, "seed recorded in reports")->capture_default_str();
    sub->add_option("--output", c.output, "output directory (default: stdout)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_flag("!--serial", a.parallel, "disable OpenMP kernels");
    auto& t = a.tol;
    const std::pair<const char*, double*> tols[] = {
        {"reg", &t.reg},     {"sing", &t.sing},   {"crit", &t.crit}, {"axis", &t.axis},   {"bound", &t.bound},
        {"cusp", &t.cusp},   {"mu", &t.mu},       {"K", &t.K},       {"frame", &t.frame}, {"id", &t.id},
        {"point", &t.point}, {"zero", &t.zero},   {"limit", &t.limit}};
    for (auto [name, ptr] : tols)
        sub->add_option(std::string("--tol-") + name, *ptr, std::string("tolerance ") + name)
            ->check(CLI::PositiveNumber)
            ->capture_default_str()
            ->group("Tolerances");
}

std::string pick(const cusp::CommandOutput& out, const std::string& ext) {
    for (const auto& [name, content] : out.files)
        if (name.size() >= ext.size() && name.compare(name.size() - ext.size(), ext.size(), ext) == 0) return content;
    return {};
}

int emit(const cusp::CommandOutput& out, const Common& c) {
    if (c.output.empty()) {
        if (c.format == "obj") {
            for (const auto& [name, content] : out.files) std::cout << "# " << name << "\n" << content;
        } else {
            std::cout << pick(out, "." + c.format);
        }
    } else {
        fs::create_directories(c.output);
        for (const auto& [name, content] : out.files) {
            const fs::path path = fs::path(c.output) / name;
            std::ofstream f(path, std::ios::binary);
            f << content;
            if (!f) {
                std::cerr << "error: cannot write " << path.string() << "\n";
                return cusp::kExitInputError;
            }
            std::cerr << "wrote " << path.string() << "\n";
        }
    }
    if (!out.message.empty()) std::cerr << out.message << "\n";
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cuspidal edges of fronts: invariants, Gauss-map singularities and their checks"};
    app.set_version_flag("--version", cusp::kVersion);
    app.require_subcommand(1);

    Common analyze, classify, verify, mesh;
    add_common(app.add_subcommand("analyze", "trace singular curves and sample the edge invariants"), analyze, "csv",
               {"csv", "json"});
    add_common(app.add_subcommand("classify", "classify the Gauss map along each cuspidal edge"), classify, "json",
               {"json"});
    add_common(app.add_subcommand("verify", "run every identity and theorem check"), verify, "json", {"json"});
    add_common(app.add_subcommand("mesh", "export OBJ meshes of f and nu with the singular loci"), mesh, "obj", {"obj"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cusp::kExitInputError;
    }

    const std::pair<CLI::App*, Common*> commands[] = {{app.get_subcommand("analyze"), &analyze},
                                                       {app.get_subcommand("classify"), &classify},
                                                       {app.get_subcommand("verify"), &verify},
                                                       {app.get_subcommand("mesh"), &mesh}};
    for (auto [sub, c] : commands) {
        if (!sub->parsed()) continue;
        try {
            const cusp::SurfaceDefinition s = cusp::load_surface_file(c->surface);
            cusp::CommandOutput out;
            const std::string name = sub->get_name();
            if (name == "analyze") out = cusp::run_analyze(s, c->run);
            else if (name == "classify") out = cusp::run_classify(s, c->run);
            else if (name == "verify") out = cusp::run_verify(s, c->run);
            else out = cusp::run_mesh(s, c->run);
            return emit(out, *c);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return cusp::kExitInputError;
        }
    }
    return cusp::kExitInputError;
}
