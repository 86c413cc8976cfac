// hyperflux command line front end: JSON jobs, verification suites and
// transform sampling for plots and regression baselines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperflux/jobs.hpp"

using namespace hyperflux;

namespace {

QuadConfig config_from_env() {
    QuadConfig cfg;
    if (const char* tol = std::getenv("HYPERFLUX_QUAD_TOL")) {
        try {
            cfg.abs_tol = std::stod(tol);
        } catch (...) {
            std::cerr << "warning: ignoring bad HYPERFLUX_QUAD_TOL\n";
        }
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperfunction transform calculator"};
    app.require_subcommand(1);

    std::string job_path;
    auto* run = app.add_subcommand("run", "execute a JSON job file");
    run->add_option("job", job_path, "job JSON file")->required();

    std::string suite = "all";
    std::string verify_json;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "all|shift|conv|germ|compare");
    verify->add_option("--json", verify_json, "write the report as JSON");

    std::string object_expr, transform = "fourier", grid_str = "re:-10:10:41", out_csv;
    auto* sample = app.add_subcommand("sample", "sample a transform on a grid");
    sample->add_option("--object", object_expr, "object expression")->required();
    sample->add_option("--transform", transform, "fourier|laplace");
    sample->add_option("--grid", grid_str, "re:a:b:n[,im:a:b:n]");
    sample->add_option("--out", out_csv, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    const QuadConfig env_cfg = config_from_env();

    if (*run) {
        std::ifstream is(job_path);
        if (!is) {
            std::cerr << "error: cannot open " << job_path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        ParseOutcome out = parse_job(buf.str());
        if (!out.spec) {
            for (const auto& d : out.diags)
                std::cerr << "error at byte " << d.pos << ": " << d.message << "\n";
            return 2;
        }
        JobSpec spec = *out.spec;
        if (std::getenv("HYPERFLUX_QUAD_TOL")) spec.quad.abs_tol = env_cfg.abs_tol;
        return run_job(spec, std::cout);
    }

    if (*verify) {
        JobSpec spec;
        spec.command = "verify";
        spec.suite = suite;
        spec.out_json = verify_json;
        spec.quad = env_cfg;
        spec.grid.re_n = 1;
        return run_job(spec, std::cout);
    }

    if (*sample) {
        JobSpec spec;
        spec.command = transform == "laplace" ? "laplace" : "fourier";
        spec.object_exprs["obj"] = object_expr;
        spec.target = "obj";
        spec.out_csv = out_csv;
        spec.quad = env_cfg;
        auto g = parse_grid_string(grid_str);
        if (!g) {
            std::cerr << "error: bad grid string\n";
            return 2;
        }
        spec.grid = *g;
        return run_job(spec, std::cout);
    }
    return 0;
}
