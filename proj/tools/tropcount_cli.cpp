#include <CLI11.hpp>

#include <iostream>

#include "tropcount/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and refined counting of plane tropical curves"};
    app.require_subcommand(1);

    tropcount::CommandOptions opt;

    auto add_common = [&](CLI::App* sub, bool needs_polygon) {
        if (needs_polygon)
            sub->add_option("--polygon", opt.polygon_path, "polygon JSON file")->required();
        sub->add_option("--output,-o", opt.output_path, "output file (default stdout)");
        return sub;
    };
    auto add_enum_opts = [&](CLI::App* sub) {
        sub->add_option("--delta", opt.delta, "number of nodes (cogenus)");
        sub->add_option("--config", opt.config_path, "point configuration JSON");
        sub->add_option("--curves", opt.curves_path, "ingest curves from JSON instead");
        sub->add_option("--engine", opt.engine, "auto | lattice | brute");
        sub->add_option("--jobs", opt.jobs, "worker threads");
        sub->add_option("--budget", opt.budget, "subdivision budget");
        sub->add_option("--cache-dir", opt.cache_dir, "result cache directory");
    };

    auto* stats = add_common(app.add_subcommand("stats", "lattice point counts of a polygon"), true);
    (void)stats;

    auto* enumerate =
        add_common(app.add_subcommand("enumerate", "enumerate tropical curves"), true);
    add_enum_opts(enumerate);

    auto* count = add_common(app.add_subcommand("count", "refined and classical counts"), true);
    add_enum_opts(count);
    count->add_option("--format", opt.format, "json | csv");

    auto* verify = add_common(
        app.add_subcommand("verify", "check the refined multiplicity interpretation"), true);
    add_enum_opts(verify);

    auto* zeta = app.add_subcommand("zeta", "extract refined coefficients from a zeta series");
    zeta->add_option("--input", opt.input_path, "zeta input JSON")->required();
    zeta->add_option("--variant", opt.variant, "chi_y | euler");
    zeta->add_option("--output,-o", opt.output_path, "output file (default stdout)");

    auto* render = add_common(app.add_subcommand("render", "render curves to SVG"), true);
    add_enum_opts(render);
    render->add_option("--outdir", opt.outdir, "directory for SVG files");
    render->add_flag("--no-inset", opt.no_inset, "omit the Newton subdivision inset");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("stats")) return tropcount::cmd_stats(opt, std::cout, std::cerr);
        if (app.got_subcommand("enumerate"))
            return tropcount::cmd_enumerate(opt, std::cout, std::cerr);
        if (app.got_subcommand("count")) return tropcount::cmd_count(opt, std::cout, std::cerr);
        if (app.got_subcommand("verify")) return tropcount::cmd_verify(opt, std::cout, std::cerr);
        if (app.got_subcommand("zeta")) return tropcount::cmd_zeta(opt, std::cout, std::cerr);
        if (app.got_subcommand("render")) return tropcount::cmd_render(opt, std::cout, std::cerr);
    } catch (...) {
        return tropcount::handle_command_error(std::cerr);
    }
    return 0;
}
