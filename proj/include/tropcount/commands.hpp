#ifndef TROPCOUNT_COMMANDS_HPP
#define TROPCOUNT_COMMANDS_HPP

#include <iosfwd>
#include <string>

namespace tropcount {

// Options shared by the CLI subcommands; paths are resolved as given.
struct CommandOptions {
    std::string polygon_path;
    int delta = 0;
    std::string config_path;   // optional; default stretched configuration
    std::string curves_path;   // enumerate/count/verify: ingest instead of enumerating
    std::string output_path;   // empty or "-": stdout
    std::string cache_dir;     // empty: TROPCOUNT_CACHE_DIR or disabled
    std::string engine = "auto";  // auto | lattice | brute
    int jobs = 1;
    long long budget = 2'000'000;
    std::string format = "json";  // count: json | csv
    std::string outdir = ".";     // render target directory
    std::string input_path;       // zeta input
    std::string variant = "chi_y";  // zeta: chi_y | euler
    bool no_inset = false;          // render
};

int cmd_stats(const CommandOptions& opt, std::ostream& out, std::ostream& log);
int cmd_enumerate(const CommandOptions& opt, std::ostream& out, std::ostream& log);
int cmd_count(const CommandOptions& opt, std::ostream& out, std::ostream& log);
int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& log);
int cmd_zeta(const CommandOptions& opt, std::ostream& out, std::ostream& log);
int cmd_render(const CommandOptions& opt, std::ostream& out, std::ostream& log);

// Maps an exception to the documented exit codes and prints a JSON error
// object to `out`.
int handle_command_error(std::ostream& out);

} // namespace tropcount

#endif
