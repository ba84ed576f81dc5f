#include "tropcount/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropcount/cache.hpp"
#include "tropcount/svg.hpp"
#include "tropcount/verify.hpp"
#include "tropcount/zeta.hpp"

namespace tropcount {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in " + path + ": " + e.what());
    }
}

LatticePolygon load_polygon(const std::string& path) {
    if (path.empty()) throw ValidationError("a --polygon file is required");
    return LatticePolygon::from_json(read_json_file(path));
}

Engine parse_engine(const std::string& s) {
    if (s == "auto") return Engine::automatic;
    if (s == "lattice") return Engine::lattice_path;
    if (s == "brute") return Engine::brute_force;
    throw ValidationError("engine must be auto, lattice, or brute");
}

void write_output(const CommandOptions& opt, std::ostream& fallback, const std::string& text) {
    if (opt.output_path.empty() || opt.output_path == "-") {
        fallback << text;
        return;
    }
    std::ofstream out(opt.output_path);
    if (!out) throw ValidationError("cannot write to " + opt.output_path);
    out << text;
}

EnumerationResult obtain_curves(const CommandOptions& opt, std::ostream& log) {
    LatticePolygon polygon = load_polygon(opt.polygon_path);

    if (!opt.curves_path.empty()) {
        Json cj = read_json_file(opt.curves_path);
        std::vector<Json> curve_jsons;
        if (cj.is_array())
            for (const auto& c : cj) curve_jsons.push_back(c);
        else if (cj.contains("curves"))
            for (const auto& c : cj["curves"]) curve_jsons.push_back(c);
        else
            curve_jsons.push_back(cj);
        return ingest_curves(polygon, opt.delta, curve_jsons);
    }

    PointConfiguration config = opt.config_path.empty()
                                    ? default_configuration(polygon, opt.delta)
                                    : PointConfiguration::from_json(read_json_file(opt.config_path));
    if (config.mode == PointConfiguration::Mode::stretched && config.count == 0) {
        PolygonStats st = polygon_stats(polygon);
        config.count = (int)(st.total_points - 1 - opt.delta);
    }

    EnumerateOptions eopt;
    eopt.engine = parse_engine(opt.engine);
    eopt.jobs = opt.jobs;
    eopt.budget = opt.budget;

    std::string cache_dir = !opt.cache_dir.empty() ? opt.cache_dir : cache_dir_from_env();
    ResultCache cache(cache_dir);
    std::string key;
    if (cache.enabled()) {
        key = cache.key(polygon, opt.delta, config, eopt.engine);
        if (auto hit = cache.load(key)) {
            log << "cache hit " << key << "\n";
            return std::move(*hit);
        }
        log << "cache miss " << key << "\n";
    }
    EnumerationResult result = enumerate_curves(polygon, opt.delta, config, eopt);
    if (cache.enabled()) cache.store(key, result);
    return result;
}

} // namespace

int cmd_stats(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    LatticePolygon polygon = load_polygon(opt.polygon_path);
    PolygonStats st = polygon_stats(polygon);
    Json j = polygon_stats_json(st);
    Json dirs = Json::array();
    for (const auto& [d, m] : degree_directions(polygon)) dirs.push_back({d.x, d.y, m});
    j["degree_directions"] = dirs;
    write_output(opt, out, j.dump(1) + "\n");
    return 0;
}

int cmd_enumerate(const CommandOptions& opt, std::ostream& out, std::ostream& log) {
    EnumerationResult result = obtain_curves(opt, log);
    write_output(opt, out, result.to_json().dump(1) + "\n");
    return 0;
}

int cmd_count(const CommandOptions& opt, std::ostream& out, std::ostream& log) {
    EnumerationResult result = obtain_curves(opt, log);
    SeveriTotals totals = severi(result, opt.jobs);
    if (opt.format == "csv") {
        std::ostringstream csv;
        csv << "curve,classical,refined,welschinger\n";
        for (std::size_t i = 0; i < totals.per_curve.size(); ++i) {
            const auto& r = totals.per_curve[i];
            csv << "k" << hex64(fnv1a(result.curves[i].canonical_key())).substr(8) << ","
                << r.classical.get_str() << "," << r.refined.to_json()["half_exps"].dump() << ","
                << r.welschinger.get_str() << "\n";
        }
        csv << "total," << totals.classical_total.get_str() << ","
            << totals.refined_total.to_json()["half_exps"].dump() << ","
            << totals.welschinger_total.get_str() << "\n";
        write_output(opt, out, csv.str());
        return 0;
    }
    if (opt.format != "json") throw ValidationError("format must be json or csv");
    Json j = totals.to_json();
    Json keys = Json::array();
    for (const auto& c : result.curves)
        keys.push_back("k" + hex64(fnv1a(c.canonical_key())).substr(8));
    j["curve_keys"] = keys;
    write_output(opt, out, j.dump(1) + "\n");
    return 0;
}

int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& log) {
    EnumerationResult result = obtain_curves(opt, log);
    PolygonStats st = polygon_stats(result.polygon);
    Json per = Json::array();
    bool all_equal = true;
    for (const auto& curve : result.curves) {
        ConjectureReport rep = conjecture_check(curve, st.interior_points, result.delta);
        Json cj = rep.to_json();
        cj["curve_key"] = "k" + hex64(fnv1a(curve.canonical_key())).substr(8);
        per.push_back(cj);
        all_equal = all_equal && rep.equal;
    }
    Json j;
    j["delta"] = result.delta;
    j["genus_counted"] = result.genus;
    j["curve_count"] = result.curves.size();
    j["all_equal"] = all_equal;
    j["reports"] = per;
    write_output(opt, out, j.dump(1) + "\n");
    if (!all_equal) throw InternalError("refined multiplicity mismatch in verification");
    return 0;
}

int cmd_zeta(const CommandOptions& opt, std::ostream& out, std::ostream&) {
    if (opt.input_path.empty()) throw ValidationError("zeta needs an --input file");
    ZetaInput input = ZetaInput::from_json(read_json_file(opt.input_path));
    ZetaVariant variant;
    if (opt.variant == "chi_y") variant = ZetaVariant::chi_y;
    else if (opt.variant == "euler") variant = ZetaVariant::euler;
    else throw ValidationError("variant must be chi_y or euler");
    ZetaCoefficients coeffs = invert_series(input, variant);
    Json j = coeffs.to_json();
    // trim to the genus window for the functional-equation report
    std::vector<HalfLaurent> head(coeffs.N.begin(),
                                  coeffs.N.begin() + std::min<std::size_t>(coeffs.N.size(),
                                                                           (std::size_t)input.g + 1));
    auto fe = functional_equation_check(head, input.g);
    j["functional_equation"] = fe.holds;
    write_output(opt, out, j.dump(1) + "\n");
    return 0;
}

int cmd_render(const CommandOptions& opt, std::ostream& out, std::ostream& log) {
    EnumerationResult result = obtain_curves(opt, log);
    RenderOptions ropt;
    ropt.newton_inset = !opt.no_inset;
    std::filesystem::create_directories(opt.outdir);
    Json files = Json::array();
    for (std::size_t i = 0; i < result.curves.size(); ++i) {
        const auto& curve = result.curves[i];
        std::ostringstream name;
        name << "curve_" << std::setw(3) << std::setfill('0') << i << "_"
             << hex64(fnv1a(curve.canonical_key())).substr(8) << ".svg";
        std::filesystem::path p = std::filesystem::path(opt.outdir) / name.str();
        std::ofstream f(p);
        if (!f) throw ValidationError("cannot write " + p.string());
        f << render_svg(curve, ropt);
        files.push_back(p.string());
    }
    Json j;
    j["rendered"] = files;
    write_output(opt, out, j.dump(1) + "\n");
    return 0;
}

int handle_command_error(std::ostream& out) {
    try {
        throw;
    } catch (const PolygonError& e) {
        out << e.to_json().dump(1) << "\n";
        return ValidationError::exit_code;
    } catch (const ValidationError& e) {
        out << Json{{"error", e.what()}}.dump(1) << "\n";
        return ValidationError::exit_code;
    } catch (const GenericityError& e) {
        out << Json{{"error", e.what()}}.dump(1) << "\n";
        return GenericityError::exit_code;
    } catch (const ResourceError& e) {
        out << Json{{"error", e.what()}}.dump(1) << "\n";
        return ResourceError::exit_code;
    } catch (const InternalError& e) {
        out << Json{{"error", e.what()}}.dump(1) << "\n";
        return InternalError::exit_code;
    } catch (const std::exception& e) {
        out << Json{{"error", e.what()}}.dump(1) << "\n";
        return InternalError::exit_code;
    }
}

} // namespace tropcount
