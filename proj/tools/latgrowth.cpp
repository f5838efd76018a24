#include "latgrowth/errors.hpp"
#include "latgrowth/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace latgrowth;
using namespace latgrowth::report;

namespace {

nlohmann::json read_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path));
    try {
        return nlohmann::json::parse(in);
    } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::InvalidArgument, fmt::format("'{}' is not valid JSON: {}", path, e.what()));
    }
}

// Config file: {"precision": .., "prime_bound": .., "threads": .., "format": ..,
// "bound_params": {..}}.  Command-line flags take precedence.
void apply_config(RunConfig& cfg, nlohmann::json const& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::InvalidArgument, "config must be a JSON object");
    for (auto const& [key, value] : j.items()) {
        if (key == "bound_params")
            cfg.params = counting::bound_params_from_json(value, cfg.params);
        else if (key == "precision" && value.is_number_unsigned())
            cfg.precision = value.get<Precision>();
        else if (key == "prime_bound" && value.is_number_unsigned())
            cfg.prime_bound = value.get<unsigned long>();
        else if (key == "threads" && value.is_number_unsigned())
            cfg.threads = value.get<int>();
        else if (key == "format" && value.is_string())
            cfg.format = parse_format(value.get<std::string>());
        else
            throw Error(ErrorKind::InvalidArgument, fmt::format("bad config entry '{}'", key));
    }
}

template <class T>
std::optional<T> if_set(CLI::Option* opt, T const& value)
{
    return opt->count() > 0 ? std::optional<T>(value) : std::nullopt;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified number-field, covolume and lattice-growth calculations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.set_version_flag("--version", kToolVersion);

    Precision prec = 128;
    unsigned long prime_bound = 100000;
    std::string format = "table";
    std::string config_path, catalog_path, output_path;
    int threads = 1;
    auto* prec_opt = app.add_option("--prec", prec, "working precision in bits (>= 64)");
    auto* pb_opt = app.add_option("--prime-bound", prime_bound, "Euler products run over p <= N (>= 100)");
    auto* fmt_opt = app.add_option("--format", format, "table, json or csv")
                        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--catalog", catalog_path, "JSON tower catalog replacing the built-in one")
        ->check(CLI::ExistingFile);
    auto* thr_opt = app.add_option("--threads", threads, "worker threads for Euler products");
    app.add_option("--output", output_path, "write the report to this file instead of stdout");

    // field
    FieldArgs field_args;
    std::string field_kd;
    auto* field_cmd = app.add_subcommand("field", "signature, discriminant and embeddings of Q[x]/(f)");
    field_cmd->add_option("--poly", field_args.poly, "monic irreducible polynomial, e.g. \"x^2-5\"")->required();
    auto* field_kd_opt = field_cmd->add_option("--known-disc", field_kd, "field discriminant, if known");

    // pisot
    PisotArgs pisot_args;
    std::string pisot_kd;
    int pisot_t = 0;
    auto* pisot_cmd = app.add_subcommand("pisot", "certified Pisot element and the quadratic extension it gives");
    pisot_cmd->add_option("--poly", pisot_args.poly, "defining polynomial of a totally real field")->required();
    auto* pisot_kd_opt = pisot_cmd->add_option("--known-disc", pisot_kd, "field discriminant, if known");
    pisot_cmd->add_option("--place", pisot_args.place, "dominant real place (0-based)");
    pisot_cmd->add_option("--radius", pisot_args.radius, "coordinate search radius");
    auto* pisot_t_opt = pisot_cmd->add_option("--t", pisot_t, "number of real places of k that become complex in l");

    // tower
    TowerArgs tower_args;
    std::string tower_name;
    int tower_t = 0;
    auto* tower_cmd = app.add_subcommand("tower", "class field tower catalog and level fields");
    auto* tower_name_opt = tower_cmd->add_option("--name", tower_name, "tower to expand");
    tower_cmd->add_option("--levels", tower_args.levels, "number of levels");
    auto* tower_t_opt = tower_cmd->add_option("--t", tower_t, "fixed-signature extensions with t complex places");

    // covolume
    CovolumeArgs cov_args;
    std::string cov_field, cov_poly, cov_kd, cov_tower, cov_alpha, cov_c0p;
    unsigned long cov_p0 = 2;
    int cov_s = 0, cov_t = 0;
    auto* cov_cmd = app.add_subcommand("covolume", "covolume of a principal arithmetic subgroup");
    auto* cov_field_opt = cov_cmd->add_option("--field", cov_field, "Q for the rational field")
                              ->check(CLI::IsMember({"Q"}));
    auto* cov_poly_opt = cov_cmd->add_option("--poly", cov_poly, "defining polynomial of k");
    auto* cov_kd_opt = cov_cmd->add_option("--known-disc", cov_kd, "discriminant of k, if known");
    auto* cov_tower_opt = cov_cmd->add_option("--tower", cov_tower, "use a level of this tower");
    cov_cmd->add_option("--level", cov_args.level, "tower level");
    cov_cmd->add_option("--type", cov_args.type, "Lie type such as A1, C2, 2A3");
    auto* cov_s_opt = cov_cmd->add_option("--s", cov_s, "override of the s-parameter of an outer form");
    auto* cov_p0_opt = cov_cmd->add_option("--p0", cov_p0, "prime below the distinguished non-archimedean place");
    auto* cov_alpha_opt = cov_cmd->add_option("--alpha", cov_alpha, "l = k[sqrt(alpha)], integer coordinates a0,a1,..");
    auto* cov_t_opt = cov_cmd->add_option("--t", cov_t, "build alpha from t Pisot elements");
    cov_cmd->add_option("--radius", cov_args.radius, "Pisot search radius");
    auto* cov_c0p_opt = cov_cmd->add_option("--c0-prime", cov_c0p, "bound on D_{l/k}^(1/d) over a tower level");

    // growth
    auto* growth_cmd = app.add_subcommand("growth", "lattice growth bounds");
    growth_cmd->require_subcommand(1);
    GrowthLowerArgs low_args;
    std::string low_degrees, low_c0p;
    double low_c4 = 0;
    int low_s = 0;
    auto* low_cmd = growth_cmd->add_subcommand("lower", "lower growth constant a from a tower");
    low_cmd->add_option("--tower", low_args.tower, "tower name");
    low_cmd->add_option("--type", low_args.type, "Lie type");
    auto* low_s_opt = low_cmd->add_option("--s", low_s, "override of the s-parameter of an outer form");
    low_cmd->add_option("--pprime", low_args.p_prime, "prime p' for the congruence quotients");
    low_cmd->add_option("--p0", low_args.p0, "prime below the distinguished place");
    auto* low_c4_opt = low_cmd->add_option("--c4", low_c4, "conjugacy discount exponent (overrides the config)");
    low_cmd->add_option("--levels", low_args.levels, "number of tower levels");
    auto* low_deg_opt = low_cmd->add_option("--degrees", low_degrees, "explicit degrees, e.g. 20,40,80");
    low_cmd->add_flag("--rank-override", low_args.rank_override, "acknowledge a type of real rank below 2");
    auto* low_c0p_opt = low_cmd->add_option("--c0-prime", low_c0p, "bound on D_{l/k}^(1/d) for outer forms");

    GrowthUpperArgs up_args;
    std::string up_xs, up_residue;
    auto* up_cmd = growth_cmd->add_subcommand("upper", "conditional upper exponent B(x) over an x scan");
    auto* up_xs_opt = up_cmd->add_option("--x", up_xs, "comma-separated x values (default 10^2..10^6)");
    auto* up_res_opt = up_cmd->add_option("--residue", up_residue, "residue data p:f,... used at every x");

    // lie
    auto* lie_cmd = app.add_subcommand("lie", "root-system tables");
    lie_cmd->require_subcommand(1);
    int max_rank = 8;
    auto* dump_cmd = lie_cmd->add_subcommand("dump", "dimension, exponents, Coxeter number and gamma");
    dump_cmd->add_option("--max-rank", max_rank, "largest rank listed");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty())
            apply_config(cfg, read_json_file(config_path));
        if (!catalog_path.empty())
            cfg.towers = pisot::parse_tower_catalog(read_json_file(catalog_path));
        if (prec_opt->count())
            cfg.precision = prec;
        if (pb_opt->count())
            cfg.prime_bound = prime_bound;
        if (fmt_opt->count())
            cfg.format = parse_format(format);
        if (thr_opt->count())
            cfg.threads = threads;

        Report rep;
        if (field_cmd->parsed()) {
            field_args.known_disc = if_set(field_kd_opt, field_kd);
            rep = field_report(cfg, field_args);
        } else if (pisot_cmd->parsed()) {
            pisot_args.known_disc = if_set(pisot_kd_opt, pisot_kd);
            pisot_args.t = if_set(pisot_t_opt, pisot_t);
            rep = pisot_report(cfg, pisot_args);
        } else if (tower_cmd->parsed()) {
            tower_args.name = if_set(tower_name_opt, tower_name);
            tower_args.t = if_set(tower_t_opt, tower_t);
            rep = tower_report(cfg, tower_args);
        } else if (cov_cmd->parsed()) {
            cov_args.rational = cov_field_opt->count() > 0;
            cov_args.poly = if_set(cov_poly_opt, cov_poly);
            cov_args.known_disc = if_set(cov_kd_opt, cov_kd);
            cov_args.tower = if_set(cov_tower_opt, cov_tower);
            cov_args.s_override = if_set(cov_s_opt, cov_s);
            cov_args.p0 = if_set(cov_p0_opt, cov_p0);
            cov_args.alpha = if_set(cov_alpha_opt, cov_alpha);
            cov_args.t = if_set(cov_t_opt, cov_t);
            cov_args.c0_prime = if_set(cov_c0p_opt, cov_c0p);
            rep = covolume_report(cfg, cov_args);
        } else if (low_cmd->parsed()) {
            if (low_c4_opt->count()) {
                cfg.params.c4 = low_c4;
                std::erase(cfg.params.defaulted, std::string("c4"));
            }
            low_args.s_override = if_set(low_s_opt, low_s);
            if (low_deg_opt->count())
                low_args.degrees = parse_long_list(low_degrees);
            low_args.c0_prime = if_set(low_c0p_opt, low_c0p);
            rep = growth_lower_report(cfg, low_args);
        } else if (up_cmd->parsed()) {
            if (up_xs_opt->count()) {
                up_args.xs.clear();
                for (long v : parse_long_list(up_xs))
                    up_args.xs.push_back(static_cast<unsigned long>(v));
            }
            if (up_res_opt->count())
                up_args.residue = parse_residue_list(up_residue);
            rep = growth_upper_report(cfg, up_args);
        } else if (dump_cmd->parsed()) {
            rep = lie_dump_report(cfg, max_rank);
        }

        for (auto const& w : rep.warnings)
            std::cerr << "warning: " << w << "\n";
        if (output_path.empty()) {
            std::cout << rep.text;
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out)
                throw Error(ErrorKind::Io, fmt::format("cannot write '{}'", output_path));
            out << rep.text;
        }
        return 0;
    } catch (Error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 8;
    }
}
