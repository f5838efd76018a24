#include "latgrowth/report.hpp"

#include "latgrowth/json_util.hpp"
#include "latgrowth/lie.hpp"
#include "latgrowth/numfield.hpp"
#include "latgrowth/prasad.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace latgrowth::report {

using nlohmann::ordered_json;
using numfield::FieldElement;

namespace {

constexpr char const* kGammaBanner =
    "gamma(H) is the constant of the conjectured growth rate x^((gamma + o(1)) log x / log log x). "
    "That conjecture is false: lattice counts grow like x^(c log x). "
    "gamma is printed for comparison only and is not the growth rate.";

constexpr char const* kConditionalNote =
    "conditional on the congruence subgroup property and on the supplied constants; "
    "the multiplier counting maximal lattices is not included";

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string trim(std::string s)
{
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && ws(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(static_cast<unsigned char>(s[i])))
        ++i;
    return s.substr(i);
}

std::vector<std::string> split(std::string const& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

unsigned long parse_ulong(std::string const& s, char const* what)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, fmt::format("{} '{}' is not a non-negative integer", what, s));
    try {
        return std::stoul(s);
    } catch (std::exception const&) {
        throw Error(ErrorKind::InvalidArgument, fmt::format("{} '{}' is out of range", what, s));
    }
}

mpz_class parse_mpz(std::string const& s, char const* what)
{
    mpz_class z;
    std::string t = trim(s);
    if (t.empty() || z.set_str(t, 10) != 0)
        throw Error(ErrorKind::InvalidArgument, fmt::format("{} '{}' is not an integer", what, s));
    return z;
}

RealInterval parse_decimal(std::string const& s, Precision prec, char const* what)
{
    try {
        return RealInterval::from_decimal(s, s, prec);
    } catch (Error const&) {
        throw;
    } catch (std::exception const&) {
        throw Error(ErrorKind::InvalidArgument, fmt::format("{} '{}' is not a decimal number", what, s));
    }
}

std::string interval_text(RealInterval const& x, int digits = 15)
{
    auto [lo, hi] = x.to_decimal(digits);
    return fmt::format("[{}, {}]", lo, hi);
}

std::string scalar_text(ordered_json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "none";
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    return v.dump();
}

bool all_scalar(ordered_json const& arr)
{
    return std::all_of(arr.begin(), arr.end(), [](ordered_json const& e) { return !e.is_structured(); });
}

void flatten(ordered_json const& v, std::string const& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (v.is_object()) {
        for (auto const& [key, value] : v.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (v.is_array() && all_scalar(v)) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + scalar_text(v[i]);
        out.emplace_back(prefix, s + "]");
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten(v[i], fmt::format("{}[{}]", prefix, i), out);
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

std::string csv_cell(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_table(Table const& t)
{
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c)
        width[c] = t.header[c].size();
    for (auto const& row : t.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    auto line = [&](std::vector<std::string> const& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size())
                s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        return s + "\n";
    };
    std::string out = line(t.header);
    for (auto const& row : t.rows)
        out += line(row);
    return out;
}

std::string render_csv(Table const& t)
{
    auto line = [](std::vector<std::string> const& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c)
            s += (c ? "," : "") + csv_cell(cells[c]);
        return s + "\n";
    };
    std::string out = line(t.header);
    for (auto const& row : t.rows)
        out += line(row);
    return out;
}

ordered_json header_json(RunConfig const& cfg, std::string const& command)
{
    ordered_json h;
    h["schema"] = kSchemaVersion;
    h["tool"] = "latgrowth";
    h["version"] = kToolVersion;
    h["command"] = command;
    h["precision_bits"] = std::to_string(cfg.precision);
    h["prime_bound"] = std::to_string(cfg.prime_bound);
    h["bound_params"] = counting::to_json(cfg.params);
    return h;
}

std::vector<std::string> header_lines(RunConfig const& cfg, std::string const& command)
{
    auto const& p = cfg.params;
    auto mark = [&](char const* name) {
        return std::find(p.defaulted.begin(), p.defaulted.end(), name) != p.defaulted.end() ? "*" : "";
    };
    return {
        fmt::format("latgrowth {} (schema {}) {}", kToolVersion, kSchemaVersion, command),
        fmt::format("precision {} bits, prime bound {}", cfg.precision, cfg.prime_bound),
        fmt::format("BoundParams C={}{} C1={}{} C2={}{} c4={}{} f1={}{} s_embed={}{}  (* = default)",
                    real_string(p.C), mark("C"), real_string(p.C1), mark("C1"), real_string(p.C2), mark("C2"),
                    real_string(p.c4), mark("c4"), real_string(p.f1), mark("f1"), p.s_embed, mark("s_embed")),
    };
}

/// Assembles the output in the requested format.  `table` carries the row
/// data of tabular commands; `summary` keys are printed before it.
std::string render(RunConfig const& cfg, std::string const& command, ordered_json const& result,
                   std::optional<Table> const& table = std::nullopt, ordered_json const& summary = ordered_json())
{
    switch (cfg.format) {
    case Format::Json: {
        ordered_json out = header_json(cfg, command);
        out["result"] = result;
        return out.dump(2) + "\n";
    }
    case Format::Csv: {
        std::string out;
        for (auto const& l : header_lines(cfg, command))
            out += "# " + l + "\n";
        std::vector<std::pair<std::string, std::string>> kv;
        if (table) {
            flatten(summary, "", kv);
            for (auto const& [k, v] : kv)
                out += "# " + k + ": " + v + "\n";
            out += render_csv(*table);
        } else {
            flatten(result, "", kv);
            out += "key,value\n";
            for (auto const& [k, v] : kv)
                out += csv_cell(k) + "," + csv_cell(v) + "\n";
        }
        return out;
    }
    case Format::Table:
    default: {
        std::string out;
        for (auto const& l : header_lines(cfg, command))
            out += l + "\n";
        out += "\n";
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(table ? summary : result, "", kv);
        std::size_t w = 0;
        for (auto const& [k, v] : kv)
            w = std::max(w, k.size());
        for (auto const& [k, v] : kv)
            out += k + ":" + std::string(w - k.size() + 1, ' ') + v + "\n";
        if (table) {
            if (!kv.empty())
                out += "\n";
            out += render_table(*table);
        }
        return out;
    }
    }
}

pisot::TowerEntry find_tower(RunConfig const& cfg, std::string const& name)
{
    auto hits = pisot::lookup_tower(cfg.towers, name);
    if (hits.empty())
        throw Error(ErrorKind::InvalidArgument, fmt::format("no tower named '{}' in the catalog", name));
    if (hits.size() > 1)
        throw Error(ErrorKind::InvalidArgument, fmt::format("tower name '{}' is ambiguous", name));
    return hits.front();
}

numfield::FieldPtr field_from_args(RunConfig const& cfg, std::string const& poly,
                                   std::optional<std::string> const& known_disc)
{
    std::optional<mpz_class> kd;
    if (known_disc)
        kd = parse_mpz(*known_disc, "known discriminant");
    return numfield::make_field(Polynomial::parse(poly), cfg.precision, kd);
}

ordered_json coords_json(FieldElement const& e)
{
    ordered_json a = ordered_json::array();
    for (auto const& c : e.coords)
        a.push_back(rational_string(c));
    return a;
}

ordered_json signs_json(std::vector<pisot::Sign> const& signs)
{
    ordered_json a = ordered_json::array();
    for (auto s : signs)
        a.push_back(s == pisot::Sign::Negative ? "-" : "+");
    return a;
}

ordered_json certificate_json(pisot::PisotCertificate const& c)
{
    ordered_json j;
    j["element"] = coords_json(c.element);
    j["place"] = std::to_string(c.place_index);
    ordered_json enc = ordered_json::array();
    for (auto const& e : c.enclosures)
        enc.push_back(interval_json(e));
    j["embeddings"] = enc;
    j["norm_one_minus_theta"] = rational_string(c.norm_one_minus);
    j["delta"] = interval_json(c.delta);
    j["norm_bound_D_delta"] = interval_json(c.delta_bound);
    j["dominant_bound"] = interval_json(c.dominant_bound);
    j["precision_bits"] = std::to_string(c.precision);
    return j;
}

ordered_json extension_json(pisot::QuadraticExtensionData const& q)
{
    ordered_json j;
    j["alpha"] = coords_json(q.alpha);
    j["alpha_norm"] = rational_string(numfield::element_norm(q.alpha));
    j["signs"] = signs_json(q.sign_pattern);
    j["t"] = std::to_string(q.t);
    j["disc_bound"] = integer_string(q.disc_bound);
    j["rd_bound"] = interval_json(q.rd_bound);
    j["delta"] = interval_json(q.delta);
    ordered_json sp = ordered_json::array();
    for (auto s : pisot::splitting_pattern(q.alpha))
        sp.push_back(s == pisot::PlaceSplitting::Split ? "split" : "nonsplit");
    j["real_places"] = sp;
    return j;
}

/// Reports carry every number as a decimal string.
ordered_json stringify_numbers(ordered_json v)
{
    if (v.is_number_integer())
        return v.dump();
    if (v.is_structured())
        for (auto& e : v)
            e = stringify_numbers(e);
    return v;
}

ordered_json rows_to_json(Table const& t)
{
    ordered_json rows = ordered_json::array();
    for (auto const& row : t.rows) {
        ordered_json o;
        for (std::size_t c = 0; c < t.header.size(); ++c)
            o[t.header[c]] = row[c];
        rows.push_back(std::move(o));
    }
    return rows;
}

} // namespace

Format parse_format(std::string const& text)
{
    if (text == "table")
        return Format::Table;
    if (text == "json")
        return Format::Json;
    if (text == "csv")
        return Format::Csv;
    throw Error(ErrorKind::InvalidArgument, fmt::format("unknown format '{}' (table, json, csv)", text));
}

void RunConfig::validate() const
{
    if (precision < 64)
        throw Error(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
    if (precision > (Precision(1) << 16))
        throw Error(ErrorKind::InvalidArgument, "precision is limited to 65536 bits");
    if (prime_bound < 100)
        throw Error(ErrorKind::InvalidArgument, "prime bound must be at least 100");
    if (prime_bound > 100000000ul)
        throw Error(ErrorKind::InvalidArgument, "prime bound is limited to 10^8");
    if (threads < 1)
        throw Error(ErrorKind::InvalidArgument, "threads must be at least 1");
    params.validate();
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ReduciblePolynomial:
        return 2;
    case ErrorKind::PrecisionExhausted:
        return 3;
    case ErrorKind::EmptyReport:
        return 4;
    case ErrorKind::ResidueBudgetExceeded:
        return 5;
    case ErrorKind::SearchExhausted:
        return 6;
    case ErrorKind::InvalidType:
    case ErrorKind::InvalidArgument:
        return 7;
    default:
        return 8;
    }
}

std::vector<counting::ResidueEntry> parse_residue_list(std::string const& text)
{
    std::vector<counting::ResidueEntry> out;
    if (trim(text).empty())
        return out;
    for (auto const& item : split(text, ',')) {
        auto parts = split(item, ':');
        if (parts.size() != 2)
            throw Error(ErrorKind::InvalidArgument, fmt::format("residue entry '{}' must look like p:f", item));
        out.push_back({parse_ulong(parts[0], "residue prime"), parse_ulong(parts[1], "residue degree")});
    }
    return out;
}

std::vector<long> parse_long_list(std::string const& text)
{
    std::vector<long> out;
    for (auto const& item : split(text, ',')) {
        unsigned long v = parse_ulong(item, "list entry");
        if (v > static_cast<unsigned long>(std::numeric_limits<long>::max()))
            throw Error(ErrorKind::InvalidArgument, "list entry out of range");
        out.push_back(static_cast<long>(v));
    }
    return out;
}

Report field_report(RunConfig const& cfg, FieldArgs const& args)
{
    cfg.validate();
    Polynomial f = Polynomial::parse(args.poly);
    if (f.degree() < 2)
        throw Error(ErrorKind::InvalidArgument,
                    "a polynomial of degree 1 defines Q itself (d = 1, rd = 1); give degree >= 2");
    auto k = field_from_args(cfg, args.poly, args.known_disc);

    ordered_json r;
    r["polynomial"] = k->min_poly().to_string();
    r["degree"] = std::to_string(k->degree());
    r["signature"] = ordered_json::array({std::to_string(k->signature().r1), std::to_string(k->signature().r2)});
    r["disc"] = integer_string(k->disc());
    r["disc_source"] = k->disc_is_known() ? "supplied" : "equation order Z[theta]";
    r["order_disc"] = integer_string(k->order_disc());
    r["root_discriminant"] = interval_json(numfield::root_discriminant(*k));
    r["minkowski_bound"] = interval_json(numfield::minkowski_norm_bound(*k));
    ordered_json real = ordered_json::array();
    for (auto const& x : k->embeddings().real)
        real.push_back(interval_json(x));
    ordered_json cplx = ordered_json::array();
    for (auto const& z : k->embeddings().complex)
        cplx.push_back(ordered_json{{"re", interval_json(z.re)}, {"im", interval_json(z.im)}});
    r["real_embeddings"] = real;
    r["complex_embeddings"] = cplx;
    return {render(cfg, "field", r), {}};
}

Report pisot_report(RunConfig const& cfg, PisotArgs const& args)
{
    cfg.validate();
    auto k = field_from_args(cfg, args.poly, args.known_disc);
    auto cert = pisot::find_pisot(k, args.place, args.radius);

    ordered_json r;
    r["polynomial"] = k->min_poly().to_string();
    r["disc"] = integer_string(k->disc());
    r["search_radius"] = std::to_string(args.radius);
    r["certificate"] = certificate_json(cert);
    r["verified_at_double_precision"] = pisot::verify_certificate(cert, 2 * cert.precision);
    if (args.t) {
        auto prod = pisot::pisot_product_alpha(k, *args.t, args.radius);
        ordered_json thetas = ordered_json::array();
        for (auto const& th : prod.thetas)
            thetas.push_back(coords_json(th.element));
        r["thetas"] = thetas;
        r["extension"] = extension_json(pisot::quadratic_extension(k, prod.alpha, pisot::field_delta(*k)));
    }
    return {render(cfg, "pisot", r), {}};
}

Report tower_report(RunConfig const& cfg, TowerArgs const& args)
{
    cfg.validate();
    if (!args.name) {
        Table t{{"name", "base_degree", "degree_rule", "rd_constant", "totally_real", "source"}, {}};
        for (auto const& e : cfg.towers)
            t.rows.push_back({e.name, std::to_string(e.base_degree), e.degree_rule,
                              e.rd_decimal ? fmt::format("[{}, {}]", e.rd_decimal->lo, e.rd_decimal->hi) : "none",
                              e.total_real ? "true" : "false", e.source});
        ordered_json r;
        r["towers"] = stringify_numbers(pisot::tower_catalog_to_json(cfg.towers));
        return {render(cfg, "tower", r, t, ordered_json::object()), {}};
    }
    if (args.levels < 1 || args.levels > 25)
        throw Error(ErrorKind::InvalidArgument, "levels must lie in [1, 25]");

    auto e = find_tower(cfg, *args.name);
    ordered_json r;
    r["tower"] = stringify_numbers(pisot::tower_catalog_to_json({e})[0]);
    std::vector<std::string> warnings;
    Table t{{"level", "degree", "r1", "r2", "rd_bound_lo", "rd_bound_hi"}, {}};
    if (e.degree_rule != "doubling") {
        warnings.push_back(fmt::format("tower '{}' does not specify its level degrees", e.name));
        r["levels"] = ordered_json::array();
        return {render(cfg, "tower", r), warnings};
    }
    if (!e.has_rd_constant())
        throw Error(ErrorKind::InvalidArgument, fmt::format("tower '{}' has no explicit root-discriminant constant", e.name));
    std::vector<pisot::SyntheticField> fields;
    if (args.t) {
        fields = pisot::fixed_signature_sequence(e, *args.t, args.levels, cfg.precision);
        r["t"] = std::to_string(*args.t);
        r["delta"] = interval_json(pisot::universal_delta(cfg.precision));
    } else {
        for (int level = 0; level < args.levels; ++level)
            fields.push_back(pisot::tower_level_field(e, level, cfg.precision));
    }
    for (auto const& f : fields) {
        auto [lo, hi] = f.rd_bound.to_decimal(kJsonDigits);
        t.rows.push_back({std::to_string(f.level), std::to_string(f.degree), std::to_string(f.r1),
                          std::to_string(f.r2), lo, hi});
    }
    r["levels"] = rows_to_json(t);
    ordered_json summary = r;
    summary.erase("levels");
    return {render(cfg, "tower", r, t, summary), warnings};
}

Report covolume_report(RunConfig const& cfg, CovolumeArgs const& args)
{
    cfg.validate();
    int sources = (args.rational ? 1 : 0) + (args.poly ? 1 : 0) + (args.tower ? 1 : 0);
    if (sources != 1)
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --field Q, --poly, --tower");
    auto type = lie::parse_type(args.type, args.s_override);
    unsigned long coarse = std::max<unsigned long>(cfg.prime_bound / 10, 2);

    ordered_json r;
    r["type"] = type.name();
    r["s"] = std::to_string(type.s_param);
    std::vector<std::string> warnings;

    if (!args.tower) {
        auto k = args.rational ? numfield::make_field(Polynomial{0, 1}, cfg.precision)
                               : field_from_args(cfg, *args.poly, args.known_disc);
        std::optional<pisot::QuadraticExtensionData> ext;
        if (type.s_param > 0) {
            RealInterval delta = k->abs_disc() >= 2 ? pisot::field_delta(*k) : pisot::universal_delta(cfg.precision);
            if (args.alpha) {
                std::vector<long> coords;
                for (auto const& c : split(*args.alpha, ',')) {
                    mpz_class z = parse_mpz(c, "alpha coordinate");
                    if (!z.fits_slong_p())
                        throw Error(ErrorKind::InvalidArgument, "alpha coordinate out of range");
                    coords.push_back(z.get_si());
                }
                if (static_cast<int>(coords.size()) != k->degree())
                    throw Error(ErrorKind::InvalidArgument,
                                fmt::format("alpha needs {} coordinates", k->degree()));
                ext = pisot::quadratic_extension(k, FieldElement::from_integers(k, coords), delta);
            } else if (args.t) {
                ext = pisot::quadratic_extension(k, pisot::pisot_product_alpha(k, *args.t, args.radius).alpha, delta);
            } else {
                throw Error(ErrorKind::InvalidArgument, "outer form " + type.name() + " needs --alpha or --t");
            }
        }
        auto res = prasad::covolume(*k, ext, type, args.p0, cfg.prime_bound, cfg.threads);
        auto rough = prasad::covolume(*k, ext, type, args.p0, coarse, cfg.threads);
        r["field"] = args.rational ? "Q" : k->min_poly().to_string();
        r["disc"] = integer_string(k->disc());
        if (ext)
            r["extension"] = extension_json(*ext);
        r["covolume"] = prasad::to_json(res);
        r["nesting_check"] = ordered_json{{"coarse_prime_bound", std::to_string(coarse)},
                                          {"coarse_value", interval_json(rough.value)},
                                          {"contains_refined", rough.value.contains(res.value)}};
        return {render(cfg, "covolume", r), warnings};
    }

    auto e = find_tower(cfg, *args.tower);
    if (!e.has_rd_constant())
        throw Error(ErrorKind::InvalidArgument, fmt::format("tower '{}' has no explicit root-discriminant constant", e.name));
    auto field = pisot::tower_level_field(e, args.level, cfg.precision);
    std::optional<RealInterval> c0p;
    if (args.c0_prime)
        c0p = parse_decimal(*args.c0_prime, cfg.precision, "c0'");
    unsigned long p0 = args.p0.value_or(2);
    if (!args.p0)
        warnings.push_back("no --p0 given; using p0 = 2 for the distinguished place");

    auto res = prasad::synthetic_covolume(field, type, p0, c0p, cfg.prime_bound, cfg.threads, cfg.precision);
    auto rough = prasad::synthetic_covolume(field, type, p0, c0p, coarse, cfg.threads, cfg.precision);
    RealInterval c0 = e.rd_constant(cfg.precision);
    RealInterval c1 = prasad::covolume_upper_c1(c0, c0p.value_or(RealInterval::from_long(1, cfg.precision)), type, p0);
    RealInterval bound = pow(c1, static_cast<unsigned long>(field.degree));
    bool within = prasad::upper_within(res.value, bound);

    r["tower"] = e.name;
    r["level"] = std::to_string(field.level);
    r["degree"] = std::to_string(field.degree);
    r["rd_bound"] = interval_json(field.rd_bound);
    r["p0"] = std::to_string(p0);
    r["covolume"] = prasad::to_json(res);
    r["nesting_check"] = ordered_json{{"coarse_prime_bound", std::to_string(coarse)},
                                      {"coarse_value", interval_json(rough.value)},
                                      {"contains_refined", rough.value.contains(res.value)}};
    r["c1"] = interval_json(c1);
    r["c1_pow_d"] = interval_json(bound);
    r[fmt::format("value_le_c1_pow_{}", field.degree)] = within;
    return {render(cfg, "covolume", r), warnings};
}

Report growth_lower_report(RunConfig const& cfg, GrowthLowerArgs const& args)
{
    cfg.validate();
    auto type = lie::parse_type(args.type, args.s_override);
    auto e = find_tower(cfg, args.tower);
    if (!e.has_rd_constant())
        throw Error(ErrorKind::InvalidArgument, fmt::format("tower '{}' has no explicit root-discriminant constant", e.name));
    if (args.p_prime == args.p0)
        throw Error(ErrorKind::InvalidArgument, "p' must differ from p0");

    std::vector<std::string> warnings;
    if (type.rank < 2)
        warnings.push_back(fmt::format("real rank proxy r = {} < 2: the lower bound is stated for real rank at "
                                       "least 2{}",
                                       type.rank,
                                       args.rank_override ? " (continuing under --rank-override)"
                                                          : "; pass --rank-override to acknowledge"));

    std::vector<long> degrees;
    if (args.degrees) {
        degrees = *args.degrees;
    } else {
        if (args.levels < 1 || args.levels > 25)
            throw Error(ErrorKind::InvalidArgument, "levels must lie in [1, 25]");
        for (int level = 0; level < args.levels; ++level)
            degrees.push_back(pisot::level_degree(e, level));
    }

    Precision prec = cfg.precision;
    std::optional<RealInterval> c0p;
    if (args.c0_prime)
        c0p = parse_decimal(*args.c0_prime, prec, "c0'");
    if (type.s_param > 0 && !c0p)
        throw Error(ErrorKind::InvalidArgument, "outer form " + type.name() + " needs --c0-prime");
    RealInterval c0 = e.rd_constant(prec);
    RealInterval c1 = prasad::covolume_upper_c1(c0, c0p.value_or(RealInterval::from_long(1, prec)), type, args.p0);
    auto rep = counting::lower_growth_assemble(c1, type, args.p_prime, cfg.params.c4, degrees);

    ordered_json r;
    r["tower"] = e.name;
    r["c0"] = interval_json(c0);
    if (c0p)
        r["c0_prime"] = interval_json(*c0p);
    r["p0"] = std::to_string(args.p0);
    r["rank_override"] = args.rank_override;
    ordered_json body = counting::to_json(rep);
    for (auto const& [key, value] : body.items())
        r[key] = value;

    // Covolume of the synthetic field of each degree against c1^d.
    Table t{{"degree", "log2_x", "subgroup_exponent", "index_bound", "conjugacy_discount", "net_count_exponent",
             "flagged", "covolume_le_c1_pow_d"},
            {}};
    std::optional<std::size_t> first, last;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        auto const& row = rep.rows[i];
        std::string check = "n/a";
        if (row.covolume_bound) {
            pisot::SyntheticField f{e.name, -1, static_cast<int>(row.degree), static_cast<int>(row.degree), 0, c0};
            auto sc = prasad::synthetic_covolume(f, type, args.p0, c0p, cfg.prime_bound, cfg.threads, prec);
            bool ok = prasad::upper_within(sc.value, *row.covolume_bound);
            r["rows"][i]["synthetic_covolume"] = interval_json(sc.value);
            r["rows"][i]["covolume_le_c1_pow_d"] = ok;
            check = ok ? "true" : "false";
        }
        if (!row.flagged) {
            if (!first)
                first = i;
            last = i;
        }
        t.rows.push_back({std::to_string(row.degree), interval_text(row.log2_x, 10),
                          std::to_string(row.subgroup_exponent), fmt::format("{}^{}", rep.p_prime, row.index_exponent),
                          std::to_string(row.conjugacy_discount), std::to_string(row.net_count_exponent),
                          row.flagged ? "true" : "false", check});
    }
    RealInterval range = hull(rep.rows[*first].log2_x, rep.rows[*last].log2_x);
    r["log2_x_range"] = interval_json(range);
    r["gamma_banner"] = kGammaBanner;
    r["warnings"] = warnings;

    ordered_json summary;
    summary["tower"] = e.name;
    summary["type"] = rep.type_name;
    summary["p_prime"] = std::to_string(rep.p_prime);
    summary["p0"] = std::to_string(args.p0);
    summary["c1"] = interval_json(c1, 15);
    summary["c2_exponent"] = rational_string(rep.c2_exponent);
    summary["a"] = interval_json(rep.a, 15);
    summary["log2_x_range"] = interval_json(range, 10);
    summary["gamma"] = interval_json(rep.gamma, 15);
    summary["note"] = kGammaBanner;

    if (cfg.format == Format::Csv) {
        std::string out;
        for (auto const& l : header_lines(cfg, "growth lower"))
            out += "# " + l + "\n";
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(summary, "", kv);
        for (auto const& [k, v] : kv)
            out += "# " + k + ": " + v + "\n";
        return {out + counting::to_csv(rep), warnings};
    }
    return {render(cfg, "growth lower", r, t, summary), warnings};
}

namespace {

std::vector<counting::ResidueEntry> worst_case_residue(unsigned long x, counting::BoundParams const& params)
{
    double guess = std::floor(params.C1 * std::log2(static_cast<double>(x))) + 1;
    for (long f = static_cast<long>(guess); f >= 1; --f) {
        std::vector<counting::ResidueEntry> data{{2, static_cast<unsigned long>(f)}};
        try {
            counting::upper_growth_assemble(x, params, data, 64);
            return data;
        } catch (Error const& e) {
            if (e.kind() != ErrorKind::ResidueBudgetExceeded)
                throw;
        }
    }
    return {};
}

} // namespace

Report growth_upper_report(RunConfig const& cfg, GrowthUpperArgs const& args)
{
    cfg.validate();
    if (args.xs.empty())
        throw Error(ErrorKind::InvalidArgument, "no x values to scan");
    for (std::size_t i = 1; i < args.xs.size(); ++i)
        if (args.xs[i] <= args.xs[i - 1])
            throw Error(ErrorKind::InvalidArgument, "x values must be strictly increasing");

    Table t{{"x", "residue", "nu", "rank_T", "e_Q", "rank_T1", "e_N", "e_Lambda", "e_norm", "B", "B_over_log2x"}, {}};
    ordered_json rows = ordered_json::array();
    std::optional<RealInterval> b;
    std::optional<RealInterval> prev_B;
    bool monotone = true;
    for (unsigned long x : args.xs) {
        auto data = args.residue ? *args.residue : worst_case_residue(x, cfg.params);
        auto u = counting::upper_growth_assemble(x, cfg.params, data, cfg.precision);
        std::string res;
        for (auto const& [p, f] : data)
            res += fmt::format("{}{}:{}", res.empty() ? "" : " ", p, f);
        if (res.empty())
            res = "none";
        ordered_json j = counting::to_json(u);
        j["residue"] = res;
        rows.push_back(j);
        t.rows.push_back({std::to_string(x), res, std::to_string(u.nu), integer_string(u.rank_T),
                          integer_string(u.e_Q), integer_string(u.rank_T1), interval_text(u.e_N, 10),
                          interval_text(u.e_Lambda, 10), interval_text(u.e_norm, 10), interval_text(u.B, 10),
                          interval_text(u.B_over_log2x, 10)});
        b = b ? max(*b, u.B_over_log2x) : u.B_over_log2x;
        if (prev_B && !prev_B->certainly_le(u.B))
            monotone = false;
        prev_B = u.B;
    }

    ordered_json r;
    r["rows"] = rows;
    r["b"] = interval_json(*b);
    r["monotone_in_x"] = monotone;
    r["conditional"] = kConditionalNote;

    ordered_json summary;
    summary["b"] = interval_json(*b, 15);
    summary["monotone_in_x"] = monotone;
    summary["conditional"] = kConditionalNote;
    return {render(cfg, "growth upper", r, t, summary), {}};
}

Report lie_dump_report(RunConfig const& cfg, int max_rank)
{
    cfg.validate();
    if (max_rank < 1 || max_rank > 64)
        throw Error(ErrorKind::InvalidArgument, "max rank must lie in [1, 64]");
    Table t{{"type", "rank", "dim", "exponents", "coxeter", "gamma_lo", "gamma_hi"}, {}};
    for (auto const& ty : lie::all_types(max_rank)) {
        std::string ex;
        for (int m : ty.exponents)
            ex += (ex.empty() ? "" : " ") + std::to_string(m);
        auto [glo, ghi] = lie::gamma_H(ty.coxeter, cfg.precision).to_decimal(kJsonDigits);
        t.rows.push_back({ty.name(), std::to_string(ty.rank), std::to_string(ty.dim), ex, std::to_string(ty.coxeter),
                          glo, ghi});
    }
    ordered_json r;
    r["types"] = rows_to_json(t);
    r["gamma_banner"] = kGammaBanner;
    ordered_json summary;
    summary["note"] = kGammaBanner;
    return {render(cfg, "lie dump", r, t, summary), {}};
}

} // namespace latgrowth::report
