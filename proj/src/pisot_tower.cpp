#include "latgrowth/pisot_tower.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace latgrowth::pisot {

using numfield::element_norm;
using numfield::evaluate_at_embeddings;

RealInterval field_delta(NumberField const& k)
{
    Precision prec = k.precision();
    mpz_class D = k.abs_disc();
    if (D < 2)
        throw Error(ErrorKind::InvalidDiscriminant, "per-field delta needs |disc| >= 2");
    auto d = static_cast<unsigned long>(k.degree());
    RealInterval disc = RealInterval::from_integer(D, prec);
    RealInterval three_pow = pow(RealInterval::from_long(3, prec), d - 1);
    RealInterval three_halves_pow = pow(RealInterval::from_rational(mpq_class(3, 2), prec), d - 1);
    return log(three_pow * sqrt(disc) + three_halves_pow) / log(disc);
}

RealInterval universal_delta(Precision prec)
{
    RealInterval log2_3 = log(RealInterval::from_long(3, prec)) / log(RealInterval::from_long(2, prec));
    return numfield::minkowski_constant(prec) * log2_3 + RealInterval::from_rational(mpq_class(1, 2), prec)
           + RealInterval::from_long(1, prec) / log2_3;
}

namespace {

void require_totally_real(NumberField const& k)
{
    if (!k.totally_real())
        throw Error(ErrorKind::NotTotallyReal, "field defined by " + k.min_poly().to_string() + " has complex places");
}

RealInterval dominant_bound_of(NumberField const& k, Precision prec)
{
    return pow(RealInterval::from_long(2, prec), static_cast<unsigned long>(k.degree() - 1))
           * sqrt(RealInterval::from_integer(k.abs_disc(), prec));
}

// Interval checks of the Pisot inequalities for the element at place `place`.
bool pisot_inequalities_hold(std::vector<RealInterval> const& values, int place, RealInterval const& dominant_bound)
{
    RealInterval one = RealInterval::from_long(1, values.front().precision());
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (static_cast<int>(j) == place) {
            if (!one.certainly_less(values[j]) || !values[j].certainly_le(dominant_bound))
                return false;
        } else if (!abs(values[j]).certainly_less(one)) {
            return false;
        }
    }
    return true;
}

bool norm_within(mpq_class const& norm, RealInterval const& bound)
{
    return RealInterval::from_rational(abs(norm), bound.precision()).certainly_le(bound);
}

} // namespace

PisotCertificate find_pisot(FieldPtr const& k, int place_index, int search_radius,
                            std::optional<RealInterval> const& delta_opt)
{
    require_totally_real(*k);
    int d = k->degree();
    if (d < 2)
        throw Error(ErrorKind::InvalidArgument, "Pisot search needs a field of degree >= 2");
    if (place_index < 0 || place_index >= k->signature().r1)
        throw Error(ErrorKind::InvalidArgument, "place index " + std::to_string(place_index) + " out of range");
    if (search_radius < 1)
        throw Error(ErrorKind::InvalidArgument, "search radius must be >= 1");

    Precision prec = k->precision();
    RealInterval delta = delta_opt ? *delta_opt : field_delta(*k);
    RealInterval delta_bound = pow(RealInterval::from_integer(k->abs_disc(), prec), delta);
    RealInterval dom = dominant_bound_of(*k, prec);
    double dom_hi = dom.upper_double();

    std::vector<double> roots;
    for (auto const& r : k->embeddings().real)
        roots.push_back(r.mid_double());
    // Powers of every root, for the cheap floating-point prefilter.
    std::vector<std::vector<double>> powers(roots.size(), std::vector<double>(static_cast<std::size_t>(d)));
    for (std::size_t j = 0; j < roots.size(); ++j) {
        double acc = 1;
        for (int i = 0; i < d; ++i) {
            powers[j][static_cast<std::size_t>(i)] = acc;
            acc *= roots[j];
        }
    }
    double const slack = 1e-9;

    std::optional<PisotCertificate> best;
    mpq_class best_abs_norm;
    std::vector<long> coords(static_cast<std::size_t>(d), -search_radius);
    FieldElement one = FieldElement::one(k);
    // Lexicographic order with the constant coordinate most significant.
    for (;;) {
        bool plausible = true;
        for (std::size_t j = 0; j < roots.size() && plausible; ++j) {
            double v = 0;
            for (int i = 0; i < d; ++i)
                v += static_cast<double>(coords[static_cast<std::size_t>(i)]) * powers[j][static_cast<std::size_t>(i)];
            double tol = slack * (1 + std::abs(v));
            if (static_cast<int>(j) == place_index)
                plausible = v > 1 - tol && v < dom_hi + tol;
            else
                plausible = std::abs(v) < 1 + tol;
        }
        if (plausible) {
            FieldElement theta = FieldElement::from_integers(k, coords);
            mpq_class norm = element_norm(one - theta);
            mpq_class abs_norm = abs(norm);
            if (!best || abs_norm < best_abs_norm) {
                for (Precision p : {prec, 4 * prec}) {
                    auto values = evaluate_at_embeddings(theta, p).real;
                    RealInterval dom_p = dominant_bound_of(*k, p);
                    if (pisot_inequalities_hold(values, place_index, dom_p) && norm_within(norm, delta_bound)) {
                        PisotCertificate c;
                        c.element = theta;
                        c.place_index = place_index;
                        c.enclosures = std::move(values);
                        c.norm_one_minus = norm;
                        c.delta = delta;
                        c.delta_bound = delta_bound;
                        c.dominant_bound = dom_p;
                        c.precision = p;
                        best = std::move(c);
                        best_abs_norm = abs_norm;
                        break;
                    }
                }
            }
        }
        int pos = d - 1;
        while (pos >= 0 && coords[static_cast<std::size_t>(pos)] == search_radius) {
            coords[static_cast<std::size_t>(pos)] = -search_radius;
            --pos;
        }
        if (pos < 0)
            break;
        ++coords[static_cast<std::size_t>(pos)];
    }
    if (!best)
        throw Error(ErrorKind::SearchExhausted, "no certified Pisot element at place " + std::to_string(place_index)
                                                    + " within radius " + std::to_string(search_radius));
    return std::move(*best);
}

bool verify_certificate(PisotCertificate const& cert, Precision prec)
{
    NumberField const& k = *cert.element.field;
    if (!k.totally_real())
        return false;
    auto values = evaluate_at_embeddings(cert.element, prec).real;
    for (std::size_t j = 0; j < values.size(); ++j)
        if (!values[j].overlaps(cert.enclosures[j]))
            return false;
    if (!pisot_inequalities_hold(values, cert.place_index, dominant_bound_of(k, prec)))
        return false;
    mpq_class norm = element_norm(FieldElement::one(cert.element.field) - cert.element);
    if (norm != cert.norm_one_minus)
        return false;
    RealInterval delta_bound = pow(RealInterval::from_integer(k.abs_disc(), prec), cert.delta);
    return norm_within(norm, delta_bound);
}

std::vector<Sign> certified_signs(FieldElement const& alpha, Precision max_prec)
{
    if (alpha.is_zero())
        throw Error(ErrorKind::AlphaZero, "element is zero");
    Precision prec = std::max<Precision>(alpha.field->precision(), 64);
    for (;;) {
        auto values = evaluate_at_embeddings(alpha, prec).real;
        std::vector<Sign> signs;
        bool ok = true;
        for (auto const& v : values) {
            if (v.certainly_positive())
                signs.push_back(Sign::Positive);
            else if (v.certainly_negative())
                signs.push_back(Sign::Negative);
            else {
                ok = false;
                break;
            }
        }
        if (ok)
            return signs;
        if (prec >= max_prec)
            throw Error(ErrorKind::SignUncertifiable,
                        "sign of an embedding is not resolved at " + std::to_string(max_prec) + " bits");
        prec = std::min(2 * prec, max_prec);
    }
}

AlphaProduct pisot_product_alpha(FieldPtr const& k, int t, int search_radius, std::optional<RealInterval> const& delta)
{
    require_totally_real(*k);
    if (t < 1 || t > k->degree())
        throw Error(ErrorKind::InvalidT, "t = " + std::to_string(t) + " must lie in [1, " + std::to_string(k->degree()) + "]");
    AlphaProduct out;
    out.alpha = FieldElement::one(k);
    for (int i = 0; i < t; ++i) {
        PisotCertificate c = find_pisot(k, i, search_radius, delta);
        out.alpha = out.alpha * (FieldElement::one(k) - c.element);
        out.thetas.push_back(std::move(c));
    }
    out.signs = certified_signs(out.alpha);
    return out;
}

QuadraticExtensionData quadratic_extension(FieldPtr const& k, FieldElement const& alpha, RealInterval const& delta)
{
    if (!(alpha.field->min_poly() == k->min_poly()))
        throw Error(ErrorKind::InvalidArgument, "alpha does not belong to the base field");
    if (alpha.is_zero())
        throw Error(ErrorKind::AlphaZero, "alpha is zero");
    if (!alpha.has_integer_coords())
        throw Error(ErrorKind::InvalidArgument, "alpha must have integral power-basis coordinates");

    QuadraticExtensionData q;
    q.base = k;
    q.alpha = alpha;
    q.delta = delta;
    q.sign_pattern = certified_signs(alpha);
    q.t = static_cast<int>(std::count(q.sign_pattern.begin(), q.sign_pattern.end(), Sign::Negative));

    mpq_class norm = element_norm(alpha);
    mpz_class abs_norm = abs(norm.get_num());
    if (q.t == 0 && mpz_perfect_square_p(abs_norm.get_mpz_t()))
        throw Error(ErrorKind::AlphaPossiblySquare,
                    "alpha is totally positive with square norm; non-squareness is not certified");

    int d = k->degree();
    mpz_class D = k->abs_disc();
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * d));
    q.disc_bound = D * D * two_pow * abs_norm;

    Precision prec = k->precision();
    RealInterval by_disc = root(RealInterval::from_integer(q.disc_bound, prec), static_cast<unsigned long>(2 * d));
    RealInterval exponent = (RealInterval::from_long(2, prec) + RealInterval::from_long(q.t, prec) * delta)
                            / RealInterval::from_long(2L * d, prec);
    RealInterval by_delta = RealInterval::from_long(2, prec) * pow(RealInterval::from_integer(D, prec), exponent);
    q.rd_bound = min(by_disc, by_delta);
    return q;
}

std::vector<PlaceSplitting> splitting_pattern(FieldElement const& alpha)
{
    std::vector<PlaceSplitting> out;
    for (Sign s : certified_signs(alpha))
        out.push_back(s == Sign::Positive ? PlaceSplitting::Split : PlaceSplitting::Nonsplit);
    return out;
}

// ---------------------------------------------------------------------------

RealInterval TowerEntry::rd_constant(Precision prec) const
{
    if (!rd_decimal)
        throw Error(ErrorKind::InvalidArgument, "tower '" + name + "' has no explicit root-discriminant constant");
    return RealInterval::from_decimal(rd_decimal->lo, rd_decimal->hi, prec);
}

std::vector<TowerEntry> tower_catalog()
{
    return {
        {"golod-shafarevich", 0, "abstract", std::nullopt, true,
         "Golod and Shafarevich (1964): infinite unramified class field towers exist; no explicit constant"},
        {"martinet", 20, "doubling", DecimalRange{"1058.565", "1058.566"}, true,
         "Martinet (1978): explicit totally real unramified 2-class field tower"},
        {"hajir-maire", 0, "unspecified", DecimalRange{"954.3", "954.4"}, true,
         "Hajir and Maire (2001): tamely ramified totally real towers; level degrees not recorded here"},
    };
}

namespace {

std::string lowercase(std::string s)
{
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string decimal_text(nlohmann::json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number())
        return v.dump();
    throw Error(ErrorKind::InvalidArgument, "rd_constant endpoints must be numbers or decimal strings");
}

} // namespace

std::vector<TowerEntry> lookup_tower(std::vector<TowerEntry> const& catalog, std::string const& name)
{
    std::vector<TowerEntry> out;
    for (auto const& t : catalog)
        if (lowercase(t.name) == lowercase(name))
            out.push_back(t);
    return out;
}

std::vector<TowerEntry> parse_tower_catalog(nlohmann::json const& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::InvalidArgument, "tower catalog must be a JSON array");
    std::vector<TowerEntry> out;
    for (auto const& e : j) {
        TowerEntry t;
        t.name = e.at("name").get<std::string>();
        t.base_degree = e.value("base_degree", 0);
        t.degree_rule = e.value("degree_rule", std::string("unspecified"));
        t.total_real = e.value("total_real", true);
        t.source = e.value("source", std::string());
        if (e.contains("rd_constant") && !e.at("rd_constant").is_null()) {
            auto const& r = e.at("rd_constant");
            if (!r.is_array() || r.size() != 2)
                throw Error(ErrorKind::InvalidArgument, "rd_constant of '" + t.name + "' must be [lo, hi]");
            t.rd_decimal = DecimalRange{decimal_text(r[0]), decimal_text(r[1])};
            RealInterval c = t.rd_constant(64);
            if (!RealInterval::from_long(1, 64).certainly_less(c))
                throw Error(ErrorKind::InvalidArgument, "rd_constant of '" + t.name + "' must exceed 1");
        }
        if (t.base_degree < 0)
            throw Error(ErrorKind::InvalidArgument, "base_degree of '" + t.name + "' must be >= 0");
        out.push_back(std::move(t));
    }
    return out;
}

nlohmann::ordered_json tower_catalog_to_json(std::vector<TowerEntry> const& catalog)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto const& t : catalog) {
        nlohmann::ordered_json e;
        e["name"] = t.name;
        e["base_degree"] = t.base_degree;
        e["degree_rule"] = t.degree_rule;
        e["rd_constant"] = t.rd_decimal ? nlohmann::ordered_json::array({t.rd_decimal->lo, t.rd_decimal->hi})
                                        : nlohmann::ordered_json(nullptr);
        e["total_real"] = t.total_real;
        e["source"] = t.source;
        arr.push_back(std::move(e));
    }
    return arr;
}

int level_degree(TowerEntry const& tower, int level)
{
    if (level < 0)
        throw Error(ErrorKind::InvalidArgument, "tower level must be >= 0");
    if (tower.degree_rule != "doubling" || tower.base_degree < 1)
        throw Error(ErrorKind::InvalidArgument, "tower '" + tower.name + "' does not record its level degrees");
    if (level > 24)
        throw Error(ErrorKind::InvalidArgument, "tower level too large");
    return tower.base_degree << level;
}

SyntheticField tower_level_field(TowerEntry const& tower, int level, Precision prec)
{
    if (!tower.total_real)
        throw Error(ErrorKind::NotTotallyReal, "tower '" + tower.name + "' is not totally real");
    SyntheticField f;
    f.origin = tower.name;
    f.level = level;
    f.degree = level_degree(tower, level);
    f.r1 = f.degree;
    f.r2 = 0;
    f.rd_bound = tower.rd_constant(prec);
    return f;
}

std::vector<SyntheticField> fixed_signature_sequence(TowerEntry const& tower, int t, int levels,
                                                     RealInterval const& delta)
{
    if (t < 1)
        throw Error(ErrorKind::InvalidT, "t must be >= 1");
    Precision prec = delta.precision();
    RealInterval c0 = tower.rd_constant(prec);
    RealInterval exponent = (RealInterval::from_long(2, prec) + RealInterval::from_long(t, prec) * delta)
                            / RealInterval::from_long(2, prec);
    RealInterval rd = RealInterval::from_long(2, prec) * pow(c0, exponent);
    std::vector<SyntheticField> out;
    for (int level = 0; level < levels; ++level) {
        int d = level_degree(tower, level);
        if (d < t)
            continue;
        SyntheticField f;
        f.origin = tower.name + "[sqrt(alpha)]";
        f.level = level;
        f.degree = 2 * d;
        f.r2 = t;
        f.r1 = f.degree - 2 * t;
        f.rd_bound = rd;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<SyntheticField> fixed_signature_sequence(TowerEntry const& tower, int t, int levels, Precision prec)
{
    return fixed_signature_sequence(tower, t, levels, universal_delta(prec));
}

} // namespace latgrowth::pisot
