#include "latgrowth/numfield.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/factor.hpp"

#include <algorithm>

namespace latgrowth::numfield {

mpz_class poly_discriminant(Polynomial const& f)
{
    return discriminant(f);
}

NumberField field_from_polynomial(Polynomial const& f, Precision prec, std::optional<mpz_class> const& known_disc)
{
    if (f.degree() < 1)
        throw Error(ErrorKind::InvalidArgument, "defining polynomial must have degree >= 1");
    if (!f.is_monic())
        throw Error(ErrorKind::InvalidArgument, "defining polynomial must be monic: " + f.to_string());
    if (!is_irreducible(f))
        throw Error(ErrorKind::ReduciblePolynomial, f.to_string() + " is reducible over Q");

    NumberField k;
    k.min_poly_ = f;
    int r1 = count_real_roots(f);
    k.signature_ = {r1, (f.degree() - r1) / 2};
    k.order_disc_ = discriminant(f);
    k.disc_ = k.order_disc_;
    if (known_disc) {
        mpz_class const& kd = *known_disc;
        if (kd == 0)
            throw Error(ErrorKind::InvalidArgument, "known discriminant must be nonzero");
        // disc(Z[theta]) = [O_k : Z[theta]]^2 * disc(k)
        mpz_class q = k.order_disc_ / kd;
        if (q * kd != k.order_disc_ || q < 0 || !mpz_perfect_square_p(q.get_mpz_t()))
            throw Error(ErrorKind::InvalidArgument,
                        "known discriminant " + kd.get_str() + " is incompatible with disc(Z[theta]) = "
                            + k.order_disc_.get_str());
        k.disc_ = kd;
        k.disc_known_ = true;
    }
    if ((sgn(k.disc_) < 0) != (k.signature_.r2 % 2 == 1))
        throw Error(ErrorKind::InvalidArgument, "discriminant sign disagrees with the signature");
    k.roots_ = isolate_roots(f, prec);
    k.root_disc_ = root(RealInterval::from_integer(abs(k.disc_), prec), static_cast<unsigned long>(f.degree()));
    return k;
}

FieldPtr make_field(Polynomial const& f, Precision prec, std::optional<mpz_class> const& known_disc)
{
    return std::make_shared<NumberField const>(field_from_polynomial(f, prec, known_disc));
}

FieldElement FieldElement::zero(FieldPtr k)
{
    std::size_t d = static_cast<std::size_t>(k->degree());
    return {std::move(k), std::vector<mpq_class>(d)};
}

FieldElement FieldElement::one(FieldPtr k)
{
    FieldElement e = zero(std::move(k));
    e.coords[0] = 1;
    return e;
}

FieldElement FieldElement::generator(FieldPtr k)
{
    if (k->degree() == 1) {
        FieldElement e = zero(k);
        e.coords[0] = mpq_class(-k->min_poly()[0]);
        return e;
    }
    FieldElement e = zero(std::move(k));
    e.coords[1] = 1;
    return e;
}

FieldElement FieldElement::from_integers(FieldPtr k, std::vector<long> const& coords)
{
    if (static_cast<int>(coords.size()) != k->degree())
        throw Error(ErrorKind::InvalidArgument, "coordinate vector length differs from the field degree");
    FieldElement e = zero(std::move(k));
    for (std::size_t i = 0; i < coords.size(); ++i)
        e.coords[i] = coords[i];
    return e;
}

bool FieldElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](mpq_class const& c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coords.begin() + 1, coords.end(), [](mpq_class const& c) { return c == 0; });
}

bool FieldElement::has_integer_coords() const
{
    return std::all_of(coords.begin(), coords.end(), [](mpq_class const& c) { return c.get_den() == 1; });
}

namespace {

void require_same_field(FieldElement const& a, FieldElement const& b)
{
    if (a.field != b.field && !(a.field->min_poly() == b.field->min_poly()))
        throw Error(ErrorKind::InvalidArgument, "field elements belong to different fields");
}

} // namespace

FieldElement operator+(FieldElement const& a, FieldElement const& b)
{
    require_same_field(a, b);
    FieldElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] += b.coords[i];
    return c;
}

FieldElement operator-(FieldElement const& a, FieldElement const& b)
{
    require_same_field(a, b);
    FieldElement c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] -= b.coords[i];
    return c;
}

FieldElement operator*(FieldElement const& a, FieldElement const& b)
{
    require_same_field(a, b);
    QPoly prod = mulmod(a.coords, b.coords, to_qpoly(a.field->min_poly()));
    FieldElement c = FieldElement::zero(a.field);
    for (std::size_t i = 0; i < prod.size(); ++i)
        c.coords[i] = prod[i];
    return c;
}

bool operator==(FieldElement const& a, FieldElement const& b)
{
    return a.field->min_poly() == b.field->min_poly() && a.coords == b.coords;
}

mpq_class element_norm(FieldElement const& e)
{
    if (e.is_zero())
        return 0;
    QPoly g = e.coords;
    trim(g);
    mpq_class n = resultant(to_qpoly(e.field->min_poly()), g);
    n.canonicalize();
    return n;
}

RealInterval minkowski_norm_bound(NumberField const& k)
{
    Precision prec = k.precision();
    int d = k.degree();
    auto sig = k.signature();
    RealInterval four_over_pi = RealInterval::from_long(4, prec) / RealInterval::pi(prec);
    mpz_class dd;
    mpz_ui_pow_ui(dd.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    return pow(four_over_pi, static_cast<unsigned long>(sig.r2)) * RealInterval::from_rational(mpq_class(fact, dd), prec)
           * sqrt(RealInterval::from_integer(k.abs_disc(), prec));
}

RealInterval minkowski_discriminant_floor(int d, int r2, Precision prec)
{
    RealInterval pi = RealInterval::pi(prec);
    RealInterval quarter_pi = pi / RealInterval::from_long(4, prec);
    RealInterval exponent = RealInterval::from_rational(mpq_class(2 * d) - mpq_class(1, 6 * d), prec);
    return pow(quarter_pi, static_cast<unsigned long>(2 * r2)) / (RealInterval::from_long(2L * d, prec) * pi)
           * exp(exponent);
}

RealInterval minkowski_constant(Precision prec)
{
    // log(floor(d)) grows like (2 - log(4/pi)) d, so the ratio is largest at
    // small d; the scan range covers its maximum with room to spare.
    // Logarithms are to base 2.
    RealInterval ln2 = log(RealInterval::from_long(2, prec));
    RealInterval best = RealInterval::from_long(0, prec);
    for (int d = 2; d <= 128; ++d) {
        RealInterval ratio = RealInterval::from_long(d, prec) * ln2 / log(minkowski_discriminant_floor(d, d / 2, prec));
        best = max(best, ratio);
    }
    return best;
}

DegreeBound minkowski_degree_bound(mpz_class const& D, Precision prec)
{
    if (D < 3)
        throw Error(ErrorKind::InvalidDiscriminant, "degree bound needs D >= 3, got " + D.get_str());
    RealInterval disc = RealInterval::from_integer(D, prec);
    // The floor is increasing in d (at the minimizing r2 = floor(d/2)), so
    // scan upward until the inequality D > floor certainly fails.
    int d = 1;
    for (;;) {
        int next = d + 1;
        RealInterval floor_next = minkowski_discriminant_floor(next, next / 2, prec);
        if (!mpfr_greater_p(disc.upper().get(), floor_next.lower().get()))
            break;
        d = next;
    }
    return {d, minkowski_constant(prec)};
}

RealInterval root_discriminant(NumberField const& k)
{
    return k.root_disc();
}

RootEnclosures embeddings_at(NumberField const& k, Precision prec)
{
    if (prec <= k.precision())
        return k.embeddings();
    return refine_roots(k.min_poly(), k.embeddings(), prec);
}

EmbeddingValues evaluate_at_embeddings(FieldElement const& e, Precision prec)
{
    NumberField const& k = *e.field;
    RootEnclosures roots = embeddings_at(k, prec);
    Precision wp = std::max(prec, k.precision());
    std::vector<RealInterval> coef;
    for (auto const& c : e.coords)
        coef.push_back(RealInterval::from_rational(c, wp));

    EmbeddingValues out;
    for (auto const& x : roots.real) {
        RealInterval acc = coef.back();
        for (std::size_t i = coef.size() - 1; i-- > 0;)
            acc = acc * x + coef[i];
        out.real.push_back(std::move(acc));
    }
    for (auto const& z : roots.complex) {
        ComplexBox acc(coef.back(), RealInterval(wp));
        for (std::size_t i = coef.size() - 1; i-- > 0;)
            acc = acc * z + ComplexBox(coef[i], RealInterval(wp));
        out.complex.push_back(std::move(acc));
    }
    return out;
}

namespace {

mpz_class json_integer(nlohmann::json const& v)
{
    if (v.is_number_integer())
        return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_string())
        return mpz_class(v.get<std::string>());
    throw Error(ErrorKind::InvalidArgument, "expected an integer (number or decimal string)");
}

nlohmann::json integer_json(mpz_class const& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

} // namespace

std::vector<CatalogField> parse_field_catalog(nlohmann::json const& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::InvalidArgument, "field catalog must be a JSON array");
    std::vector<CatalogField> out;
    for (auto const& entry : j) {
        CatalogField f;
        f.name = entry.at("name").get<std::string>();
        std::vector<mpz_class> coeffs;
        for (auto const& c : entry.at("min_poly"))
            coeffs.push_back(json_integer(c));
        f.min_poly = Polynomial(std::move(coeffs));
        if (entry.contains("known_disc") && !entry.at("known_disc").is_null())
            f.known_disc = json_integer(entry.at("known_disc"));
        if (entry.contains("notes"))
            f.notes = entry.at("notes").get<std::string>();
        out.push_back(std::move(f));
    }
    return out;
}

nlohmann::json field_catalog_to_json(std::vector<CatalogField> const& fields)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& f : fields) {
        nlohmann::json entry;
        entry["name"] = f.name;
        nlohmann::json poly = nlohmann::json::array();
        for (auto const& c : f.min_poly.coefficients())
            poly.push_back(integer_json(c));
        entry["min_poly"] = poly;
        entry["known_disc"] = f.known_disc ? integer_json(*f.known_disc) : nlohmann::json(nullptr);
        entry["notes"] = f.notes;
        arr.push_back(std::move(entry));
    }
    return arr;
}

} // namespace latgrowth::numfield
