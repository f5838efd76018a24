#pragma once

// Number fields presented by a monic irreducible integer polynomial:
// signature, discriminant, certified embeddings, exact norms and the
// Minkowski bounds.

#include "latgrowth/interval.hpp"
#include "latgrowth/polynomial.hpp"
#include "latgrowth/roots.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace latgrowth::numfield {

struct Signature {
    int r1 = 0; ///< real embeddings
    int r2 = 0; ///< pairs of complex-conjugate embeddings
    friend bool operator==(Signature const&, Signature const&) = default;
};

class NumberField {
  public:
    Polynomial const& min_poly() const noexcept { return min_poly_; }
    int degree() const noexcept { return min_poly_.degree(); }
    Signature signature() const noexcept { return signature_; }
    /// Signed discriminant used by every downstream bound.  Equals the
    /// supplied known discriminant, else the discriminant of Z[theta].
    mpz_class const& disc() const noexcept { return disc_; }
    mpz_class abs_disc() const { return abs(disc_); }
    /// Discriminant of the equation order Z[theta].
    mpz_class const& order_disc() const noexcept { return order_disc_; }
    bool disc_is_known() const noexcept { return disc_known_; }
    RealInterval const& root_disc() const noexcept { return root_disc_; }
    RootEnclosures const& embeddings() const noexcept { return roots_; }
    Precision precision() const noexcept { return roots_.precision; }
    bool totally_real() const noexcept { return signature_.r2 == 0; }

  private:
    friend NumberField field_from_polynomial(Polynomial const&, Precision, std::optional<mpz_class> const&);

    Polynomial min_poly_;
    Signature signature_;
    mpz_class disc_;
    mpz_class order_disc_;
    bool disc_known_ = false;
    RealInterval root_disc_;
    RootEnclosures roots_;
};

using FieldPtr = std::shared_ptr<NumberField const>;

/// Element of k in the power basis 1, theta, ..., theta^(d-1).
struct FieldElement {
    FieldPtr field;
    std::vector<mpq_class> coords;

    static FieldElement zero(FieldPtr k);
    static FieldElement one(FieldPtr k);
    static FieldElement generator(FieldPtr k);
    static FieldElement from_integers(FieldPtr k, std::vector<long> const& coords);

    bool is_zero() const;
    bool is_rational() const;
    bool has_integer_coords() const;
};

FieldElement operator+(FieldElement const& a, FieldElement const& b);
FieldElement operator-(FieldElement const& a, FieldElement const& b);
FieldElement operator*(FieldElement const& a, FieldElement const& b);
bool operator==(FieldElement const& a, FieldElement const& b);

/// Embedding images: r1 real intervals (real places in decreasing root
/// order) followed by r2 complex boxes (one per conjugate pair).
struct EmbeddingValues {
    std::vector<RealInterval> real;
    std::vector<ComplexBox> complex;
};

/// Exact polynomial discriminant.
mpz_class poly_discriminant(Polynomial const& f);

/// Builds the field Q[x]/(f).  Throws ReduciblePolynomial when f factors and
/// PrecisionExhausted when the root enclosures cannot be separated.
NumberField field_from_polynomial(Polynomial const& f, Precision prec = kDefaultPrecision,
                                  std::optional<mpz_class> const& known_disc = std::nullopt);
FieldPtr make_field(Polynomial const& f, Precision prec = kDefaultPrecision,
                    std::optional<mpz_class> const& known_disc = std::nullopt);

/// Exact norm N_{k/Q}(e) = Res(min_poly, coordinate polynomial of e).
mpq_class element_norm(FieldElement const& e);

/// (4/pi)^r2 * d!/d^d * sqrt(D).
RealInterval minkowski_norm_bound(NumberField const& k);

/// Lower bound on D_k implied by Minkowski's theorem and Stirling's formula
/// for a field of degree d with r2 complex places:
/// (pi/4)^(2 r2) / (2 pi d) * e^(2d - 1/(6d)).
RealInterval minkowski_discriminant_floor(int d, int r2, Precision prec = kDefaultPrecision);

struct DegreeBound {
    int max_degree;
    /// Explicit constant with d <= C log2 D for every field other than Q.
    RealInterval constant;
};

/// Largest degree d admitted by the discriminant floor for |disc| = D >= 3.
DegreeBound minkowski_degree_bound(mpz_class const& D, Precision prec = kDefaultPrecision);

/// The explicit constant C, sup over d >= 2 of d / log2(floor(d)).
RealInterval minkowski_constant(Precision prec = kDefaultPrecision);

RealInterval root_discriminant(NumberField const& k);

EmbeddingValues evaluate_at_embeddings(FieldElement const& e, Precision prec);
/// Root enclosures of k refined to `prec` (nested inside the stored ones).
RootEnclosures embeddings_at(NumberField const& k, Precision prec);

struct CatalogField {
    std::string name;
    Polynomial min_poly;
    std::optional<mpz_class> known_disc;
    std::string notes;
};

std::vector<CatalogField> parse_field_catalog(nlohmann::json const& j);
nlohmann::json field_catalog_to_json(std::vector<CatalogField> const& fields);

} // namespace latgrowth::numfield
