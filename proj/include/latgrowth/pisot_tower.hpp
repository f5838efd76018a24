#pragma once

// Pisot elements of totally real fields, the quadratic extensions k[sqrt(alpha)]
// built from them, and the catalog of towers of fields with bounded root
// discriminant.

#include "latgrowth/interval.hpp"
#include "latgrowth/numfield.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgrowth::pisot {

using numfield::FieldElement;
using numfield::FieldPtr;
using numfield::NumberField;

/// Exponent delta with 3^(d-1) sqrt(D) + (3/2)^(d-1) <= D^delta for this
/// field, i.e. the smallest value the norm estimate for Pisot elements
/// allows.  Requires D >= 2.
RealInterval field_delta(NumberField const& k);

/// Field-independent delta = C log2(3) + 1/2 + 1/log2(3), valid for every
/// field with D >= 3 because d <= C log2 D.
RealInterval universal_delta(Precision prec = kDefaultPrecision);

struct PisotCertificate {
    FieldElement element;
    int place_index = 0;
    /// Enclosures of the element at every real place.
    std::vector<RealInterval> enclosures;
    /// Exact N(1 - theta).
    mpq_class norm_one_minus;
    RealInterval delta;
    /// D^delta.
    RealInterval delta_bound;
    /// Upper limit 2^(d-1) sqrt(D) on the dominant embedding.
    RealInterval dominant_bound;
    Precision precision = kDefaultPrecision;
};

/// Searches integer power-basis coordinate vectors of sup-norm <= radius for
/// a Pisot element dominant at the given real place, with dominant
/// embedding <= 2^(d-1) sqrt(D) and |N(1-theta)| <= D^delta.  Among all
/// certified candidates the one with the least |N(1-theta)| wins; ties go to
/// the lexicographically smallest coordinate vector (constant term first).
/// delta defaults to field_delta(k).
PisotCertificate find_pisot(FieldPtr const& k, int place_index, int search_radius,
                            std::optional<RealInterval> const& delta = std::nullopt);

/// Re-checks every inequality of the certificate at working precision prec.
bool verify_certificate(PisotCertificate const& cert, Precision prec);

enum class Sign { Negative = -1, Positive = 1 };

struct AlphaProduct {
    FieldElement alpha;
    std::vector<Sign> signs;
    std::vector<PisotCertificate> thetas;
};

/// alpha = (1 - theta_1)...(1 - theta_t) with theta_i Pisot at real place
/// i - 1, so alpha is negative at the first t real places only.
AlphaProduct pisot_product_alpha(FieldPtr const& k, int t, int search_radius,
                                 std::optional<RealInterval> const& delta = std::nullopt);

/// Certified signs of a nonzero element at the real places of its field,
/// raising the precision as needed.  Throws AlphaZero or SignUncertifiable.
std::vector<Sign> certified_signs(FieldElement const& alpha, Precision max_prec = Precision(1) << 12);

struct QuadraticExtensionData {
    FieldPtr base;
    FieldElement alpha;
    /// Number of complex places of l = k[sqrt(alpha)] coming from real places.
    int t = 0;
    /// D_k^2 2^(2d) |N(alpha)|.
    mpz_class disc_bound;
    RealInterval rd_bound;
    RealInterval delta;
    std::vector<Sign> sign_pattern;
};

/// Data of l = k[sqrt(alpha)] for integral nonzero alpha that is certifiably
/// not a square (some real sign negative, or |N(alpha)| not a rational square).
QuadraticExtensionData quadratic_extension(FieldPtr const& k, FieldElement const& alpha,
                                           RealInterval const& delta);

enum class PlaceSplitting { Split, Nonsplit };

std::vector<PlaceSplitting> splitting_pattern(FieldElement const& alpha);

// ---------------------------------------------------------------------------
// Towers

/// Closed decimal range [lo, hi], kept as text so catalogs round-trip
/// digit for digit.
struct DecimalRange {
    std::string lo;
    std::string hi;
};

struct TowerEntry {
    std::string name;
    /// Degree of the first field of the tower; 0 when not applicable.
    int base_degree = 0;
    /// "doubling" (degree of level i is base_degree * 2^i) or free text.
    std::string degree_rule;
    /// Root-discriminant constant c0; empty for purely existential towers.
    std::optional<DecimalRange> rd_decimal;
    bool total_real = true;
    std::string source;

    bool has_rd_constant() const { return rd_decimal.has_value(); }
    /// Outward-rounded enclosure of c0; throws InvalidArgument when absent.
    RealInterval rd_constant(Precision prec = kDefaultPrecision) const;
};

std::vector<TowerEntry> tower_catalog();
/// Entries whose name matches case-insensitively; empty when none does.
std::vector<TowerEntry> lookup_tower(std::vector<TowerEntry> const& catalog, std::string const& name);

/// Reads the JSON catalog format; rd_constant is [lo, hi] (strings or
/// numbers) or null.  Rejects entries with lo <= 1 or lo > hi.
std::vector<TowerEntry> parse_tower_catalog(nlohmann::json const& j);
nlohmann::ordered_json tower_catalog_to_json(std::vector<TowerEntry> const& catalog);

/// Degree of the given level; throws InvalidArgument unless the rule is
/// "doubling" with a positive base degree.
int level_degree(TowerEntry const& tower, int level);

/// Numeric stand-in for a field: no defining polynomial, only the data the
/// covolume and growth computations consume.
struct SyntheticField {
    std::string origin;
    int level = 0;
    int degree = 0;
    int r1 = 0;
    int r2 = 0;
    RealInterval rd_bound;
};

/// The level-th field of the tower itself (totally real, rd = c0).
SyntheticField tower_level_field(TowerEntry const& tower, int level, Precision prec = kDefaultPrecision);

/// For each of the first `levels` levels with d_i >= t, the quadratic
/// extension with t complex places: degree 2 d_i and rd <= 2 c0^((2 + t delta)/2).
std::vector<SyntheticField> fixed_signature_sequence(TowerEntry const& tower, int t, int levels,
                                                     RealInterval const& delta);

/// The same descriptors with the universal delta.
std::vector<SyntheticField> fixed_signature_sequence(TowerEntry const& tower, int t, int levels,
                                                     Precision prec = kDefaultPrecision);

} // namespace latgrowth::pisot
