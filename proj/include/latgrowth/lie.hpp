#pragma once

// Root-system data of the simple types: dimension, Lie exponents, Coxeter
// number, inner/outer form and Prasad's s-parameter.

#include "latgrowth/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgrowth::lie {

enum class Family { A, B, C, D, E, F, G };
enum class Form { InnerSplit, Outer2, Outer3 };

char family_letter(Family f);
std::string form_name(Form f);

struct LieTypeData {
    Family family;
    int rank;
    int dim;
    std::vector<int> exponents; ///< ascending
    int coxeter;
    Form form = Form::InnerSplit;
    int s_param = 0;

    /// "A1", "E8", "2A3", ...
    std::string name() const;
};

/// Table data for the split (inner) form of the given type.
LieTypeData root_system(Family family, int rank);
/// Same, with an explicit form; the s-parameter is set by s_parameter().
LieTypeData root_system(Family family, int rank, Form form, std::optional<int> s_override = std::nullopt);
/// Parses "A1", "C2", "E8", optionally prefixed by "2" for the outer form.
LieTypeData parse_type(std::string const& text, std::optional<int> s_override = std::nullopt);

/// (sqrt(h(h+2)) - h)^2 / (4h^2).
RealInterval gamma_H(int coxeter, Precision prec = kDefaultPrecision);

/// 0 for inner-split forms, otherwise the override or the default 5.
int s_parameter(LieTypeData const& type, std::optional<int> override_value = std::nullopt);

inline constexpr int kDefaultOuterS = 5;

/// Every valid (family, rank) with rank <= max_rank.
std::vector<LieTypeData> all_types(int max_rank);

} // namespace latgrowth::lie
