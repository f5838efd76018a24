#include "latgrowth/lie.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>
#include <cctype>

namespace latgrowth::lie {

char family_letter(Family f)
{
    return "ABCDEFG"[static_cast<int>(f)];
}

std::string form_name(Form f)
{
    switch (f) {
    case Form::InnerSplit: return "inner-split";
    case Form::Outer2: return "outer-2";
    case Form::Outer3: return "outer-3";
    }
    return "?";
}

std::string LieTypeData::name() const
{
    std::string prefix = form == Form::Outer2 ? "2" : form == Form::Outer3 ? "3" : "";
    return prefix + family_letter(family) + std::to_string(rank);
}

namespace {

[[noreturn]] void invalid(Family family, int rank, std::string const& why)
{
    throw Error(ErrorKind::InvalidType,
                std::string(1, family_letter(family)) + std::to_string(rank) + ": " + why);
}

std::vector<int> exponents_of(Family family, int r)
{
    std::vector<int> m;
    switch (family) {
    case Family::A:
        if (r < 1)
            invalid(family, r, "type A needs rank >= 1");
        for (int i = 1; i <= r; ++i)
            m.push_back(i);
        break;
    case Family::B:
    case Family::C:
        if (r < 2)
            invalid(family, r, "types B and C need rank >= 2");
        for (int i = 1; i <= r; ++i)
            m.push_back(2 * i - 1);
        break;
    case Family::D:
        if (r < 4)
            invalid(family, r, "type D needs rank >= 4");
        for (int i = 1; i <= r - 1; ++i)
            m.push_back(2 * i - 1);
        m.push_back(r - 1);
        break;
    case Family::E:
        if (r == 6)
            m = {1, 4, 5, 7, 8, 11};
        else if (r == 7)
            m = {1, 5, 7, 9, 11, 13, 17};
        else if (r == 8)
            m = {1, 7, 11, 13, 17, 19, 23, 29};
        else
            invalid(family, r, "type E has rank 6, 7 or 8");
        break;
    case Family::F:
        if (r != 4)
            invalid(family, r, "type F has rank 4");
        m = {1, 5, 7, 11};
        break;
    case Family::G:
        if (r != 2)
            invalid(family, r, "type G has rank 2");
        m = {1, 5};
        break;
    }
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

LieTypeData root_system(Family family, int rank)
{
    LieTypeData t;
    t.family = family;
    t.rank = rank;
    t.exponents = exponents_of(family, rank);
    t.dim = 0;
    for (int m : t.exponents)
        t.dim += 2 * m + 1;
    t.coxeter = t.exponents.back() + 1;
    return t;
}

LieTypeData root_system(Family family, int rank, Form form, std::optional<int> s_override)
{
    LieTypeData t = root_system(family, rank);
    if (form == Form::Outer3)
        invalid(family, rank, "trialitarian forms are not supported");
    if (form == Form::Outer2) {
        bool has_outer = (family == Family::A && rank >= 2) || family == Family::D
                         || (family == Family::E && rank == 6);
        if (!has_outer)
            invalid(family, rank, "this type has no outer forms");
    }
    t.form = form;
    t.s_param = s_parameter(t, s_override);
    return t;
}

LieTypeData parse_type(std::string const& text, std::optional<int> s_override)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    Form form = Form::InnerSplit;
    if (!s.empty() && (s[0] == '2' || s[0] == '3')) {
        form = s[0] == '2' ? Form::Outer2 : Form::Outer3;
        s.erase(0, 1);
    }
    if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
        throw Error(ErrorKind::InvalidType, "cannot parse Lie type '" + text + "'");
    Family family = static_cast<Family>(s[0] - 'A');
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::InvalidType, "cannot parse Lie type '" + text + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 10000)
            throw Error(ErrorKind::InvalidType, "rank too large in '" + text + "'");
    }
    return root_system(family, rank, form, s_override);
}

RealInterval gamma_H(int h, Precision prec)
{
    if (h < 2)
        throw Error(ErrorKind::InvalidArgument, "Coxeter number must be >= 2");
    RealInterval hh = RealInterval::from_long(h, prec);
    RealInterval num = sqr(sqrt(RealInterval::from_long(static_cast<long>(h) * (h + 2), prec)) - hh);
    return num / (RealInterval::from_long(4, prec) * sqr(hh));
}

int s_parameter(LieTypeData const& type, std::optional<int> override_value)
{
    if (type.form == Form::InnerSplit) {
        if (override_value && *override_value != 0)
            throw Error(ErrorKind::InconsistentOverride, "s must be 0 for inner forms of split groups");
        return 0;
    }
    if (override_value) {
        if (*override_value < 5)
            throw Error(ErrorKind::InconsistentOverride, "s must be >= 5 for outer forms");
        return *override_value;
    }
    return kDefaultOuterS;
}

std::vector<LieTypeData> all_types(int max_rank)
{
    std::vector<LieTypeData> out;
    for (int r = 1; r <= max_rank; ++r)
        out.push_back(root_system(Family::A, r));
    for (int r = 2; r <= max_rank; ++r)
        out.push_back(root_system(Family::B, r));
    for (int r = 2; r <= max_rank; ++r)
        out.push_back(root_system(Family::C, r));
    for (int r = 4; r <= max_rank; ++r)
        out.push_back(root_system(Family::D, r));
    for (int r : {6, 7, 8})
        if (r <= max_rank)
            out.push_back(root_system(Family::E, r));
    if (max_rank >= 4)
        out.push_back(root_system(Family::F, 4));
    if (max_rank >= 2)
        out.push_back(root_system(Family::G, 2));
    return out;
}

} // namespace latgrowth::lie
