#include "latgrowth/json_util.hpp"

#include <fmt/format.h>

namespace latgrowth {

nlohmann::ordered_json interval_json(RealInterval const& x, int digits)
{
    auto [lo, hi] = x.to_decimal(digits);
    return nlohmann::ordered_json::array({lo, hi});
}

std::string rational_string(mpq_class const& q)
{
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string integer_string(mpz_class const& z)
{
    return z.get_str();
}

std::string real_string(double v)
{
    return fmt::format("{}", v);
}

} // namespace latgrowth
