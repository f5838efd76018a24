#pragma once

// Report builders behind the command-line tool.  Each returns the complete
// output text for one command; identical inputs give byte-identical text
// regardless of the thread count.

#include "latgrowth/counting.hpp"
#include "latgrowth/errors.hpp"
#include "latgrowth/pisot_tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgrowth::report {

inline constexpr char const* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Format { Table, Json, Csv };
Format parse_format(std::string const& text);

struct RunConfig {
    Precision precision = 128;
    unsigned long prime_bound = 100000;
    Format format = Format::Table;
    int threads = 1;
    counting::BoundParams params;
    std::vector<pisot::TowerEntry> towers = pisot::tower_catalog();

    /// precision >= 64 bits, prime bound >= 100, threads >= 1.
    void validate() const;
};

struct Report {
    std::string text;
    std::vector<std::string> warnings;
};

/// Exit status for a library error.
int exit_code(ErrorKind kind);

struct FieldArgs {
    std::string poly;
    std::optional<std::string> known_disc;
};
Report field_report(RunConfig const& cfg, FieldArgs const& args);

struct PisotArgs {
    std::string poly;
    std::optional<std::string> known_disc;
    int place = 0;
    int radius = 3;
    /// When set, also build alpha = prod (1 - theta_i) and l = k[sqrt(alpha)].
    std::optional<int> t;
};
Report pisot_report(RunConfig const& cfg, PisotArgs const& args);

struct TowerArgs {
    std::optional<std::string> name;
    int levels = 3;
    /// Fixed-signature quadratic extensions with t complex places.
    std::optional<int> t;
};
Report tower_report(RunConfig const& cfg, TowerArgs const& args);

struct CovolumeArgs {
    /// Exactly one of: rational field, polynomial, tower level.
    bool rational = false;
    std::optional<std::string> poly;
    std::optional<std::string> known_disc;
    std::optional<std::string> tower;
    int level = 0;

    std::string type = "A1";
    std::optional<int> s_override;
    std::optional<unsigned long> p0;
    /// Outer forms over an explicit field: alpha as comma-separated integer
    /// coordinates, or t for a product of Pisot elements.
    std::optional<std::string> alpha;
    std::optional<int> t;
    int radius = 3;
    /// Outer forms over a tower level: bound on D_{l/k}^(1/d), decimal.
    std::optional<std::string> c0_prime;
};
Report covolume_report(RunConfig const& cfg, CovolumeArgs const& args);

struct GrowthLowerArgs {
    std::string tower = "martinet";
    std::string type = "A1";
    std::optional<int> s_override;
    unsigned long p_prime = 3;
    unsigned long p0 = 2;
    int levels = 3;
    /// Replaces the tower's level degrees (needed when the tower does not
    /// specify them).
    std::optional<std::vector<long>> degrees;
    bool rank_override = false;
    std::optional<std::string> c0_prime;
};
Report growth_lower_report(RunConfig const& cfg, GrowthLowerArgs const& args);

struct GrowthUpperArgs {
    std::vector<unsigned long> xs{100, 1000, 10000, 100000, 1000000};
    /// Same residue data at every x; default is the worst case
    /// {(2, [C1 log x])} allowed by the budget.
    std::optional<std::vector<counting::ResidueEntry>> residue;
};
Report growth_upper_report(RunConfig const& cfg, GrowthUpperArgs const& args);

Report lie_dump_report(RunConfig const& cfg, int max_rank = 8);

/// "2:1,3:2" -> {(2,1), (3,2)}.
std::vector<counting::ResidueEntry> parse_residue_list(std::string const& text);
/// "20,40,80" -> {20, 40, 80}.
std::vector<long> parse_long_list(std::string const& text);

} // namespace latgrowth::report
