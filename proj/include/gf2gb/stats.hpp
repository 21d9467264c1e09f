#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace gf2gb {

/// Internal counters of a solver run.
///   c_pair    pairs removed from the queue by selection
///   l_matrix  largest reduction-matrix row count over all rounds
///   reductor  reducer rows appended across all rounds (seed rows excluded)
///   round     number of reduction rounds
///   solved    variables assigned by middle solving
///   h_deg_gb  highest total degree in the final reduced basis
///   gb_size   size of the final reduced basis; gb_size_raw counts the basis
///             as the update pass left it, before interreduction
///   r_time_ms cumulative reduction-phase wall time
struct RunStats {
    std::uint64_t c_pair = 0;
    std::uint64_t l_matrix = 0;
    std::uint64_t reductor = 0;
    std::uint64_t round = 0;
    std::uint64_t solved = 0;
    std::uint64_t h_deg_gb = 0;
    std::uint64_t gb_size = 0;
    std::uint64_t gb_size_raw = 0;
    double r_time_ms = 0.0;
    std::string algorithm;
    std::string order;
    std::uint64_t n_vars = 0;
    std::uint64_t n_eqs = 0;
    std::uint64_t seed = 0;
};

inline nlohmann::json to_json(const RunStats& s) {
    return nlohmann::json{
        {"c_pair", s.c_pair},       {"l_matrix", s.l_matrix},
        {"reductor", s.reductor},   {"round", s.round},
        {"solved", s.solved},       {"h_deg_gb", s.h_deg_gb},
        {"gb_size", s.gb_size},     {"gb_size_raw", s.gb_size_raw},
        {"r_time_ms", s.r_time_ms}, {"algorithm", s.algorithm},
        {"order", s.order},         {"n_vars", s.n_vars},
        {"n_eqs", s.n_eqs},         {"seed", s.seed},
    };
}

}  // namespace gf2gb
