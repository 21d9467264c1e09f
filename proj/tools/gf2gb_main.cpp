// Command-line driver: parse or generate a GF(2) polynomial system, run the
// selected basis algorithm, print the assignment/basis/summary, optionally
// verify against the brute-force variety and the pairwise reduction check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gf2gb/gf2gb.hpp"

namespace {

using namespace gf2gb;

struct GenSpec {
    enum class Kind { none, cyclic, hfe } kind = Kind::none;
    unsigned degree_bound = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

GenSpec parse_gen(const std::string& text) {
    GenSpec spec;
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--gen", "expected cyclic:N or hfe:D,N,SEED");
    std::string kind = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    std::vector<std::uint64_t> nums;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            nums.push_back(std::stoull(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--gen", "bad number '" + tok + "'");
        }
    }
    if (kind == "cyclic" && nums.size() == 1) {
        spec.kind = GenSpec::Kind::cyclic;
        spec.n = nums[0];
    } else if (kind == "hfe" && nums.size() == 3) {
        spec.kind = GenSpec::Kind::hfe;
        spec.degree_bound = static_cast<unsigned>(nums[0]);
        spec.n = nums[1];
        spec.seed = nums[2];
    } else {
        throw CLI::ValidationError("--gen", "expected cyclic:N or hfe:D,N,SEED");
    }
    return spec;
}

// Points of {0,1}^n matching the assignment whose completions zero the basis.
std::vector<std::uint32_t> reconstruct_solutions(const std::vector<Polynomial>& basis,
                                                 const Assignment& assignment,
                                                 const Ring& ring) {
    std::vector<std::uint32_t> out;
    const std::uint32_t total = 1u << ring.n;
    for (std::uint32_t point = 0; point < total; ++point) {
        bool match = true;
        for (const auto& [var, val] : assignment.solved)
            if (static_cast<int>((point >> var) & 1u) != val) {
                match = false;
                break;
            }
        if (!match)
            continue;
        for (const Polynomial& p : basis)
            if (evaluate(p, point) == 1) {
                match = false;
                break;
            }
        if (match)
            out.push_back(point);
    }
    return out;
}

bool basis_passes_reduction_check(const std::vector<Polynomial>& basis,
                                  const std::vector<Polynomial>& inputs,
                                  const Assignment& assignment, const Ring& ring) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial s = s_polynomial(basis[i], basis[j], ring);
            if (!s.is_zero() && !top_reduce(s, basis, ring).is_zero())
                return false;
        }
    for (const Polynomial& f : inputs) {
        Polynomial g = f;
        for (const auto& [var, val] : assignment.solved)
            g = substitute(g, var, val, ring);
        if (!g.is_zero() && !top_reduce(g, basis, ring).is_zero())
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases over GF(2): F4 with field-equation, "
                 "S-polynomial-row and middle-solving accelerations"};

    std::string algorithm = "fe-f4";
    std::string order_name;
    std::string input_path;
    std::string gen_text;
    std::string stats_path;
    std::string renew_name = "recompute";
    std::size_t history_cap = 0;
    bool verify = false;
    bool no_adjoin = false;
    bool no_cascade = false;

    app.add_option("--algorithm", algorithm, "buchberger|f4|fe-f4|s-f4|ms-f4")
        ->check(CLI::IsMember({"buchberger", "f4", "fe-f4", "s-f4", "ms-f4"}));
    app.add_option("--order", order_name, "grevlex|lex (default grevlex)")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    auto* in_opt = app.add_option("--input", input_path, "problem file");
    auto* gen_opt = app.add_option("--gen", gen_text, "cyclic:N or hfe:D,N,SEED");
    in_opt->excludes(gen_opt);
    app.add_option("--stats", stats_path, "write run counters as JSON");
    app.add_flag("--verify", verify,
                 "check the basis pairwise-reduction property and, for n <= 24, "
                 "variety preservation against brute force");
    app.add_option("--renew-mode", renew_name, "recompute|rebuild (ms-f4 back-substitution)")
        ->check(CLI::IsMember({"recompute", "rebuild"}));
    app.add_option("--history-cap", history_cap, "rounds of reuse history kept (0 = unbounded)");
    app.add_flag("--no-adjoin", no_adjoin,
                 "skip the field equations (f4/fe-f4 ablations only)");
    app.add_flag("--no-cascade", no_cascade, "disable chained solving inside back-substitution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SolverConfig cfg;
        if (algorithm == "buchberger")
            cfg.algorithm = Algorithm::buchberger;
        else if (algorithm == "f4")
            cfg.algorithm = Algorithm::f4;
        else if (algorithm == "fe-f4")
            cfg.algorithm = Algorithm::fe_f4;
        else if (algorithm == "s-f4")
            cfg.algorithm = Algorithm::s_f4;
        else
            cfg.algorithm = Algorithm::ms_f4;
        cfg.renew_mode = renew_name == "rebuild" ? RenewMode::rebuild : RenewMode::recompute;
        cfg.cascade = !no_cascade;
        cfg.history_cap = history_cap;
        if (no_adjoin) {
            if (cfg.algorithm == Algorithm::s_f4 || cfg.algorithm == Algorithm::ms_f4) {
                std::cerr << "error: --no-adjoin is not valid for " << algorithm
                          << " (its reduction path presumes the field equations)\n";
                return 2;
            }
            cfg.adjoin_override_off = true;
        }

        std::optional<MonomialOrder> order_flag;
        if (order_name == "grevlex")
            order_flag = MonomialOrder::grevlex;
        else if (order_name == "lex")
            order_flag = MonomialOrder::lex;

        Ring ring;
        std::vector<Polynomial> system;
        std::uint64_t seed = 0;

        if (!gen_text.empty()) {
            GenSpec spec = parse_gen(gen_text);
            ring = Ring(spec.n, order_flag.value_or(MonomialOrder::grevlex));
            if (spec.kind == GenSpec::Kind::cyclic) {
                system = gen_cyclic(ring);
            } else {
                HfeInstance inst = gen_hfe(spec.degree_bound, ring, spec.seed);
                system = std::move(inst.system);
                seed = spec.seed;
            }
        } else if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "error: cannot open '" << input_path << "'\n";
                return 2;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            Problem problem = parse_problem(buffer.str(), order_flag);
            ring = std::move(problem.ring);
            system = std::move(problem.system);
        } else {
            std::cerr << "error: one of --input or --gen is required\n";
            return 2;
        }

        SolveResult result;
        if (cfg.algorithm == Algorithm::buchberger) {
            result.stats.algorithm = to_string(cfg.algorithm);
            result.stats.order = to_string(ring.order);
            result.stats.n_vars = ring.n;
            result.stats.n_eqs = system.size();
            result.basis = buchberger_reference(system, ring, &result.stats);
            result.inconsistent = result.basis.size() == 1 && result.basis[0].is_one();
            result.stats.gb_size_raw = result.stats.gb_size;
        } else {
            result = f4_solve(system, ring, cfg);
        }
        result.stats.seed = seed;

        if (!result.inconsistent)
            for (const Assignment::Solved& s : result.assignment.order_of_solution)
                std::cout << "solved: " << ring.names[s.var] << " = " << s.value << "\n";
        for (const Polynomial& p : result.basis)
            std::cout << "GB: " << render(p, ring) << "\n";
        if (result.inconsistent)
            std::cout << "solutions: none\n";

        bool verified_ok = true;
        if (verify) {
            std::vector<Polynomial> checked_inputs =
                cfg.adjoin_field_eqs() ? adjoin_field_equations(system, ring) : system;
            verified_ok = basis_passes_reduction_check(result.basis, checked_inputs,
                                                       result.assignment, ring);
            if (verified_ok && ring.n <= 24) {
                std::vector<std::uint32_t> truth = brute_force_variety(checked_inputs, ring);
                std::vector<std::uint32_t> got =
                    reconstruct_solutions(result.basis, result.assignment, ring);
                verified_ok = truth == got;
            }
        }

        std::cout << "summary: algorithm=" << result.stats.algorithm
                  << " order=" << result.stats.order << " n_vars=" << result.stats.n_vars
                  << " n_eqs=" << result.stats.n_eqs << " round=" << result.stats.round
                  << " c_pair=" << result.stats.c_pair << " l_matrix=" << result.stats.l_matrix
                  << " reductor=" << result.stats.reductor << " solved=" << result.stats.solved
                  << " gb_size=" << result.stats.gb_size
                  << " gb_size_raw=" << result.stats.gb_size_raw
                  << " h_deg_gb=" << result.stats.h_deg_gb
                  << " r_time_ms=" << result.stats.r_time_ms
                  << (verify ? (verified_ok ? " verify=ok" : " verify=FAILED") : "") << "\n";

        if (!stats_path.empty()) {
            std::ofstream out(stats_path);
            if (!out) {
                std::cerr << "error: cannot write '" << stats_path << "'\n";
                return 2;
            }
            out << to_json(result.stats).dump(2) << "\n";
        }
        return verified_ok ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
