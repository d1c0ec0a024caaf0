#pragma once

#include <cstdint>
#include <string>

#include "gaudin/master.hpp"

namespace gaudin {

struct SolverConfig {
    mpfr_prec_t precision = 128;
    double residual_tolerance = 1e-24;
    unsigned max_iterations = 200;
    unsigned starts = 128;
    double box_scale = 2.0;   // sampling radius = box_scale * z-spread
    // iterates beyond escape_factor * scale are runaway pseudo-roots of the
    // decaying rational system and are rejected
    double escape_factor = 1e8;
    std::uint64_t seed = 1;
    double dedupe_tolerance = 1e-12;

    void validate() const;
};

struct SolutionRecord {
    BetheCandidate t;
    double residual = 0.0;
    EigenvalueVector mu;
    bool coordinates_distinct = true;  // within each color
    bool avoids_z = true;
    bool linked_colors_distinct = true;  // across colors with (a_i,a_j) != 0
    bool refined_ok = true;
    mpfr_prec_t precision = 0;

    bool admissible() const {
        return coordinates_distinct && avoids_z && linked_colors_distinct;
    }
};

// Newton with analytic Jacobian from seeded random starts; converged,
// admissible, S_l-deduplicated records in a deterministic order.
std::vector<SolutionRecord> solve_bae(const ProblemInstance& instance,
                                      const PairingTable& pairs, const SolverConfig& config);

// Newton polish at the target precision; the refined residual must reach
// 2^{16 - p}, otherwise the record is flagged as spurious.
SolutionRecord refine(const ProblemInstance& instance, const PairingTable& pairs,
                      const SolutionRecord& record, mpfr_prec_t target_precision,
                      unsigned max_iterations = 64);

// Canonical representative per S_l orbit (per-color sort by (re, im));
// orbits within tolerance merge, keeping the smaller residual.
std::vector<SolutionRecord> dedupe_modulo_Sl(std::vector<SolutionRecord> records,
                                             double tolerance);

// Archive serialization (JSON with lossless hex floats).
std::string archive_to_json(const ProblemInstance& instance,
                            const std::vector<SolutionRecord>& records);
std::vector<SolutionRecord> archive_from_json(const ProblemInstance& instance,
                                              const std::string& text);

}  // namespace gaudin
