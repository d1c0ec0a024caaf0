#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaudin/linalg.hpp"
#include "gaudin/rational.hpp"
#include "gaudin/scalar.hpp"

namespace gaudin {

// Symmetrizable generalized Cartan matrix with its symmetrizer.
struct CartanData {
    int rank = 0;
    std::vector<std::vector<long>> matrix;  // a_ij
    std::vector<long> symmetrizer;          // d_i > 0, so that D*A is symmetric

    long a(int i, int j) const { return matrix[i][j]; }
    long d(int i) const { return symmetrizer[i]; }
    // (alpha_i, alpha_j) = d_i a_ij
    Rational alpha_pairing(int i, int j) const { return Rational(d(i) * a(i, j)); }
};

// Type A_r Cartan data: tridiagonal 2/-1, trivial symmetrizer.
CartanData make_cartan_A(int rank);

struct CartanDiagnostics {
    bool valid = false;
    bool invertible = false;
    std::vector<std::string> violations;
};

CartanDiagnostics validate(const CartanData& cartan);

// Weights given through coroot pairings m_s[i] = <Lambda_s, alpha_i^v>,
// with an optional explicit Gram matrix (Lambda_s, Lambda_k). The Gram
// matrix is mandatory when the Cartan matrix is singular.
struct WeightData {
    std::vector<std::vector<Rational>> coroot_pairings;       // m_s[i]
    std::optional<std::vector<std::vector<Rational>>> gram;   // (Lambda_s, Lambda_k)
    std::size_t count() const { return coroot_pairings.size(); }
};

struct ProblemInstance {
    CartanData cartan;
    WeightData weights;
    std::vector<Scalar> z;
    std::vector<unsigned> l;

    int rank() const { return cartan.rank; }
    std::size_t points() const { return z.size(); }
    unsigned total_occupation() const {
        unsigned t = 0;
        for (unsigned v : l) t += v;
        return t;
    }
    bool z_all_exact() const {
        for (const auto& s : z)
            if (!s.is_exact()) return false;
        return true;
    }
};

// All scalar products consumed by the equations, precomputed and exact.
struct PairingTable {
    std::vector<std::vector<Rational>> alpha_alpha;    // (alpha_i, alpha_j)
    std::vector<std::vector<Rational>> weight_alpha;   // (Lambda_s, alpha_i)
    std::vector<std::vector<Rational>> weight_weight;  // (Lambda_s, Lambda_k)
    std::vector<std::vector<Rational>> coroot;         // <Lambda_s, alpha_i^v>

    Rational weight_alpha_sum(std::size_t s, const std::vector<int>& colors) const {
        Rational acc(0);
        for (int i : colors) acc += weight_alpha[s][i];
        return acc;
    }
};

// Throws std::invalid_argument when the Gram data is unavailable (singular
// Cartan matrix without an explicit Gram matrix) or inconsistent.
PairingTable pairings(const ProblemInstance& instance);

void validate_instance(const ProblemInstance& instance);

// Instance file schema (JSON): see README. parse/serialize round-trip.
ProblemInstance instance_from_json(const std::string& text);
std::string instance_to_json(const ProblemInstance& instance);
ProblemInstance load_instance(const std::string& path);

}  // namespace gaudin
