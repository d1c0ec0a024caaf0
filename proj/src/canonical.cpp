#include "gaudin/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gaudin {

AdmissibleData enumerate_admissible(const PBWIndex& index, const std::vector<unsigned>& l,
                                    const GeneratorList& gens) {
    AdmissibleData out;
    const int r = gens.rank;
    const std::size_t factors = index.exps.size();
    for (std::size_t j = 0; j < factors; ++j)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto& [a, b] = gens.gens[g];
            for (unsigned q = 1; q <= index.exps[j][g]; ++q)
                out.s_tuples.push_back({static_cast<int>(j) + 1, a, b, static_cast<int>(q)});
        }
    out.per_color.assign(r, {});
    for (std::size_t s = 0; s < out.s_tuples.size(); ++s) {
        const auto& [j, a, b, q] = out.s_tuples[s];
        for (int i = b; i < a; ++i) out.per_color[i - 1].push_back(s);
    }
    for (int i = 0; i < r; ++i)
        if (out.per_color[i].size() != l[i])
            throw std::invalid_argument("index violates the color-sum condition");
    out.bijection_count = Rational(1);
    for (int i = 0; i < r; ++i) out.bijection_count *= factorial(l[i]);
    return out;
}

namespace {

[[noreturn]] void omega_pole(const std::string& factor) {
    throw std::domain_error("omega has a pole: factor " + factor + " vanishes");
}

}  // namespace

Scalar omega_coefficient(const PBWIndex& index, const std::vector<unsigned>& l,
                         const GeneratorList& gens, const BetheCandidate& t,
                         const std::vector<Scalar>& z) {
    AdmissibleData adm = enumerate_admissible(index, l, gens);
    const int r = gens.rank;

    // beta_i realized as an assignment: position of tuple s in per_color[i]
    // -> a value in {1..l_i}; iterate over all permutation combinations.
    std::vector<std::vector<int>> perms(r);
    for (int i = 0; i < r; ++i) {
        perms[i].resize(l[i]);
        std::iota(perms[i].begin(), perms[i].end(), 0);
    }

    // beta value of tuple s at color i (0-based into t.t[i]).
    std::vector<std::vector<std::size_t>> slot_of(r,
                                                  std::vector<std::size_t>(adm.s_tuples.size()));
    for (int i = 0; i < r; ++i)
        for (std::size_t k = 0; k < adm.per_color[i].size(); ++k)
            slot_of[i][adm.per_color[i][k]] = k;

    Scalar total(0);
    std::vector<bool> done(r, false);
    for (;;) {
        Scalar prod(1);
        for (std::size_t s_idx = 0; s_idx < adm.s_tuples.size(); ++s_idx) {
            const auto& tup = adm.s_tuples[s_idx];
            const int j = tup[0], a = tup[1], b = tup[2];
            // 1 / (t^{(b)}_{beta_b(s)} - z_j)
            int vb = perms[b - 1][slot_of[b - 1][s_idx]];
            Scalar denom = t.t[b - 1][vb] - z[j - 1];
            if (denom.is_zero())
                omega_pole("t^(" + std::to_string(b) + ")_" + std::to_string(vb + 1) + " - z_" +
                           std::to_string(j));
            prod /= denom;
            for (int i = b + 1; i <= a - 1; ++i) {
                int vi = perms[i - 1][slot_of[i - 1][s_idx]];
                int vprev = perms[i - 2][slot_of[i - 2][s_idx]];
                Scalar d = t.t[i - 1][vi] - t.t[i - 2][vprev];
                if (d.is_zero())
                    omega_pole("t^(" + std::to_string(i) + ")_" + std::to_string(vi + 1) +
                               " - t^(" + std::to_string(i - 1) + ")_" +
                               std::to_string(vprev + 1));
                prod /= d;
            }
        }
        total += prod;

        // odometer over the per-color permutations
        int i = 0;
        while (i < r && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
        if (i == r) break;
    }

    Rational norm(1);
    for (std::size_t j = 0; j < index.exps.size(); ++j)
        for (std::size_t g = 0; g < gens.size(); ++g) norm *= factorial(index.exps[j][g]);
    return total / Scalar(norm);
}

TensorVector canonical_vector(const RepSpace& rep, const std::vector<unsigned>& l,
                              const BetheCandidate& t) {
    const WeightBasis& basis = rep.basis(l);
    TensorVector out;
    out.l = l;
    for (std::size_t pos = 0; pos < basis.dim(); ++pos) {
        Scalar c = omega_coefficient(basis.indices()[pos], l, rep.gens(), t,
                                     rep.instance().z);
        if (!c.is_zero()) out.coeffs.emplace(pos, std::move(c));
    }
    return out;
}

}  // namespace gaudin
