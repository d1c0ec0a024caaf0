#include "gaudin/rep.hpp"

#include <sstream>
#include <stdexcept>

#include "gaudin/polymodel.hpp"

namespace gaudin {

GeneratorList GeneratorList::for_rank(int rank) {
    GeneratorList g;
    g.rank = rank;
    for (int b = 1; b <= rank; ++b)
        for (int a = b + 1; a <= rank + 1; ++a)
            g.gens.emplace_back(a, b);
    return g;
}

long GeneratorList::index_of(int a, int b) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].first == a && gens[i].second == b) return static_cast<long>(i);
    return -1;
}

std::vector<unsigned> GeneratorList::color_vector(std::size_t gen_index) const {
    const auto& [a, b] = gens[gen_index];
    std::vector<unsigned> color(rank, 0);
    for (int i = b; i < a; ++i) color[i - 1] = 1;
    return color;
}

std::string PBWIndex::label(const GeneratorList& gens) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t f = 0; f < exps.size(); ++f) {
        if (f > 0) os << " (x) ";
        bool printed = false;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (exps[f][g] == 0) continue;
            os << "e" << gens.gens[g].first << gens.gens[g].second;
            if (exps[f][g] > 1) os << "^" << exps[f][g];
            printed = true;
            any = true;
        }
        os << (printed ? ".v" : "v");
    }
    (void)any;
    return os.str();
}

WeightBasis::WeightBasis(const GeneratorList& gens, std::size_t factors,
                         std::vector<unsigned> l)
    : l_(std::move(l)) {
    const std::size_t slots = factors * gens.size();
    std::vector<std::vector<unsigned>> colors(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) colors[g] = gens.color_vector(g);

    PBWIndex current;
    current.exps.assign(factors, std::vector<unsigned>(gens.size(), 0));
    std::vector<unsigned> remaining = l_;

    // Lexicographic enumeration over flattened (factor, generator) slots.
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots) {
            for (unsigned rem : remaining)
                if (rem != 0) return;
            positions_.emplace(current, indices_.size());
            indices_.push_back(current);
            return;
        }
        std::size_t f = slot / gens.size();
        std::size_t g = slot % gens.size();
        unsigned cap = 0;
        bool first = true;
        for (std::size_t i = 0; i < colors[g].size(); ++i) {
            if (colors[g][i] == 0) continue;
            unsigned c = remaining[i] / colors[g][i];
            cap = first ? c : std::min(cap, c);
            first = false;
        }
        for (unsigned e = 0; e <= cap; ++e) {
            if (e > 0)
                for (std::size_t i = 0; i < colors[g].size(); ++i)
                    remaining[i] -= colors[g][i];
            current.exps[f][g] = e;
            self(self, slot + 1);
        }
        current.exps[f][g] = 0;
        for (unsigned e = 0; e < cap; ++e)
            for (std::size_t i = 0; i < colors[g].size(); ++i)
                remaining[i] += colors[g][i];
    };
    rec(rec, 0);
}

long WeightBasis::position_of(const PBWIndex& index) const {
    auto it = positions_.find(index);
    return it == positions_.end() ? -1 : static_cast<long>(it->second);
}

double TensorVector::max_abs() const {
    double m = 0.0;
    for (const auto& [pos, s] : coeffs) m = std::max(m, s.abs_double());
    return m;
}

bool TensorVector::is_exact() const {
    for (const auto& [pos, s] : coeffs)
        if (!s.is_exact()) return false;
    return true;
}

TensorVector TensorVector::scaled(const Scalar& s) const {
    TensorVector out;
    out.l = l;
    for (const auto& [pos, c] : coeffs) {
        Scalar v = c * s;
        if (!v.is_zero()) out.coeffs.emplace(pos, std::move(v));
    }
    return out;
}

std::map<std::vector<unsigned>, Rational> straighten_word(
    const std::vector<std::pair<int, int>>& word,
    const std::vector<Rational>& coroot_pairings, const GeneratorList& gens) {
    const int r = gens.rank;
    // gl diagonal eigenvalues on v: lambda_a - lambda_{a+1} = <Lambda, alpha_a^v>,
    // normalized by lambda_{r+1} = 0.
    std::vector<Rational> lambda(r + 2, Rational(0));
    for (int a = r; a >= 1; --a) lambda[a] = lambda[a + 1] + coroot_pairings[a - 1];

    auto lowering = [](const std::pair<int, int>& g) { return g.first > g.second; };
    auto order = [&gens](const std::pair<int, int>& g) {
        return gens.index_of(g.first, g.second);
    };

    std::map<std::vector<unsigned>, Rational> out;
    using Term = std::pair<std::vector<std::pair<int, int>>, Rational>;
    std::vector<Term> work{{word, Rational(1)}};

    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();

        for (;;) {
            long p = -1;
            for (long i = static_cast<long>(w.size()) - 1; i >= 0; --i)
                if (!lowering(w[i])) {
                    p = i;
                    break;
                }
            long swap_at = -1;
            if (p >= 0) {
                auto [a, b] = w[p];
                if (p == static_cast<long>(w.size()) - 1) {
                    if (a < b) break;  // raising annihilates v
                    c *= lambda[a];    // diagonal acts by its eigenvalue
                    if (c == 0) break;
                    w.pop_back();
                    continue;
                }
                swap_at = p;
            } else {
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    if (order(w[i]) > order(w[i + 1])) {
                        swap_at = static_cast<long>(i);
                        break;
                    }
                if (swap_at < 0) {
                    // Ordered lowering monomial: accumulate.
                    std::vector<unsigned> exps(gens.size(), 0);
                    for (const auto& g : w) ++exps[order(g)];
                    auto it = out.find(exps);
                    if (it == out.end()) {
                        out.emplace(std::move(exps), c);
                    } else {
                        it->second += c;
                        if (it->second == 0) out.erase(it);
                    }
                    break;
                }
            }

            // g h = h g + [g, h],  [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb.
            const auto g = w[swap_at];
            const auto h = w[swap_at + 1];
            if (g.second == h.first) {
                auto w2 = w;
                w2[swap_at] = {g.first, h.second};
                w2.erase(w2.begin() + swap_at + 1);
                work.emplace_back(std::move(w2), c);
            }
            if (h.second == g.first) {
                auto w3 = w;
                w3[swap_at] = {h.first, g.second};
                w3.erase(w3.begin() + swap_at + 1);
                work.emplace_back(std::move(w3), -c);
            }
            std::swap(w[swap_at], w[swap_at + 1]);
        }
    }
    return out;
}

RepSpace::RepSpace(ProblemInstance instance)
    : instance_(std::move(instance)), pairs_(pairings(instance_)),
      gens_(GeneratorList::for_rank(instance_.rank())) {
    CartanData expected = make_cartan_A(instance_.rank());
    if (instance_.cartan.matrix != expected.matrix ||
        instance_.cartan.symmetrizer != expected.symmetrizer)
        throw std::invalid_argument(
            "RepSpace requires type-A Cartan data (sl_{r+1} representation engine)");
}

const WeightBasis& RepSpace::basis(const std::vector<unsigned>& l) const {
    auto it = bases_.find(l);
    if (it == bases_.end())
        it = bases_.emplace(l, std::make_unique<WeightBasis>(gens_, instance_.points(), l))
                 .first;
    return *it->second;
}

std::optional<std::vector<unsigned>> RepSpace::shifted_l(int a, int b,
                                                         const std::vector<unsigned>& l) const {
    std::vector<unsigned> out = l;
    if (a == b) return out;
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int i = lo; i < hi; ++i) {
        if (a > b) {
            out[i - 1] += 1;
        } else {
            if (out[i - 1] == 0) return std::nullopt;
            out[i - 1] -= 1;
        }
    }
    return out;
}

LinearOperator RepSpace::generator_matrix(int a, int b, std::size_t factor,
                                          const std::vector<unsigned>& l) const {
    auto target_l = shifted_l(a, b, l);
    if (!target_l)
        throw std::invalid_argument("generator_matrix: operator is zero (no target space)");
    const WeightBasis& src = basis(l);
    const WeightBasis& dst = basis(*target_l);

    LinearOperator op;
    op.source_l = l;
    op.target_l = *target_l;
    op.matrix = matrix_zero(dst.dim(), src.dim());

    const auto& m = pairs_.coroot;
    for (std::size_t col = 0; col < src.dim(); ++col) {
        const PBWIndex& I = src.indices()[col];
        std::vector<std::pair<int, int>> word{{a, b}};
        for (std::size_t g = 0; g < gens_.size(); ++g)
            for (unsigned e = 0; e < I.exps[factor][g]; ++e) word.push_back(gens_.gens[g]);
        auto terms = straighten_word(word, m[factor], gens_);
        for (const auto& [exps, coeff] : terms) {
            PBWIndex J = I;
            J.exps[factor] = exps;
            long row = dst.position_of(J);
            if (row < 0)
                throw std::logic_error("straightened term escaped the target weight space");
            op.matrix[row][col] += Scalar(coeff);
        }
    }
    return op;
}

LinearOperator RepSpace::cartan_matrix(int c, std::size_t factor,
                                       const std::vector<unsigned>& l) const {
    LinearOperator upper = generator_matrix(c, c, factor, l);
    LinearOperator lower = generator_matrix(c + 1, c + 1, factor, l);
    upper.matrix = matsub(upper.matrix, lower.matrix);
    return upper;
}

CasimirOperator RepSpace::casimir_matrix(std::size_t i, std::size_t j,
                                         const std::vector<unsigned>& l) const {
    if (i == j) throw std::invalid_argument("casimir_matrix: factors must differ");
    const WeightBasis& b = basis(l);
    const int r = instance_.rank();

    Matrix acc = matrix_zero(b.dim(), b.dim());
    for (int a = 1; a <= r + 1; ++a) {
        for (int bb = 1; bb <= r + 1; ++bb) {
            if (a == bb) continue;
            // e_{a,bb} in factor i, e_{bb,a} in factor j
            auto mid_l = shifted_l(bb, a, l);
            if (!mid_l) continue;
            LinearOperator first = generator_matrix(bb, a, j, l);
            LinearOperator second = generator_matrix(a, bb, i, *mid_l);
            acc = matadd(acc, matmul(second.matrix, first.matrix));
        }
    }

    Matrix amat = matrix_zero(r, r);
    for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) amat[c][d] = Scalar(Rational(instance_.cartan.a(c, d)));
    auto ainv = invert_exact(amat);
    if (!ainv)
        throw std::invalid_argument("casimir_matrix: singular Cartan matrix");
    for (int c = 0; c < r; ++c) {
        LinearOperator hc = cartan_matrix(c + 1, i, l);
        for (int d = 0; d < r; ++d) {
            if ((*ainv)[c][d].is_zero()) continue;
            LinearOperator hd = cartan_matrix(d + 1, j, l);
            acc = matadd(acc, matscale(matmul(hc.matrix, hd.matrix), (*ainv)[c][d]));
        }
    }

    CasimirOperator out;
    out.whole = LinearOperator{l, l, std::move(acc)};

    if (r == 2) {
        PolyModel model(instance_, pairs_);
        out.part0 = model.matrix_of(model.casimir_part_op(PolyModel::Part::kZero, i, j), b, b);
        out.part0_tilde =
            model.matrix_of(model.casimir_part_op(PolyModel::Part::kZeroTilde, i, j), b, b);
        out.part_up = model.matrix_of(model.casimir_part_op(PolyModel::Part::kUp, i, j), b, b);
        out.part_down =
            model.matrix_of(model.casimir_part_op(PolyModel::Part::kDown, i, j), b, b);
    }
    return out;
}

std::vector<GaudinOperator> RepSpace::gaudin_matrices(const std::vector<unsigned>& l) const {
    const std::size_t n = instance_.points();
    const WeightBasis& b = basis(l);
    std::vector<GaudinOperator> out;

    // Omega^{(ij)} is symmetric in (i, j); build each unordered pair once.
    std::map<std::pair<std::size_t, std::size_t>, Matrix> omega;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            omega.emplace(std::make_pair(i, j), casimir_matrix(i, j, l).whole.matrix);

    for (std::size_t i = 0; i < n; ++i) {
        Matrix h = matrix_zero(b.dim(), b.dim());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Matrix& om = omega.at({std::min(i, j), std::max(i, j)});
            Scalar w = Scalar(1) / (instance_.z[i] - instance_.z[j]);
            h = matadd(h, matscale(om, w));
        }
        out.push_back(GaudinOperator{static_cast<int>(i) + 1, LinearOperator{l, l, std::move(h)}});
    }
    return out;
}

double RepSpace::singular_residual(const TensorVector& v) const {
    double res = 0.0;
    for (int a = 1; a <= instance_.rank(); ++a) {
        auto target = shifted_l(a, a + 1, v.l);
        if (!target) continue;  // raising annihilates the whole space
        LinearOperator e = generator_matrix(a, a + 1, 0, v.l);
        // sum over factors
        TensorVector image;
        image.l = *target;
        for (std::size_t f = 0; f < instance_.points(); ++f) {
            LinearOperator ef = f == 0 ? e : generator_matrix(a, a + 1, f, v.l);
            TensorVector part = apply(ef, v);
            for (const auto& [pos, s] : part.coeffs) {
                auto it = image.coeffs.find(pos);
                if (it == image.coeffs.end())
                    image.coeffs.emplace(pos, s);
                else {
                    it->second += s;
                    if (it->second.is_zero()) image.coeffs.erase(it);
                }
            }
        }
        res = std::max(res, image.max_abs());
    }
    return res;
}

bool RepSpace::is_singular(const TensorVector& v, double tolerance) const {
    return singular_residual(v) <= tolerance;
}

TensorVector RepSpace::apply(const LinearOperator& op, const TensorVector& v) const {
    if (v.l != op.source_l)
        throw std::invalid_argument("apply: vector lives in a different weight space");
    TensorVector out;
    out.l = op.target_l;
    for (const auto& [col, s] : v.coeffs) {
        for (std::size_t row = 0; row < op.matrix.size(); ++row) {
            if (op.matrix[row][col].is_zero()) continue;
            Scalar add = op.matrix[row][col] * s;
            auto it = out.coeffs.find(row);
            if (it == out.coeffs.end())
                out.coeffs.emplace(row, std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero()) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

}  // namespace gaudin
