#include "gaudin/polymodel.hpp"

#include <stdexcept>

namespace gaudin {

PolyOp op_zero() {
    return [](const MultiPoly& p) { return MultiPoly(p.vars()); };
}

PolyOp op_identity() {
    return [](const MultiPoly& p) { return p; };
}

PolyOp op_sum(std::vector<PolyOp> ops) {
    return [ops = std::move(ops)](const MultiPoly& p) {
        MultiPoly acc(p.vars());
        for (const auto& op : ops) acc = acc + op(p);
        return acc;
    };
}

PolyOp op_scale(Scalar s, PolyOp op) {
    return [s = std::move(s), op = std::move(op)](const MultiPoly& p) {
        return op(p).scaled(s);
    };
}

PolyOp op_shift(Scalar s) {
    return [s = std::move(s)](const MultiPoly& p) { return p.scaled(s); };
}

PolyOp op_after(PolyOp a, PolyOp b) {
    return [a = std::move(a), b = std::move(b)](const MultiPoly& p) { return a(b(p)); };
}

PolyOp op_mul_var(VarSetPtr vars, std::size_t var) {
    return [var](const MultiPoly& p) { return p.mul_var(var); };
}

PolyOp op_derive(std::size_t var) {
    return [var](const MultiPoly& p) { return p.derive(var); };
}

namespace {

std::vector<std::string> model_var_names(int rank, std::size_t factors) {
    std::vector<std::string> names;
    for (std::size_t f = 1; f <= factors; ++f) {
        if (rank == 1) {
            names.push_back("x" + std::to_string(f));
        } else {
            for (int k = 1; k <= 3; ++k)
                names.push_back("x" + std::to_string(k) + "_" + std::to_string(f));
        }
    }
    return names;
}

}  // namespace

PolyModel::PolyModel(const ProblemInstance& instance, const PairingTable& pairs)
    : instance_(&instance), pairs_(&pairs), rank_(instance.rank()),
      factors_(instance.points()), vars_(VarSet::make(model_var_names(instance.rank(),
                                                                      instance.points()))),
      gens_(GeneratorList::for_rank(instance.rank())) {
    if (rank_ != 1 && rank_ != 2)
        throw std::invalid_argument("polynomial model exists for rank 1 and 2 only");
}

std::size_t PolyModel::var_index(int k, std::size_t factor) const {
    if (rank_ == 1) {
        if (k != 1) throw std::out_of_range("sl2 model has one variable per factor");
        return factor;
    }
    if (k < 1 || k > 3) throw std::out_of_range("sl3 model variable index out of range");
    return factor * 3 + static_cast<std::size_t>(k - 1);
}

MultiPoly PolyModel::monomial(const PBWIndex& index) const {
    MultiPoly::Exponents e(vars_->size(), 0);
    for (std::size_t f = 0; f < factors_; ++f) {
        if (rank_ == 1) {
            e[var_index(1, f)] = index.exps[f][0];
        } else {
            // x1 <-> e_{2,1}, x3 <-> e_{3,1}, x2 <-> e_{3,2}
            e[var_index(1, f)] = index.exps[f][gens_.index_of(2, 1)];
            e[var_index(3, f)] = index.exps[f][gens_.index_of(3, 1)];
            e[var_index(2, f)] = index.exps[f][gens_.index_of(3, 2)];
        }
    }
    MultiPoly::TermMap terms;
    terms.emplace(std::move(e), Scalar(1));
    return MultiPoly::from_terms(vars_, std::move(terms));
}

PBWIndex PolyModel::index_of_exponents(const MultiPoly::Exponents& e) const {
    PBWIndex idx;
    idx.exps.assign(factors_, std::vector<unsigned>(gens_.size(), 0));
    for (std::size_t f = 0; f < factors_; ++f) {
        if (rank_ == 1) {
            idx.exps[f][0] = e[var_index(1, f)];
        } else {
            idx.exps[f][gens_.index_of(2, 1)] = e[var_index(1, f)];
            idx.exps[f][gens_.index_of(3, 1)] = e[var_index(3, f)];
            idx.exps[f][gens_.index_of(3, 2)] = e[var_index(2, f)];
        }
    }
    return idx;
}

PolyOp PolyModel::gen_op(int a, int b, std::size_t factor) const {
    const auto wa = [&](int color) { return Scalar(pairs_->weight_alpha[factor][color]); };
    if (rank_ == 1) {
        std::size_t x = var_index(1, factor);
        PolyOp d = op_derive(x);
        if (a == 2 && b == 1) return op_mul_var(vars_, x);
        if (a == 1 && b == 2)
            // e = -x d^2 + (Lambda, alpha_1) d
            return op_sum({op_scale(Scalar(-1), op_after(op_mul_var(vars_, x), op_after(d, d))),
                           op_scale(wa(0), d)});
        throw std::invalid_argument("sl2 model: unknown generator");
    }

    std::size_t x1 = var_index(1, factor), x2 = var_index(2, factor), x3 = var_index(3, factor);
    PolyOp d1 = op_derive(x1), d2 = op_derive(x2), d3 = op_derive(x3);
    PolyOp m1 = op_mul_var(vars_, x1), m2 = op_mul_var(vars_, x2), m3 = op_mul_var(vars_, x3);

    if (a == 2 && b == 1) return m1;
    if (a == 3 && b == 1) return m3;
    if (a == 3 && b == 2) return op_sum({m2, op_after(m3, d1)});
    if (a == 1 && b == 2)
        return op_sum({op_scale(Scalar(-1), op_after(m1, op_after(d1, d1))),
                       op_after(m2, op_after(d1, d2)),
                       op_scale(Scalar(-1), op_after(m2, d3)),
                       op_scale(Scalar(-1), op_after(m3, op_after(d3, d1))),
                       op_scale(wa(0), d1)});
    if (a == 2 && b == 3)
        return op_sum({op_scale(Scalar(-1), op_after(m2, op_after(d2, d2))),
                       op_after(m1, d3), op_scale(wa(1), d2)});
    if (a == 1 && b == 3)
        return op_sum({op_scale(Scalar(-1), op_after(m3, op_after(d3, d3))),
                       op_scale(Scalar(-1), op_after(m1, op_after(d1, d3))),
                       op_after(m2, op_after(d1, op_after(d2, d2))),
                       op_scale(Scalar(-1), op_after(m2, op_after(d2, d3))),
                       op_scale(Scalar(-1) * wa(1), op_after(d1, d2)),
                       op_scale(wa(0) + wa(1), d3)});
    throw std::invalid_argument("sl3 model: unknown generator");
}

PolyOp PolyModel::cartan_op(int c, std::size_t factor) const {
    const auto wa = [&](int color) { return Scalar(pairs_->weight_alpha[factor][color]); };
    if (rank_ == 1) {
        std::size_t x = var_index(1, factor);
        return op_sum({op_scale(Scalar(-2), op_after(op_mul_var(vars_, x), op_derive(x))),
                       op_shift(wa(0))});
    }
    std::size_t x1 = var_index(1, factor), x2 = var_index(2, factor), x3 = var_index(3, factor);
    PolyOp t1 = op_after(op_mul_var(vars_, x1), op_derive(x1));
    PolyOp t2 = op_after(op_mul_var(vars_, x2), op_derive(x2));
    PolyOp t3 = op_after(op_mul_var(vars_, x3), op_derive(x3));
    if (c == 1)
        return op_sum({op_scale(Scalar(-2), t1), t2, op_scale(Scalar(-1), t3), op_shift(wa(0))});
    if (c == 2)
        return op_sum({op_scale(Scalar(-2), t2), t1, op_scale(Scalar(-1), t3), op_shift(wa(1))});
    throw std::invalid_argument("sl3 model: unknown Cartan generator");
}

PolyOp PolyModel::casimir_op(std::size_t i, std::size_t j) const {
    std::vector<PolyOp> terms;
    if (rank_ == 1) {
        terms.push_back(op_after(gen_op(2, 1, i), gen_op(1, 2, j)));
        terms.push_back(op_after(gen_op(1, 2, i), gen_op(2, 1, j)));
        terms.push_back(op_scale(Scalar(rat(1, 2)),
                                 op_after(cartan_op(1, i), cartan_op(1, j))));
        return op_sum(std::move(terms));
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            terms.push_back(op_after(gen_op(a, b, i), gen_op(b, a, j)));
        }
    // h1 (x) (2/3 h1 + 1/3 h2) + h2 (x) (1/3 h1 + 2/3 h2)
    terms.push_back(op_after(cartan_op(1, i),
                             op_sum({op_scale(Scalar(rat(2, 3)), cartan_op(1, j)),
                                     op_scale(Scalar(rat(1, 3)), cartan_op(2, j))})));
    terms.push_back(op_after(cartan_op(2, i),
                             op_sum({op_scale(Scalar(rat(1, 3)), cartan_op(1, j)),
                                     op_scale(Scalar(rat(2, 3)), cartan_op(2, j))})));
    return op_sum(std::move(terms));
}

PolyOp PolyModel::casimir_part_op(Part part, std::size_t i, std::size_t j) const {
    if (rank_ != 2)
        throw std::invalid_argument("graded Casimir parts are defined for sl3 only");
    std::size_t x1i = var_index(1, i), x2i = var_index(2, i), x3i = var_index(3, i);
    std::size_t x1j = var_index(1, j), x2j = var_index(2, j), x3j = var_index(3, j);
    PolyOp d1 = op_sum({op_derive(x1i), op_scale(Scalar(-1), op_derive(x1j))});
    PolyOp d2 = op_sum({op_derive(x2i), op_scale(Scalar(-1), op_derive(x2j))});
    PolyOp d3 = op_sum({op_derive(x3i), op_scale(Scalar(-1), op_derive(x3j))});
    auto mul2 = [&](std::size_t u, std::size_t v) {
        return op_after(op_mul_var(vars_, u), op_mul_var(vars_, v));
    };
    const Scalar a1i(pairs_->weight_alpha[i][0]), a2i(pairs_->weight_alpha[i][1]);
    const Scalar a1j(pairs_->weight_alpha[j][0]), a2j(pairs_->weight_alpha[j][1]);
    const Scalar wwij(pairs_->weight_weight[i][j]);

    switch (part) {
        case Part::kZero: {
            PolyOp cross = op_sum(
                {op_after(mul2(x1j, x2i), op_derive(x2i)),
                 op_scale(Scalar(-1), op_after(mul2(x1i, x2j), op_derive(x2j)))});
            return op_sum(
                {op_shift(wwij),
                 op_after(cross, d1),
                 op_scale(Scalar(-1), op_after(mul2(x1i, x1j), op_after(d1, d1))),
                 op_scale(Scalar(-1), op_after(mul2(x2i, x2j), op_after(d2, d2))),
                 op_after(op_sum({op_scale(a1i, op_mul_var(vars_, x1j)),
                                  op_scale(Scalar(-1) * a1j, op_mul_var(vars_, x1i))}),
                          d1),
                 op_after(op_sum({op_scale(a2i, op_mul_var(vars_, x2j)),
                                  op_scale(Scalar(-1) * a2j, op_mul_var(vars_, x2i))}),
                          d2)});
        }
        case Part::kZeroTilde: {
            PolyOp sym13 = op_sum({mul2(x3i, x1j), mul2(x1i, x3j)});
            PolyOp mixed = op_sum(
                {op_after(mul2(x2j, x3i), op_derive(x2j)),
                 op_scale(Scalar(-1), op_after(mul2(x2i, x3j), op_derive(x2i)))});
            return op_sum(
                {op_scale(Scalar(-1), op_after(sym13, op_after(d1, d3))),
                 op_scale(Scalar(-1), op_after(mul2(x3i, x3j), op_after(d3, d3))),
                 op_after(mixed, d3),
                 op_after(op_sum({op_scale(a1i + a2i, op_mul_var(vars_, x3j)),
                                  op_scale(Scalar(-1) * (a1j + a2j), op_mul_var(vars_, x3i))}),
                          d3)});
        }
        case Part::kUp: {
            PolyOp second_order = op_sum(
                {op_after(mul2(x2i, x3j), op_after(op_derive(x2i), op_derive(x2i))),
                 op_scale(Scalar(-1),
                          op_after(mul2(x3i, x2j), op_after(op_derive(x2j), op_derive(x2j))))});
            PolyOp first_order = op_sum(
                {op_scale(a2j, op_after(op_mul_var(vars_, x3i), op_derive(x2j))),
                 op_scale(Scalar(-1) * a2i, op_after(op_mul_var(vars_, x3j), op_derive(x2i)))});
            return op_after(op_sum({second_order, first_order}), d1);
        }
        case Part::kDown: {
            PolyOp factor = op_sum({mul2(x1i, x2j), op_scale(Scalar(-1), mul2(x1j, x2i))});
            return op_after(factor, d3);
        }
    }
    throw std::logic_error("unreachable");
}

PolyOp PolyModel::gaudin_op(std::size_t i) const {
    std::vector<PolyOp> terms;
    for (std::size_t j = 0; j < factors_; ++j) {
        if (j == i) continue;
        Scalar w = Scalar(1) / (instance_->z[i] - instance_->z[j]);
        terms.push_back(op_scale(w, casimir_op(i, j)));
    }
    return op_sum(std::move(terms));
}

PolyOp PolyModel::gaudin0_op(std::size_t i) const {
    std::vector<PolyOp> terms;
    for (std::size_t j = 0; j < factors_; ++j) {
        if (j == i) continue;
        Scalar w = Scalar(1) / (instance_->z[i] - instance_->z[j]);
        terms.push_back(op_scale(w, casimir_part_op(Part::kZero, i, j)));
    }
    return op_sum(std::move(terms));
}

std::map<std::size_t, Scalar> PolyModel::decompose(const MultiPoly& p,
                                                   const WeightBasis& basis) const {
    std::map<std::size_t, Scalar> out;
    for (const auto& [e, s] : p.terms()) {
        PBWIndex idx = index_of_exponents(e);
        long pos = basis.position_of(idx);
        if (pos < 0)
            throw std::logic_error("polynomial term lies outside the expected weight space");
        out.emplace(static_cast<std::size_t>(pos), s);
    }
    return out;
}

LinearOperator PolyModel::matrix_of(const PolyOp& op, const WeightBasis& source,
                                    const WeightBasis& target) const {
    LinearOperator out;
    out.source_l = source.l();
    out.target_l = target.l();
    out.matrix = matrix_zero(target.dim(), source.dim());
    for (std::size_t col = 0; col < source.dim(); ++col) {
        MultiPoly image = op(monomial(source.indices()[col]));
        for (const auto& [row, s] : decompose(image, target)) out.matrix[row][col] += s;
    }
    return out;
}

PolyModel::ModelMatrices PolyModel::model_matrices(const RepSpace& rep,
                                                   const std::vector<unsigned>& l) const {
    ModelMatrices out;
    const WeightBasis& src = rep.basis(l);
    for (int a = 1; a <= rank_ + 1; ++a)
        for (int b = 1; b <= rank_ + 1; ++b) {
            if (a == b) continue;
            auto lt = rep.shifted_l(a, b, l);
            if (!lt) continue;
            std::vector<LinearOperator> per_factor;
            for (std::size_t f = 0; f < factors_; ++f)
                per_factor.push_back(matrix_of(gen_op(a, b, f), src, rep.basis(*lt)));
            out.generators.push_back({{a, b}, std::move(per_factor)});
        }
    for (int c = 1; c <= rank_; ++c) {
        std::vector<LinearOperator> per_factor;
        for (std::size_t f = 0; f < factors_; ++f)
            per_factor.push_back(matrix_of(cartan_op(c, f), src, src));
        out.cartans.push_back({c, std::move(per_factor)});
    }
    for (std::size_t i = 0; i < factors_; ++i)
        out.gaudin.push_back(matrix_of(gaudin_op(i), src, src));
    return out;
}

}  // namespace gaudin
