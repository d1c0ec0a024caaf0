#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaudin/canonical.hpp"
#include "gaudin/polymodel.hpp"
#include "gaudin/prng.hpp"

using namespace gaudin;

namespace {

ProblemInstance make_instance(int rank, std::vector<std::vector<Rational>> weights,
                              std::vector<Scalar> z, std::vector<unsigned> l) {
    ProblemInstance inst;
    inst.cartan = make_cartan_A(rank);
    inst.weights.coroot_pairings = std::move(weights);
    inst.z = std::move(z);
    inst.l = std::move(l);
    return inst;
}

BetheCandidate candidate(std::vector<std::vector<Rational>> vals) {
    BetheCandidate t;
    for (auto& col : vals) {
        std::vector<Scalar> c;
        for (auto& v : col) c.emplace_back(v);
        t.t.push_back(std::move(c));
    }
    return t;
}

PBWIndex index_sl3(std::vector<unsigned> f1, std::vector<unsigned> f2) {
    PBWIndex idx;
    idx.exps = {std::move(f1), std::move(f2)};
    return idx;
}

Scalar coeff_at(const RepSpace& rep, const TensorVector& v, const PBWIndex& idx) {
    long pos = rep.basis(v.l).position_of(idx);
    REQUIRE(pos >= 0);
    auto it = v.coeffs.find(static_cast<std::size_t>(pos));
    return it == v.coeffs.end() ? Scalar(0) : it->second;
}

}  // namespace

TEST_CASE("admissible data sizes") {
    GeneratorList g1 = GeneratorList::for_rank(1);
    PBWIndex one;
    one.exps = {{1}};
    auto a = enumerate_admissible(one, {1}, g1);
    CHECK(a.s_tuples.size() == 1);
    CHECK(a.bijection_count == rat(1));

    GeneratorList g2 = GeneratorList::for_rank(2);
    PBWIndex e31 = index_sl3({0, 1, 0}, {0, 0, 0});
    auto b = enumerate_admissible(e31, {1, 1}, g2);
    CHECK(b.s_tuples.size() == 1);
    CHECK(b.per_color[0].size() == 1);
    CHECK(b.per_color[1].size() == 1);
    CHECK(b.bijection_count == rat(1));

    PBWIndex sq;
    sq.exps = {{2}};
    auto c = enumerate_admissible(sq, {2}, g1);
    CHECK(c.s_tuples.size() == 2);
    CHECK(c.bijection_count == rat(2));

    PBWIndex wrong;
    wrong.exps = {{1}};
    CHECK_THROWS_AS(enumerate_admissible(wrong, {2}, g1), std::invalid_argument);
}

TEST_CASE("omega coefficients for the worked sl3 terms") {
    GeneratorList g2 = GeneratorList::for_rank(2);
    std::vector<Scalar> z{Scalar(rat(0)), Scalar(rat(1))};
    auto t = candidate({{rat(1, 3)}, {rat(1, 5)}});
    Scalar t1 = t.t[0][0], t2 = t.t[1][0];

    // e31 in factor 1: 1/((t2 - t1)(t1 - z1))
    Scalar w = omega_coefficient(index_sl3({0, 1, 0}, {0, 0, 0}), {1, 1}, g2, t, z);
    CHECK(w == Scalar(1) / ((t2 - t1) * (t1 - z[0])));

    // e21 e32 in factor 1: 1/((t1 - z1)(t2 - z1))
    Scalar w2 = omega_coefficient(index_sl3({1, 0, 1}, {0, 0, 0}), {1, 1}, g2, t, z);
    CHECK(w2 == Scalar(1) / ((t1 - z[0]) * (t2 - z[0])));

    // poles are reported with the failing factor
    auto tz = candidate({{rat(0)}, {rat(1, 5)}});
    CHECK_THROWS_AS(omega_coefficient(index_sl3({1, 0, 0}, {0, 0, 0}), {1, 0}, g2, tz, z),
                    std::domain_error);
}

TEST_CASE("omega for sl2 squared generator: 1/2! cancels the symmetric sum") {
    GeneratorList g1 = GeneratorList::for_rank(1);
    std::vector<Scalar> z{Scalar(rat(0)), Scalar(rat(1))};
    auto t = candidate({{rat(1, 3), rat(1, 7)}});
    PBWIndex sq;
    sq.exps = {{2}, {0}};
    Scalar w = omega_coefficient(sq, {2}, g1, t, z);
    CHECK(w == Scalar(1) / ((t.t[0][0] - z[0]) * (t.t[0][1] - z[0])));
}

TEST_CASE("canonical vector reproduces the six-term sl3 display") {
    ProblemInstance inst = make_instance(2, {{rat(4), rat(1)}, {rat(4), rat(4)}},
                                         {Scalar(0), Scalar(1)}, {1, 1});
    RepSpace rep(inst);
    SplitMix64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> avoid{rat(0), rat(1)};
        Rational q1 = rng.rational_avoiding(avoid);
        avoid.push_back(q1);
        Rational q2 = rng.rational_avoiding(avoid);
        auto t = candidate({{q1}, {q2}});
        Scalar t1(q1), t2(q2), z1(rat(0)), z2(rat(1));

        TensorVector v = canonical_vector(rep, {1, 1}, t);
        CHECK(coeff_at(rep, v, index_sl3({1, 0, 1}, {0, 0, 0})) ==
              Scalar(1) / ((t1 - z1) * (t2 - z1)));
        CHECK(coeff_at(rep, v, index_sl3({0, 1, 0}, {0, 0, 0})) ==
              Scalar(1) / ((t2 - t1) * (t1 - z1)));
        CHECK(coeff_at(rep, v, index_sl3({1, 0, 0}, {0, 0, 1})) ==
              Scalar(1) / ((t1 - z1) * (t2 - z2)));
        CHECK(coeff_at(rep, v, index_sl3({0, 0, 1}, {1, 0, 0})) ==
              Scalar(1) / ((t2 - z1) * (t1 - z2)));
        CHECK(coeff_at(rep, v, index_sl3({0, 0, 0}, {1, 0, 1})) ==
              Scalar(1) / ((t1 - z2) * (t2 - z2)));
        CHECK(coeff_at(rep, v, index_sl3({0, 0, 0}, {0, 1, 0})) ==
              Scalar(1) / ((t2 - t1) * (t1 - z2)));
    }
}

TEST_CASE("canonical vector reproduces the three-term sl2 display") {
    ProblemInstance inst = make_instance(1, {{rat(10, 9)}, {rat(4, 9)}},
                                         {Scalar(0), Scalar(1)}, {2});
    RepSpace rep(inst);
    SplitMix64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> avoid{rat(0), rat(1)};
        Rational q1 = rng.rational_avoiding(avoid);
        avoid.push_back(q1);
        Rational q2 = rng.rational_avoiding(avoid);
        auto t = candidate({{q1, q2}});
        Scalar t1(q1), t2(q2), z1(rat(0)), z2(rat(1));

        TensorVector v = canonical_vector(rep, {2}, t);
        PBWIndex both1, mixed, both2;
        both1.exps = {{2}, {0}};
        mixed.exps = {{1}, {1}};
        both2.exps = {{0}, {2}};
        CHECK(coeff_at(rep, v, both1) == Scalar(1) / ((t1 - z1) * (t2 - z1)));
        CHECK(coeff_at(rep, v, mixed) ==
              Scalar(1) / ((t1 - z1) * (t2 - z2)) + Scalar(1) / ((t2 - z1) * (t1 - z2)));
        CHECK(coeff_at(rep, v, both2) == Scalar(1) / ((t1 - z2) * (t2 - z2)));
    }
}

TEST_CASE("S_l invariance and the trivial weight space") {
    ProblemInstance inst = make_instance(1, {{rat(3)}, {rat(2)}}, {Scalar(0), Scalar(1)}, {2});
    RepSpace rep(inst);
    auto v1 = canonical_vector(rep, {2}, candidate({{rat(1, 3), rat(1, 7)}}));
    auto v2 = canonical_vector(rep, {2}, candidate({{rat(1, 7), rat(1, 3)}}));
    REQUIRE(v1.coeffs.size() == v2.coeffs.size());
    for (const auto& [pos, s] : v1.coeffs) CHECK(s == v2.coeffs.at(pos));

    ProblemInstance inst0 = make_instance(1, {{rat(3)}, {rat(2)}}, {Scalar(0), Scalar(1)}, {0});
    RepSpace rep0(inst0);
    auto v0 = canonical_vector(rep0, {0}, BetheCandidate::empty({0}));
    REQUIRE(v0.coeffs.size() == 1);
    CHECK(v0.coeffs.at(0) == Scalar(1));
}

TEST_CASE("sl2 closed form: product expansion matches omega coefficients") {
    ProblemInstance inst = make_instance(1, {{rat(5, 2)}, {rat(1, 3)}, {rat(2)}},
                                         {Scalar(0), Scalar(1), Scalar(2)}, {2});
    RepSpace rep(inst);
    PolyModel model(inst, rep.pairs());
    auto t = candidate({{rat(1, 5), rat(7, 2)}});

    // prod_j sum_i x^{(i)} / (t_j - z_i), expanded over the x variables
    MultiPoly prod = MultiPoly::constant(model.vars(), Scalar(1));
    for (const auto& tj : t.t[0]) {
        MultiPoly lin(model.vars());
        for (std::size_t i = 0; i < inst.points(); ++i)
            lin = lin + MultiPoly::variable(model.vars(), model.var_index(1, i))
                            .scaled(Scalar(1) / (tj - inst.z[i]));
        prod = prod * lin;
    }

    const WeightBasis& basis = rep.basis({2});
    for (std::size_t pos = 0; pos < basis.dim(); ++pos) {
        Scalar expanded(0);
        MultiPoly mono = model.monomial(basis.indices()[pos]);
        for (const auto& [e, c] : prod.terms())
            if (e == mono.terms().begin()->first) expanded = c;
        Scalar omega = omega_coefficient(basis.indices()[pos], {2}, rep.gens(), t, inst.z);
        CHECK(expanded == omega);
    }
}

TEST_CASE("Bethe theorem holds exactly at reverse-engineered solutions") {
    // sl2: m = (10/9, 4/9), z = (0, 1), t = (-1, 1/2)
    ProblemInstance inst2 = make_instance(1, {{rat(10, 9)}, {rat(4, 9)}},
                                          {Scalar(0), Scalar(1)}, {2});
    auto pairs2 = pairings(inst2);
    auto t2 = candidate({{rat(-1), rat(1, 2)}});
    REQUIRE(bae_residual(inst2, pairs2, t2).max_norm() == 0.0);

    RepSpace rep2(inst2);
    TensorVector omega2 = canonical_vector(rep2, {2}, t2);
    CHECK(rep2.is_singular(omega2));
    auto mu2 = eigenvalues_from_t(inst2, pairs2, t2);
    auto gaudin2 = rep2.gaudin_matrices({2});
    for (std::size_t i = 0; i < gaudin2.size(); ++i) {
        TensorVector hv = rep2.apply(gaudin2[i].op, omega2);
        TensorVector expect = omega2.scaled(mu2.mu[i]);
        CHECK(hv.coeffs == expect.coeffs);
    }

    // sl3: m = ((4,1),(4,4)), z = (0,1), t = (1/3; 1/2)
    ProblemInstance inst3 = make_instance(2, {{rat(4), rat(1)}, {rat(4), rat(4)}},
                                          {Scalar(0), Scalar(1)}, {1, 1});
    auto pairs3 = pairings(inst3);
    auto t3 = candidate({{rat(1, 3)}, {rat(1, 2)}});
    REQUIRE(bae_residual(inst3, pairs3, t3).max_norm() == 0.0);

    RepSpace rep3(inst3);
    TensorVector omega3 = canonical_vector(rep3, {1, 1}, t3);
    CHECK(rep3.is_singular(omega3));
    auto mu3 = eigenvalues_from_t(inst3, pairs3, t3);
    auto gaudin3 = rep3.gaudin_matrices({1, 1});
    for (std::size_t i = 0; i < gaudin3.size(); ++i) {
        TensorVector hv = rep3.apply(gaudin3[i].op, omega3);
        TensorVector expect = omega3.scaled(mu3.mu[i]);
        CHECK(hv.coeffs == expect.coeffs);
    }

    // a non-critical t gives a non-singular vector (negative control)
    auto bad = candidate({{rat(2, 7)}, {rat(1, 2)}});
    TensorVector omega_bad = canonical_vector(rep3, {1, 1}, bad);
    CHECK(!rep3.is_singular(omega_bad));
}
