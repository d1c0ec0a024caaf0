#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaudin/multipoly.hpp"
#include "gaudin/prng.hpp"
#include "gaudin/unipoly.hpp"

using namespace gaudin;

namespace {

Scalar S(long n, long d = 1) { return Scalar(rat(n, d)); }

UniPoly random_poly(SplitMix64& rng, unsigned max_deg) {
    std::vector<Scalar> c;
    unsigned deg = static_cast<unsigned>(rng.below(max_deg + 1));
    for (unsigned k = 0; k <= deg; ++k) c.push_back(Scalar(rng.rational(9, 5)));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("-0.25") == rat(-1, 4));
    CHECK(parse_rational("2.5") == rat(5, 2));
    CHECK(rational_to_string(rat(-3, 4)) == "-3/4");
    CHECK(rational_to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(rational_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(factorial(5) == rat(120));
    CHECK(binomial(5, 2) == rat(10));
}

TEST_CASE("bigfloat precision semantics") {
    BigFloat a = BigFloat::from_rational(rat(1, 3), 256);
    BigFloat b = BigFloat::from_rational(rat(1, 7), 128);
    CHECK(a.precision() == 256);
    CHECK((a + b).precision() == 128);
    CHECK((a * b).precision() == 128);
    // parse/print round-trip through the hex form is lossless
    BigFloat c = BigFloat::from_string(a.to_hex(), 256);
    CHECK(c == a);
    // arithmetic at p bits agrees with p+64-bit recomputation to 2^(8-p)
    mpfr_prec_t p = 128;
    BigFloat x = BigFloat::from_rational(rat(355, 113), p);
    BigFloat y = BigFloat::from_rational(rat(-22, 7), p);
    BigFloat lo = (x * y + x / y) * (x - y);
    BigFloat xh = x.with_precision(p + 64), yh = y.with_precision(p + 64);
    BigFloat hi = (xh * yh + xh / yh) * (xh - yh);
    BigFloat err = (lo - hi.with_precision(p)).abs() / hi.abs();
    CHECK(err < BigFloat::pow2(static_cast<long>(8 - p), p));
}

TEST_CASE("scalar promotion rules") {
    Scalar q(rat(1, 2));
    Scalar c(BigComplex::from_doubles(0.5, 0.0, 192));
    CHECK(q.is_exact());
    CHECK(!(q + c).is_exact());
    CHECK((q + c).cplx().precision() == 192);
    Scalar c2(BigComplex::from_doubles(1.0, 2.0, 128));
    CHECK((c + c2).cplx().precision() == 128);
    CHECK((q * Scalar(rat(2))) == Scalar(rat(1)));
    CHECK_THROWS_AS(q / Scalar(0), std::domain_error);
}

TEST_CASE("poly_from_roots conventions") {
    std::vector<Scalar> none;
    CHECK(poly_from_roots(none, RootConvention::kPaper) == UniPoly::constant(S(1)));

    std::vector<Scalar> half{S(1, 2)};
    UniPoly p = poly_from_roots(half, RootConvention::kPaper);
    CHECK(p == UniPoly({S(1, 2), S(-1)}));

    std::vector<Scalar> zero_one{S(0), S(1)};
    UniPoly q = poly_from_roots(zero_one, RootConvention::kPaper);
    CHECK(q == UniPoly({S(0), S(-1), S(1)}));  // x^2 - x

    UniPoly m = poly_from_roots(zero_one, RootConvention::kMonic);
    CHECK(m == UniPoly({S(0), S(-1), S(1)}));
    CHECK(poly_from_roots(half, RootConvention::kMonic) == UniPoly({S(-1, 2), S(1)}));
    CHECK(q.degree() == 2);
}

TEST_CASE("exact_divide") {
    UniPoly numer({S(-1), S(2)});        // 2x - 1
    UniPoly denom({S(1, 2), S(-1)});     // 1/2 - x
    auto d = exact_divide(numer, denom);
    CHECK(d.exact);
    CHECK(d.quotient == UniPoly::constant(S(-2)));
    // oracle: re-expand quotient * denominator
    CHECK(d.quotient * denom == numer);

    auto nd = exact_divide(UniPoly({S(1), S(0), S(1)}), UniPoly::x());
    CHECK(!nd.exact);
    CHECK(nd.remainder == UniPoly::constant(S(1)));

    auto z = exact_divide(UniPoly(), denom);
    CHECK(z.exact);
    CHECK(z.quotient.is_zero());

    CHECK_THROWS_AS(exact_divide(numer, UniPoly()), std::domain_error);
}

TEST_CASE("partial fractions with simple poles") {
    std::vector<Scalar> poles{S(0), S(1)};

    auto pf = partial_fractions_simple(UniPoly::constant(S(-2)), poles);
    CHECK(pf.residues[0] == S(2));
    CHECK(pf.residues[1] == S(-2));
    // oracle: clear denominators and compare polynomials
    CHECK(pf.cleared_numerator() == UniPoly::constant(S(-2)));

    auto pz = partial_fractions_simple(UniPoly(), poles);
    CHECK(pz.residues[0].is_zero());
    CHECK(pz.residues[1].is_zero());

    auto p1 = partial_fractions_simple(UniPoly::constant(S(1)), poles);
    CHECK(p1.residues[0] == S(-1));
    CHECK(p1.residues[1] == S(1));
    CHECK(p1.cleared_numerator() == UniPoly::constant(S(1)));
    // deg H <= n-2 forces residue sum zero
    CHECK(p1.residue_sum().is_zero());

    CHECK_THROWS_AS(partial_fractions_simple(UniPoly::constant(S(1)),
                                             std::vector<Scalar>{S(1), S(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(partial_fractions_simple(UniPoly({S(1), S(1), S(1)}), poles),
                    std::invalid_argument);
}

TEST_CASE("partial fraction round-trip on random data") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Scalar> poles;
        std::vector<Rational> avoid;
        unsigned n = 2 + static_cast<unsigned>(rng.below(3));
        for (unsigned i = 0; i < n; ++i) {
            Rational p = rng.rational_avoiding(avoid);
            avoid.push_back(p);
            poles.emplace_back(p);
        }
        UniPoly h = random_poly(rng, n - 1);
        auto pf = partial_fractions_simple(h, poles);
        CHECK(pf.cleared_numerator() == h);
    }
}

TEST_CASE("ring axioms at desk scale") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("from-roots then divide by one factor") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Scalar> roots;
        std::vector<Rational> avoid;
        unsigned n = 1 + static_cast<unsigned>(rng.below(4));
        for (unsigned i = 0; i < n; ++i) {
            Rational r = rng.rational_avoiding(avoid);
            avoid.push_back(r);
            roots.emplace_back(r);
        }
        UniPoly whole = poly_from_roots(roots, RootConvention::kPaper);
        UniPoly factor = poly_from_roots(std::vector<Scalar>{roots[0]}, RootConvention::kPaper);
        auto d = exact_divide(whole, factor);
        CHECK(d.exact);
        std::vector<Scalar> rest(roots.begin() + 1, roots.end());
        CHECK(d.quotient == poly_from_roots(rest, RootConvention::kPaper));
    }
}

TEST_CASE("multivariate substitution, derivative, evaluation") {
    auto xs = VarSet::make({"x1", "x2"});
    auto uy = VarSet::make({"u", "y"});

    MultiPoly f = MultiPoly::variable(xs, 0) + MultiPoly::variable(xs, 1);
    std::vector<MultiPoly> to_zero{MultiPoly(uy), MultiPoly(uy)};
    CHECK(f.substitute(to_zero).is_zero());

    MultiPoly x_sq = MultiPoly::variable(xs, 0, 2);
    MultiPoly u_times_y = MultiPoly::variable(uy, 0) * MultiPoly::variable(uy, 1);
    std::vector<MultiPoly> img{u_times_y, MultiPoly(uy)};
    MultiPoly composed = x_sq.substitute(img);
    CHECK(composed == MultiPoly::variable(uy, 0, 2) * MultiPoly::variable(uy, 1, 2));

    // x1 x2 with x_i -> u (z_i - y): the n = 2, z = (0, 1) change of variables
    Scalar z1 = S(0), z2 = S(1);
    MultiPoly im1 = (MultiPoly::constant(uy, z1) - MultiPoly::variable(uy, 1)) *
                    MultiPoly::variable(uy, 0);
    MultiPoly im2 = (MultiPoly::constant(uy, z2) - MultiPoly::variable(uy, 1)) *
                    MultiPoly::variable(uy, 0);
    MultiPoly prod = (MultiPoly::variable(xs, 0) * MultiPoly::variable(xs, 1))
                         .substitute({im1, im2});
    MultiPoly expect = im1 * im2;
    CHECK(prod == expect);

    // derivative and evaluation
    MultiPoly g = MultiPoly::variable(uy, 0, 2) * MultiPoly::variable(uy, 1);  // u^2 y
    MultiPoly du = g.derive(0);
    CHECK(du == MultiPoly::variable(uy, 0).scaled(S(2)) * MultiPoly::variable(uy, 1));
    CHECK(g.eval({S(2), S(3)}) == S(12));
    CHECK(g.derive(1).derive(1).is_zero());

    CHECK_THROWS_AS(f.substitute({im1}), std::invalid_argument);
    CHECK_THROWS_AS(g.eval({S(1)}), std::invalid_argument);
}

TEST_CASE("multivariate degree components") {
    auto v = VarSet::make({"a", "b", "c"});
    MultiPoly f = MultiPoly::variable(v, 0) * MultiPoly::variable(v, 1) +
                  MultiPoly::variable(v, 2);
    auto comp0 = f.component_of_degree({2}, 0);
    auto comp1 = f.component_of_degree({2}, 1);
    CHECK(comp0 == MultiPoly::variable(v, 0) * MultiPoly::variable(v, 1));
    CHECK(comp1 == MultiPoly::variable(v, 2));
    CHECK(comp0 + comp1 == f);
    CHECK(f.degree_in({2}) == 1);
}

TEST_CASE("rational functions and limits") {
    // f = 1/(x(x-1)): shifted limits recover residues
    UniPoly den = UniPoly::x() * (UniPoly::x() - UniPoly::constant(S(1)));
    RatFunc f(UniPoly::constant(S(1)), den);
    CHECK(f.pole_order(S(0)) == 1);
    auto lim = f.shifted_limit(S(0), 1);
    REQUIRE(lim.has_value());
    CHECK(*lim == S(-1));
    CHECK(!f.shifted_limit(S(0), 0).has_value());
    auto at_inf = f.shifted_limit_at_infinity(2);
    REQUIRE(at_inf.has_value());
    CHECK(*at_inf == S(1));

    RatFunc d = f.derivative();
    // f' = -(2x-1)/(x(x-1))^2
    CHECK(d.eval(S(2)) == S(-3, 4));

    RatFunc sum = f + RatFunc::from_poly(UniPoly::x());
    CHECK(sum.eval(S(2)) == S(1, 2) + S(2));
}

TEST_CASE("complex root finding") {
    // (x - 1)(x - 2)(x + 3)
    std::vector<Scalar> roots{S(1), S(2), S(-3)};
    UniPoly p = poly_from_roots(roots, RootConvention::kMonic);
    auto found = complex_roots(p, 192);
    REQUIRE(found.size() == 3);
    for (const auto& target : roots) {
        double best = 1e9;
        for (const auto& r : found)
            best = std::min(best, (Scalar(r) - target).abs_double());
        CHECK(best < 1e-40);
    }
}

TEST_CASE("unipoly serialization is deterministic") {
    UniPoly p({S(1, 2), S(0), S(-3)});
    CHECK(p.to_string() == "(1/2) + (-3)*x^2");
    CHECK(UniPoly().to_string() == "0");
}
