#include "gaudin/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudin {

UniPoly UniPoly::x() { return UniPoly({Scalar(0), Scalar(1)}); }

UniPoly UniPoly::monomial(Scalar coeff, std::size_t degree) {
    if (coeff.is_zero()) return UniPoly();
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = std::move(coeff);
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(-s);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return UniPoly(std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> c;
    c.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UniPoly(std::move(c));
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero polynomial");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quot(degree() - d.degree() + 1, Scalar(0));
    const Scalar& lead = d.leading();
    for (long k = degree() - d.degree(); k >= 0; --k) {
        Scalar q = rem[k + d.degree()] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (long j = 0; j <= d.degree(); ++j)
            rem[k + j] -= q * d.c_[j];
    }
    rem.resize(d.degree() >= 0 ? d.degree() : 0);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

double UniPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& s : c_) m = std::max(m, s.abs_double());
    return m;
}

bool UniPoly::all_exact() const {
    for (const auto& s : c_)
        if (!s.is_exact()) return false;
    return true;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "(" << c_[k].to_string() << ")";
        if (k == 1) os << "*" << var;
        if (k > 1) os << "*" << var << "^" << k;
    }
    return os.str();
}

UniPoly poly_from_roots(std::span<const Scalar> roots, RootConvention convention) {
    UniPoly p = UniPoly::constant(Scalar(1));
    for (const auto& r : roots) {
        UniPoly factor =
            convention == RootConvention::kPaper
                ? UniPoly({r, Scalar(-1)})   // (r - x)
                : UniPoly({-r, Scalar(1)});  // (x - r)
        p = p * factor;
    }
    return p;
}

UniPoly poly_from_roots(const std::vector<Scalar>& roots, RootConvention convention) {
    return poly_from_roots(std::span<const Scalar>(roots.data(), roots.size()), convention);
}

DivisionResult exact_divide(const UniPoly& numer, const UniPoly& denom, double tolerance) {
    auto [q, r] = numer.divrem(denom);
    bool exact;
    if (numer.all_exact() && denom.all_exact())
        exact = r.is_zero();
    else
        exact = r.max_abs_coeff() <= tolerance;
    return DivisionResult{std::move(q), exact, std::move(r)};
}

Scalar SimplePoleSum::eval(const Scalar& x) const {
    Scalar acc(0);
    for (std::size_t s = 0; s < poles.size(); ++s) acc += residues[s] / (x - poles[s]);
    return acc;
}

Scalar SimplePoleSum::residue_sum() const {
    Scalar acc(0);
    for (const auto& c : residues) acc += c;
    return acc;
}

UniPoly SimplePoleSum::cleared_numerator() const {
    UniPoly acc;
    for (std::size_t s = 0; s < poles.size(); ++s) {
        UniPoly prod = UniPoly::constant(residues[s]);
        for (std::size_t k = 0; k < poles.size(); ++k) {
            if (k == s) continue;
            prod = prod * UniPoly({-poles[k], Scalar(1)});
        }
        acc = acc + prod;
    }
    return acc;
}

SimplePoleSum partial_fractions_simple(const UniPoly& H, std::span<const Scalar> poles) {
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j])
                throw std::invalid_argument("partial_fractions_simple: repeated pole");
    if (H.degree() + 1 > static_cast<long>(poles.size()))
        throw std::invalid_argument("partial_fractions_simple: deg H too large for pole count");

    std::vector<Scalar> roots(poles.begin(), poles.end());
    UniPoly F = poly_from_roots(roots, RootConvention::kMonic);
    UniPoly Fp = F.derivative();
    SimplePoleSum out;
    out.poles = roots;
    out.residues.reserve(roots.size());
    for (const auto& z : roots) out.residues.push_back(H.eval(z) / Fp.eval(z));
    return out;
}

SimplePoleSum partial_fractions_simple(const UniPoly& H, const std::vector<Scalar>& poles) {
    return partial_fractions_simple(H, std::span<const Scalar>(poles.data(), poles.size()));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (!a.all_exact() || !b.all_exact()) return UniPoly::constant(Scalar(1));
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Scalar(1) / a.leading());
}

unsigned root_multiplicity(const UniPoly& p, const Scalar& a) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity of zero polynomial");
    unsigned m = 0;
    UniPoly cur = p;
    UniPoly factor({-a, Scalar(1)});
    for (;;) {
        auto [q, r] = cur.divrem(factor);
        if (!r.is_zero()) return m;
        ++m;
        cur = std::move(q);
        if (cur.is_zero()) return m;
    }
}

std::vector<BigComplex> complex_roots(const UniPoly& p, mpfr_prec_t precision,
                                      unsigned max_iterations) {
    if (p.is_zero()) throw std::domain_error("complex_roots of the zero polynomial");
    const long deg = p.degree();
    if (deg == 0) return {};

    std::vector<BigComplex> c;
    for (long k = 0; k <= deg; ++k) c.push_back(p.coeff(k).to_complex(precision));
    BigComplex lead = c.back();
    for (auto& v : c) v = v / lead;

    if (deg == 1) return {-c[0]};

    double scale = 0.0;
    for (long k = 0; k < deg; ++k) scale = std::max(scale, c[k].abs().to_double());
    scale = 1.0 + scale;

    // w_i = scale * (0.4 + 0.9i)^{i+1}
    std::vector<BigComplex> w;
    BigComplex base = BigComplex::from_doubles(0.4, 0.9, precision);
    BigComplex cur = base;
    for (long i = 0; i < deg; ++i) {
        w.push_back(cur * BigComplex::from_doubles(scale, 0.0, precision));
        cur = cur * base;
    }

    auto eval = [&](const BigComplex& x) {
        BigComplex acc = BigComplex::from_doubles(1.0, 0.0, precision);
        for (long k = deg - 1; k >= 0; --k) acc = acc * x + c[k];
        return acc;
    };

    BigFloat eps = BigFloat::pow2(8 - static_cast<long>(precision), precision);
    for (unsigned iter = 0; iter < max_iterations; ++iter) {
        BigFloat worst(precision);
        for (long i = 0; i < deg; ++i) {
            BigComplex denom = BigComplex::from_doubles(1.0, 0.0, precision);
            for (long j = 0; j < deg; ++j)
                if (j != i) denom = denom * (w[i] - w[j]);
            BigComplex delta = eval(w[i]) / denom;
            w[i] = w[i] - delta;
            BigFloat d = delta.abs();
            if (worst < d) worst = d;
        }
        if (worst < eps) break;
    }
    return w;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Scalar(1));
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    // Normalize the denominator to be monic when exact.
    if (den_.all_exact() && num_.all_exact() && !(den_.leading() == Scalar(1))) {
        Scalar lead = den_.leading();
        den_ = den_.scaled(Scalar(1) / lead);
        num_ = num_.scaled(Scalar(1) / lead);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}
RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Scalar RatFunc::eval(const Scalar& x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc evaluated at a pole");
    return num_.eval(x) / d;
}

unsigned RatFunc::pole_order(const Scalar& a) const {
    if (num_.is_zero()) return 0;
    return root_multiplicity(den_, a);
}

std::optional<Scalar> RatFunc::shifted_limit(const Scalar& a, unsigned k) const {
    if (num_.is_zero()) return Scalar(0);
    unsigned ord_den = root_multiplicity(den_, a);
    unsigned ord_num = root_multiplicity(num_, a);
    long net = static_cast<long>(k) + static_cast<long>(ord_num) - static_cast<long>(ord_den);
    if (net > 0) return Scalar(0);
    if (net < 0) return std::nullopt;
    UniPoly factor({-a, Scalar(1)});
    UniPoly n0 = num_;
    for (unsigned i = 0; i < ord_num; ++i) n0 = n0.divrem(factor).first;
    UniPoly d0 = den_;
    for (unsigned i = 0; i < ord_den; ++i) d0 = d0.divrem(factor).first;
    return n0.eval(a) / d0.eval(a);
}

std::optional<Scalar> RatFunc::shifted_limit_at_infinity(unsigned k) const {
    if (num_.is_zero()) return Scalar(0);
    long net = num_.degree() + static_cast<long>(k) - den_.degree();
    if (net < 0) return Scalar(0);
    if (net > 0) return std::nullopt;
    return num_.leading() / den_.leading();
}

}  // namespace gaudin
