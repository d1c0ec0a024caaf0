#include "gaudin/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudin {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
}

long VarSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && a->names() == b->names());
}

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw std::invalid_argument("MultiPoly operands use different variable sets");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, Scalar s) {
    MultiPoly p(std::move(vars));
    if (!s.is_zero()) p.terms_.emplace(Exponents(p.vars_->size(), 0), std::move(s));
    return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index, unsigned power) {
    MultiPoly p(std::move(vars));
    if (index >= p.vars_->size()) throw std::out_of_range("variable index out of range");
    Exponents e(p.vars_->size(), 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
}

MultiPoly MultiPoly::from_terms(VarSetPtr vars, TermMap terms) {
    MultiPoly p(std::move(vars));
    for (auto& [e, s] : terms) {
        if (e.size() != p.vars_->size())
            throw std::invalid_argument("exponent vector length mismatch");
        if (!s.is_zero()) p.terms_.emplace(e, s);
    }
    return p;
}

void MultiPoly::insert_term(const Exponents& e, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r = a;
    for (const auto& [e, s] : b.terms_) r.insert_term(e, s);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, s] : terms_) r.terms_.emplace(e, -s);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r(a.vars_);
    MultiPoly::Exponents e(a.vars_->size());
    for (const auto& [ea, sa] : a.terms_) {
        for (const auto& [eb, sb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, sa * sb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
    MultiPoly r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
        Scalar v = c * s;
        if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

MultiPoly MultiPoly::derive(std::size_t var) const {
    if (var >= vars_->size()) throw std::out_of_range("derive: unknown variable");
    MultiPoly r(vars_);
    for (const auto& [e, s] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.insert_term(d, s * Scalar(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::mul_var(std::size_t var, unsigned power) const {
    if (var >= vars_->size()) throw std::out_of_range("mul_var: unknown variable");
    MultiPoly r(vars_);
    for (const auto& [e, s] : terms_) {
        Exponents d = e;
        d[var] += power;
        r.terms_.emplace(std::move(d), s);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(vars_, Scalar(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_->size())
        throw std::invalid_argument("eval: point does not cover all variables");
    Scalar acc(0);
    for (const auto& [e, s] : terms_) {
        Scalar term = s;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_->size())
        throw std::invalid_argument("substitute: assignment must cover every variable");
    if (images.empty()) throw std::invalid_argument("substitute: empty variable set");
    VarSetPtr target = images.front().vars();
    for (const auto& img : images)
        if (!same_vars(img.vars(), target))
            throw std::invalid_argument("substitute: images use different target variable sets");

    // Cache per-variable powers; exponents stay small at desk scale.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, Scalar(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };

    MultiPoly acc(target);
    for (const auto& [e, s] : terms_) {
        MultiPoly term = MultiPoly::constant(target, s);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power_of(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_partial(const std::vector<const Scalar*>& values) const {
    if (values.size() != vars_->size())
        throw std::invalid_argument("substitute_partial: wrong value vector length");
    MultiPoly r(vars_);
    for (const auto& [e, s] : terms_) {
        Scalar c = s;
        Exponents d = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (values[i] == nullptr) continue;
            for (unsigned k = 0; k < e[i]; ++k) c *= *values[i];
            d[i] = 0;
        }
        r.insert_term(d, c);
    }
    return r;
}

unsigned MultiPoly::degree_in(const std::vector<std::size_t>& vars) const {
    unsigned deg = 0;
    for (const auto& [e, s] : terms_) {
        unsigned d = 0;
        for (std::size_t v : vars) d += e[v];
        deg = std::max(deg, d);
    }
    return deg;
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, s] : terms_) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

MultiPoly MultiPoly::component_of_degree(const std::vector<std::size_t>& vars, unsigned d) const {
    MultiPoly r(vars_);
    for (const auto& [e, s] : terms_) {
        unsigned deg = 0;
        for (std::size_t v : vars) deg += e[v];
        if (deg == d) r.terms_.emplace(e, s);
    }
    return r;
}

double MultiPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, s] : terms_) m = std::max(m, s.abs_double());
    return m;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.to_string() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_->name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace gaudin
