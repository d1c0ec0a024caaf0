#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

// Named variable set shared by all polynomials of one ring. Fixed at
// creation; polynomials over different sets never mix silently.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names);
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    // -1 if absent.
    long index_of(const std::string& name) const;

  private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Sparse multivariate polynomial: exponent vector -> Scalar, no zero
// entries, lexicographic term order for deterministic iteration.
class MultiPoly {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Scalar>;

    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(VarSetPtr vars, Scalar s);
    static MultiPoly variable(VarSetPtr vars, std::size_t index, unsigned power = 1);
    static MultiPoly from_terms(VarSetPtr vars, TermMap terms);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly scaled(const Scalar& s) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly derive(std::size_t var) const;
    MultiPoly mul_var(std::size_t var, unsigned power = 1) const;
    MultiPoly pow(unsigned e) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    // Exact composition: every variable of this polynomial must have an
    // image; all images share one target variable set.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Substitute scalars for a subset of variables (others kept). Entries
    // without a value are signalled by nullptr.
    MultiPoly substitute_partial(const std::vector<const Scalar*>& values) const;

    // Total degree over the variables listed in `vars` (0 for the zero poly).
    unsigned degree_in(const std::vector<std::size_t>& vars) const;
    unsigned total_degree() const;

    // Component whose total degree in `vars` is exactly d.
    MultiPoly component_of_degree(const std::vector<std::size_t>& vars, unsigned d) const;

    double max_abs_coeff() const;

    std::string to_string() const;

  private:
    void insert_term(const Exponents& e, const Scalar& s);
    VarSetPtr vars_;
    TermMap terms_;
};

// Same ring: identical object or identical name list.
bool same_vars(const VarSetPtr& a, const VarSetPtr& b);
void require_same_vars(const MultiPoly& a, const MultiPoly& b);

}  // namespace gaudin
