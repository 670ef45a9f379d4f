#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "calculus/vector_field.hpp"
#include "symcore/ratfrac.hpp"

namespace kontact {

using IndexTuple = std::vector<unsigned>;

/// Sign of sorting (prefix..., j, suffix...) into increasing order relative to
/// a strictly increasing tuple with one entry replaced; 0 if a repeat occurs.
/// `sorted` receives the increasing tuple.
int signed_sort(IndexTuple tuple, IndexTuple& sorted);

/// Sparse antisymmetric degree-k tensor keyed by strictly increasing index
/// tuples. Instantiated with TrigPoly coefficients for multivectors and
/// RatFrac coefficients for differential forms (fractions only ever appear
/// when a dual coframe has a non-constant determinant).
template <typename Coeff>
class AltTensor {
public:
    AltTensor(ChartPtr chart, unsigned degree) : chart_(std::move(chart)), degree_(degree) {}

    const ChartPtr& chart() const { return chart_; }
    unsigned degree() const { return degree_; }
    const std::map<IndexTuple, Coeff>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }

    Coeff get(const IndexTuple& sorted_tuple) const;
    /// Adds c at an arbitrary tuple, sorting with sign; drops zeros.
    void add(const IndexTuple& tuple, const Coeff& c);

    AltTensor operator+(const AltTensor& o) const;
    AltTensor operator-() const;
    AltTensor operator-(const AltTensor& o) const { return *this + (-o); }

    bool operator==(const AltTensor& o) const;
    bool operator!=(const AltTensor& o) const { return !(*this == o); }

    std::string str(const char* basis_prefix, const char* sep) const;

private:
    ChartPtr chart_;
    unsigned degree_;
    std::map<IndexTuple, Coeff> comps_;
};

using MultiVector = AltTensor<TrigPoly>;
using DiffForm = AltTensor<RatFrac>;

/// Determinant of a square TrigPoly matrix by sparse cofactor expansion.
TrigPoly trig_determinant(const std::vector<std::vector<TrigPoly>>& m, const ChartPtr& chart);

MultiVector wedge_vectors(std::span<const VectorField> fields);

/// Schouten-Nijenhuis bracket of a vector field with a multivector; for
/// decomposable B = A_1^...^A_k this is sum_i A_1^...^[Y,A_i]^...^A_k.
MultiVector schouten_vf_multivector(const VectorField& y, const MultiVector& b);

DiffForm make_one_form(const ChartPtr& chart, std::vector<RatFrac> components);
DiffForm coordinate_differential(const ChartPtr& chart, std::size_t coord_index);

DiffForm exterior_derivative(const DiffForm& w);
DiffForm wedge_forms(const DiffForm& a, const DiffForm& b);
DiffForm interior_product(const VectorField& x, const DiffForm& w);

/// Lie derivative from the component formula; must agree with the Cartan
/// route below (both are exercised by the test suite as mutual oracles).
DiffForm lie_derivative_form(const VectorField& x, const DiffForm& w);
DiffForm lie_derivative_cartan(const VectorField& x, const DiffForm& w);

/// Pairing of a 1-form with a vector field.
RatFrac pair_form_field(const DiffForm& w, const VectorField& x);

/// Dual coframe eta_i with eta_i(Y_j) = delta_ij. Coefficients are polynomial
/// when the frame determinant is a nonzero constant, RatFrac otherwise;
/// throws DomainError when the determinant vanishes identically.
std::vector<DiffForm> dual_coframe(std::span<const VectorField> frame);

}  // namespace kontact
