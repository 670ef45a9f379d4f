#include "calculus/forms.hpp"

#include <algorithm>

#include "symcore/errors.hpp"

namespace kontact {

int signed_sort(IndexTuple tuple, IndexTuple& sorted) {
    int sign = 1;
    // Insertion sort, counting swaps; a duplicate makes the component vanish.
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && tuple[j - 1] > tuple[j]) {
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i - 1] == tuple[i]) return 0;
    sorted = std::move(tuple);
    return sign;
}

namespace {

template <typename Coeff>
Coeff zero_coeff(const ChartPtr& chart);

template <>
TrigPoly zero_coeff<TrigPoly>(const ChartPtr& chart) {
    return TrigPoly::zero(chart);
}

template <>
RatFrac zero_coeff<RatFrac>(const ChartPtr& chart) {
    return RatFrac::zero(chart);
}

TrigPoly negate(const TrigPoly& p, int sign) { return sign < 0 ? -p : p; }
RatFrac negate(const RatFrac& f, int sign) { return sign < 0 ? -f : f; }

/// All strictly increasing k-tuples over {0..n-1}.
std::vector<IndexTuple> increasing_tuples(unsigned n, unsigned k) {
    std::vector<IndexTuple> out;
    if (k > n) return out;
    IndexTuple t(k);
    for (unsigned i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (unsigned j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

}  // namespace

template <typename Coeff>
Coeff AltTensor<Coeff>::get(const IndexTuple& sorted_tuple) const {
    auto it = comps_.find(sorted_tuple);
    if (it == comps_.end()) return zero_coeff<Coeff>(chart_);
    return it->second;
}

template <typename Coeff>
void AltTensor<Coeff>::add(const IndexTuple& tuple, const Coeff& c) {
    if (c.is_zero()) return;
    IndexTuple sorted;
    int sign = signed_sort(tuple, sorted);
    if (sign == 0) return;
    auto it = comps_.find(sorted);
    if (it == comps_.end()) {
        comps_.emplace(std::move(sorted), negate(c, sign));
    } else {
        it->second = it->second + negate(c, sign);
        if (it->second.is_zero()) comps_.erase(it);
    }
}

template <typename Coeff>
AltTensor<Coeff> AltTensor<Coeff>::operator+(const AltTensor& o) const {
    require_same_chart(chart_, o.chart_, "tensor addition");
    if (degree_ != o.degree_) throw DomainError("tensor degree mismatch in addition");
    AltTensor r = *this;
    for (const auto& [t, c] : o.comps_) r.add(t, c);
    return r;
}

template <typename Coeff>
AltTensor<Coeff> AltTensor<Coeff>::operator-() const {
    AltTensor r(chart_, degree_);
    for (const auto& [t, c] : comps_) r.comps_.emplace(t, negate(c, -1));
    return r;
}

template <typename Coeff>
bool AltTensor<Coeff>::operator==(const AltTensor& o) const {
    if (!same_chart(chart_, o.chart_) || degree_ != o.degree_) return false;
    // Value equality componentwise (RatFrac components are not canonical).
    for (const auto& [t, c] : comps_)
        if (!(c == o.get(t))) return false;
    for (const auto& [t, c] : o.comps_)
        if (comps_.find(t) == comps_.end() && !c.is_zero()) return false;
    return true;
}

template <typename Coeff>
std::string AltTensor<Coeff>::str(const char* basis_prefix, const char* sep) const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : comps_) {
        std::string basis;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) basis += sep;
            basis += std::string(basis_prefix) + chart_->coord(t[i]).name;
        }
        std::string cs = c.str();
        std::string piece;
        if (basis.empty()) {
            piece = cs;
        } else if (cs == "1") {
            piece = basis;
        } else if (cs == "-1") {
            piece = "-" + basis;
        } else if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos) {
            piece = "(" + cs + ")*" + basis;
        } else {
            piece = cs + "*" + basis;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

template class AltTensor<TrigPoly>;
template class AltTensor<RatFrac>;

TrigPoly trig_determinant(const std::vector<std::vector<TrigPoly>>& m, const ChartPtr& chart) {
    const std::size_t n = m.size();
    if (n == 0) return TrigPoly::constant(chart, Rat(1));
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;

    // Recursive Laplace expansion, always along the sparsest remaining row.
    struct Rec {
        const std::vector<std::vector<TrigPoly>>& m;
        const ChartPtr& chart;
        TrigPoly run(std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
            if (rows.size() == 1) return m[rows[0]][cols[0]];
            std::size_t best = 0, best_nonzero = cols.size() + 1;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                std::size_t nz = 0;
                for (auto c : cols)
                    if (!m[rows[r]][c].is_zero()) ++nz;
                if (nz < best_nonzero) {
                    best_nonzero = nz;
                    best = r;
                }
            }
            TrigPoly det = TrigPoly::zero(chart);
            if (best_nonzero == 0) return det;
            std::vector<std::size_t> sub_rows = rows;
            sub_rows.erase(sub_rows.begin() + best);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const TrigPoly& e = m[rows[best]][cols[c]];
                if (e.is_zero()) continue;
                std::vector<std::size_t> sub_cols = cols;
                sub_cols.erase(sub_cols.begin() + c);
                TrigPoly minor = run(sub_rows, sub_cols);
                if (minor.is_zero()) continue;
                TrigPoly term = e * minor;
                if ((best + c) % 2)
                    det -= term;
                else
                    det += term;
            }
            return det;
        }
    } rec{m, chart};
    return rec.run(rows, cols);
}

MultiVector wedge_vectors(std::span<const VectorField> fields) {
    if (fields.empty()) throw DomainError("wedge of an empty list");
    ChartPtr chart = fields[0].chart();
    for (const auto& f : fields) require_same_chart(chart, f.chart(), "wedge product");
    const unsigned k = static_cast<unsigned>(fields.size());
    const unsigned n = static_cast<unsigned>(chart->dim());
    if (k > n) throw DomainError("wedge degree exceeds chart dimension");
    MultiVector out(chart, k);
    for (const auto& tuple : increasing_tuples(n, k)) {
        std::vector<std::vector<TrigPoly>> sub(k, std::vector<TrigPoly>(k, TrigPoly::zero(chart)));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) sub[i][j] = fields[i].component(tuple[j]);
        TrigPoly d = trig_determinant(sub, chart);
        if (!d.is_zero()) out.add(tuple, d);
    }
    return out;
}

MultiVector schouten_vf_multivector(const VectorField& y, const MultiVector& b) {
    require_same_chart(y.chart(), b.chart(), "Schouten bracket");
    const ChartPtr& chart = b.chart();
    const unsigned n = static_cast<unsigned>(chart->dim());
    MultiVector out(chart, b.degree());
    // (L_Y B)^I = Y(B^I) - sum_m sum_j (d_j Y^{I_m}) B^{I with I_m -> j}
    for (const auto& tuple : increasing_tuples(n, b.degree())) {
        TrigPoly val = y.apply(b.get(tuple));
        for (std::size_t m = 0; m < tuple.size(); ++m) {
            for (unsigned j = 0; j < n; ++j) {
                TrigPoly dy = y.component(tuple[m]).derivative(j);
                if (dy.is_zero()) continue;
                IndexTuple swapped = tuple;
                swapped[m] = j;
                IndexTuple sorted;
                int sign = signed_sort(swapped, sorted);
                if (sign == 0) continue;
                TrigPoly bc = b.get(sorted);
                if (bc.is_zero()) continue;
                TrigPoly term = dy * bc;
                val -= sign < 0 ? -term : term;
            }
        }
        if (!val.is_zero()) out.add(tuple, val);
    }
    return out;
}

DiffForm make_one_form(const ChartPtr& chart, std::vector<RatFrac> components) {
    if (components.size() != chart->dim())
        throw DomainError("one-form component count mismatch");
    DiffForm w(chart, 1);
    for (unsigned i = 0; i < components.size(); ++i) w.add({i}, components[i]);
    return w;
}

DiffForm coordinate_differential(const ChartPtr& chart, std::size_t coord_index) {
    if (coord_index >= chart->dim()) throw DomainError("coordinate index out of range");
    DiffForm w(chart, 1);
    w.add({static_cast<unsigned>(coord_index)},
          RatFrac(TrigPoly::constant(chart, Rat(1))));
    return w;
}

DiffForm exterior_derivative(const DiffForm& w) {
    const ChartPtr& chart = w.chart();
    const unsigned n = static_cast<unsigned>(chart->dim());
    if (w.degree() >= n) throw DomainError("exterior derivative would exceed chart dimension");
    DiffForm out(chart, w.degree() + 1);
    for (const auto& [tuple, f] : w.components()) {
        for (unsigned j = 0; j < n; ++j) {
            RatFrac df = f.derivative(j);
            if (df.is_zero()) continue;
            IndexTuple merged;
            merged.push_back(j);
            merged.insert(merged.end(), tuple.begin(), tuple.end());
            out.add(merged, df);
        }
    }
    return out;
}

DiffForm wedge_forms(const DiffForm& a, const DiffForm& b) {
    require_same_chart(a.chart(), b.chart(), "wedge of forms");
    const unsigned n = static_cast<unsigned>(a.chart()->dim());
    if (a.degree() + b.degree() > n)
        throw DomainError("wedge degree exceeds chart dimension");
    DiffForm out(a.chart(), a.degree() + b.degree());
    for (const auto& [ta, ca] : a.components()) {
        for (const auto& [tb, cb] : b.components()) {
            IndexTuple merged = ta;
            merged.insert(merged.end(), tb.begin(), tb.end());
            out.add(merged, ca * cb);
        }
    }
    return out;
}

DiffForm interior_product(const VectorField& x, const DiffForm& w) {
    require_same_chart(x.chart(), w.chart(), "interior product");
    if (w.degree() == 0) throw DomainError("interior product needs degree >= 1");
    DiffForm out(w.chart(), w.degree() - 1);
    for (const auto& [tuple, f] : w.components()) {
        for (std::size_t m = 0; m < tuple.size(); ++m) {
            const TrigPoly& xc = x.component(tuple[m]);
            if (xc.is_zero()) continue;
            IndexTuple rest;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                if (i != m) rest.push_back(tuple[i]);
            RatFrac term = f * xc;
            out.add(rest, m % 2 ? -term : term);
        }
    }
    return out;
}

DiffForm lie_derivative_form(const VectorField& x, const DiffForm& w) {
    require_same_chart(x.chart(), w.chart(), "Lie derivative");
    const ChartPtr& chart = w.chart();
    const unsigned n = static_cast<unsigned>(chart->dim());
    DiffForm out(chart, w.degree());
    // (L_X w)_I = sum_j X^j d_j(w_I) + sum_m sum_j (d_{I_m} X^j) w_{I with I_m -> j}
    for (const auto& tuple : increasing_tuples(n, w.degree())) {
        RatFrac val = RatFrac::zero(chart);
        RatFrac wI = w.get(tuple);
        if (!wI.is_zero())
            for (unsigned j = 0; j < n; ++j) {
                if (x.component(j).is_zero()) continue;
                val += wI.derivative(j) * x.component(j);
            }
        for (std::size_t m = 0; m < tuple.size(); ++m) {
            for (unsigned j = 0; j < n; ++j) {
                TrigPoly dx = x.component(j).derivative(tuple[m]);
                if (dx.is_zero()) continue;
                IndexTuple swapped = tuple;
                swapped[m] = j;
                IndexTuple sorted;
                int sign = signed_sort(swapped, sorted);
                if (sign == 0) continue;
                RatFrac wc = w.get(sorted);
                if (wc.is_zero()) continue;
                RatFrac term = wc * dx;
                val += sign < 0 ? -term : term;
            }
        }
        if (!val.is_zero()) out.add(tuple, val);
    }
    return out;
}

DiffForm lie_derivative_cartan(const VectorField& x, const DiffForm& w) {
    if (w.degree() == 0) {
        // L_X f = X(f); i_X f is not defined, d then contract instead.
        return interior_product(x, exterior_derivative(w));
    }
    DiffForm a = interior_product(x, exterior_derivative(w));
    DiffForm b = exterior_derivative(interior_product(x, w));
    return a + b;
}

RatFrac pair_form_field(const DiffForm& w, const VectorField& x) {
    require_same_chart(w.chart(), x.chart(), "form-field pairing");
    if (w.degree() != 1) throw DomainError("pairing needs a 1-form");
    RatFrac total = RatFrac::zero(w.chart());
    for (const auto& [tuple, f] : w.components()) total += f * x.component(tuple[0]);
    return total;
}

std::vector<DiffForm> dual_coframe(std::span<const VectorField> frame) {
    if (frame.empty()) throw DomainError("empty frame");
    ChartPtr chart = frame[0].chart();
    const std::size_t n = chart->dim();
    if (frame.size() != n)
        throw DomainError("frame size must equal chart dimension");
    std::vector<std::vector<TrigPoly>> m(n, std::vector<TrigPoly>(n, TrigPoly::zero(chart)));
    for (std::size_t i = 0; i < n; ++i) {
        require_same_chart(chart, frame[i].chart(), "dual coframe");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = frame[i].component(j);
    }
    TrigPoly det = trig_determinant(m, chart);
    if (det.is_zero()) throw DomainError("singular frame: determinant is identically zero");

    auto cofactor = [&](std::size_t i, std::size_t k) {
        std::vector<std::vector<TrigPoly>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<TrigPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        TrigPoly d = trig_determinant(sub, chart);
        return (i + k) % 2 ? -d : d;
    };

    const bool const_det = det.is_constant();
    std::vector<DiffForm> etas;
    etas.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RatFrac> comps;
        comps.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            TrigPoly c = cofactor(i, k);
            if (const_det)
                comps.emplace_back(c * (Rat(1) / det.constant_value()));
            else
                comps.emplace_back(c, det);
        }
        etas.push_back(make_one_form(chart, std::move(comps)));
    }
    return etas;
}

}  // namespace kontact
