#include "symcoh/subspace.hpp"

#include <string>

#include "symcoh/errors.hpp"

namespace symcoh {

Subspace Subspace::zero_space(const Domain& dom, long ambient) {
    Subspace s;
    s.dom_ = dom;
    s.ambient_ = ambient;
    s.ech_.ambient = ambient;
    return s;
}

Subspace Subspace::full_space(const Domain& dom, long ambient) {
    Subspace s;
    s.dom_ = dom;
    s.ambient_ = ambient;
    s.ech_.ambient = ambient;
    Scalar one = Scalar::one(dom);
    for (long i = 0; i < ambient; ++i) {
        s.ech_.rows.push_back(sv_unit(i, one));
        s.ech_.pivots.push_back(i);
    }
    return s;
}

Subspace Subspace::span(const Domain& dom, long ambient, std::vector<SparseVec> vecs) {
    Subspace s;
    s.dom_ = dom;
    s.ambient_ = ambient;
    s.ech_ = echelonize(dom, ambient, std::move(vecs));
    return s;
}

bool Subspace::contains(const SparseVec& v) const {
    if (!v.empty() && v.terms.back().first >= ambient_)
        throw AmbientMismatch("vector exceeds ambient dimension");
    return ech_.reduce(v).empty();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_ || !(dom_ == other.dom_))
        throw AmbientMismatch("subspace containment across different ambients");
    for (const auto& b : other.basis())
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || !(dom_ == other.dom_))
        throw AmbientMismatch("subspace sum across different ambients");
    std::vector<SparseVec> all = basis();
    for (const auto& b : other.basis()) all.push_back(b);
    return span(dom_, ambient_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || !(dom_ == other.dom_))
        throw AmbientMismatch("subspace intersection across different ambients");
    // Solve sum a_i u_i = sum b_j v_j: kernel of the ambient x (dimU+dimV)
    // matrix whose columns are the u_i and -v_j.
    long du = dim(), dv = other.dim();
    SparseMatrix m(dom_, ambient_, du + dv);
    for (long i = 0; i < du; ++i)
        for (const auto& [r, c] : basis()[i].terms) m.add(r, i, c);
    for (long j = 0; j < dv; ++j)
        for (const auto& [r, c] : other.basis()[j].terms) m.add(r, du + j, -c);
    Subspace ker = kernel_of(m);
    std::vector<SparseVec> vecs;
    for (const auto& w : ker.basis()) {
        SparseVec v;
        for (const auto& [i, c] : w.terms) {
            if (i >= du) break;
            v = sv_axpy(v, c, basis()[i]);
        }
        if (!v.empty()) vecs.push_back(std::move(v));
    }
    return span(dom_, ambient_, std::move(vecs));
}

long Subspace::quotient_dim(const Subspace& sub) const {
    if (ambient_ != sub.ambient_ || !(dom_ == sub.dom_))
        throw AmbientMismatch("quotient across different ambients");
    if (!contains(sub)) throw NotASubspace("quotient by a non-subspace");
    return dim() - sub.dim();
}

bool Subspace::operator==(const Subspace& o) const {
    return dom_ == o.dom_ && ambient_ == o.ambient_ && ech_.rows == o.ech_.rows;
}

namespace {

std::vector<SparseVec> matrix_rows(const SparseMatrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (long r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

Subspace kernel_from_echelon(const Domain& dom, long cols, const Echelon& ech) {
    std::vector<bool> is_pivot(cols, false);
    for (long p : ech.pivots) is_pivot[p] = true;
    Scalar one = Scalar::one(dom);
    std::vector<SparseVec> vecs;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v = sv_unit(f, one);
        for (size_t r = 0; r < ech.rows.size(); ++r) {
            const Scalar* c = ech.rows[r].find(f);
            if (c) v.add_term(ech.pivots[r], -(*c));
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(dom, cols, std::move(vecs));
}

}  // namespace

RankKernelImage rank_kernel_image(const SparseMatrix& m) {
    if (!m.domain().is_field())
        throw NonFieldScalars("rank computation requires field scalars, got " + m.domain().str());
    RankKernelImage out;
    Echelon ech = echelonize(m.domain(), m.cols(), matrix_rows(m));
    out.rank = ech.rank();
    out.kernel = kernel_from_echelon(m.domain(), m.cols(), ech);
    out.image = Subspace::span(m.domain(), m.rows(), matrix_rows(m.transpose()));
    return out;
}

Subspace kernel_of(const SparseMatrix& m) {
    if (!m.domain().is_field())
        throw NonFieldScalars("kernel computation requires field scalars, got " + m.domain().str());
    Echelon ech = echelonize(m.domain(), m.cols(), matrix_rows(m));
    return kernel_from_echelon(m.domain(), m.cols(), ech);
}

Subspace image_of(const SparseMatrix& m) {
    return Subspace::span(m.domain(), m.rows(), matrix_rows(m.transpose()));
}

long rank_of(const SparseMatrix& m) {
    if (!m.domain().is_field())
        throw NonFieldScalars("rank computation requires field scalars, got " + m.domain().str());
    return echelonize(m.domain(), m.cols(), matrix_rows(m)).rank();
}

Subspace common_kernel(const std::vector<const SparseMatrix*>& ms) {
    if (ms.empty()) throw AmbientMismatch("common_kernel of an empty list");
    const Domain& dom = ms[0]->domain();
    long cols = ms[0]->cols();
    long total_rows = 0;
    for (const auto* m : ms) {
        if (m->cols() != cols || !(m->domain() == dom))
            throw AmbientMismatch("common_kernel shape mismatch");
        total_rows += m->rows();
    }
    SparseMatrix stacked(dom, total_rows, cols);
    long off = 0;
    for (const auto* m : ms) {
        for (long r = 0; r < m->rows(); ++r)
            for (const auto& [c, v] : m->row(r).terms) stacked.add(off + r, c, v);
        off += m->rows();
    }
    return kernel_of(stacked);
}

}  // namespace symcoh
