#pragma once

#include <utility>
#include <vector>

#include "symcoh/scalar.hpp"

namespace symcoh {

// Sparse coordinate vector: terms sorted by index, no explicit zeros.
struct SparseVec {
    std::vector<std::pair<long, Scalar>> terms;

    bool empty() const { return terms.empty(); }
    long nnz() const { return static_cast<long>(terms.size()); }
    long lead() const { return terms.front().first; }
    const Scalar& lead_coeff() const { return terms.front().second; }
    const Scalar* find(long i) const;
    void add_term(long i, const Scalar& c);  // accumulate, drop zero
    bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

SparseVec sv_unit(long i, const Scalar& c);
SparseVec sv_scale(const SparseVec& v, const Scalar& c);
SparseVec sv_neg(const SparseVec& v);
// a + c*b, merged canonical
SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b);
std::string sv_str(const SparseVec& v);

// Row-major sparse matrix over a single scalar domain.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(Domain dom, long rows, long cols);
    static SparseMatrix identity(Domain dom, long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Domain& domain() const { return dom_; }
    const SparseVec& row(long r) const { return rows_data_[r]; }
    long nnz() const;
    bool is_zero() const;

    void add(long r, long c, const Scalar& v);  // accumulates; drops zeros

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& c) const;
    bool operator==(const SparseMatrix& o) const;

    SparseVec apply(const SparseVec& v) const;  // M * v

    // first entry where *this and o differ, or (-1,-1)
    std::pair<long, long> first_difference(const SparseMatrix& o) const;

  private:
    Domain dom_ = Domain::Q();
    long rows_ = 0, cols_ = 0;
    std::vector<SparseVec> rows_data_;
};

// Reduced row echelon form of a list of vectors in k^ambient.
// Pivot columns strictly increase, pivots are 1 and are the only nonzero
// entries in their columns.  Unique, hence canonical for the row span.
struct Echelon {
    long ambient = 0;
    std::vector<SparseVec> rows;
    std::vector<long> pivots;

    long rank() const { return static_cast<long>(rows.size()); }
    // remainder of v after elimination against the rows
    SparseVec reduce(SparseVec v) const;
};

// Fields only (NonFieldScalars for Z/p^2).  Pivot rows are chosen
// structurally sparsest first, ties by insertion order; the reduced
// result is independent of that choice.
Echelon echelonize(const Domain& dom, long ambient, std::vector<SparseVec> vecs);

// Toggle the internal parallel elimination path (results are identical to
// the sequential path; this only affects wall time).
void set_parallel_elimination(bool on);
bool parallel_elimination();

}  // namespace symcoh
