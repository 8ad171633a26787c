#include "symcoh/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "symcoh/errors.hpp"

namespace symcoh {

const Scalar* SparseVec::find(long i) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, long k) { return t.first < k; });
    if (it != terms.end() && it->first == i) return &it->second;
    return nullptr;
}

void SparseVec::add_term(long i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, long k) { return t.first < k; });
    if (it != terms.end() && it->first == i) {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms.erase(it);
        else
            it->second = s;
    } else {
        terms.insert(it, {i, c});
    }
}

SparseVec sv_unit(long i, const Scalar& c) {
    SparseVec v;
    if (!c.is_zero()) v.terms.push_back({i, c});
    return v;
}

SparseVec sv_scale(const SparseVec& v, const Scalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    r.terms.reserve(v.terms.size());
    for (const auto& [i, a] : v.terms) {
        Scalar s = a * c;
        if (!s.is_zero()) r.terms.push_back({i, s});
    }
    return r;
}

SparseVec sv_neg(const SparseVec& v) {
    SparseVec r;
    r.terms.reserve(v.terms.size());
    for (const auto& [i, a] : v.terms) r.terms.push_back({i, -a});
    return r;
}

SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            Scalar s = b.terms[j].second * c;
            if (!s.is_zero()) r.terms.push_back({b.terms[j].first, s});
            ++j;
        } else {
            Scalar s = a.terms[i].second + b.terms[j].second * c;
            if (!s.is_zero()) r.terms.push_back({a.terms[i].first, s});
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a;
    return sv_axpy(a, Scalar::one(b.terms.front().second.domain()), b);
}

SparseVec sv_sub(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a;
    return sv_axpy(a, -Scalar::one(b.terms.front().second.domain()), b);
}

std::string sv_str(const SparseVec& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, c] : v.terms) {
        if (!first) os << ", ";
        os << i << ":" << c.str();
        first = false;
    }
    os << "}";
    return os.str();
}

SparseMatrix::SparseMatrix(Domain dom, long rows, long cols)
    : dom_(dom), rows_(rows), cols_(cols), rows_data_(rows) {}

SparseMatrix SparseMatrix::identity(Domain dom, long n) {
    SparseMatrix m(dom, n, n);
    Scalar one = Scalar::one(dom);
    for (long i = 0; i < n; ++i) m.rows_data_[i].terms.push_back({i, one});
    return m;
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (const auto& r : rows_data_) n += r.nnz();
    return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

void SparseMatrix::add(long r, long c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    if (!(v.domain() == dom_)) throw DomainMismatch("entry domain differs from matrix domain");
    rows_data_[r].add_term(c, v);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(dom_, cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rows_data_[r].terms) t.rows_data_[c].terms.push_back({r, v});
    return t;  // column order of each output row follows r, already sorted
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (!(dom_ == o.dom_)) throw DomainMismatch("matrix product across domains");
    if (cols_ != o.rows_) throw AmbientMismatch("matrix product shape mismatch");
    SparseMatrix out(dom_, rows_, o.cols_);
    for (long r = 0; r < rows_; ++r) {
        SparseVec acc;
        for (const auto& [k, a] : rows_data_[r].terms) acc = sv_axpy(acc, a, o.rows_data_[k]);
        out.rows_data_[r] = std::move(acc);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (!(dom_ == o.dom_)) throw DomainMismatch("matrix sum across domains");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AmbientMismatch("matrix sum shape mismatch");
    SparseMatrix out(dom_, rows_, cols_);
    for (long r = 0; r < rows_; ++r) out.rows_data_[r] = sv_add(rows_data_[r], o.rows_data_[r]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (!(dom_ == o.dom_)) throw DomainMismatch("matrix difference across domains");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AmbientMismatch("matrix difference shape mismatch");
    SparseMatrix out(dom_, rows_, cols_);
    for (long r = 0; r < rows_; ++r) out.rows_data_[r] = sv_sub(rows_data_[r], o.rows_data_[r]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(dom_, rows_, cols_);
    for (long r = 0; r < rows_; ++r) out.rows_data_[r] = sv_scale(rows_data_[r], c);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return dom_ == o.dom_ && rows_ == o.rows_ && cols_ == o.cols_ && rows_data_ == o.rows_data_;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    if (!v.empty() && v.terms.back().first >= cols_)
        throw AmbientMismatch("vector longer than matrix column count");
    std::vector<const Scalar*> dense(cols_, nullptr);
    for (const auto& [i, c] : v.terms) dense[i] = &c;
    SparseVec out;
    for (long r = 0; r < rows_; ++r) {
        Scalar acc = Scalar::zero(dom_);
        bool hit = false;
        for (const auto& [c, a] : rows_data_[r].terms) {
            if (dense[c]) {
                acc = acc + a * (*dense[c]);
                hit = true;
            }
        }
        if (hit && !acc.is_zero()) out.terms.push_back({r, acc});
    }
    return out;
}

std::pair<long, long> SparseMatrix::first_difference(const SparseMatrix& o) const {
    for (long r = 0; r < rows_; ++r) {
        if (rows_data_[r] == o.rows_data_[r]) continue;
        const auto& a = rows_data_[r].terms;
        const auto& b = o.rows_data_[r].terms;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return {r, a[i].first};
            if (i == a.size() || b[j].first < a[i].first) return {r, b[j].first};
            if (!(a[i].second == b[j].second)) return {r, a[i].first};
            ++i;
            ++j;
        }
    }
    return {-1, -1};
}

SparseVec Echelon::reduce(SparseVec v) const {
    // single pass suffices: pivot columns are clean in all other rows
    for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar* c = v.find(pivots[r]);
        if (c) v = sv_axpy(v, -(*c), rows[r]);
    }
    return v;
}

namespace {
std::atomic<bool> g_parallel{false};

// subtract coeff_at(lead)*pivot from each row in a batch, in parallel
void eliminate_batch(std::vector<SparseVec>& batch, const SparseVec& pivot) {
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) batch[i] = sv_axpy(batch[i], -batch[i].lead_coeff(), pivot);
    };
    size_t n = batch.size();
    unsigned threads = std::thread::hardware_concurrency();
    if (!g_parallel.load() || n < 64 || threads < 2) {
        work(0, n);
        return;
    }
    unsigned t = std::min<unsigned>(threads, 8);
    std::vector<std::thread> pool;
    size_t chunk = (n + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
        size_t lo = k * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}
}  // namespace

void set_parallel_elimination(bool on) { g_parallel.store(on); }
bool parallel_elimination() { return g_parallel.load(); }

Echelon echelonize(const Domain& dom, long ambient, std::vector<SparseVec> vecs) {
    if (!dom.is_field()) throw NonFieldScalars("echelon form requires field scalars, got " + dom.str());
    Echelon ech;
    ech.ambient = ambient;

    // bucket rows by leading index
    std::vector<std::vector<SparseVec>> bucket(ambient);
    for (auto& v : vecs) {
        if (v.empty()) continue;
        if (v.terms.back().first >= ambient) throw AmbientMismatch("vector exceeds ambient dimension");
        long l = v.lead();
        bucket[l].push_back(std::move(v));
    }

    for (long col = 0; col < ambient; ++col) {
        auto& b = bucket[col];
        if (b.empty()) continue;
        // structurally sparsest pivot, ties by lowest insertion index
        size_t best = 0;
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i].nnz() < b[best].nnz()) best = i;
        SparseVec pivot = sv_scale(b[best], b[best].lead_coeff().inverse());
        b.erase(b.begin() + best);
        eliminate_batch(b, pivot);
        for (auto& r : b) {
            if (r.empty()) continue;
            bucket[r.lead()].push_back(std::move(r));
        }
        b.clear();
        ech.rows.push_back(std::move(pivot));
        ech.pivots.push_back(col);
    }

    // back substitution: clear pivot columns above
    for (size_t i = ech.rows.size(); i-- > 0;) {
        for (size_t j = 0; j < i; ++j) {
            const Scalar* c = ech.rows[j].find(ech.pivots[i]);
            if (c) ech.rows[j] = sv_axpy(ech.rows[j], -(*c), ech.rows[i]);
        }
    }
    return ech;
}

}  // namespace symcoh
