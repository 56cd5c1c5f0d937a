#include "addtop/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace addtop {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::ofInts(const Field& f, std::size_t rows, std::size_t cols,
                      const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw ShapeError("ofInts: entry count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.e_[k] = Scalar::ofInt(f, entries[k]);
    return m;
}

void Matrix::checkField(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
}

Matrix Matrix::operator*(const Matrix& o) const {
    checkField(o);
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.isZero()) r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    checkField(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    checkField(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool Matrix::isZero() const {
    for (const auto& x : e_)
        if (!x.isZero()) return false;
    return true;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix r(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    checkField(o);
    if (rows_ != o.rows_) throw ShapeError("hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    checkField(o);
    if (cols_ != o.cols_) throw ShapeError("vstack col mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::subCols(std::size_t from, std::size_t to) const {
    if (from > to || to > cols_) throw ShapeError("subCols range");
    Matrix r(field_, rows_, to - from);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Echelon rowReduce(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // leftmost nonzero column, first nonzero row: deterministic
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!a.at(i, c).isZero()) { piv = i; break; }
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).isZero()) continue;
            Scalar factor = a.at(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rowReduce(m).pivotCols.size(); }

Matrix kernelBasis(const Matrix& m) {
    Echelon e = rowReduce(m);
    const Field& f = m.field();
    std::vector<std::size_t> free;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (pi < e.pivotCols.size() && e.pivotCols[pi] == c) { ++pi; continue; }
        free.push_back(c);
    }
    Matrix k(f, m.cols(), free.size());
    for (std::size_t idx = 0; idx < free.size(); ++idx) {
        std::size_t fc = free[idx];
        k.at(fc, idx) = Scalar::one(f);
        for (std::size_t pr = 0; pr < e.pivotCols.size(); ++pr)
            k.at(e.pivotCols[pr], idx) = -e.rref.at(pr, fc);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw ShapeError("solve: rhs row mismatch");
    Echelon e = rowReduce(m.hstack(b));
    // inconsistent iff some pivot lies in the rhs block
    for (std::size_t c : e.pivotCols)
        if (c >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t pr = 0; pr < e.pivotCols.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivotCols[pr], j) = e.rref.at(pr, m.cols() + j);
    return x;
}

Matrix colSpanBasis(const Matrix& m) {
    Echelon e = rowReduce(m.transpose());
    std::size_t r = e.pivotCols.size();
    Matrix basis(m.field(), m.rows(), r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = e.rref.at(i, j);
    return basis;
}

bool spanContains(const Matrix& sub, const Matrix& sup) {
    if (sub.rows() != sup.rows()) throw ShapeError("spanContains row mismatch");
    if (sub.cols() == 0) return true;
    return rank(sup.hstack(sub)) == rank(sup);
}

SpanOps spanOps(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("spanOps row mismatch");
    SpanOps out{colSpanBasis(a.hstack(b)), Matrix(a.field(), a.rows(), 0), false, false};
    // intersection from kernel of [a | -b]: a*x = b*y on the kernel columns
    Matrix neg = b.scaled(-Scalar::one(a.field()));
    Matrix k = kernelBasis(a.hstack(neg));
    Matrix xPart(a.field(), a.cols(), k.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) xPart.at(i, j) = k.at(i, j);
    out.intersection = colSpanBasis(a * xPart);
    out.containment = spanContains(a, b);
    out.equality = out.containment && spanContains(b, a);
    return out;
}

Matrix preimage(const Matrix& m, const Matrix& target) {
    if (m.rows() != target.rows()) throw ShapeError("preimage row mismatch");
    Matrix neg = target.scaled(-Scalar::one(m.field()));
    Matrix k = kernelBasis(m.hstack(neg));
    Matrix xPart(m.field(), m.cols(), k.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) xPart.at(i, j) = k.at(i, j);
    return colSpanBasis(xPart);
}

std::vector<Matrix> allVectors(const Field& f, std::size_t d) {
    if (f.kind != Field::Kind::Fp) throw Unsupported("allVectors over Q");
    std::vector<Matrix> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > (1u << 24)) throw TooLarge("allVectors: too many vectors");
        total *= f.p;
    }
    for (std::size_t code = 0; code < total; ++code) {
        Matrix v(f, d, 1);
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            v.at(i, 0) = Scalar::ofInt(f, static_cast<long>(c % f.p));
            c /= f.p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Enumerate all r x d RREF matrices over F_p by pivot-column choice.
void enumRref(const Field& f, std::size_t d, std::size_t r, std::vector<Matrix>& out) {
    std::vector<std::size_t> pivots(r);
    std::vector<bool> sel(d, false);
    // iterate over d-choose-r pivot sets in lexicographic order
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    if (r > d) return;
    while (true) {
        // free positions: (row i, col c) with c > idx[i], c not a pivot of any row,
        // or c a pivot of a later row? RREF: entries above pivots are 0, entries
        // right of own pivot in non-pivot columns are free.
        std::vector<std::pair<std::size_t, std::size_t>> freePos;
        std::vector<bool> isPivot(d, false);
        for (std::size_t i = 0; i < r; ++i) isPivot[idx[i]] = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = idx[i] + 1; c < d; ++c)
                if (!isPivot[c]) freePos.emplace_back(i, c);
        std::size_t total = 1;
        for (std::size_t k = 0; k < freePos.size(); ++k) {
            if (total > (1u << 24)) throw TooLarge("allSubspaces: too many subspaces");
            total *= f.p;
        }
        for (std::size_t code = 0; code < total; ++code) {
            Matrix m(f, r, d);
            for (std::size_t i = 0; i < r; ++i) m.at(i, idx[i]) = Scalar::one(f);
            std::size_t c = code;
            for (auto& [i, cc] : freePos) {
                m.at(i, cc) = Scalar::ofInt(f, static_cast<long>(c % f.p));
                c /= f.p;
            }
            out.push_back(std::move(m));
        }
        // next combination
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == d - r + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
}

} // namespace

std::vector<Matrix> allSubspaces(const Field& f, std::size_t d) {
    if (f.kind != Field::Kind::Fp) throw Unsupported("allSubspaces over Q");
    std::vector<Matrix> out;
    for (std::size_t r = 0; r <= d; ++r) {
        std::vector<Matrix> rrefs;
        enumRref(f, d, r, rrefs);
        for (const auto& m : rrefs) out.push_back(colSpanBasis(m.transpose()));
    }
    return out;
}

} // namespace addtop
