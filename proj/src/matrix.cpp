#include "lrca/matrix.hpp"

#include <stdexcept>

namespace lrca {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : f_(std::move(field)), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (c_ != rhs.r_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(f_, r_, rhs.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t k = 0; k < c_; ++k) {
            Elem v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.c_; ++j) {
                Elem t = f_->mul(v, rhs.at(k, j));
                out.set(i, j, f_->add(out.at(i, j), t));
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return r_ == rhs.r_ && c_ == rhs.c_ && a_ == rhs.a_;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool Matrix::is_zero() const {
    for (Elem v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

std::vector<Elem> Matrix::mul_vec(const std::vector<Elem>& v) const {
    if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        Elem s = 0;
        for (std::size_t j = 0; j < c_; ++j)
            if (v[j] != 0) s = f_->add(s, f_->mul(at(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(f_, r_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= c_) throw std::out_of_range("column index out of range");
        for (std::size_t i = 0; i < r_; ++i) out.set(i, j, at(i, cols[j]));
    }
    return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < c_ && lead < r_; ++col) {
        std::size_t piv = lead;
        while (piv < r_ && m.at(piv, col) == 0) ++piv;
        if (piv == r_) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < c_; ++j) {
                Elem t = m.at(lead, j);
                m.set(lead, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        Elem inv = f_->inv(m.at(lead, col));
        for (std::size_t j = 0; j < c_; ++j) m.set(lead, j, f_->mul(inv, m.at(lead, j)));
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == lead) continue;
            Elem factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < c_; ++j)
                m.set(i, j, f_->sub(m.at(i, j), f_->mul(factor, m.at(lead, j))));
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::null_space() const {
    std::vector<std::size_t> piv;
    Matrix m = rref(&piv);
    std::vector<bool> is_pivot(c_, false);
    for (std::size_t p : piv) is_pivot[p] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free_col = 0; free_col < c_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(c_, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = f_->neg(m.at(i, free_col));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(f_, 0, c_);
    return Matrix::from_rows(f_, basis);
}

Matrix Matrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("only square matrices can be inverted");
    Matrix aug(f_, r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, c_ + i, 1);
    }
    std::vector<std::size_t> piv;
    Matrix red = aug.rref(&piv);
    for (std::size_t i = 0; i < r_; ++i)
        if (piv.size() <= i || piv[i] != i) throw std::domain_error("matrix is singular");
    Matrix out(f_, r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out.set(i, j, red.at(i, c_ + j));
    return out;
}

} // namespace lrca
