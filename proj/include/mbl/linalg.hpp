#ifndef MBL_LINALG_HPP
#define MBL_LINALG_HPP

#include <cstddef>
#include <vector>

namespace mbl {

// Dense row-major matrix of doubles, sized once at construction.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// det(I - A) via LU with partial pivoting, accumulated as sign and
// log-magnitude so near-zero determinants neither under- nor overflow.
// A is consumed as workspace.
double det_one_minus(Matrix a);

}  // namespace mbl

#endif
